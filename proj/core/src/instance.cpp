#include "sspack/instance.hpp"

#include <stdexcept>
#include <string>

namespace sspack {

std::int64_t Instance::total_size() const {
    std::int64_t total = 0;
    for (int s : items) total += s;
    return total;
}

void Instance::validate() const {
    if (capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i] < 1 || items[i] > capacity) {
            throw std::invalid_argument("item " + std::to_string(i) + " has size " +
                                        std::to_string(items[i]) + " outside [1, " +
                                        std::to_string(capacity) + "]");
        }
    }
}

}  // namespace sspack
