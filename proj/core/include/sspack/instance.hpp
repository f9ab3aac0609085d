#pragma once

#include <cstdint>
#include <vector>

namespace sspack {

// An online bin-packing instance: an integer bin capacity and the item
// sizes in arrival order. Order is significant; packers consume the items
// strictly left to right.
struct Instance {
    int capacity = 1;
    std::vector<int> items;

    std::int64_t total_size() const;

    // Throws std::invalid_argument unless capacity >= 1 and every item size
    // lies in [1, capacity].
    void validate() const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace sspack
