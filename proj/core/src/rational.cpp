#include "sspack/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace sspack {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide value) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational arithmetic overflows 64 bits");
    }
    return static_cast<std::int64_t>(value);
}

Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Wide n = num;
    Wide d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
}

std::int64_t Rational::floor() const {
    if (num_ >= 0) return num_ / den_;
    return -((-static_cast<Wide>(num_) + den_ - 1) / den_);
}

Rational Rational::operator-() const {
    Rational out;
    out.num_ = narrow(-static_cast<Wide>(num_));
    out.den_ = den_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    Wide n = static_cast<Wide>(num_) * rhs.den_ + static_cast<Wide>(rhs.num_) * den_;
    Wide d = static_cast<Wide>(den_) * rhs.den_;
    Wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    Wide n = static_cast<Wide>(num_) * rhs.num_;
    Wide d = static_cast<Wide>(den_) * rhs.den_;
    Wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
    Wide n = static_cast<Wide>(num_) * rhs.den_;
    Wide d = static_cast<Wide>(den_) * rhs.num_;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

bool operator<(const Rational& lhs, const Rational& rhs) {
    return static_cast<Wide>(lhs.num_) * rhs.den_ < static_cast<Wide>(rhs.num_) * lhs.den_;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view part) {
        std::int64_t value = 0;
        const char* first = part.data();
        const char* last = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) {
            throw std::invalid_argument("malformed rational: '" + std::string(part) + "'");
        }
        return value;
    };
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    std::int64_t num = parse_int(text.substr(0, slash));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.str();
}

}  // namespace sspack
