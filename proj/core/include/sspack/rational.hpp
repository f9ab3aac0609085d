#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sspack {

// Exact rational number on 64-bit words. Always stored normalized (gcd 1,
// positive denominator). Intermediate products run in 128 bits; a result
// that does not fit back into int64 throws std::overflow_error instead of
// wrapping. All verification arithmetic in this project goes through this
// type; floating point is for display only.
class Rational {
 public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    // Largest integer <= value.
    std::int64_t floor() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);  // throws std::domain_error on /0

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend bool operator<(const Rational& lhs, const Rational& rhs);
    friend bool operator>(const Rational& lhs, const Rational& rhs) { return rhs < lhs; }
    friend bool operator<=(const Rational& lhs, const Rational& rhs) { return !(rhs < lhs); }
    friend bool operator>=(const Rational& lhs, const Rational& rhs) { return !(lhs < rhs); }

    double to_double() const;

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    // Accepts "p", "-p", "p/q"; throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

 private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace sspack
