#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace udgcut {

namespace detail {
__extension__ typedef __int128 int128;
}  // namespace detail

/// Exact rational number with a normalized int64 numerator/denominator.
/// Denominator is always positive and gcd(num, den) == 1. Every arithmetic
/// operation goes through 128-bit intermediates and throws OverflowError if
/// the normalized result does not fit.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "num/den", or just "num" for integers.
    std::string str() const;

private:
    static Rational from_wide(detail::int128 num, detail::int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace udgcut
