#ifndef UCF_DYADIC_HPP
#define UCF_DYADIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace ucf {

/// Exact arbitrary-precision integer used for every count and bound.
using BigInt = boost::multiprecision::cpp_int;

/**
 * An exact rational numerator / 2^exponent.
 *
 * Canonical form: the numerator is odd whenever the exponent is positive,
 * the exponent is never negative (powers of two are folded into the
 * numerator), and zero is 0 / 2^0. Two values are equal iff their fields are.
 */
class DyadicRational {
public:
    DyadicRational() = default;
    DyadicRational(BigInt numerator, std::int64_t exponent = 0);

    static DyadicRational from_int(long long value) { return DyadicRational(BigInt(value)); }

    const BigInt& numerator() const noexcept { return numerator_; }
    std::int64_t exponent() const noexcept { return exponent_; }
    bool is_integer() const noexcept { return exponent_ == 0; }

    DyadicRational operator+(const DyadicRational& other) const;
    DyadicRational operator-(const DyadicRational& other) const;
    DyadicRational operator*(const DyadicRational& other) const;

    std::strong_ordering operator<=>(const DyadicRational& other) const;
    bool operator==(const DyadicRational& other) const = default;

    friend std::strong_ordering operator<=>(const DyadicRational& a, const BigInt& b)
    {
        return a <=> DyadicRational(b);
    }

    /// "num/2^e", or just "num" when the value is an integer.
    std::string to_fraction_string() const;

    /// Decimal rendering with the given number of significant digits.
    std::string to_decimal_string(int significant_digits = 15) const;

    /// Nearest double; for sanity checks only.
    double to_double() const;

private:
    void canonicalize();

    BigInt numerator_ = 0;
    std::int64_t exponent_ = 0;
};

/// Decimal rendering of a / b for positive dyadic values.
std::string ratio_decimal_string(const DyadicRational& a, const DyadicRational& b, int significant_digits = 15);

}  // namespace ucf

#endif  // UCF_DYADIC_HPP
