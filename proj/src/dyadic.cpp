#include "ucf/dyadic.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <utility>

namespace ucf {

namespace {

using Decimal = boost::multiprecision::cpp_dec_float_50;

Decimal to_decimal(const DyadicRational& value)
{
    Decimal out(value.numerator().str());
    if (value.exponent() > 0) out /= boost::multiprecision::pow(Decimal(2), static_cast<long>(value.exponent()));
    return out;
}

std::string render(const Decimal& value, int significant_digits)
{
    std::string out = value.str(significant_digits);
    if (out.find_first_of(".e") == std::string::npos) out += ".0";
    return out;
}

}  // namespace

DyadicRational::DyadicRational(BigInt numerator, std::int64_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent)
{
    canonicalize();
}

void DyadicRational::canonicalize()
{
    if (numerator_ == 0) {
        exponent_ = 0;
        return;
    }
    if (exponent_ < 0) {
        numerator_ <<= static_cast<unsigned>(-exponent_);
        exponent_ = 0;
        return;
    }
    if (exponent_ > 0) {
        const auto low = static_cast<std::int64_t>(boost::multiprecision::lsb(abs(numerator_)));
        const std::int64_t shift = std::min(low, exponent_);
        numerator_ >>= static_cast<unsigned>(shift);
        exponent_ -= shift;
    }
}

DyadicRational DyadicRational::operator+(const DyadicRational& other) const
{
    const std::int64_t e = std::max(exponent_, other.exponent_);
    BigInt sum = (numerator_ << static_cast<unsigned>(e - exponent_)) +
                 (other.numerator_ << static_cast<unsigned>(e - other.exponent_));
    return DyadicRational(std::move(sum), e);
}

DyadicRational DyadicRational::operator-(const DyadicRational& other) const
{
    return *this + DyadicRational(-other.numerator_, other.exponent_);
}

DyadicRational DyadicRational::operator*(const DyadicRational& other) const
{
    return DyadicRational(numerator_ * other.numerator_, exponent_ + other.exponent_);
}

std::strong_ordering DyadicRational::operator<=>(const DyadicRational& other) const
{
    const std::int64_t e = std::max(exponent_, other.exponent_);
    const BigInt lhs = numerator_ << static_cast<unsigned>(e - exponent_);
    const BigInt rhs = other.numerator_ << static_cast<unsigned>(e - other.exponent_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string DyadicRational::to_fraction_string() const
{
    if (exponent_ == 0) return numerator_.str();
    return numerator_.str() + "/2^" + std::to_string(exponent_);
}

std::string DyadicRational::to_decimal_string(int significant_digits) const
{
    return render(to_decimal(*this), significant_digits);
}

double DyadicRational::to_double() const { return to_decimal(*this).convert_to<double>(); }

std::string ratio_decimal_string(const DyadicRational& a, const DyadicRational& b, int significant_digits)
{
    return render(to_decimal(a) / to_decimal(b), significant_digits);
}

}  // namespace ucf
