#pragma once

#include <compare>
#include <limits>
#include <string>

namespace compirr {

/// Polynomial degree with a distinguished value for the zero polynomial.
/// MinusInfinity compares below every integer and absorbs addition.
class Degree {
  public:
    constexpr Degree() noexcept = default;  // MinusInfinity
    constexpr Degree(long value) noexcept : value_(value) {}

    static constexpr Degree minus_infinity() noexcept { return Degree(); }

    constexpr bool is_finite() const noexcept { return value_ != kMinusInf; }
    constexpr bool is_minus_infinity() const noexcept { return !is_finite(); }

    /// Only meaningful for finite degrees.
    constexpr long value() const noexcept { return value_; }

    constexpr auto operator<=>(Degree const &) const noexcept = default;

    friend constexpr Degree operator+(Degree a, Degree b) noexcept
    {
        if (a.is_minus_infinity() || b.is_minus_infinity())
            return minus_infinity();
        return Degree(a.value_ + b.value_);
    }

    /// Scaling by a positive integer; MinusInfinity stays MinusInfinity.
    friend constexpr Degree operator*(long k, Degree d) noexcept
    {
        if (d.is_minus_infinity())
            return d;
        return Degree(k * d.value_);
    }

    /// "-inf" or the decimal value.
    std::string to_string() const
    {
        return is_finite() ? std::to_string(value_) : std::string("-inf");
    }

  private:
    static constexpr long kMinusInf = std::numeric_limits<long>::min();
    long value_ = kMinusInf;
};

}  // namespace compirr
