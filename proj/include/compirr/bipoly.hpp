#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compirr/unipoly.hpp"

namespace compirr {

/// Polynomial in Y with coefficients in K[X]: sum of ycoeff(i) * Y^i.
/// No trailing zero entries; the zero polynomial has none at all.
class BiPoly {
  public:
    explicit BiPoly(FieldRef field);
    BiPoly(FieldRef field, std::vector<UniPoly> ycoeffs);

    static BiPoly from_uni(UniPoly const & u);
    /// The polynomial Y.
    static BiPoly y(FieldRef const & field);

    FieldRef const & field() const noexcept { return field_; }
    std::vector<UniPoly> const & ycoeffs() const noexcept { return y_; }
    /// Coefficient of Y^i, zero beyond deg_Y.
    UniPoly ycoeff(std::size_t i) const;
    UniPoly const & leading_y() const;

    bool is_zero() const noexcept { return y_.empty(); }
    Degree deg_y() const noexcept;
    /// Largest X-degree over all Y-coefficients.
    Degree deg_x() const noexcept;

    BiPoly operator-() const;
    BiPoly & operator+=(BiPoly const & o);
    BiPoly & operator-=(BiPoly const & o);
    BiPoly & operator*=(BiPoly const & o);
    friend BiPoly operator+(BiPoly a, BiPoly const & b) { return a += b; }
    friend BiPoly operator-(BiPoly a, BiPoly const & b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, BiPoly const & b) { return a *= b; }
    bool operator==(BiPoly const & o) const;

    BiPoly scaled(UniPoly const & c) const;
    BiPoly pow(unsigned long e) const;
    /// F(X, y0).
    UniPoly evaluate_y(FieldElement const & y0) const;

    /// Monomials ordered by Y-degree then X-degree, both descending,
    /// e.g. `X^5*Y^2 + X*Y + X^3 + 1`.
    std::string to_string() const;

  private:
    void normalize();

    FieldRef field_;
    std::vector<UniPoly> y_;
};

/// Exact quotient a / b in K[X][Y], nullopt when b does not divide a.
std::optional<BiPoly> divide_exact(BiPoly const & a, BiPoly const & b);

/// max deg a_i over the non-leading Y-coefficients. MinusInfinity if they
/// are all zero. ConstantInY when deg_Y f < 1.
Degree h1_norm(BiPoly const & f);

/// f(X, g(X, Y)) by Horner's scheme in g.
BiPoly compose(BiPoly const & f, BiPoly const & g);

struct ContentY {
    UniPoly content;    // monic gcd of the Y-coefficients
    BiPoly primitive;   // g = content * primitive
};
/// ZeroInput when g = 0.
ContentY content_y(BiPoly const & g);

/// Resultant with respect to Y, Res(a, b) = lc(a)^{deg b} * prod b(alpha)
/// over the roots alpha of a. Sylvester matrix reduced by fraction-free
/// (Bareiss) elimination over K[X]. ZeroInput when either input is zero;
/// PreconditionViolated when both are constant in Y.
UniPoly resultant_y(BiPoly const & a, BiPoly const & b);

}  // namespace compirr
