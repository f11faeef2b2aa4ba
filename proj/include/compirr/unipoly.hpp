#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "compirr/degree.hpp"
#include "compirr/field.hpp"

namespace compirr {

/// Dense polynomial in X over a field. Coefficients are stored lowest
/// degree first with no trailing zeros, so the zero polynomial is empty.
class UniPoly {
  public:
    explicit UniPoly(FieldRef field);
    UniPoly(FieldRef field, std::vector<FieldElement> coeffs);

    static UniPoly constant(FieldRef field, FieldElement c);
    static UniPoly from_ints(FieldRef field, std::vector<long> const & coeffs);
    /// c * X^k
    static UniPoly monomial(FieldRef field, FieldElement c, std::size_t k);
    static UniPoly x(FieldRef const & field) { return monomial(field, field->one(), 1); }

    FieldRef const & field() const noexcept { return field_; }
    std::span<FieldElement const> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of X^i, zero beyond the degree.
    FieldElement coeff(std::size_t i) const;

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_one() const;
    Degree degree() const noexcept;
    /// Degree as an integer; requires a nonzero polynomial.
    long deg() const;
    /// Leading coefficient; requires a nonzero polynomial.
    FieldElement const & leading() const;

    UniPoly operator-() const;
    UniPoly & operator+=(UniPoly const & o);
    UniPoly & operator-=(UniPoly const & o);
    UniPoly & operator*=(UniPoly const & o);
    friend UniPoly operator+(UniPoly a, UniPoly const & b) { return a += b; }
    friend UniPoly operator-(UniPoly a, UniPoly const & b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, UniPoly const & b) { return a *= b; }

    bool operator==(UniPoly const & o) const;

    UniPoly scaled(FieldElement const & c) const;
    /// Divides by the leading coefficient; zero stays zero.
    UniPoly monic() const;
    UniPoly derivative() const;
    UniPoly pow(unsigned long e) const;
    FieldElement evaluate(FieldElement const & x) const;

    /// Sparse human-readable form, e.g. `X^4 + 5*X + 5` or `-2/3*X^2 + 1`.
    std::string to_string(std::string const & var = "X") const;

  private:
    void normalize();

    FieldRef field_;
    std::vector<FieldElement> coeffs_;
};

void require_same_field(FieldRef const & a, FieldRef const & b);

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

/// a = q*b + r with deg r < deg b. DivisionByZero when b = 0.
DivMod divmod(UniPoly const & a, UniPoly const & b);
/// Quotient when b divides a exactly, nullopt otherwise.
std::optional<UniPoly> divide_exact(UniPoly const & a, UniPoly const & b);
bool divides(UniPoly const & d, UniPoly const & a);

/// Monic gcd by the Euclidean algorithm. BothZero when a = b = 0.
UniPoly gcd(UniPoly const & a, UniPoly const & b);

/// Extended gcd: g = s*a + t*b with g monic.
struct XGcd {
    UniPoly g, s, t;
};
XGcd xgcd(UniPoly const & a, UniPoly const & b);

/// base^e mod m; exponent is arbitrary precision.
UniPoly powmod(UniPoly const & base, mpz_class e, UniPoly const & m);

/// Total order for canonical listings: by degree, then coefficient by
/// coefficient from the constant term upward.
bool canonical_less(UniPoly const & a, UniPoly const & b);

/// |num/den| = rho^{-exponent} under the degree absolute value, with
/// exponent = deg num - deg den and MinusInfinity for num = 0.
struct DegreeValuation {
    Degree exponent;
    bool operator==(DegreeValuation const &) const = default;
};
DegreeValuation degree_valuation(UniPoly const & num, UniPoly const & den);

/// Clears denominators and integer content of a polynomial over Q.
/// Result has positive leading coefficient.
std::vector<mpz_class> primitive_integer_form(UniPoly const & f);

/// Eisenstein criterion at `prime`, applied to the primitive integer form
/// of f. NotPrime / ConstantInput / WrongField on bad arguments.
bool eisenstein_check(UniPoly const & f, mpz_class const & prime);

}  // namespace compirr
