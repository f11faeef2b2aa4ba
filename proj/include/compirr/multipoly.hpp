#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "compirr/bipoly.hpp"

namespace compirr {

/// Sparse polynomial in X1..Xr. Only the arithmetic needed for degree
/// bookkeeping, factorization-mismatch checks and printing is provided.
class MultiPoly {
  public:
    using Exponents = std::vector<unsigned>;

    MultiPoly(FieldRef field, std::size_t nvars);

    static MultiPoly constant(FieldRef field, std::size_t nvars, FieldElement c);
    /// X_j, 1-based.
    static MultiPoly variable(FieldRef field, std::size_t nvars, std::size_t j);
    /// X = X1, Y = X2.
    static MultiPoly from_bipoly(BiPoly const & f);
    /// Embeds a polynomial in X as a polynomial in X_j.
    static MultiPoly from_uni(UniPoly const & u, std::size_t nvars, std::size_t j);

    FieldRef const & field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    std::map<Exponents, FieldElement> const & terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c * monomial; zero sums are dropped.
    void add_term(Exponents const & e, FieldElement const & c);

    MultiPoly operator-() const;
    MultiPoly & operator+=(MultiPoly const & o);
    MultiPoly & operator-=(MultiPoly const & o);
    friend MultiPoly operator+(MultiPoly a, MultiPoly const & b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, MultiPoly const & b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly const & a, MultiPoly const & b);
    bool operator==(MultiPoly const & o) const;
    MultiPoly pow(unsigned long e) const;

    /// Coefficients in the last variable: entry i is the coefficient of
    /// X_r^i, a polynomial in the same r variables not involving X_r.
    std::vector<MultiPoly> coeffs_in_last() const;

    /// Requires nvars() == 2 (or 1, read as X).
    BiPoly to_bipoly() const;
    /// Requires that only X_j occurs.
    UniPoly to_uni(std::size_t j) const;

    /// X1^2*X3 + 2 style; for 2 variables with `xy_names` prints X and Y.
    std::string to_string(bool xy_names = false) const;

  private:
    FieldRef field_;
    std::size_t nvars_;
    std::map<Exponents, FieldElement> terms_;
};

/// Largest exponent of X_j (1-based). IndexOutOfRange for j outside 1..r.
Degree multi_deg(MultiPoly const & f, std::size_t j);

/// H_j: max deg_{X_j} over the non-leading X_r-coefficients.
/// IndexOutOfRange unless 1 <= j <= r-1; ConstantInLastVariable when
/// deg_{X_r} f < 1.
Degree hj_norm(MultiPoly const & f, std::size_t j);

/// Exact quotient a / b by lexicographic division, nullopt if b does not
/// divide a.
std::optional<MultiPoly> divide_exact(MultiPoly const & a, MultiPoly const & b);

}  // namespace compirr
