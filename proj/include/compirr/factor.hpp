#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "compirr/unipoly.hpp"

namespace compirr {

struct Factor {
    UniPoly poly;          // monic
    unsigned multiplicity;
    bool operator==(Factor const &) const = default;
};

/// unit * prod factor^multiplicity, factors monic, irreducible, distinct
/// and in canonical order.
struct FactorList {
    FieldElement unit;
    std::vector<Factor> factors;

    /// Number of irreducible factors counted with multiplicity.
    long omega() const;
    UniPoly expand(FieldRef const & field) const;
    bool operator==(FactorList const &) const = default;
};

constexpr std::uint64_t kDefaultSeed = 0x5eed;

/// Zassenhaus limits; exceeding them raises BudgetExceeded.
constexpr long kMaxZassenhausDegree = 30;
constexpr std::size_t kMaxModularFactors = 10;

/// Pairwise coprime monic squarefree parts with multiplicities, ordered by
/// multiplicity. Their weighted product is monic(u). ZeroInput for u = 0.
std::vector<Factor> squarefree_decompose(UniPoly const & u);

/// Cantor-Zassenhaus over GF(p): squarefree, distinct-degree and
/// equal-degree splitting. Randomness is drawn from `seed` only.
FactorList factor_gf(UniPoly const & u, std::uint64_t seed = kDefaultSeed);

/// Factorization over Q by modular factorization at the smallest good prime,
/// Hensel lifting past the Mignotte bound and subset recombination.
FactorList factor_q(UniPoly const & u, std::uint64_t seed = kDefaultSeed);

/// Dispatches on the coefficient field.
FactorList factor(UniPoly const & u, std::uint64_t seed = kDefaultSeed);

/// Omega(u); 0 for nonzero constants. ZeroInput for u = 0.
long omega(UniPoly const & u);

/// ConstantInput for constant u.
bool is_irreducible_uni(UniPoly const & u);

/// Every monic divisor of the factored polynomial, one per exponent vector
/// (e_1..e_k) with 0 <= e_i <= multiplicity_i, in mixed-radix order with the
/// first factor varying fastest.
std::vector<UniPoly> monic_divisors(FactorList const & fl, FieldRef const & field);

}  // namespace compirr
