#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "compirr/bipoly.hpp"
#include "compirr/factor.hpp"

namespace compirr {

/// Limits on the exhaustive search. `max_candidates` caps the number of
/// candidate divisors assembled; the degree limits reject inputs outright.
struct OracleBudget {
    std::uint64_t max_candidates = std::uint64_t{1} << 24;
    long max_py_degree = 16;
    long max_px_degree = 64;
};

struct BiFactor {
    BiPoly poly;
    unsigned multiplicity;
    bool operator==(BiFactor const &) const = default;
};

struct BiFactorization {
    FieldRef field;
    FactorList content;               // factorization of the Y-content in K[X]
    std::vector<BiFactor> yfactors;   // primitive, positive Y-degree, normalized
    long omega_bi = 0;                // sum of yfactor multiplicities

    BiPoly expand() const;
};

struct OracleStats {
    std::uint64_t candidates = 0;     // assembled and trial-divided
    std::uint64_t divisions = 0;
};

/// Normalizes a nonzero polynomial so that the leading X-coefficient of its
/// leading Y-coefficient is 1.
BiPoly unit_normalize(BiPoly const & g);

/// Canonical search order: deg_Y, then deg_X, then coefficients of Y^0,
/// Y^1, ... each read from X^0 upward (padded to deg_X). Residues compare
/// by symmetric representative, so Y - 1 precedes Y + 1.
bool search_order_less(BiPoly const & a, BiPoly const & b);

/// Smallest (in search order) normalized primitive divisor G of F with
/// 1 <= deg_Y G <= deg_Y F / 2, or nullopt when none exists. Candidates are
/// pruned by leading-coefficient divisibility and by divisibility of the
/// specializations at Y = 0 and Y = 1; anything that survives is confirmed
/// by trial division. BudgetExceeded when the candidate space is larger than
/// the budget, since a partial search proves nothing. WrongField unless F is
/// over GF(p).
std::optional<BiPoly> find_bifactor(BiPoly const & F, OracleBudget const & budget = {},
                                    OracleStats * stats = nullptr);

/// Complete factorization over K(X) together with the content in K[X].
BiFactorization bifactor_all(BiPoly const & F, OracleBudget const & budget = {},
                             OracleStats * stats = nullptr);

/// True iff F has positive Y-degree, constant Y-content and no proper
/// divisor. Requires deg_Y F >= 1.
bool is_irreducible_bi(BiPoly const & F, OracleBudget const & budget = {});

namespace detail {
/// Whether the normalized polynomial G survives every pruning filter the
/// search applies for F. A true divisor must always survive.
bool survives_pruning(BiPoly const & F, BiPoly const & G);
}  // namespace detail

}  // namespace compirr
