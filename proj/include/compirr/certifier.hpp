#pragma once

#include <cstdint>
#include <optional>

#include "compirr/bipoly.hpp"
#include "compirr/certificate.hpp"
#include "compirr/multipoly.hpp"
#include "compirr/oracle.hpp"

namespace compirr {

/// d1 divides a_m and d2 divides b_n. Both are made monic before use.
struct DivisorChoice {
    UniPoly d1;
    UniPoly d2;
};

/// The same choice for r-variate inputs.
struct MultiDivisorChoice {
    MultiPoly d1;
    MultiPoly d2;
};

/// A factor count supplied from outside the library.
struct OmegaInput {
    long value;
    Provenance provenance = Provenance::CallerAsserted;
};

// Every check below returns a Certificate when its inequality holds and a
// NotApplicable value carrying the failed comparison otherwise. Contract
// violations (vanishing a_0/a_m/b_n, non-divisors, wrong evidence) throw.

/// Bound on the irreducible factors of f(X, g(X, Y)) over K(X). The strong
/// range needs no evidence; the wider one needs evidence that f is
/// irreducible over K(X).
Outcome check_theorem1(BiPoly const & f, BiPoly const & g, DivisorChoice const & choice,
                       std::optional<Assumption> const & evidence = std::nullopt);

/// The g = Y case, evaluated on its own inequality.
Outcome check_cor1(BiPoly const & f, UniPoly const & d);

/// Irreducibility of f from a_m = p*q with p irreducible. p is verified
/// with the factor engine; a caller assertion is recorded alongside.
Outcome check_cor2(BiPoly const & f, UniPoly const & p, UniPoly const & q,
                   std::optional<Assumption> const & p_assertion = std::nullopt);

/// Irreducibility of f(X, g) given evidence that f is irreducible.
Outcome check_cor3(BiPoly const & f, BiPoly const & g, UniPoly const & p, UniPoly const & q,
                   std::optional<Assumption> const & f_evidence);

/// Irreducibility of f(X, g) without outside evidence.
Outcome check_cor4(BiPoly const & f, BiPoly const & g, UniPoly const & p, UniPoly const & q,
                   std::optional<Assumption> const & p_assertion = std::nullopt);

/// r-variate bound by X_j-degree bookkeeping. For r = 2 missing Omega values
/// are computed; for r > 2 they must be supplied (MissingOmega).
Outcome check_cor5(MultiPoly const & f, MultiPoly const & g, std::size_t j,
                   MultiDivisorChoice const & choice, std::optional<OmegaInput> const & omega_a,
                   std::optional<OmegaInput> const & omega_b,
                   std::optional<Assumption> const & evidence = std::nullopt);

/// r-variate irreducibility. For r = 2 the primality of p is verified when
/// no evidence is given; for r > 2 evidence is required (MissingEvidence).
Outcome check_cor6(MultiPoly const & f, MultiPoly const & g, std::size_t j, MultiPoly const & p,
                   MultiPoly const & q, std::optional<Assumption> const & p_evidence = std::nullopt);

/// Evidence that f is irreducible over K(X): a Cor2 split of a_m, else the
/// oracle when K = GF(p) and the search fits the budget.
std::optional<Assumption> establish_f_irreducible(BiPoly const & f, OracleBudget const & oracle_budget);

struct BestOptions {
    std::uint64_t lattice_budget = 1u << 16;  // max number of (d1, d2) pairs
    OracleBudget oracle{};
    bool use_oracle = true;
    std::optional<Assumption> caller_evidence;
};

/// Searches every (d1, d2) built from the factorizations of a_m and b_n and
/// returns the Theorem 1 certificate with the smallest bound; ties go to the
/// smaller deg d1 + deg d2, then to the canonically smaller (d1, d2).
Outcome best_certificate(BiPoly const & f, BiPoly const & g, BestOptions const & options = {});

}  // namespace compirr
