#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "compirr/degree.hpp"

namespace compirr {

enum class Rule { Thm1Strong, Thm1Wider, Cor1, Cor2, Cor3, Cor4, Cor5Strong, Cor5Wider, Cor6 };
enum class Relation { Greater, GreaterEqual, Equal };
enum class VerdictKind { FactorBound, Irreducible };

/// What an assumption asserts. The Omega claims carry the asserted value
/// for callers that supply factor counts they computed elsewhere.
enum class Claim { FIrreducibleOverKX, PPrimeElement, OmegaQuotientA, OmegaQuotientB };
enum class Provenance { CertifiedByCor2, VerifiedByOracle, VerifiedByEisenstein, CallerAsserted };

std::string_view to_string(Rule r);
std::string_view to_string(Relation r);
std::string_view to_string(Claim c);
std::string_view to_string(Provenance p);

/// One integer comparison the rule depended on.
struct TraceEntry {
    std::string name;
    Degree lhs;
    Relation rel = Relation::Greater;
    Degree rhs;

    bool holds() const;
    bool operator==(TraceEntry const &) const = default;
};

struct Assumption {
    Claim claim;
    Provenance provenance;
    std::optional<long> value;  // set for the Omega claims only

    bool operator==(Assumption const &) const = default;
};

/// Named canonical texts of the inputs, in a fixed order.
using InputDigest = std::vector<std::pair<std::string, std::string>>;

struct Certificate {
    Rule rule;
    VerdictKind verdict;
    long bound;  // 1 for Irreducible
    std::vector<TraceEntry> trace;
    std::vector<Assumption> assumptions;
    InputDigest inputs;

    bool operator==(Certificate const &) const = default;
};

/// A rule that did not fire, with the comparison that failed.
struct NotApplicable {
    Rule rule;
    TraceEntry failing;
    std::vector<TraceEntry> trace;
    InputDigest inputs;

    bool operator==(NotApplicable const &) const = default;
};

using Outcome = std::variant<Certificate, NotApplicable>;

inline bool applicable(Outcome const & o) { return std::holds_alternative<Certificate>(o); }
inline Certificate const & certificate(Outcome const & o) { return std::get<Certificate>(o); }
inline NotApplicable const & not_applicable(Outcome const & o) { return std::get<NotApplicable>(o); }

/// Canonical JSON: keys in fixed order, integers as decimal strings,
/// MinusInfinity as "-inf".
nlohmann::ordered_json to_json(Certificate const & c);
nlohmann::ordered_json to_json(NotApplicable const & n);
nlohmann::ordered_json to_json(Outcome const & o);
std::string to_canonical_json(Outcome const & o);

/// Inverse of to_json(Certificate); throws Error(SyntaxError) on malformed
/// documents.
Certificate certificate_from_json(nlohmann::ordered_json const & j);

}  // namespace compirr
