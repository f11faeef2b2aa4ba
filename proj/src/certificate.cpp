#include "compirr/certificate.hpp"

#include <array>

#include "compirr/error.hpp"

namespace compirr {

namespace {

constexpr std::array kRuleNames{"Thm1Strong", "Thm1Wider", "Cor1", "Cor2", "Cor3",
                                "Cor4", "Cor5Strong", "Cor5Wider", "Cor6"};
constexpr std::array kRelationNames{">", ">=", "="};
constexpr std::array kClaimNames{"FIrreducibleOverKX", "PPrimeElement", "OmegaQuotientA", "OmegaQuotientB"};
constexpr std::array kProvenanceNames{"CertifiedByCor2", "VerifiedByOracle", "VerifiedByEisenstein",
                                      "CallerAsserted"};

template <typename E, std::size_t N>
E lookup(std::array<char const *, N> const & names, std::string const & s, char const * what)
{
    for (std::size_t i = 0; i < N; ++i)
        if (s == names[i])
            return static_cast<E>(i);
    throw Error(ErrorKind::SyntaxError, std::string("unknown ") + what + " '" + s + "'");
}

std::string degree_text(Degree d) { return d.to_string(); }

Degree degree_from_text(std::string const & s)
{
    if (s == "-inf")
        return Degree::minus_infinity();
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (std::exception const &) {
        used = 0;
    }
    if (used != s.size() || s.empty())
        throw Error(ErrorKind::SyntaxError, "expected a decimal integer, got '" + s + "'");
    return Degree(v);
}

nlohmann::ordered_json trace_json(std::vector<TraceEntry> const & trace)
{
    auto arr = nlohmann::ordered_json::array();
    for (auto const & t : trace) {
        nlohmann::ordered_json e;
        e["name"] = t.name;
        e["lhs"] = degree_text(t.lhs);
        e["rel"] = std::string(to_string(t.rel));
        e["rhs"] = degree_text(t.rhs);
        arr.push_back(std::move(e));
    }
    return arr;
}

nlohmann::ordered_json inputs_json(InputDigest const & inputs)
{
    auto obj = nlohmann::ordered_json::object();
    for (auto const & [k, v] : inputs)
        obj[k] = v;
    return obj;
}

std::string get_string(nlohmann::ordered_json const & j, char const * key)
{
    if (!j.is_object() || !j.contains(key) || !j[key].is_string())
        throw Error(ErrorKind::SyntaxError, std::string("missing string field '") + key + "'");
    return j[key].get<std::string>();
}

}  // namespace

std::string_view to_string(Rule r) { return kRuleNames[static_cast<std::size_t>(r)]; }
std::string_view to_string(Relation r) { return kRelationNames[static_cast<std::size_t>(r)]; }
std::string_view to_string(Claim c) { return kClaimNames[static_cast<std::size_t>(c)]; }
std::string_view to_string(Provenance p) { return kProvenanceNames[static_cast<std::size_t>(p)]; }

bool TraceEntry::holds() const
{
    switch (rel) {
    case Relation::Greater: return lhs > rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
    case Relation::Equal: return lhs == rhs;
    }
    return false;
}

nlohmann::ordered_json to_json(Certificate const & c)
{
    nlohmann::ordered_json j;
    j["rule"] = std::string(to_string(c.rule));
    j["verdict"] = c.verdict == VerdictKind::Irreducible ? "Irreducible" : "FactorBound";
    j["bound"] = std::to_string(c.bound);
    j["trace"] = trace_json(c.trace);
    auto arr = nlohmann::ordered_json::array();
    for (auto const & a : c.assumptions) {
        nlohmann::ordered_json e;
        e["claim"] = std::string(to_string(a.claim));
        e["provenance"] = std::string(to_string(a.provenance));
        if (a.value)
            e["value"] = std::to_string(*a.value);
        arr.push_back(std::move(e));
    }
    j["assumptions"] = std::move(arr);
    j["inputs"] = inputs_json(c.inputs);
    return j;
}

nlohmann::ordered_json to_json(NotApplicable const & n)
{
    nlohmann::ordered_json j;
    j["rule"] = std::string(to_string(n.rule));
    j["verdict"] = "NotApplicable";
    j["failing"] = trace_json({n.failing}).at(0);
    j["trace"] = trace_json(n.trace);
    j["inputs"] = inputs_json(n.inputs);
    return j;
}

nlohmann::ordered_json to_json(Outcome const & o)
{
    return std::visit([](auto const & v) { return to_json(v); }, o);
}

std::string to_canonical_json(Outcome const & o)
{
    return to_json(o).dump();
}

Certificate certificate_from_json(nlohmann::ordered_json const & j)
{
    Certificate c{};
    c.rule = lookup<Rule>(kRuleNames, get_string(j, "rule"), "rule");
    std::string verdict = get_string(j, "verdict");
    if (verdict == "Irreducible")
        c.verdict = VerdictKind::Irreducible;
    else if (verdict == "FactorBound")
        c.verdict = VerdictKind::FactorBound;
    else
        throw Error(ErrorKind::SyntaxError, "verdict '" + verdict + "' is not a certificate");
    Degree bound = degree_from_text(get_string(j, "bound"));
    if (!bound.is_finite())
        throw Error(ErrorKind::SyntaxError, "bound must be finite");
    c.bound = bound.value();
    if (!j.contains("trace") || !j["trace"].is_array())
        throw Error(ErrorKind::SyntaxError, "missing trace array");
    for (auto const & e : j["trace"]) {
        c.trace.push_back({get_string(e, "name"), degree_from_text(get_string(e, "lhs")),
                           lookup<Relation>(kRelationNames, get_string(e, "rel"), "relation"),
                           degree_from_text(get_string(e, "rhs"))});
    }
    if (!j.contains("assumptions") || !j["assumptions"].is_array())
        throw Error(ErrorKind::SyntaxError, "missing assumptions array");
    for (auto const & e : j["assumptions"]) {
        Assumption a{lookup<Claim>(kClaimNames, get_string(e, "claim"), "claim"),
                     lookup<Provenance>(kProvenanceNames, get_string(e, "provenance"), "provenance"),
                     std::nullopt};
        if (e.contains("value"))
            a.value = degree_from_text(get_string(e, "value")).value();
        c.assumptions.push_back(a);
    }
    if (!j.contains("inputs") || !j["inputs"].is_object())
        throw Error(ErrorKind::SyntaxError, "missing inputs object");
    for (auto const & [k, v] : j["inputs"].items()) {
        if (!v.is_string())
            throw Error(ErrorKind::SyntaxError, "input '" + k + "' is not a string");
        c.inputs.emplace_back(k, v.get<std::string>());
    }
    return c;
}

}  // namespace compirr
