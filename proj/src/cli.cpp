#include "compirr/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "compirr/certifier.hpp"
#include "compirr/error.hpp"
#include "compirr/factor.hpp"
#include "compirr/fixtures.hpp"
#include "compirr/oracle.hpp"
#include "compirr/parser.hpp"

namespace compirr::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string field = "Q";
    std::string f, g, p, q, d1, d2, poly, from_file, rule = "auto", name;
    std::size_t j = 1;
    std::optional<long> omega_a, omega_b;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t budget = OracleBudget{}.max_candidates;
    bool strict = false;
    bool assert_f = false;
    bool assert_p = false;
    long m = 2, d = 2, n = 2;
};

struct Context {
    Options const & o;
    FieldRef field;
    std::ostream & out;
    std::ostream & err;
};

OracleBudget budget_of(Options const & o)
{
    OracleBudget b;
    b.max_candidates = o.budget;
    return b;
}

std::optional<Assumption> asserted(bool on, Claim claim)
{
    if (!on)
        return std::nullopt;
    return Assumption{claim, Provenance::CallerAsserted, std::nullopt};
}

std::string summarize(Outcome const & o)
{
    if (applicable(o)) {
        auto const & c = certificate(o);
        std::string s = std::string(to_string(c.rule)) + ": ";
        if (c.verdict == VerdictKind::Irreducible)
            return s + "irreducible over K(X)";
        return s + "at most " + std::to_string(c.bound) + " irreducible factors";
    }
    auto const & n = not_applicable(o);
    return std::string(to_string(n.rule)) + ": not applicable, " + n.failing.name + " needs " +
           n.failing.lhs.to_string() + " " + std::string(to_string(n.failing.rel)) + " " +
           n.failing.rhs.to_string();
}

json factor_list_json(FactorList const & fl, FieldRef const & field)
{
    json factors = json::array();
    for (auto const & fac : fl.factors)
        factors.push_back({{"factor", fac.poly.to_string()}, {"multiplicity", std::to_string(fac.multiplicity)}});
    return {{"unit", field->to_string(fl.unit)}, {"factors", factors}, {"omega", std::to_string(fl.omega())}};
}

json bifactorization_json(BiFactorization const & bf)
{
    json yf = json::array();
    for (auto const & fac : bf.yfactors)
        yf.push_back({{"factor", fac.poly.to_string()}, {"multiplicity", std::to_string(fac.multiplicity)}});
    return {{"content", factor_list_json(bf.content, bf.field)}, {"yfactors", yf},
            {"omega_bi", std::to_string(bf.omega_bi)}};
}

BiPoly g_or_y(Context const & c)
{
    return c.o.g.empty() ? BiPoly::y(c.field) : parse_bi(c.o.g, c.field);
}

UniPoly uni_or_one(std::string const & text, FieldRef const & field)
{
    return text.empty() ? UniPoly::constant(field, field->one()) : parse_uni(text, field);
}

UniPoly required_uni(std::string const & text, char const * flag, FieldRef const & field)
{
    if (text.empty())
        throw Error(ErrorKind::PreconditionViolated, std::string("missing ") + flag);
    return parse_uni(text, field);
}

// Theorem 1 with lazily obtained evidence: the wider range is only tried
// when the strong range fails.
Outcome theorem1(Context const & c, BiPoly const & f, BiPoly const & g, DivisorChoice const & choice,
                 bool establish)
{
    auto evidence = asserted(c.o.assert_f, Claim::FIrreducibleOverKX);
    Outcome o = check_theorem1(f, g, choice, evidence);
    if (!applicable(o) && !evidence && establish) {
        if (auto e = establish_f_irreducible(f, budget_of(c.o)))
            o = check_theorem1(f, g, choice, e);
    }
    return o;
}

Outcome certify_multi(Context const & c)
{
    Options const & o = c.o;
    std::size_t r = 2;
    for (auto const * t : {&o.f, &o.g, &o.p, &o.q, &o.d1, &o.d2})
        r = std::max(r, max_variable_index(*t));
    auto multi = [&](std::string const & text) {
        return text.empty() ? MultiPoly::constant(c.field, r, c.field->one()) : parse_multi(text, c.field, r);
    };
    MultiPoly f = parse_multi(o.f, c.field, r);
    MultiPoly g = o.g.empty() ? MultiPoly::variable(c.field, r, r) : parse_multi(o.g, c.field, r);
    if (o.rule == "cor5") {
        auto omega = [](std::optional<long> v) -> std::optional<OmegaInput> {
            if (!v)
                return std::nullopt;
            return OmegaInput{*v, Provenance::CallerAsserted};
        };
        return check_cor5(f, g, o.j, {multi(o.d1), multi(o.d2)}, omega(o.omega_a), omega(o.omega_b),
                          asserted(o.assert_f, Claim::FIrreducibleOverKX));
    }
    if (o.p.empty())
        throw Error(ErrorKind::PreconditionViolated, "missing --p");
    return check_cor6(f, g, o.j, multi(o.p), multi(o.q), asserted(o.assert_p, Claim::PPrimeElement));
}

Outcome certify_outcome(Context const & c)
{
    Options const & o = c.o;
    if (o.rule == "cor5" || o.rule == "cor6")
        return certify_multi(c);
    BiPoly f = parse_bi(o.f, c.field);
    auto p_assert = asserted(o.assert_p, Claim::PPrimeElement);
    if (o.rule == "thm1")
        return theorem1(c, f, g_or_y(c), {uni_or_one(o.d1, c.field), uni_or_one(o.d2, c.field)}, true);
    if (o.rule == "cor1")
        return check_cor1(f, uni_or_one(o.d1, c.field));
    if (o.rule == "cor2")
        return check_cor2(f, required_uni(o.p, "--p", c.field), uni_or_one(o.q, c.field), p_assert);
    if (o.rule == "cor3") {
        auto evidence = asserted(o.assert_f, Claim::FIrreducibleOverKX);
        if (!evidence)
            evidence = establish_f_irreducible(f, budget_of(o));
        return check_cor3(f, g_or_y(c), required_uni(o.p, "--p", c.field), uni_or_one(o.q, c.field), evidence);
    }
    if (o.rule == "cor4")
        return check_cor4(f, g_or_y(c), required_uni(o.p, "--p", c.field), uni_or_one(o.q, c.field), p_assert);
    BestOptions best;
    best.oracle = budget_of(o);
    best.caller_evidence = asserted(o.assert_f, Claim::FIrreducibleOverKX);
    return best_certificate(f, g_or_y(c), best);
}

int emit(Context const & c, Outcome const & o)
{
    c.out << to_canonical_json(o) << '\n';
    c.err << summarize(o) << '\n';
    return !applicable(o) && c.o.strict ? kNotApplicable : kOk;
}

int cmd_certify(Context const & c) { return emit(c, certify_outcome(c)); }

int cmd_bound(Context const & c)
{
    BiPoly f = parse_bi(c.o.f, c.field);
    Outcome o = theorem1(c, f, g_or_y(c), {uni_or_one(c.o.d1, c.field), uni_or_one(c.o.d2, c.field)}, false);
    return emit(c, o);
}

int cmd_factor(Context const & c)
{
    std::vector<std::string> inputs;
    if (!c.o.from_file.empty()) {
        std::ifstream in(c.o.from_file);
        if (!in)
            throw Error(ErrorKind::PreconditionViolated, "cannot read " + c.o.from_file);
        for (std::string line; std::getline(in, line);)
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                inputs.push_back(line);
    } else if (!c.o.poly.empty()) {
        inputs.push_back(c.o.poly);
    } else {
        throw Error(ErrorKind::PreconditionViolated, "missing --poly or --from-file");
    }
    for (auto const & text : inputs) {
        UniPoly u = parse_uni(text, c.field);
        FactorList fl = factor(u, c.o.seed);
        json j = {{"field", c.field->descriptor().to_string()}, {"poly", u.to_string()}};
        j.update(factor_list_json(fl, c.field));
        c.out << j.dump() << '\n';
        c.err << u.to_string() << ": Omega = " << fl.omega() << '\n';
    }
    return kOk;
}

int cmd_oracle(Context const & c)
{
    BiPoly f = parse_bi(c.o.f, c.field);
    BiFactorization bf = bifactor_all(f, budget_of(c.o));
    json j = {{"field", c.field->descriptor().to_string()}, {"f", f.to_string()}};
    j.update(bifactorization_json(bf));
    c.out << j.dump() << '\n';
    c.err << "omega_bi = " << bf.omega_bi << '\n';
    return kOk;
}

int cmd_verify(Context const & c)
{
    BiPoly f = parse_bi(c.o.f, c.field);
    BiPoly g = g_or_y(c);
    BestOptions best;
    best.oracle = budget_of(c.o);
    best.caller_evidence = asserted(c.o.assert_f, Claim::FIrreducibleOverKX);
    Outcome o = best_certificate(f, g, best);
    BiFactorization bf = bifactor_all(compose(f, g), budget_of(c.o));

    json j = {{"certificate", to_json(o)}};
    bool sound = true;
    if (applicable(o)) {
        auto const & cert = certificate(o);
        sound = bf.omega_bi <= cert.bound && (cert.verdict != VerdictKind::Irreducible || bf.omega_bi == 1);
        j["bound"] = std::to_string(cert.bound);
    } else {
        j["bound"] = nullptr;
    }
    j["omega_bi"] = std::to_string(bf.omega_bi);
    j["sound"] = sound;
    c.out << j.dump() << '\n';
    c.err << summarize(o) << "; exact count " << bf.omega_bi << (sound ? "" : " EXCEEDS the bound") << '\n';
    if (!sound)
        return 1;
    return !applicable(o) && c.o.strict ? kNotApplicable : kOk;
}

int cmd_examples(Context const & c0, CLI::Option const * field_opt)
{
    Options const & o = c0.o;
    std::mt19937_64 rng(o.seed);
    bool composed = o.name == "two-factor" || o.name == "sharpness-2";
    FieldRef field = c0.field;
    if (field_opt->count() == 0)
        field = composed ? Field::prime_field(3) : Field::rationals();
    Context c{o, field, c0.out, c0.err};

    json j = {{"name", o.name}, {"field", field->descriptor().to_string()}};
    Outcome outcome = [&]() -> Outcome {
        if (o.name == "eisenstein") {
            if (!field->is_rationals())
                throw Error(ErrorKind::WrongField, "the Eisenstein example lives over Q");
            BiPoly f = fixtures::eisenstein(o.m, o.d, rng);
            UniPoly p = fixtures::eisenstein_p(field, o.d);
            j["f"] = f.to_string();
            j["p"] = p.to_string();
            return check_cor2(f, p, UniPoly::constant(field, field->one()));
        }
        if (o.name == "sharpness-1") {
            BiPoly f = fixtures::sharpness_one(field, o.m, o.d);
            MultiPoly y_minus_1 = MultiPoly::variable(field, 2, 2) - MultiPoly::constant(field, 2, field->one());
            j["f"] = f.to_string();
            j["divisible_by_Y_minus_1"] = divide_exact(MultiPoly::from_bipoly(f), y_minus_1).has_value();
            return check_cor2(f, fixtures::eisenstein_p(field, o.d), UniPoly::constant(field, field->one()));
        }
        if (composed) {
            auto [f, g] = o.name == "two-factor" ? fixtures::two_factor(field, o.m, o.n, o.n, rng)
                                                 : fixtures::sharpness_two(field, o.m);
            j["f"] = f.to_string();
            j["g"] = g.to_string();
            BiPoly fg = compose(f, g);
            if (o.name == "sharpness-2") {
                BiPoly y2_minus_1 = BiPoly::y(field).pow(2) - BiPoly::from_uni(UniPoly::constant(field, field->one()));
                j["divisible_by_Y2_minus_1"] = divide_exact(fg, y2_minus_1).has_value();
            }
            if (field->is_prime_field())
                j["oracle"] = bifactorization_json(bifactor_all(fg, budget_of(o)));
            UniPoly one = UniPoly::constant(field, field->one());
            return check_theorem1(f, g, {one, one});
        }
        throw Error(ErrorKind::PreconditionViolated,
                    "unknown example '" + o.name + "' (eisenstein, sharpness-1, two-factor, sharpness-2)");
    }();
    j["certificate"] = to_json(outcome);
    c.out << j.dump() << '\n';
    c.err << o.name << ": " << summarize(outcome) << '\n';
    return kOk;
}

}  // namespace

int run_command(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    Options o;
    CLI::App app{"Factor-count certificates for compositions f(X, g(X, Y))", "compirr"};
    app.require_subcommand(1);

    auto field_flag = [&](CLI::App * sub) { return sub->add_option("--field", o.field, "Q or GF(p)"); };
    auto poly_flags = [&](CLI::App * sub, bool with_g) {
        sub->add_option("--f", o.f, "f(X, Y)")->required();
        if (with_g)
            sub->add_option("--g", o.g, "g(X, Y), default Y");
    };
    auto budget_flag = [&](CLI::App * sub) {
        sub->add_option("--budget", o.budget, "oracle candidate budget")->check(CLI::PositiveNumber);
    };

    auto * certify = app.add_subcommand("certify", "apply one rule, or pick the best bound");
    field_flag(certify);
    poly_flags(certify, true);
    certify->add_option("--rule", o.rule)->check(
        CLI::IsMember({"thm1", "cor1", "cor2", "cor3", "cor4", "cor5", "cor6", "auto"}));
    certify->add_option("--p", o.p);
    certify->add_option("--q", o.q, "default 1");
    certify->add_option("--d1", o.d1, "default 1");
    certify->add_option("--d2", o.d2, "default 1");
    certify->add_option("--j", o.j, "variable index for cor5/cor6")->check(CLI::PositiveNumber);
    certify->add_option("--omega-a", o.omega_a, "Omega(a_m/d1) for cor5");
    certify->add_option("--omega-b", o.omega_b, "Omega(b_n/d2) for cor5");
    certify->add_option("--seed", o.seed);
    budget_flag(certify);
    certify->add_flag("--strict", o.strict, "exit 3 when the rule does not apply");
    certify->add_flag("--assert-f-irreducible", o.assert_f);
    certify->add_flag("--assert-p-prime", o.assert_p);

    auto * bound = app.add_subcommand("bound", "Theorem 1 bound for explicit d1, d2");
    field_flag(bound);
    poly_flags(bound, true);
    bound->add_option("--d1", o.d1, "default 1");
    bound->add_option("--d2", o.d2, "default 1");
    bound->add_flag("--strict", o.strict);
    bound->add_flag("--assert-f-irreducible", o.assert_f);

    auto * fac = app.add_subcommand("factor", "factor a univariate polynomial");
    field_flag(fac);
    auto * poly_opt = fac->add_option("--poly", o.poly);
    fac->add_option("--from-file", o.from_file, "one polynomial per line")->excludes(poly_opt);
    fac->add_option("--seed", o.seed);

    auto * oracle = app.add_subcommand("oracle", "exhaustive factorization over GF(p)(X)");
    field_flag(oracle);
    poly_flags(oracle, false);
    budget_flag(oracle);

    auto * verify = app.add_subcommand("verify", "compare the best bound with the exact count");
    field_flag(verify);
    poly_flags(verify, true);
    budget_flag(verify);
    verify->add_option("--seed", o.seed);
    verify->add_flag("--strict", o.strict);
    verify->add_flag("--assert-f-irreducible", o.assert_f);

    auto * examples = app.add_subcommand("examples", "reproduce the worked examples");
    auto * ex_field = field_flag(examples);
    examples->add_option("--name", o.name)->required();
    examples->add_option("--m", o.m)->check(CLI::Range(2L, 12L));
    examples->add_option("--d", o.d)->check(CLI::Range(2L, 12L));
    examples->add_option("--n", o.n)->check(CLI::Range(1L, 6L));
    examples->add_option("--seed", o.seed);
    budget_flag(examples);

    std::vector<std::string> argv_store{"compirr"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char const *> argv;
    for (auto const & a : argv_store)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        FieldRef field = Field::make(FieldDescriptor::parse(o.field));
        Context c{o, field, out, err};
        if (certify->parsed())
            return cmd_certify(c);
        if (bound->parsed())
            return cmd_bound(c);
        if (fac->parsed())
            return cmd_factor(c);
        if (oracle->parsed())
            return cmd_oracle(c);
        if (verify->parsed())
            return cmd_verify(c);
        return cmd_examples(c, ex_field);
    } catch (ParseError const & e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (Error const & e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::BudgetExceeded ? kBudget : kUsage;
    }
}

}  // namespace compirr::cli
