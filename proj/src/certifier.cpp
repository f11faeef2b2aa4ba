#include "compirr/certifier.hpp"

#include <algorithm>
#include <tuple>

#include "compirr/error.hpp"
#include "compirr/factor.hpp"

namespace compirr {

namespace {

struct Shape {
    long m = 0;
    long n = 1;
    UniPoly am;
    UniPoly bn;
    Degree h1;
};

Shape shape_of_f(BiPoly const & f)
{
    if (f.deg_y() < Degree(1))
        throw Error(ErrorKind::PreconditionViolated, "m = deg_Y f must be at least 1");
    if (f.ycoeff(0).is_zero())
        throw Error(ErrorKind::PreconditionViolated, "a_0 vanishes");
    Shape s{f.deg_y().value(), 1, f.leading_y(), UniPoly::constant(f.field(), f.field()->one()), h1_norm(f)};
    return s;
}

Shape shape_of(BiPoly const & f, BiPoly const & g)
{
    require_same_field(f.field(), g.field());
    Shape s = shape_of_f(f);
    if (g.deg_y() < Degree(1))
        throw Error(ErrorKind::PreconditionViolated, "n = deg_Y g must be at least 1");
    s.n = g.deg_y().value();
    s.bn = g.leading_y();
    return s;
}

TraceEntry at_least_one(char const * name, long v)
{
    return {name, Degree(v), Relation::GreaterEqual, Degree(1)};
}

UniPoly quotient_or_throw(UniPoly const & a, UniPoly const & d, char const * what)
{
    if (d.is_zero())
        throw Error(ErrorKind::NotADivisor, std::string(what) + " is zero");
    auto q = divide_exact(a, d);
    if (!q)
        throw Error(ErrorKind::NotADivisor, std::string(what) + " = " + d.to_string() + " does not divide "
                                                + a.to_string());
    return *q;
}

Certificate make_certificate(Rule rule, VerdictKind verdict, long bound, std::vector<TraceEntry> trace,
                             std::vector<Assumption> assumptions, InputDigest inputs)
{
    return {rule, verdict, bound, std::move(trace), std::move(assumptions), std::move(inputs)};
}

std::string field_text(FieldRef const & f) { return f->descriptor().to_string(); }

/// Primality evidence for a univariate p: Eisenstein at a prime dividing
/// every non-leading coefficient when K = Q, otherwise the factor engine.
Assumption verify_p(UniPoly const & p)
{
    if (p.degree() < Degree(1) || !is_irreducible_uni(p))
        throw Error(ErrorKind::PNotIrreducible, p.to_string() + " is not irreducible");
    if (p.field()->is_rationals()) {
        auto z = primitive_integer_form(p);
        mpz_class g = 0;
        for (std::size_t i = 0; i + 1 < z.size(); ++i)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
        for (unsigned long ell = 2; ell <= 10000 && g != 0 && ell <= abs(g); ++ell) {
            if (mpz_divisible_ui_p(g.get_mpz_t(), ell) && is_prime_trial_division(ell)
                && eisenstein_check(p, mpz_class(ell)))
                return {Claim::PPrimeElement, Provenance::VerifiedByEisenstein, std::nullopt};
        }
    }
    return {Claim::PPrimeElement, Provenance::VerifiedByOracle, std::nullopt};
}

void require_claim(std::optional<Assumption> const & a, Claim claim, char const * what)
{
    if (!a)
        throw Error(ErrorKind::MissingEvidence, std::string("no evidence that ") + what);
    if (a->claim != claim)
        throw Error(ErrorKind::MissingEvidence,
                    std::string("evidence claims ") + std::string(to_string(a->claim)) + ", need " + what);
}

void check_split(UniPoly const & am, UniPoly const & p, UniPoly const & q)
{
    if (!(p * q == am))
        throw Error(ErrorKind::FactorizationMismatch,
                    "p*q = " + (p * q).to_string() + " but a_m = " + am.to_string());
}

std::vector<Assumption> p_assumptions(UniPoly const & p, std::optional<Assumption> const & assertion)
{
    std::vector<Assumption> out{verify_p(p)};
    if (assertion) {
        require_claim(assertion, Claim::PPrimeElement, "p is prime");
        out.push_back({Claim::PPrimeElement, Provenance::CallerAsserted, std::nullopt});
    }
    return out;
}

Outcome decide(Rule rule, std::vector<TraceEntry> trace, std::vector<TraceEntry> const & ranges,
               std::vector<Assumption> assumptions, InputDigest inputs)
{
    for (auto const & r : ranges) {
        trace.push_back(r);
        if (!r.holds())
            return NotApplicable{rule, r, std::move(trace), std::move(inputs)};
    }
    return make_certificate(rule, VerdictKind::Irreducible, 1, std::move(trace), std::move(assumptions),
                            std::move(inputs));
}

// ---- r-variate bookkeeping -----------------------------------------------

struct MultiShape {
    std::size_t r;
    long m, n;
    MultiPoly am, bn;
    Degree hj;
};

MultiShape multi_shape(MultiPoly const & f, MultiPoly const & g, std::size_t j)
{
    require_same_field(f.field(), g.field());
    std::size_t const r = f.nvars();
    if (r < 2 || g.nvars() != r)
        throw Error(ErrorKind::PreconditionViolated, "f and g must share r >= 2 variables");
    if (j < 1 || j + 1 > r)
        throw Error(ErrorKind::IndexOutOfRange, "j = " + std::to_string(j) + " outside 1.." + std::to_string(r - 1));
    auto a = f.coeffs_in_last();
    auto b = g.coeffs_in_last();
    if (a.size() < 2)
        throw Error(ErrorKind::PreconditionViolated, "m = deg_{X_r} f must be at least 1");
    if (b.size() < 2)
        throw Error(ErrorKind::PreconditionViolated, "n = deg_{X_r} g must be at least 1");
    if (a.front().is_zero())
        throw Error(ErrorKind::PreconditionViolated, "a_0 vanishes");
    return {r, static_cast<long>(a.size()) - 1, static_cast<long>(b.size()) - 1, a.back(), b.back(),
            hj_norm(f, j)};
}

MultiPoly multi_quotient(MultiPoly const & a, MultiPoly const & d, std::size_t r, char const * what)
{
    if (d.is_zero() || d.nvars() != r || multi_deg(d, r) > Degree(0))
        throw Error(ErrorKind::NotADivisor, std::string(what) + " must be a nonzero polynomial free of X_r");
    auto q = divide_exact(a, d);
    if (!q)
        throw Error(ErrorKind::NotADivisor, std::string(what) + " does not divide the leading coefficient");
    return *q;
}

long resolve_omega(std::optional<OmegaInput> const & given, MultiPoly const & quotient, std::size_t r, Claim claim,
                   std::vector<Assumption> & assumptions)
{
    if (given) {
        assumptions.push_back({claim, given->provenance, given->value});
        return given->value;
    }
    if (r == 2)
        return omega(quotient.to_uni(1));
    throw Error(ErrorKind::MissingOmega,
                std::string(to_string(claim)) + " must be supplied when r > 2");
}

InputDigest multi_inputs(MultiPoly const & f, MultiPoly const & g, std::size_t j)
{
    return {{"field", field_text(f.field())}, {"f", f.to_string()}, {"g", g.to_string()}, {"j", std::to_string(j)}};
}

}  // namespace

Outcome check_theorem1(BiPoly const & f, BiPoly const & g, DivisorChoice const & choice,
                       std::optional<Assumption> const & evidence)
{
    Shape const s = shape_of(f, g);
    UniPoly const d1 = choice.d1.monic(), d2 = choice.d2.monic();
    long const oa = omega(quotient_or_throw(s.am, d1, "d1"));
    long const ob = omega(quotient_or_throw(s.bn, d2, "d2"));
    long const m = s.m, n = s.n;
    Degree const deg_am = s.am.degree();

    InputDigest inputs{{"field", field_text(f.field())}, {"f", f.to_string()}, {"g", g.to_string()},
                       {"d1", d1.to_string()}, {"d2", d2.to_string()}};
    std::vector<TraceEntry> trace{at_least_one("m", m), at_least_one("n", n)};

    TraceEntry strong{"strong_range", deg_am, Relation::Greater,
                      Degree(m * n * d1.deg() + m * m * n * d2.deg()) + s.h1};
    if (strong.holds()) {
        trace.push_back(strong);
        return make_certificate(Rule::Thm1Strong, VerdictKind::FactorBound, oa + m * ob, std::move(trace), {},
                                std::move(inputs));
    }
    if (!evidence) {
        trace.push_back(strong);
        return NotApplicable{Rule::Thm1Strong, strong, std::move(trace), std::move(inputs)};
    }
    require_claim(evidence, Claim::FIrreducibleOverKX, "f is irreducible over K(X)");
    TraceEntry wider{"wider_range", deg_am, Relation::Greater, Degree(n * d1.deg() + m * n * d2.deg()) + s.h1};
    trace.push_back(wider);
    if (wider.holds())
        return make_certificate(Rule::Thm1Wider, VerdictKind::FactorBound, oa + m * ob, std::move(trace),
                                {*evidence}, std::move(inputs));
    return NotApplicable{Rule::Thm1Wider, wider, std::move(trace), std::move(inputs)};
}

Outcome check_cor1(BiPoly const & f, UniPoly const & d)
{
    Shape const s = shape_of_f(f);
    UniPoly const dm = d.monic();
    long const bound = omega(quotient_or_throw(s.am, dm, "d"));
    InputDigest inputs{{"field", field_text(f.field())}, {"f", f.to_string()}, {"d", dm.to_string()}};
    std::vector<TraceEntry> trace{at_least_one("m", s.m), at_least_one("n", 1)};
    TraceEntry range{"strong_range", s.am.degree(), Relation::Greater, Degree(s.m * dm.deg()) + s.h1};
    trace.push_back(range);
    if (!range.holds())
        return NotApplicable{Rule::Cor1, range, std::move(trace), std::move(inputs)};
    return make_certificate(Rule::Cor1, VerdictKind::FactorBound, bound, std::move(trace), {}, std::move(inputs));
}

Outcome check_cor2(BiPoly const & f, UniPoly const & p, UniPoly const & q,
                   std::optional<Assumption> const & p_assertion)
{
    Shape const s = shape_of_f(f);
    check_split(s.am, p, q);
    auto assumptions = p_assumptions(p, p_assertion);
    InputDigest inputs{{"field", field_text(f.field())}, {"f", f.to_string()}, {"p", p.to_string()},
                       {"q", q.to_string()}};
    TraceEntry range{"cor2_range", p.degree(), Relation::Greater, Degree((s.m - 1) * q.deg()) + s.h1};
    return decide(Rule::Cor2, {at_least_one("m", s.m)}, {range}, std::move(assumptions), std::move(inputs));
}

Outcome check_cor3(BiPoly const & f, BiPoly const & g, UniPoly const & p, UniPoly const & q,
                   std::optional<Assumption> const & f_evidence)
{
    Shape const s = shape_of(f, g);
    check_split(s.am, p, q);
    require_claim(f_evidence, Claim::FIrreducibleOverKX, "f is irreducible over K(X)");
    auto assumptions = p_assumptions(p, std::nullopt);
    assumptions.push_back(*f_evidence);
    InputDigest inputs{{"field", field_text(f.field())}, {"f", f.to_string()}, {"g", g.to_string()},
                       {"p", p.to_string()}, {"q", q.to_string()}};
    TraceEntry range{"cor3_range", p.degree(), Relation::Greater,
                     Degree((s.n - 1) * q.deg() + s.m * s.n * s.bn.deg()) + s.h1};
    return decide(Rule::Cor3, {at_least_one("m", s.m), at_least_one("n", s.n)}, {range}, std::move(assumptions),
                  std::move(inputs));
}

Outcome check_cor4(BiPoly const & f, BiPoly const & g, UniPoly const & p, UniPoly const & q,
                   std::optional<Assumption> const & p_assertion)
{
    Shape const s = shape_of(f, g);
    check_split(s.am, p, q);
    auto assumptions = p_assumptions(p, p_assertion);
    assumptions.push_back({Claim::FIrreducibleOverKX, Provenance::CertifiedByCor2, std::nullopt});
    InputDigest inputs{{"field", field_text(f.field())}, {"f", f.to_string()}, {"g", g.to_string()},
                       {"p", p.to_string()}, {"q", q.to_string()}};
    // deg p > max{A, B} + H1 split into its two branches
    TraceEntry cor2{"cor2_range", p.degree(), Relation::Greater, Degree((s.m - 1) * q.deg()) + s.h1};
    TraceEntry cor3{"cor3_range", p.degree(), Relation::Greater,
                    Degree((s.n - 1) * q.deg() + s.m * s.n * s.bn.deg()) + s.h1};
    return decide(Rule::Cor4, {at_least_one("m", s.m), at_least_one("n", s.n)}, {cor2, cor3},
                  std::move(assumptions), std::move(inputs));
}

Outcome check_cor5(MultiPoly const & f, MultiPoly const & g, std::size_t j, MultiDivisorChoice const & choice,
                   std::optional<OmegaInput> const & omega_a, std::optional<OmegaInput> const & omega_b,
                   std::optional<Assumption> const & evidence)
{
    MultiShape const s = multi_shape(f, g, j);
    MultiPoly const qa = multi_quotient(s.am, choice.d1, s.r, "d1");
    MultiPoly const qb = multi_quotient(s.bn, choice.d2, s.r, "d2");
    std::vector<Assumption> assumptions;
    long const oa = resolve_omega(omega_a, qa, s.r, Claim::OmegaQuotientA, assumptions);
    long const ob = resolve_omega(omega_b, qb, s.r, Claim::OmegaQuotientB, assumptions);
    long const m = s.m, n = s.n;
    long const dd1 = multi_deg(choice.d1, j).value(), dd2 = multi_deg(choice.d2, j).value();
    Degree const deg_am = multi_deg(s.am, j);

    InputDigest inputs = multi_inputs(f, g, j);
    inputs.emplace_back("d1", choice.d1.to_string());
    inputs.emplace_back("d2", choice.d2.to_string());
    std::vector<TraceEntry> trace{at_least_one("m", m), at_least_one("n", n)};

    TraceEntry strong{"strong_range", deg_am, Relation::Greater, Degree(m * n * dd1 + m * m * n * dd2) + s.hj};
    if (strong.holds()) {
        trace.push_back(strong);
        return make_certificate(Rule::Cor5Strong, VerdictKind::FactorBound, oa + m * ob, std::move(trace),
                                std::move(assumptions), std::move(inputs));
    }
    if (!evidence) {
        trace.push_back(strong);
        return NotApplicable{Rule::Cor5Strong, strong, std::move(trace), std::move(inputs)};
    }
    require_claim(evidence, Claim::FIrreducibleOverKX, "f is irreducible over K(X_1..X_{r-1})");
    TraceEntry wider{"wider_range", deg_am, Relation::Greater, Degree(n * dd1 + m * n * dd2) + s.hj};
    trace.push_back(wider);
    if (!wider.holds())
        return NotApplicable{Rule::Cor5Wider, wider, std::move(trace), std::move(inputs)};
    assumptions.push_back(*evidence);
    return make_certificate(Rule::Cor5Wider, VerdictKind::FactorBound, oa + m * ob, std::move(trace),
                            std::move(assumptions), std::move(inputs));
}

Outcome check_cor6(MultiPoly const & f, MultiPoly const & g, std::size_t j, MultiPoly const & p,
                   MultiPoly const & q, std::optional<Assumption> const & p_evidence)
{
    MultiShape const s = multi_shape(f, g, j);
    if (!(p * q == s.am))
        throw Error(ErrorKind::FactorizationMismatch,
                    "p*q = " + (p * q).to_string() + " but a_m = " + s.am.to_string());
    std::vector<Assumption> assumptions;
    if (p_evidence) {
        require_claim(p_evidence, Claim::PPrimeElement, "p is a prime element");
        assumptions.push_back(*p_evidence);
    } else if (s.r == 2) {
        assumptions.push_back(verify_p(p.to_uni(1)));
    } else {
        throw Error(ErrorKind::MissingEvidence, "primality of p must be supplied when r > 2");
    }
    assumptions.push_back({Claim::FIrreducibleOverKX, Provenance::CertifiedByCor2, std::nullopt});

    InputDigest inputs = multi_inputs(f, g, j);
    inputs.emplace_back("p", p.to_string());
    inputs.emplace_back("q", q.to_string());
    long const dq = multi_deg(q, j).value();
    TraceEntry cor2{"cor2_range", multi_deg(p, j), Relation::Greater, Degree((s.m - 1) * dq) + s.hj};
    TraceEntry cor3{"cor3_range", multi_deg(p, j), Relation::Greater,
                    Degree((s.n - 1) * dq + s.m * s.n * multi_deg(s.bn, j).value()) + s.hj};
    return decide(Rule::Cor6, {at_least_one("m", s.m), at_least_one("n", s.n)}, {cor2, cor3},
                  std::move(assumptions), std::move(inputs));
}

std::optional<Assumption> establish_f_irreducible(BiPoly const & f, OracleBudget const & oracle_budget)
{
    Shape const s = shape_of_f(f);
    for (auto const & fac : factor(s.am).factors) {
        UniPoly const q = divmod(s.am, fac.poly).quotient;
        if (applicable(check_cor2(f, fac.poly, q)))
            return Assumption{Claim::FIrreducibleOverKX, Provenance::CertifiedByCor2, std::nullopt};
    }
    if (f.field()->is_prime_field()) {
        try {
            if (is_irreducible_bi(f, oracle_budget))
                return Assumption{Claim::FIrreducibleOverKX, Provenance::VerifiedByOracle, std::nullopt};
        } catch (Error const & e) {
            if (e.kind() != ErrorKind::BudgetExceeded)
                throw;
        }
    }
    return std::nullopt;
}

namespace {

struct Divisor {
    UniPoly poly;
    long omega;
};

std::vector<Divisor> divisors_with_omega(UniPoly const & u)
{
    auto const & field = u.field();
    std::vector<Divisor> out{{UniPoly::constant(field, field->one()), 0}};
    for (auto const & f : factor(u).factors) {
        std::vector<Divisor> next;
        UniPoly pw = UniPoly::constant(field, field->one());
        for (unsigned e = 0; e <= f.multiplicity; ++e) {
            for (auto const & d : out)
                next.push_back({d.poly * pw, d.omega + static_cast<long>(e)});
            pw *= f.poly;
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

Outcome best_certificate(BiPoly const & f, BiPoly const & g, BestOptions const & options)
{
    Shape const s = shape_of(f, g);
    auto const & field = f.field();
    UniPoly const one = UniPoly::constant(field, field->one());
    long const m = s.m, n = s.n;

    auto const div_a = divisors_with_omega(s.am);
    auto const div_b = divisors_with_omega(s.bn);
    double const lattice = static_cast<double>(div_a.size()) * static_cast<double>(div_b.size());
    if (lattice > static_cast<double>(options.lattice_budget))
        throw Error(ErrorKind::BudgetExceeded, "divisor lattice has " + std::to_string(div_a.size()) + " x "
                                                   + std::to_string(div_b.size()) + " points");
    long const omega_a = div_a.back().omega;  // the full divisor carries every factor
    long const omega_b = div_b.back().omega;
    long const deg_am = s.am.deg();

    bool evidence_tried = false;
    std::optional<Assumption> evidence;
    auto get_evidence = [&]() -> std::optional<Assumption> const & {
        if (!evidence_tried) {
            evidence_tried = true;
            if (options.use_oracle)
                evidence = establish_f_irreducible(f, options.oracle);
            else {
                for (auto const & fac : factor(s.am).factors) {
                    if (applicable(check_cor2(f, fac.poly, divmod(s.am, fac.poly).quotient))) {
                        evidence = Assumption{Claim::FIrreducibleOverKX, Provenance::CertifiedByCor2, std::nullopt};
                        break;
                    }
                }
            }
            if (!evidence && options.caller_evidence)
                evidence = options.caller_evidence;
        }
        return evidence;
    };

    struct Best {
        long bound;
        long degsum;
        Divisor const * d1;
        Divisor const * d2;
        bool wider;
    };
    std::optional<Best> best;
    auto better = [](Best const & a, Best const & b) {
        if (a.bound != b.bound)
            return a.bound < b.bound;
        if (a.degsum != b.degsum)
            return a.degsum < b.degsum;
        if (!(a.d1->poly == b.d1->poly))
            return canonical_less(a.d1->poly, b.d1->poly);
        if (!(a.d2->poly == b.d2->poly))
            return canonical_less(a.d2->poly, b.d2->poly);
        return !a.wider && b.wider;
    };

    for (auto const & d1 : div_a) {
        for (auto const & d2 : div_b) {
            long const bound = (omega_a - d1.omega) + m * (omega_b - d2.omega);
            Degree const h1 = s.h1;
            long const deg1 = d1.poly.deg(), deg2 = d2.poly.deg();
            bool ok = Degree(deg_am) > Degree(m * n * deg1 + m * m * n * deg2) + h1;
            bool wider = false;
            if (!ok && Degree(deg_am) > Degree(n * deg1 + m * n * deg2) + h1 && get_evidence()) {
                ok = true;
                wider = true;
            }
            if (!ok)
                continue;
            Best cand{bound, deg1 + deg2, &d1, &d2, wider};
            if (!best || better(cand, *best))
                best = cand;
        }
    }
    if (!best)
        return check_theorem1(f, g, {one, one}, evidence_tried ? evidence : std::nullopt);
    return check_theorem1(f, g, {best->d1->poly, best->d2->poly},
                          best->wider ? evidence : std::nullopt);
}

}  // namespace compirr
