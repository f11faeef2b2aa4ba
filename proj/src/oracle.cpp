#include "compirr/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "compirr/error.hpp"

namespace compirr {

BiPoly BiFactorization::expand() const
{
    BiPoly r = BiPoly::from_uni(content.expand(field));
    for (auto const & f : yfactors)
        r *= f.poly.pow(f.multiplicity);
    return r;
}

namespace {

void require_prime_field(BiPoly const & F)
{
    if (!F.field()->is_prime_field())
        throw Error(ErrorKind::WrongField, "the oracle works over GF(p) only");
}

void check_input_limits(BiPoly const & F, OracleBudget const & budget)
{
    if (F.deg_y() > Degree(budget.max_py_degree) || F.deg_x() > Degree(budget.max_px_degree))
        throw Error(ErrorKind::BudgetExceeded,
                    "input degrees (Y " + F.deg_y().to_string() + ", X " + F.deg_x().to_string()
                        + ") exceed the oracle limits (Y " + std::to_string(budget.max_py_degree)
                        + ", X " + std::to_string(budget.max_px_degree) + ")");
}

std::vector<UniPoly> unit_multiples(std::vector<UniPoly> const & monics, Field const & field)
{
    std::vector<UniPoly> out;
    out.reserve(monics.size() * (field.characteristic() - 1));
    for (auto const & m : monics)
        for (std::uint64_t u = 1; u < field.characteristic(); ++u)
            out.push_back(m.scaled(field.from_residue(u)));
    return out;
}

/// All polynomials of degree <= D, enumerated as base-p counters.
std::vector<UniPoly> all_polys_up_to(FieldRef const & field, long D)
{
    std::uint64_t const p = field->characteristic();
    std::vector<UniPoly> out;
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(D + 1), 0);
    for (;;) {
        std::vector<FieldElement> cs;
        cs.reserve(digits.size());
        for (auto d : digits)
            cs.push_back(field->from_residue(d));
        out.emplace_back(field, std::move(cs));
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == p)
            digits[i++] = 0;
        if (i == digits.size())
            break;
    }
    return out;
}

struct Search {
    BiPoly const & P;
    FieldRef field;
    long D;                       // deg_X P
    std::vector<UniPoly> leads;   // monic divisors of lc_Y(P)
    std::vector<UniPoly> lows;    // unit multiples of divisors of P(X, 0)
    std::vector<UniPoly> ones;    // unit multiples of divisors of P(X, 1), empty if P(X, 1) = 0
    bool p1_zero = false;
    OracleStats * stats;
    std::uint64_t remaining;

    std::optional<BiPoly> best;

    void consider(std::vector<UniPoly> const & coeffs)
    {
        for (auto const & c : coeffs)
            if (c.degree() > Degree(D))
                return;
        BiPoly G(field, coeffs);
        if (stats)
            ++stats->candidates;
        if (best && search_order_less(*best, G))
            return;
        if (stats)
            ++stats->divisions;
        if (divide_exact(P, G))
            best = std::move(G);
    }
};

double pow_count(double base, long e) { return std::pow(base, static_cast<double>(e)); }

// Residues read as symmetric representatives, so that -1 sorts before 1.
long signed_residue(Field const & field, FieldElement const & a)
{
    auto const r = static_cast<long>(field.residue(a));
    auto const p = static_cast<long>(field.characteristic());
    return 2 * r <= p - 1 ? r : r - p;
}

}  // namespace

BiPoly unit_normalize(BiPoly const & g)
{
    if (g.is_zero())
        throw Error(ErrorKind::ZeroInput, "normalizing the zero polynomial");
    auto const & lead = g.leading_y().leading();
    if (g.field()->is_one(lead))
        return g;
    return g.scaled(UniPoly::constant(g.field(), g.field()->inv(lead)));
}

bool search_order_less(BiPoly const & a, BiPoly const & b)
{
    if (a.deg_y() != b.deg_y())
        return a.deg_y() < b.deg_y();
    if (a.deg_x() != b.deg_x())
        return a.deg_x() < b.deg_x();
    auto const & F = *a.field();
    std::size_t const ny = a.ycoeffs().size();
    std::size_t const nx = a.deg_x().is_finite() ? static_cast<std::size_t>(a.deg_x().value()) + 1 : 0;
    for (std::size_t i = 0; i < ny; ++i) {
        UniPoly const ca = a.ycoeff(i), cb = b.ycoeff(i);
        for (std::size_t k = 0; k < nx; ++k) {
            long const ra = signed_residue(F, ca.coeff(k)), rb = signed_residue(F, cb.coeff(k));
            if (ra != rb)
                return ra < rb;
        }
    }
    return false;
}

namespace detail {

bool survives_pruning(BiPoly const & F, BiPoly const & G)
{
    BiPoly const P = content_y(F).primitive;
    auto const & field = *F.field();
    if (G.deg_x() > P.deg_x())
        return false;
    if (!divides(G.leading_y(), P.leading_y()))
        return false;
    for (std::uint64_t y0 : {0u, 1u}) {
        UniPoly const fp = P.evaluate_y(field.from_residue(y0));
        if (!fp.is_zero() && !divides(G.evaluate_y(field.from_residue(y0)), fp))
            return false;
    }
    return true;
}

}  // namespace detail

std::optional<BiPoly> find_bifactor(BiPoly const & F, OracleBudget const & budget, OracleStats * stats)
{
    if (F.is_zero())
        throw Error(ErrorKind::ZeroInput, "oracle on the zero polynomial");
    require_prime_field(F);
    check_input_limits(F, budget);
    auto const & field = F.field();
    BiPoly const P = unit_normalize(content_y(F).primitive);
    long const d = P.deg_y().value();
    if (d < 2)
        return std::nullopt;

    UniPoly const p0 = P.ycoeff(0);
    if (p0.is_zero()) {
        // Y divides P; only Y + c with c a negative representative precedes it
        long const half = static_cast<long>(field->characteristic() - 1) / 2;
        for (long c = -half; c < 0; ++c) {
            FieldElement const fc = field->from_int(c);
            if (P.evaluate_y(field->neg(fc)).is_zero())
                return BiPoly::y(field) + BiPoly::from_uni(UniPoly::constant(field, fc));
        }
        return BiPoly::y(field);
    }

    Search s{P, field, P.deg_x().value(), {}, {}, {}, false, stats, budget.max_candidates, std::nullopt};
    s.leads = monic_divisors(factor_gf(P.leading_y()), field);
    s.lows = unit_multiples(monic_divisors(factor_gf(p0), field), *field);
    UniPoly const p1 = P.evaluate_y(field->one());
    s.p1_zero = p1.is_zero();
    if (!s.p1_zero)
        s.ones = unit_multiples(monic_divisors(factor_gf(p1), field), *field);

    double const p = static_cast<double>(field->characteristic());
    double const free_size = pow_count(p, s.D + 1);
    std::vector<UniPoly> free_polys;

    for (long k = 1; 2 * k <= d; ++k) {
        // size of this level's candidate space, checked before searching it
        long const free_count = s.p1_zero ? k - 1 : std::max(0L, k - 2);
        double space = static_cast<double>(s.leads.size()) * static_cast<double>(s.lows.size())
                       * pow_count(free_size, free_count);
        if (!s.p1_zero && k >= 2)
            space *= static_cast<double>(s.ones.size());
        if (space > static_cast<double>(s.remaining))
            throw Error(ErrorKind::BudgetExceeded,
                        "Y-degree " + std::to_string(k) + " divisors need about "
                            + std::to_string(static_cast<unsigned long long>(space))
                            + " candidates, " + std::to_string(s.remaining) + " left in budget");
        s.remaining -= static_cast<std::uint64_t>(space);
        if (free_count > 0 && free_polys.empty())
            free_polys = all_polys_up_to(field, s.D);

        std::vector<UniPoly> coeffs(static_cast<std::size_t>(k + 1), UniPoly(field));
        for (auto const & lead : s.leads) {
            coeffs[static_cast<std::size_t>(k)] = lead;
            for (auto const & low : s.lows) {
                coeffs[0] = low;
                if (k == 1) {
                    if (!s.p1_zero && !divides(low + lead, p1))
                        continue;
                    s.consider(coeffs);
                    continue;
                }
                // indices 2..k-1 (and 1 when P(X,1) = 0) range freely
                std::size_t const first_free = s.p1_zero ? 1 : 2;
                std::size_t const nfree = static_cast<std::size_t>(k) - first_free;
                std::vector<std::size_t> idx(nfree, 0);
                for (;;) {
                    for (std::size_t t = 0; t < nfree; ++t)
                        coeffs[first_free + t] = free_polys[idx[t]];
                    if (s.p1_zero) {
                        s.consider(coeffs);
                    } else {
                        UniPoly partial = low + lead;
                        for (std::size_t t = 2; t < static_cast<std::size_t>(k); ++t)
                            partial += coeffs[t];
                        for (auto const & one : s.ones) {
                            coeffs[1] = one - partial;
                            s.consider(coeffs);
                        }
                    }
                    std::size_t t = 0;
                    while (t < nfree && ++idx[t] == free_polys.size())
                        idx[t++] = 0;
                    if (t == nfree)
                        break;
                }
            }
        }
        if (s.best)
            return s.best;
    }
    return std::nullopt;
}

BiFactorization bifactor_all(BiPoly const & F, OracleBudget const & budget, OracleStats * stats)
{
    if (F.is_zero())
        throw Error(ErrorKind::ZeroInput, "oracle on the zero polynomial");
    require_prime_field(F);
    check_input_limits(F, budget);
    auto const & field = F.field();
    auto [b, prim] = content_y(F);
    FieldElement const lam = prim.leading_y().leading();
    BiPoly Q = unit_normalize(prim);

    BiFactorization out{field, factor_gf(b.scaled(lam)), {}, 0};
    std::vector<BiPoly> found;
    while (Q.deg_y() >= Degree(1)) {
        auto G = find_bifactor(Q, budget, stats);
        if (!G) {
            found.push_back(Q);
            break;
        }
        Q = *divide_exact(Q, *G);
        found.push_back(std::move(*G));
    }
    std::sort(found.begin(), found.end(), search_order_less);
    for (auto & g : found) {
        if (!out.yfactors.empty() && out.yfactors.back().poly == g)
            ++out.yfactors.back().multiplicity;
        else
            out.yfactors.push_back({std::move(g), 1});
        ++out.omega_bi;
    }
    return out;
}

bool is_irreducible_bi(BiPoly const & F, OracleBudget const & budget)
{
    if (F.deg_y() < Degree(1))
        throw Error(ErrorKind::ConstantInY, "irreducibility over K(X) needs deg_Y F >= 1");
    require_prime_field(F);
    auto [b, prim] = content_y(F);
    if (!b.is_one())
        return false;
    return !find_bifactor(prim, budget).has_value();
}

}  // namespace compirr
