#include "compirr/factor.hpp"

#include <algorithm>
#include <random>

#include "compirr/error.hpp"

namespace compirr {

long FactorList::omega() const
{
    long n = 0;
    for (auto const & f : factors)
        n += f.multiplicity;
    return n;
}

UniPoly FactorList::expand(FieldRef const & field) const
{
    UniPoly r = UniPoly::constant(field, unit);
    for (auto const & f : factors)
        r *= f.poly.pow(f.multiplicity);
    return r;
}

namespace {

UniPoly one_of(FieldRef const & f) { return UniPoly::constant(f, f->one()); }

/// f(X) = sum c_{kp} X^{kp} -> sum c_{kp} X^k; residues are their own p-th roots.
UniPoly pth_root(UniPoly const & f)
{
    auto const p = static_cast<std::size_t>(f.field()->characteristic());
    auto cs = f.coeffs();
    std::vector<FieldElement> out;
    for (std::size_t k = 0; k < cs.size(); k += p)
        out.push_back(cs[k]);
    return UniPoly(f.field(), std::move(out));
}

void squarefree_char_p(UniPoly const & f, unsigned scale, std::vector<Factor> & out)
{
    auto const & field = f.field();
    auto const p = static_cast<unsigned>(field->characteristic());
    if (f.degree() < Degree(1))
        return;
    UniPoly df = f.derivative();
    if (df.is_zero()) {
        squarefree_char_p(pth_root(f), scale * p, out);
        return;
    }
    UniPoly c = gcd(f, df);
    UniPoly w = divmod(f, c).quotient;
    unsigned i = 1;
    while (!w.is_one()) {
        UniPoly y = gcd(w, c);
        UniPoly z = divmod(w, y).quotient;
        if (!z.is_one())
            out.push_back({z.monic(), i * scale});
        ++i;
        w = std::move(y);
        c = divmod(c, w).quotient;
    }
    if (!c.is_constant())
        squarefree_char_p(pth_root(c), scale * p, out);
}

void squarefree_char_0(UniPoly const & f, std::vector<Factor> & out)
{
    UniPoly df = f.derivative();
    UniPoly b = gcd(f, df);
    UniPoly c = divmod(f, b).quotient;
    UniPoly d = divmod(df, b).quotient - c.derivative();
    unsigned i = 1;
    while (!c.is_constant()) {
        UniPoly a = gcd(c, d);
        if (!a.is_one())
            out.push_back({a, i});
        c = divmod(c, a).quotient;
        d = divmod(d, a).quotient - c.derivative();
        ++i;
    }
}

void sort_canonical(std::vector<Factor> & fs)
{
    std::sort(fs.begin(), fs.end(), [](Factor const & a, Factor const & b) {
        if (!(a.poly == b.poly))
            return canonical_less(a.poly, b.poly);
        return a.multiplicity < b.multiplicity;
    });
}

UniPoly random_below(FieldRef const & field, long deg, std::mt19937_64 & rng)
{
    std::vector<FieldElement> cs;
    cs.reserve(static_cast<std::size_t>(deg));
    for (long i = 0; i < deg; ++i)
        cs.push_back(field->random(rng));
    return UniPoly(field, std::move(cs));
}

/// Splits a product of distinct monic irreducibles of degree `d`.
void equal_degree_split(UniPoly const & f, long d, std::mt19937_64 & rng, std::vector<UniPoly> & out)
{
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    auto const & field = f.field();
    std::uint64_t const p = field->characteristic();
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
    for (;;) {
        UniPoly a = random_below(field, f.deg(), rng);
        if (a.is_constant())
            continue;
        UniPoly g = gcd(a, f);
        if (g.is_one()) {
            UniPoly b(field);
            if (p == 2) {
                // trace map a + a^2 + ... + a^{2^{d-1}}
                UniPoly t = a;
                b = a;
                for (long j = 1; j < d; ++j) {
                    t = divmod(t * t, f).remainder;
                    b += t;
                }
            } else {
                b = powmod(a, (q - 1) / 2, f) - one_of(field);
            }
            if (b.is_zero())
                continue;
            g = gcd(b, f);
        }
        if (g.is_one() || g.deg() == f.deg())
            continue;
        equal_degree_split(g, d, rng, out);
        equal_degree_split(divmod(f, g).quotient, d, rng, out);
        return;
    }
}

/// Factors a monic squarefree polynomial over GF(p).
std::vector<UniPoly> factor_squarefree_gf(UniPoly f, std::mt19937_64 & rng)
{
    auto const & field = f.field();
    std::vector<UniPoly> out;
    UniPoly const x = UniPoly::x(field);
    UniPoly h = divmod(x, f).remainder;
    mpz_class const p = static_cast<unsigned long>(field->characteristic());
    long i = 1;
    while (f.degree() >= Degree(2 * i)) {
        h = powmod(h, p, f);
        UniPoly g = gcd(h - x, f);
        if (!g.is_one()) {
            equal_degree_split(g, i, rng, out);
            f = divmod(f, g).quotient;
            h = divmod(h, f).remainder;
        }
        ++i;
    }
    if (f.degree() >= Degree(1))
        out.push_back(f);
    return out;
}

// ---- integer polynomials for the Q factorization -------------------------

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly & a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

ZPoly zmul(ZPoly const & a, ZPoly const & b)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

ZPoly zsub(ZPoly a, ZPoly const & b)
{
    if (b.size() > a.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

/// Coefficients reduced into (-m/2, m/2].
ZPoly symmetric_mod(ZPoly a, mpz_class const & m)
{
    mpz_class half = m / 2;
    for (auto & c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half)
            c -= m;
    }
    trim(a);
    return a;
}

UniPoly to_field(ZPoly const & a, FieldRef const & field)
{
    std::vector<FieldElement> cs;
    cs.reserve(a.size());
    for (auto const & c : a)
        cs.push_back(field->from_mpz(c));
    return UniPoly(field, std::move(cs));
}

/// Lifts residues in [0, p) to integers.
ZPoly from_gf(UniPoly const & a)
{
    ZPoly r;
    for (auto const & c : a.coeffs())
        r.emplace_back(static_cast<unsigned long>(a.field()->residue(c)));
    return r;
}

ZPoly primitive_part(ZPoly a)
{
    mpz_class g = 0;
    for (auto const & c : a)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0)
        return a;
    if (a.back() < 0)
        g = -g;
    for (auto & c : a)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return a;
}

std::optional<ZPoly> zdivide_exact(ZPoly const & a, ZPoly const & b)
{
    if (a.size() < b.size())
        return std::nullopt;
    ZPoly rem = a;
    std::size_t db = b.size() - 1;
    ZPoly quo(a.size() - db, 0);
    for (std::size_t k = quo.size(); k-- > 0;) {
        if (!mpz_divisible_p(rem[k + db].get_mpz_t(), b[db].get_mpz_t()))
            return std::nullopt;
        mpz_class c = rem[k + db] / b[db];
        quo[k] = c;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k + j] -= c * b[j];
    }
    for (auto const & c : rem) {
        if (c != 0)
            return std::nullopt;
    }
    trim(quo);
    return quo;
}

/// Lifts f = lc * u * w (mod p), u and w monic and coprime mod p, to the
/// same factorization mod p^k. Returns the lifted (u, w).
std::pair<ZPoly, ZPoly> hensel_lift(ZPoly const & f, ZPoly u, ZPoly w, FieldRef const & gfp, long k)
{
    mpz_class const p = static_cast<unsigned long>(gfp->characteristic());
    mpz_class const lc = f.back();
    UniPoly const ub = to_field(u, gfp), wb = to_field(w, gfp);
    XGcd eg = xgcd(ub, wb);  // s*u + t*w = 1
    FieldElement const lc_inv = gfp->inv(gfp->from_mpz(lc));
    mpz_class pj = p;
    for (long j = 1; j < k; ++j) {
        ZPoly lcuw = zmul(zmul(ZPoly{lc}, u), w);
        ZPoly e = zsub(f, lcuw);
        for (auto & c : e)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
        UniPoly c = to_field(e, gfp).scaled(lc_inv);
        // B*w + A*u = c with deg B < deg u, deg A < deg w
        UniPoly B = divmod(c * eg.t, ub).remainder;
        UniPoly A = divmod(c - B * wb, ub).quotient;
        ZPoly dB = from_gf(B), dA = from_gf(A);
        for (auto & x : dB)
            x *= pj;
        for (auto & x : dA)
            x *= pj;
        u = zsub(u, zsub(ZPoly{}, dB));
        w = zsub(w, zsub(ZPoly{}, dA));
        pj *= p;
    }
    return {symmetric_mod(u, pj), symmetric_mod(w, pj)};
}

/// Irreducible factors over Z of a primitive squarefree integer polynomial
/// with positive leading coefficient.
std::vector<ZPoly> zassenhaus(ZPoly const & f, std::uint64_t seed)
{
    long const n = static_cast<long>(f.size()) - 1;
    if (n <= 1)
        return {f};
    if (n > kMaxZassenhausDegree)
        throw Error(ErrorKind::BudgetExceeded,
                    "degree " + std::to_string(n) + " exceeds the Zassenhaus cap of "
                        + std::to_string(kMaxZassenhausDegree));
    mpz_class const lc = f.back();

    // smallest prime >= 3 not dividing lc with squarefree image
    FieldRef gfp;
    UniPoly fbar(Field::rationals());
    for (unsigned long p = 3;; p += 2) {
        if (!is_prime_trial_division(p) || mpz_divisible_ui_p(lc.get_mpz_t(), p))
            continue;
        auto field = Field::prime_field(p);
        UniPoly img = to_field(f, field);
        if (gcd(img, img.derivative()).is_one()) {
            gfp = field;
            fbar = img;
            break;
        }
    }
    FactorList modular = factor_gf(fbar, seed);
    std::vector<ZPoly> lifted;
    for (auto const & fac : modular.factors)
        lifted.push_back(from_gf(fac.poly));
    if (lifted.size() == 1)
        return {f};
    if (lifted.size() > kMaxModularFactors)
        throw Error(ErrorKind::BudgetExceeded,
                    std::to_string(lifted.size()) + " modular factors exceed the recombination cap of "
                        + std::to_string(kMaxModularFactors));

    // Mignotte: any factor g of f has |g|_inf <= 2^n sqrt(n+1) |f|_inf; the
    // recombined lc*g needs p^k above twice |lc| times that.
    mpz_class maxabs = 0;
    for (auto const & c : f)
        maxabs = std::max(maxabs, mpz_class(abs(c)));
    mpz_class bound = 2 * abs(lc) * maxabs * (n + 1);
    bound <<= static_cast<mp_bitcnt_t>(n);
    mpz_class const p = static_cast<unsigned long>(gfp->characteristic());
    long k = 1;
    mpz_class pk = p;
    while (pk <= bound) {
        pk *= p;
        ++k;
    }

    // split off one factor at a time
    std::vector<ZPoly> factors;
    ZPoly rest = f;
    for (std::size_t i = 0; i + 1 < lifted.size(); ++i) {
        ZPoly others{1};
        for (std::size_t j = i + 1; j < lifted.size(); ++j)
            others = zmul(others, lifted[j]);
        others = from_gf(to_field(others, gfp));
        auto [ui, wi] = hensel_lift(rest, lifted[i], others, gfp, k);
        factors.push_back(ui);
        // continue with the monic cofactor; its leading coefficient is 1
        rest = wi;
    }
    factors.push_back(rest);
    for (auto & g : factors) {
        // monic representatives mod p^k
        g = symmetric_mod(g, pk);
    }

    // recombination by subset enumeration
    std::vector<ZPoly> result;
    ZPoly fcur = f;
    std::size_t s = 1;
    while (2 * s <= factors.size()) {
        std::size_t const r = factors.size();
        long const dcur = static_cast<long>(fcur.size()) - 1;
        std::vector<bool> pick(r, false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(s), true);
        bool found = false;
        do {
            long dsum = 0;
            for (std::size_t i = 0; i < r; ++i)
                if (pick[i])
                    dsum += static_cast<long>(factors[i].size()) - 1;
            // complementary subsets of equal size are both visited
            if (2 * s == r && 2 * dsum > dcur)
                continue;
            mpz_class const lcur = fcur.back();
            ZPoly g{lcur};
            for (std::size_t i = 0; i < r; ++i)
                if (pick[i])
                    g = symmetric_mod(zmul(g, factors[i]), pk);
            if (fcur.front() != 0 && g.front() != 0
                && !mpz_divisible_p(mpz_class(lcur * fcur.front()).get_mpz_t(), g.front().get_mpz_t()))
                continue;
            g = primitive_part(g);
            auto q = zdivide_exact(fcur, g);
            if (!q)
                continue;
            result.push_back(g);
            fcur = *q;
            std::vector<ZPoly> keep;
            for (std::size_t i = 0; i < r; ++i)
                if (!pick[i])
                    keep.push_back(factors[i]);
            factors = std::move(keep);
            found = true;
            break;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        if (!found)
            ++s;
    }
    if (fcur.size() > 1)
        result.push_back(primitive_part(fcur));
    return result;
}

UniPoly monic_rational(ZPoly const & z)
{
    return to_field(z, Field::rationals()).monic();
}

}  // namespace

std::vector<Factor> squarefree_decompose(UniPoly const & u)
{
    if (u.is_zero())
        throw Error(ErrorKind::ZeroInput, "squarefree decomposition of zero");
    std::vector<Factor> out;
    UniPoly f = u.monic();
    if (f.is_constant())
        return out;
    if (u.field()->is_prime_field())
        squarefree_char_p(f, 1, out);
    else
        squarefree_char_0(f, out);
    std::sort(out.begin(), out.end(),
              [](Factor const & a, Factor const & b) { return a.multiplicity < b.multiplicity; });
    return out;
}

FactorList factor_gf(UniPoly const & u, std::uint64_t seed)
{
    if (u.is_zero())
        throw Error(ErrorKind::ZeroInput, "factorization of zero");
    if (!u.field()->is_prime_field())
        throw Error(ErrorKind::WrongField, "factor_gf needs a prime field");
    FactorList fl{u.leading(), {}};
    std::mt19937_64 rng(seed);
    for (auto const & part : squarefree_decompose(u)) {
        for (auto & g : factor_squarefree_gf(part.poly, rng))
            fl.factors.push_back({g.monic(), part.multiplicity});
    }
    sort_canonical(fl.factors);
    return fl;
}

FactorList factor_q(UniPoly const & u, std::uint64_t seed)
{
    if (u.is_zero())
        throw Error(ErrorKind::ZeroInput, "factorization of zero");
    if (!u.field()->is_rationals())
        throw Error(ErrorKind::WrongField, "factor_q needs coefficients in Q");
    FactorList fl{u.leading(), {}};
    for (auto const & part : squarefree_decompose(u)) {
        if (part.poly.deg() == 1) {
            fl.factors.push_back(part);
            continue;
        }
        for (auto const & z : zassenhaus(primitive_integer_form(part.poly), seed))
            fl.factors.push_back({monic_rational(z), part.multiplicity});
    }
    sort_canonical(fl.factors);
    return fl;
}

FactorList factor(UniPoly const & u, std::uint64_t seed)
{
    return u.field()->is_prime_field() ? factor_gf(u, seed) : factor_q(u, seed);
}

long omega(UniPoly const & u)
{
    if (u.is_zero())
        throw Error(ErrorKind::ZeroInput, "Omega of zero");
    if (u.is_constant())
        return 0;
    return factor(u).omega();
}

bool is_irreducible_uni(UniPoly const & u)
{
    if (u.degree() < Degree(1))
        throw Error(ErrorKind::ConstantInput, "irreducibility of a constant");
    return omega(u) == 1;
}

std::vector<UniPoly> monic_divisors(FactorList const & fl, FieldRef const & field)
{
    std::vector<UniPoly> out{UniPoly::constant(field, field->one())};
    for (auto const & f : fl.factors) {
        std::vector<UniPoly> next;
        next.reserve(out.size() * (f.multiplicity + 1));
        // keep the first factor varying fastest
        std::vector<UniPoly> powers{UniPoly::constant(field, field->one())};
        for (unsigned e = 1; e <= f.multiplicity; ++e)
            powers.push_back(powers.back() * f.poly);
        for (auto const & pw : powers)
            for (auto const & d : out)
                next.push_back(d * pw);
        out = std::move(next);
    }
    return out;
}

}  // namespace compirr
