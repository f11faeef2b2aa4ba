#include <doctest.h>

#include <algorithm>
#include <random>

#include "compirr/error.hpp"
#include "compirr/fixtures.hpp"
#include "compirr/oracle.hpp"
#include "support.hpp"

using namespace compirr;
using support::B;
using support::GF;
using support::Q;
using support::U;

namespace {

ErrorKind kind_of(auto && fn)
{
    try {
        fn();
    } catch (Error const & e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::PreconditionViolated;
}

std::vector<UniPoly> polys_up_to(FieldRef const & F, long D)
{
    std::vector<UniPoly> out{UniPoly(F)};
    for (long d = 0; d <= D; ++d) {
        std::vector<UniPoly> next;
        for (auto const & u : out)
            for (std::uint64_t r = 0; r < F->characteristic(); ++r)
                next.push_back(u + UniPoly::monomial(F, F->from_residue(r), static_cast<std::size_t>(d)));
        out = std::move(next);
    }
    return out;
}

// First divisor in search order by plain enumeration, no pruning at all.
std::optional<BiPoly> brute_first_divisor(BiPoly const & F)
{
    auto const & field = F.field();
    BiPoly P = unit_normalize(content_y(F).primitive);
    long const d = P.deg_y().value();
    auto const polys = polys_up_to(field, P.deg_x().value());
    std::optional<BiPoly> best;
    for (long k = 1; 2 * k <= d && !best; ++k) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(k) + 1, 0);
        for (;;) {
            std::vector<UniPoly> cs;
            for (auto i : idx)
                cs.push_back(polys[i]);
            BiPoly G(field, cs);
            if (G.deg_y() == Degree(k) && field->is_one(G.leading_y().leading()) && divide_exact(P, G)
                && (!best || search_order_less(G, *best)))
                best = G;
            std::size_t t = 0;
            while (t < idx.size() && ++idx[t] == polys.size())
                idx[t++] = 0;
            if (t == idx.size())
                break;
        }
    }
    return best;
}

BiPoly random_linear_factor(FieldRef const & F, std::mt19937_64 & rng)
{
    // a*Y + b with gcd(a, b) = 1 is irreducible over K(X) and primitive
    for (;;) {
        UniPoly a = fixtures::random_nonzero_uni(F, 1, rng);
        UniPoly b = fixtures::random_nonzero_uni(F, 2, rng);
        if (gcd(a, b).is_one())
            return unit_normalize(BiPoly(F, {b, a}));
    }
}

std::vector<BiPoly> expanded(BiFactorization const & bf)
{
    std::vector<BiPoly> out;
    for (auto const & f : bf.yfactors)
        for (unsigned i = 0; i < f.multiplicity; ++i)
            out.push_back(f.poly);
    return out;
}

}  // namespace

TEST_CASE("find_bifactor examples")
{
    auto F3 = GF(3);
    CHECK(find_bifactor(B(F3, "Y^2 - 1")) == std::optional<BiPoly>(B(F3, "Y - 1")));
    auto F2 = GF(2);
    CHECK_FALSE(find_bifactor(B(F2, "Y^2 + Y + 1")).has_value());
    BiPoly f = B(F2, "1 + Y + (X^5+X^2+1)*Y^2");
    CHECK_FALSE(find_bifactor(compose(f, B(F2, "X + Y^2"))).has_value());
    CHECK(kind_of([&] { find_bifactor(B(Q(), "Y^2 - 1")); }) == ErrorKind::WrongField);
    CHECK(kind_of([&] { find_bifactor(BiPoly(F3)); }) == ErrorKind::ZeroInput);
}

TEST_CASE("search order puts negative representatives first")
{
    auto F5 = GF(5);
    CHECK(search_order_less(B(F5, "Y - 2"), B(F5, "Y - 1")));
    CHECK(search_order_less(B(F5, "Y - 1"), B(F5, "Y")));
    CHECK(search_order_less(B(F5, "Y"), B(F5, "Y + 2")));
    CHECK(search_order_less(B(F5, "Y + 2"), B(F5, "X*Y")));
    CHECK(search_order_less(B(F5, "X^3*Y + 1"), B(F5, "Y^2")));
    // Y divides, but Y - 1 comes first
    CHECK(find_bifactor(B(GF(3), "Y^3 - Y")) == std::optional<BiPoly>(B(GF(3), "Y - 1")));
    CHECK(find_bifactor(B(GF(3), "Y^2 + X*Y")) == std::optional<BiPoly>(B(GF(3), "Y")));
}

TEST_CASE("bifactor_all examples")
{
    auto F3 = GF(3);
    auto sh = fixtures::sharpness_two(F3, 2);
    BiFactorization bf = bifactor_all(compose(sh.f, sh.g));
    CHECK(bf.omega_bi >= 3);
    auto fs = expanded(bf);
    CHECK(std::count(fs.begin(), fs.end(), B(F3, "Y - 1")) == 1);
    CHECK(std::count(fs.begin(), fs.end(), B(F3, "Y + 1")) == 1);

    bf = bifactor_all(B(F3, "(Y - 1)*(Y^2 - X)"));
    REQUIRE(bf.yfactors.size() == 2);
    CHECK(bf.yfactors[0] == BiFactor{B(F3, "Y - 1"), 1});
    CHECK(bf.yfactors[1] == BiFactor{B(F3, "Y^2 - X"), 1});
    CHECK(bf.omega_bi == 2);

    bf = bifactor_all(B(F3, "Y^4"));
    REQUIRE(bf.yfactors.size() == 1);
    CHECK(bf.yfactors[0] == BiFactor{B(F3, "Y"), 4});
    CHECK(bf.omega_bi == 4);
    CHECK(bf.content.omega() == 0);
}

TEST_CASE("is_irreducible_bi examples")
{
    CHECK(is_irreducible_bi(B(GF(2), "Y^2 + X")));
    CHECK_FALSE(is_irreducible_bi(B(GF(3), "Y^2 - 1")));
    CHECK(is_irreducible_bi(B(GF(2), "1 + Y + (X^5+X^2+1)*Y^2")));
    CHECK_FALSE(is_irreducible_bi(B(GF(3), "X*Y + X")));  // nonconstant content
    CHECK(is_irreducible_bi(B(GF(3), "X*Y + 1")));
    CHECK(kind_of([&] { is_irreducible_bi(B(GF(3), "X")); }) == ErrorKind::ConstantInY);
}

TEST_CASE("content and pure K[X] inputs")
{
    std::mt19937_64 rng(2);
    for (auto const & F : {GF(2), GF(3)}) {
        for (int i = 0; i < 20; ++i) {
            UniPoly u = fixtures::random_nonzero_uni(F, 6, rng);
            BiFactorization bf = bifactor_all(BiPoly::from_uni(u));
            CHECK(bf.omega_bi == 0);
            CHECK(bf.yfactors.empty());
            CHECK(bf.content.omega() == factor_gf(u).omega());
            CHECK(bf.expand() == BiPoly::from_uni(u));
        }
    }
    auto F = GF(3);
    BiPoly g = B(F, "(X^2+1)*(X+1)^2*(2*Y^2 + X)");
    BiFactorization bf = bifactor_all(g);
    CHECK(bf.content.omega() == 3);
    CHECK(bf.omega_bi == 1);
    CHECK(bf.expand() == g);
}

TEST_CASE("round trip on random products of irreducibles")
{
    std::mt19937_64 rng(101);
    for (auto const & F : {GF(2), GF(3)}) {
        std::vector<BiPoly> quadratics{unit_normalize(B(F, "Y^2 + X")), unit_normalize(B(F, "X*Y^2 + Y + 1"))};
        for (int i = 0; i < 25; ++i) {
            std::vector<BiPoly> parts;
            int const count = 2 + static_cast<int>(rng() % 2);
            for (int k = 0; k < count; ++k)
                parts.push_back(rng() % 4 == 0 ? quadratics[rng() % 2] : random_linear_factor(F, rng));
            BiPoly prod = BiPoly::from_uni(UniPoly::constant(F, F->one()));
            for (auto const & p : parts)
                prod = prod * p;
            BiFactorization bf = bifactor_all(prod);
            auto got = expanded(bf);
            std::sort(parts.begin(), parts.end(), search_order_less);
            CHECK(got == parts);
            CHECK(bf.omega_bi == count);
            CHECK(bf.expand() == prod);
        }
    }
}

TEST_CASE("agrees with unpruned enumeration")
{
    std::mt19937_64 rng(55);
    int found = 0, none = 0;
    for (auto const & F : {GF(2), GF(3)}) {
        long const max_x = F->characteristic() == 2 ? 2 : 1;
        for (int i = 0; i < 30; ++i) {
            std::vector<UniPoly> cs;
            long const d = 2 + static_cast<long>(rng() % 2);
            for (long k = 0; k < d; ++k)
                cs.push_back(fixtures::random_uni(F, max_x, rng));
            cs.push_back(fixtures::random_nonzero_uni(F, max_x, rng));
            BiPoly P(F, cs);
            if (i % 3 == 0)
                P = random_linear_factor(F, rng) * BiPoly(F, {cs[0], cs[1], cs.back()});
            if (P.ycoeff(0).is_zero() || content_y(P).primitive.deg_y() < Degree(2))
                continue;
            auto expect = brute_first_divisor(P);
            CHECK(find_bifactor(P) == expect);
            (expect ? found : none)++;
        }
    }
    CHECK(found > 0);
    CHECK(none > 0);
}

TEST_CASE("pruning never discards a true divisor")
{
    std::mt19937_64 rng(9);
    for (auto const & F : {GF(2), GF(3)}) {
        for (int i = 0; i < 30; ++i) {
            std::vector<BiPoly> parts{random_linear_factor(F, rng), random_linear_factor(F, rng),
                                      random_linear_factor(F, rng)};
            BiPoly prod = parts[0] * parts[1] * parts[2];
            // every product of a subset is a true divisor
            for (unsigned mask = 1; mask < 7; ++mask) {
                BiPoly G = BiPoly::from_uni(UniPoly::constant(F, F->one()));
                for (unsigned b = 0; b < 3; ++b)
                    if (mask & (1u << b))
                        G = G * parts[b];
                CHECK(detail::survives_pruning(prod, unit_normalize(G)));
            }
        }
    }
    // and the filters do reject something
    auto F3 = GF(3);
    CHECK_FALSE(detail::survives_pruning(B(F3, "X*Y^2 + 1"), B(F3, "Y + X")));
}

TEST_CASE("budget is checked before searching")
{
    auto F = GF(3);
    BiPoly P = B(F, "Y^6 + X^4*Y^3 + (X^3 + 2)*Y + X^5 + 1");
    OracleBudget tiny;
    tiny.max_candidates = 3;
    OracleStats stats;
    CHECK(kind_of([&] { find_bifactor(P, tiny, &stats); }) == ErrorKind::BudgetExceeded);
    OracleBudget narrow;
    narrow.max_px_degree = 2;
    CHECK(kind_of([&] { bifactor_all(P, narrow); }) == ErrorKind::BudgetExceeded);
    CHECK(kind_of([&] { is_irreducible_bi(P, tiny); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("statistics count the work")
{
    OracleStats stats;
    auto F = GF(2);
    find_bifactor(compose(B(F, "1 + Y + (X^5+X^2+1)*Y^2"), B(F, "X + Y^2")), {}, &stats);
    CHECK(stats.candidates > 0);
    CHECK(stats.divisions <= stats.candidates);
}

TEST_CASE("unit normalization")
{
    auto F = GF(5);
    BiPoly g = B(F, "3*X^2*Y + X + 1");
    BiPoly n = unit_normalize(g);
    CHECK(F->is_one(n.leading_y().leading()));
    CHECK(n.scaled(U(F, "3")) == g);
}
