#include <doctest.h>

#include <random>

#include "compirr/error.hpp"
#include "compirr/factor.hpp"
#include "compirr/fixtures.hpp"
#include "support.hpp"

using namespace compirr;
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

std::vector<std::pair<UniPoly, unsigned>> pairs(FactorList const & fl)
{
    std::vector<std::pair<UniPoly, unsigned>> out;
    for (auto const & f : fl.factors)
        out.emplace_back(f.poly, f.multiplicity);
    return out;
}

void check_reconstruction(UniPoly const & u, FactorList const & fl)
{
    CHECK(fl.expand(u.field()) == u);
    for (std::size_t i = 0; i < fl.factors.size(); ++i) {
        CHECK(u.field()->is_one(fl.factors[i].poly.leading()));
        CHECK(is_irreducible_uni(fl.factors[i].poly));
        if (i > 0)
            CHECK(canonical_less(fl.factors[i - 1].poly, fl.factors[i].poly));
    }
}

}  // namespace

TEST_CASE("squarefree decomposition")
{
    auto QQ = Q();
    auto sq = squarefree_decompose(U(QQ, "(X-1)^2*(X+1)"));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].poly == U(QQ, "X+1"));
    CHECK(sq[0].multiplicity == 1);
    CHECK(sq[1].poly == U(QQ, "X-1"));
    CHECK(sq[1].multiplicity == 2);

    auto F2 = GF(2);
    sq = squarefree_decompose(U(F2, "X^2+1"));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].poly == U(F2, "X+1"));
    CHECK(sq[0].multiplicity == 2);

    sq = squarefree_decompose(U(QQ, "3*X^3 + X + 1"));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].poly == U(QQ, "X^3 + 1/3*X + 1/3"));

    // u = v(X^p): (X^3 + 2)^3 * (X+1)^4 over GF(3)
    auto F3 = GF(3);
    UniPoly u = U(F3, "(X^3+2)^3*(X+1)^4*(X^2+1)");
    UniPoly back = U(F3, "1");
    for (auto const & [p, e] : squarefree_decompose(u))
        back = back * p.pow(e);
    CHECK(back == u.monic());
    CHECK(kind_of([&] { squarefree_decompose(UniPoly(F3)); }) == ErrorKind::ZeroInput);
}

TEST_CASE("factor_gf examples")
{
    auto F2 = GF(2);
    FactorList fl = factor_gf(U(F2, "X^4+X"));
    CHECK(F2->is_one(fl.unit));
    CHECK(pairs(fl) == std::vector<std::pair<UniPoly, unsigned>>{
                           {U(F2, "X"), 1}, {U(F2, "X+1"), 1}, {U(F2, "X^2+X+1"), 1}});
    CHECK(fl.omega() == 3);
    CHECK(omega(U(GF(3), "X^2+1")) == 1);
    auto F5 = GF(5);
    CHECK(pairs(factor_gf(U(F5, "X^2+1"))) ==
          std::vector<std::pair<UniPoly, unsigned>>{{U(F5, "X+2"), 1}, {U(F5, "X+3"), 1}});
    CHECK(kind_of([&] { factor_gf(U(Q(), "X")); }) == ErrorKind::WrongField);
    CHECK(kind_of([&] { factor_gf(UniPoly(F5)); }) == ErrorKind::ZeroInput);
}

TEST_CASE("factor_q examples")
{
    auto QQ = Q();
    FactorList fl = factor_q(U(QQ, "X^6-1"));
    CHECK(pairs(fl) == std::vector<std::pair<UniPoly, unsigned>>{{U(QQ, "X-1"), 1},
                                                                 {U(QQ, "X+1"), 1},
                                                                 {U(QQ, "X^2-X+1"), 1},
                                                                 {U(QQ, "X^2+X+1"), 1}});
    CHECK(omega(U(QQ, "X^2-2")) == 1);
    fl = factor_q(U(QQ, "2*X^2-2"));
    CHECK(fl.unit == QQ->from_int(2));
    CHECK(pairs(fl) == std::vector<std::pair<UniPoly, unsigned>>{{U(QQ, "X-1"), 1}, {U(QQ, "X+1"), 1}});
    CHECK(kind_of([&] { factor_q(U(GF(3), "X")); }) == ErrorKind::WrongField);
}

TEST_CASE("omega and irreducibility examples")
{
    auto QQ = Q();
    CHECK(omega(U(QQ, "7")) == 0);
    CHECK(omega(U(QQ, "(X-1)^2*(X+1)")) == 3);
    CHECK(omega(U(GF(2), "X^4+X")) == 3);
    CHECK(kind_of([&] { omega(UniPoly(QQ)); }) == ErrorKind::ZeroInput);

    CHECK(is_irreducible_uni(U(QQ, "X^4+5*X+5")));
    CHECK_FALSE(is_irreducible_uni(U(GF(5), "X^2+1")));
    CHECK(is_irreducible_uni(U(GF(3), "X^2+1")));
    CHECK(kind_of([&] { is_irreducible_uni(U(QQ, "3")); }) == ErrorKind::ConstantInput);
}

TEST_CASE("harder rational inputs")
{
    auto QQ = Q();
    // Swinnerton-Dyer style: irreducible over Q but splits modulo every prime
    UniPoly sd = U(QQ, "X^4 - 10*X^2 + 1");
    CHECK(omega(sd) == 1);
    UniPoly u = U(QQ, "(X^4 - 10*X^2 + 1)*(X^2 - 3)^2*(1/2*X^3 - 7)*(X^5 - X - 1)");
    FactorList fl = factor_q(u);
    check_reconstruction(u, fl);
    CHECK(fl.omega() == 5);
    CHECK(omega(U(QQ, "X^12 - 1")) == 6);
    CHECK(omega(U(QQ, "(X^2+1)^3*(X^3-2)^2*X")) == 6);
    CHECK(kind_of([&] { factor_q(U(QQ, "X^31 + X + 1")); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("reconstruction and Omega additivity on random inputs")
{
    std::mt19937_64 rng(77);
    for (auto const & F : {Q(), GF(2), GF(3), GF(7), GF(101)}) {
        for (int i = 0; i < 40; ++i) {
            UniPoly a = fixtures::random_nonzero_uni(F, 6, rng);
            UniPoly b = fixtures::random_nonzero_uni(F, 5, rng);
            FactorList fa = factor(a), fb = factor(b), fab = factor(a * b);
            check_reconstruction(a, fa);
            check_reconstruction(a * b, fab);
            CHECK(fab.omega() == fa.omega() + fb.omega());
        }
    }
}

TEST_CASE("determinism and seed independence of the canonical output")
{
    std::mt19937_64 rng(5);
    for (auto const & F : {GF(2), GF(3), GF(31), Q()}) {
        for (int i = 0; i < 20; ++i) {
            UniPoly u = fixtures::random_nonzero_uni(F, 9, rng);
            FactorList a = factor(u, 1), b = factor(u, 1), c = factor(u, 12345);
            CHECK(a == b);
            CHECK(a == c);
        }
    }
}

TEST_CASE("irreducible factors divide X^(p^d) - X and no smaller one")
{
    std::mt19937_64 rng(14);
    for (std::uint64_t p : {2, 3, 5}) {
        auto F = GF(p);
        UniPoly x = U(F, "X");
        for (int i = 0; i < 20; ++i) {
            for (auto const & fac : factor_gf(fixtures::random_nonzero_uni(F, 8, rng)).factors) {
                long d = fac.poly.deg();
                mpz_class q;
                mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
                CHECK(divides(fac.poly, powmod(x, q, fac.poly) - x));
                for (long k = 1; k < d; ++k) {
                    if (d % k)
                        continue;
                    mpz_class qk;
                    mpz_ui_pow_ui(qk.get_mpz_t(), p, static_cast<unsigned long>(k));
                    CHECK(gcd(powmod(x, qk, fac.poly) - x, fac.poly).is_one());
                }
            }
        }
    }
}

TEST_CASE("monic divisors")
{
    auto F = GF(3);
    FactorList fl = factor(U(F, "(X^2+1)^2*X"));
    auto divs = monic_divisors(fl, F);
    CHECK(divs.size() == 6);
    for (auto const & d : divs)
        CHECK(divides(d, U(F, "(X^2+1)^2*X")));
    CHECK(divs.front().is_one());
    CHECK(divs.back() == U(F, "(X^2+1)^2*X"));
}
