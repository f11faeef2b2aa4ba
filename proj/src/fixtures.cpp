#include "compirr/fixtures.hpp"

#include "compirr/error.hpp"

namespace compirr::fixtures {

UniPoly random_uni(FieldRef const & field, long max_deg, std::mt19937_64 & rng)
{
    std::vector<FieldElement> c;
    for (long i = 0; i <= max_deg; ++i)
        c.push_back(field->random(rng));
    return UniPoly(field, std::move(c));
}

UniPoly random_nonzero_uni(FieldRef const & field, long max_deg, std::mt19937_64 & rng)
{
    for (;;) {
        UniPoly u = random_uni(field, max_deg, rng);
        if (!u.is_zero())
            return u;
    }
}

UniPoly eisenstein_p(FieldRef const & field, long d)
{
    return UniPoly::monomial(field, field->one(), d) + UniPoly::from_ints(field, {5, 5});
}

BiPoly eisenstein(long m, long d, std::mt19937_64 & rng)
{
    FieldRef q = Field::rationals();
    std::vector<UniPoly> a;
    a.push_back(random_nonzero_uni(q, d - 1, rng));
    for (long i = 1; i < m; ++i)
        a.push_back(random_uni(q, d - 1, rng));
    a.push_back(eisenstein_p(q, d));
    return BiPoly(q, std::move(a));
}

namespace {

void check_shape(long m, std::vector<UniPoly> const & lower)
{
    if (m < 2)
        throw Error(ErrorKind::PreconditionViolated, "m must be at least 2");
    if (static_cast<long>(lower.size()) != m - 1)
        throw Error(ErrorKind::PreconditionViolated, "expected a_0..a_{m-2}");
    if (lower[0].is_zero())
        throw Error(ErrorKind::PreconditionViolated, "a_0 must be nonzero");
}

std::vector<UniPoly> ones(FieldRef const & field, long m)
{
    return std::vector<UniPoly>(static_cast<std::size_t>(std::max(m - 1, 0L)), UniPoly::constant(field, field->one()));
}

// Closes a_0..a_{m-2} with a_{m-1} = -lead - sum, then appends lead.
BiPoly close_at_one(std::vector<UniPoly> a, UniPoly const & lead)
{
    UniPoly sum = lead;
    for (auto const & c : a)
        sum = sum + c;
    a.push_back(-sum);
    a.push_back(lead);
    FieldRef field = lead.field();
    return BiPoly(field, std::move(a));
}

}  // namespace

BiPoly sharpness_one(FieldRef const & field, long m, long d, std::vector<UniPoly> const & lower)
{
    check_shape(m, lower);
    return close_at_one(lower, eisenstein_p(field, d));
}

BiPoly sharpness_one(FieldRef const & field, long m, long d)
{
    return sharpness_one(field, m, d, ones(field, m));
}

UniPoly two_factor_base(FieldRef const & field, long n)
{
    if (field->is_prime_field() && field->characteristic() == 3 && n == 2)
        return UniPoly::from_ints(field, {1, 0, 1});
    return eisenstein_p(field, n);
}

Composition two_factor(FieldRef const & field, long m, long n, long max_b_deg, std::mt19937_64 & rng)
{
    std::vector<UniPoly> a;
    a.push_back(random_nonzero_uni(field, 2 * n - 1, rng));
    for (long i = 1; i < m; ++i)
        a.push_back(random_uni(field, 2 * n - 1, rng));
    a.push_back(two_factor_base(field, n).pow(2));
    std::vector<UniPoly> b;
    for (long i = 0; i < n; ++i)
        b.push_back(random_uni(field, max_b_deg, rng));
    b.push_back(UniPoly::constant(field, field->one()));
    return {BiPoly(field, std::move(a)), BiPoly(field, std::move(b))};
}

Composition sharpness_two(FieldRef const & field, long m, std::vector<UniPoly> const & lower)
{
    check_shape(m, lower);
    BiPoly f = close_at_one(lower, two_factor_base(field, 2).pow(2));
    return {f, BiPoly::y(field).pow(2)};
}

Composition sharpness_two(FieldRef const & field, long m)
{
    return sharpness_two(field, m, ones(field, m));
}

}  // namespace compirr::fixtures
