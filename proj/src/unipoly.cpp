#include "compirr/unipoly.hpp"

#include <algorithm>

#include "compirr/error.hpp"
#include "term_text.hpp"

namespace compirr {

void require_same_field(FieldRef const & a, FieldRef const & b)
{
    if (a != b && !(*a == *b))
        throw Error(ErrorKind::MixedFields,
                    a->descriptor().to_string() + " vs " + b->descriptor().to_string());
}

UniPoly::UniPoly(FieldRef field) : field_(std::move(field)) {}

UniPoly::UniPoly(FieldRef field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    normalize();
}

UniPoly UniPoly::constant(FieldRef field, FieldElement c)
{
    return UniPoly(std::move(field), std::vector<FieldElement>{std::move(c)});
}

UniPoly UniPoly::from_ints(FieldRef field, std::vector<long> const & coeffs)
{
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (long v : coeffs)
        c.push_back(field->from_int(v));
    return UniPoly(std::move(field), std::move(c));
}

UniPoly UniPoly::monomial(FieldRef field, FieldElement c, std::size_t k)
{
    std::vector<FieldElement> v(k + 1, field->zero());
    v[k] = std::move(c);
    return UniPoly(std::move(field), std::move(v));
}

void UniPoly::normalize()
{
    while (!coeffs_.empty() && field_->is_zero(coeffs_.back()))
        coeffs_.pop_back();
}

FieldElement UniPoly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : field_->zero();
}

bool UniPoly::is_one() const
{
    return coeffs_.size() == 1 && field_->is_one(coeffs_[0]);
}

Degree UniPoly::degree() const noexcept
{
    if (coeffs_.empty())
        return Degree::minus_infinity();
    return Degree(static_cast<long>(coeffs_.size()) - 1);
}

long UniPoly::deg() const
{
    if (coeffs_.empty())
        throw Error(ErrorKind::ZeroInput, "degree of the zero polynomial");
    return static_cast<long>(coeffs_.size()) - 1;
}

FieldElement const & UniPoly::leading() const
{
    if (coeffs_.empty())
        throw Error(ErrorKind::ZeroInput, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

UniPoly UniPoly::operator-() const
{
    UniPoly r(field_);
    r.coeffs_.reserve(coeffs_.size());
    for (auto const & c : coeffs_)
        r.coeffs_.push_back(field_->neg(c));
    return r;
}

UniPoly & UniPoly::operator+=(UniPoly const & o)
{
    require_same_field(field_, o.field_);
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), field_->zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] = field_->add(coeffs_[i], o.coeffs_[i]);
    normalize();
    return *this;
}

UniPoly & UniPoly::operator-=(UniPoly const & o)
{
    require_same_field(field_, o.field_);
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), field_->zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] = field_->sub(coeffs_[i], o.coeffs_[i]);
    normalize();
    return *this;
}

UniPoly & UniPoly::operator*=(UniPoly const & o)
{
    require_same_field(field_, o.field_);
    if (coeffs_.empty() || o.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<FieldElement> r(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (field_->is_zero(coeffs_[i]))
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] = field_->add(r[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
    }
    coeffs_ = std::move(r);
    normalize();
    return *this;
}

bool UniPoly::operator==(UniPoly const & o) const
{
    return *field_ == *o.field_ && coeffs_ == o.coeffs_;
}

UniPoly UniPoly::scaled(FieldElement const & c) const
{
    UniPoly r(field_);
    if (field_->is_zero(c))
        return r;
    r.coeffs_.reserve(coeffs_.size());
    for (auto const & x : coeffs_)
        r.coeffs_.push_back(field_->mul(x, c));
    return r;
}

UniPoly UniPoly::monic() const
{
    if (coeffs_.empty() || field_->is_one(coeffs_.back()))
        return *this;
    return scaled(field_->inv(coeffs_.back()));
}

UniPoly UniPoly::derivative() const
{
    UniPoly r(field_);
    if (coeffs_.size() <= 1)
        return r;
    r.coeffs_.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_.push_back(field_->mul(field_->from_int(static_cast<long>(i)), coeffs_[i]));
    r.normalize();
    return r;
}

UniPoly UniPoly::pow(unsigned long e) const
{
    UniPoly result = constant(field_, field_->one());
    UniPoly base = *this;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

FieldElement UniPoly::evaluate(FieldElement const & x) const
{
    FieldElement acc = field_->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = field_->add(field_->mul(acc, x), *it);
    return acc;
}

std::string UniPoly::to_string(std::string const & var) const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (!field_->is_zero(coeffs_[k]))
            detail::append_term(out, *field_, coeffs_[k], detail::power_text(var, k));
    }
    return out;
}

DivMod divmod(UniPoly const & a, UniPoly const & b)
{
    require_same_field(a.field(), b.field());
    if (b.is_zero())
        throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    auto const & F = *a.field();
    if (a.degree() < b.degree())
        return {UniPoly(a.field()), a};
    std::vector<FieldElement> rem(a.coeffs().begin(), a.coeffs().end());
    auto bc = b.coeffs();
    std::size_t db = bc.size() - 1;
    std::size_t dq = rem.size() - 1 - db;
    std::vector<FieldElement> quo(dq + 1, F.zero());
    FieldElement lead_inv = F.inv(bc[db]);
    for (std::size_t k = dq + 1; k-- > 0;) {
        FieldElement c = F.mul(rem[k + db], lead_inv);
        quo[k] = c;
        if (F.is_zero(c))
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k + j] = F.sub(rem[k + j], F.mul(c, bc[j]));
    }
    rem.resize(db);
    return {UniPoly(a.field(), std::move(quo)), UniPoly(a.field(), std::move(rem))};
}

std::optional<UniPoly> divide_exact(UniPoly const & a, UniPoly const & b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        return std::nullopt;
    return std::move(q);
}

bool divides(UniPoly const & d, UniPoly const & a)
{
    if (d.is_zero())
        return a.is_zero();
    return divmod(a, d).remainder.is_zero();
}

UniPoly gcd(UniPoly const & a, UniPoly const & b)
{
    require_same_field(a.field(), b.field());
    if (a.is_zero() && b.is_zero())
        throw Error(ErrorKind::BothZero, "gcd(0, 0)");
    UniPoly x = a.monic(), y = b.monic();
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).remainder.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

XGcd xgcd(UniPoly const & a, UniPoly const & b)
{
    require_same_field(a.field(), b.field());
    if (a.is_zero() && b.is_zero())
        throw Error(ErrorKind::BothZero, "xgcd(0, 0)");
    auto const & f = a.field();
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(f, f->one()), s1(f);
    UniPoly t0(f), t1 = UniPoly::constant(f, f->one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    FieldElement li = f->inv(r0.leading());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

UniPoly powmod(UniPoly const & base, mpz_class e, UniPoly const & m)
{
    auto const & f = base.field();
    UniPoly result = divmod(UniPoly::constant(f, f->one()), m).remainder;
    UniPoly b = divmod(base, m).remainder;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            result = divmod(result * b, m).remainder;
        e >>= 1;
        if (e > 0)
            b = divmod(b * b, m).remainder;
    }
    return result;
}

bool canonical_less(UniPoly const & a, UniPoly const & b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    auto const & F = *a.field();
    auto ac = a.coeffs(), bc = b.coeffs();
    for (std::size_t i = 0; i < ac.size(); ++i) {
        int c = F.compare(ac[i], bc[i]);
        if (c != 0)
            return c < 0;
    }
    return false;
}

DegreeValuation degree_valuation(UniPoly const & num, UniPoly const & den)
{
    require_same_field(num.field(), den.field());
    if (den.is_zero())
        throw Error(ErrorKind::DivisionByZero, "valuation with zero denominator");
    if (num.is_zero())
        return {Degree::minus_infinity()};
    return {Degree(num.deg() - den.deg())};
}

std::vector<mpz_class> primitive_integer_form(UniPoly const & f)
{
    if (!f.field()->is_rationals())
        throw Error(ErrorKind::WrongField, "integer form needs coefficients in Q");
    auto const & F = *f.field();
    mpz_class den = 1;
    for (auto const & c : f.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), F.rational(c).get_den_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(f.coeffs().size());
    mpz_class content = 0;
    for (auto const & c : f.coeffs()) {
        mpq_class scaled = F.rational(c) * den;
        out.push_back(scaled.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
    }
    if (out.empty())
        return out;
    if (out.back() < 0)
        content = -content;
    for (auto & c : out)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return out;
}

bool eisenstein_check(UniPoly const & f, mpz_class const & prime)
{
    if (!is_prime_trial_division(prime))
        throw Error(ErrorKind::NotPrime, prime.get_str() + " is not prime");
    if (f.degree() < Degree(1))
        throw Error(ErrorKind::ConstantInput, "Eisenstein needs a nonconstant polynomial");
    auto z = primitive_integer_form(f);
    auto divisible = [](mpz_class const & a, mpz_class const & d) {
        return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
    };
    if (divisible(z.back(), prime))
        return false;
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        if (!divisible(z[i], prime))
            return false;
    }
    return !divisible(z.front(), prime * prime);
}

}  // namespace compirr
