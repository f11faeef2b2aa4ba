#include "compirr/field.hpp"

#include <cctype>
#include <limits>

#include "compirr/error.hpp"

namespace compirr {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p)
{
    // extended Euclid on signed 64-bit values; p < 2^31 so no overflow
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0)
        t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(mpz_class const & v, std::uint64_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

bool is_prime_trial_division(mpz_class const & n)
{
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (mpz_even_p(n.get_mpz_t()))
        return false;
    for (mpz_class d = 3; d * d <= n; d += 2) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
            return false;
    }
    return true;
}

FieldDescriptor FieldDescriptor::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "Q")
        return rationals();
    if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
        auto digits = trim(text.substr(3, text.size() - 4));
        if (digits.empty())
            throw Error(ErrorKind::InvalidDescriptor, "empty modulus in '" + std::string(text) + "'");
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error(ErrorKind::InvalidDescriptor,
                            "modulus must be a decimal integer in '" + std::string(text) + "'");
        }
        return prime_field(mpz_class(std::string(digits), 10));
    }
    throw Error(ErrorKind::InvalidDescriptor, "expected Q or GF(p), got '" + std::string(text) + "'");
}

std::string FieldDescriptor::to_string() const
{
    if (kind == FieldKind::Rationals)
        return "Q";
    return "GF(" + p.get_str() + ")";
}

Field::Field(FieldDescriptor desc) : desc_(std::move(desc))
{
    if (desc_.kind == FieldKind::PrimeField)
        p_ = desc_.p.get_ui();
}

std::shared_ptr<Field const> Field::make(FieldDescriptor const & desc)
{
    if (desc.kind == FieldKind::Rationals)
        return std::shared_ptr<Field const>(new Field(FieldDescriptor::rationals()));
    if (desc.p < 2)
        throw Error(ErrorKind::InvalidDescriptor, "modulus " + desc.p.get_str() + " is below 2");
    if (desc.p >= kMaxModulus)
        throw Error(ErrorKind::InvalidDescriptor, "modulus " + desc.p.get_str() + " is not below 2^31");
    if (!is_prime_trial_division(desc.p))
        throw Error(ErrorKind::CompositeModulus, desc.p.get_str() + " is not prime");
    return std::shared_ptr<Field const>(new Field(desc));
}

std::shared_ptr<Field const> Field::rationals()
{
    static auto const q = make(FieldDescriptor::rationals());
    return q;
}

std::shared_ptr<Field const> Field::prime_field(std::uint64_t p)
{
    return make(FieldDescriptor::prime_field(mpz_class(static_cast<unsigned long>(p))));
}

FieldElement Field::zero() const
{
    return is_rationals() ? FieldElement(mpq_class(0)) : FieldElement(std::uint64_t{0});
}

FieldElement Field::one() const
{
    return is_rationals() ? FieldElement(mpq_class(1)) : FieldElement(std::uint64_t{1});
}

FieldElement Field::from_int(long v) const
{
    if (is_rationals())
        return FieldElement(mpq_class(v));
    long r = v % static_cast<long>(p_);
    if (r < 0)
        r += static_cast<long>(p_);
    return FieldElement(static_cast<std::uint64_t>(r));
}

FieldElement Field::from_mpz(mpz_class const & v) const
{
    if (is_rationals())
        return FieldElement(mpq_class(v));
    return FieldElement(reduce_mpz(v, p_));
}

FieldElement Field::from_rational(mpq_class const & v) const
{
    if (is_rationals()) {
        mpq_class q = v;
        q.canonicalize();
        return FieldElement(std::move(q));
    }
    std::uint64_t den = reduce_mpz(v.get_den(), p_);
    if (den == 0)
        throw Error(ErrorKind::DivisionByZero, "denominator vanishes in " + desc_.to_string());
    return mul(FieldElement(reduce_mpz(v.get_num(), p_)), FieldElement(inverse_mod(den, p_)));
}

FieldElement Field::from_residue(std::uint64_t r) const
{
    if (is_rationals())
        return FieldElement(mpq_class(static_cast<unsigned long>(r)));
    return FieldElement(r % p_);
}

FieldElement Field::add(FieldElement const & a, FieldElement const & b) const
{
    if (is_rationals())
        return FieldElement(mpq_class(rational(a) + rational(b)));
    std::uint64_t s = residue(a) + residue(b);
    return FieldElement(s >= p_ ? s - p_ : s);
}

FieldElement Field::sub(FieldElement const & a, FieldElement const & b) const
{
    if (is_rationals())
        return FieldElement(mpq_class(rational(a) - rational(b)));
    std::uint64_t x = residue(a), y = residue(b);
    return FieldElement(x >= y ? x - y : x + p_ - y);
}

FieldElement Field::neg(FieldElement const & a) const
{
    if (is_rationals())
        return FieldElement(mpq_class(-rational(a)));
    std::uint64_t x = residue(a);
    return FieldElement(x == 0 ? 0 : p_ - x);
}

FieldElement Field::mul(FieldElement const & a, FieldElement const & b) const
{
    if (is_rationals())
        return FieldElement(mpq_class(rational(a) * rational(b)));
    return FieldElement(residue(a) * residue(b) % p_);
}

FieldElement Field::inv(FieldElement const & a) const
{
    if (is_zero(a))
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (is_rationals())
        return FieldElement(mpq_class(1 / rational(a)));
    return FieldElement(inverse_mod(residue(a), p_));
}

FieldElement Field::div(FieldElement const & a, FieldElement const & b) const
{
    return mul(a, inv(b));
}

FieldElement Field::pow(FieldElement const & a, unsigned long e) const
{
    FieldElement result = one();
    FieldElement base = a;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

bool Field::is_zero(FieldElement const & a) const
{
    if (is_rationals())
        return sgn(rational(a)) == 0;
    return residue(a) == 0;
}

bool Field::is_one(FieldElement const & a) const
{
    if (is_rationals())
        return rational(a) == 1;
    return residue(a) == 1;
}

int Field::compare(FieldElement const & a, FieldElement const & b) const
{
    if (is_rationals())
        return cmp(rational(a), rational(b));
    std::uint64_t x = residue(a), y = residue(b);
    return x < y ? -1 : (x > y ? 1 : 0);
}

std::uint64_t Field::residue(FieldElement const & a) const
{
    return std::get<std::uint64_t>(a.v_);
}

mpq_class const & Field::rational(FieldElement const & a) const
{
    return std::get<mpq_class>(a.v_);
}

FieldElement Field::random(std::mt19937_64 & rng, long bound) const
{
    if (is_rationals()) {
        std::uniform_int_distribution<long> dist(-bound, bound);
        return from_int(dist(rng));
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
    return FieldElement(dist(rng));
}

std::string Field::to_string(FieldElement const & a) const
{
    if (is_rationals())
        return rational(a).get_str();
    return std::to_string(residue(a));
}

}  // namespace compirr
