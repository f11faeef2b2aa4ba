#include "compirr/bipoly.hpp"

#include <algorithm>

#include "compirr/error.hpp"
#include "term_text.hpp"

namespace compirr {

BiPoly::BiPoly(FieldRef field) : field_(std::move(field)) {}

BiPoly::BiPoly(FieldRef field, std::vector<UniPoly> ycoeffs)
    : field_(std::move(field)), y_(std::move(ycoeffs))
{
    for (auto const & c : y_)
        require_same_field(field_, c.field());
    normalize();
}

BiPoly BiPoly::from_uni(UniPoly const & u)
{
    return BiPoly(u.field(), std::vector<UniPoly>{u});
}

BiPoly BiPoly::y(FieldRef const & field)
{
    return BiPoly(field, {UniPoly(field), UniPoly::constant(field, field->one())});
}

void BiPoly::normalize()
{
    while (!y_.empty() && y_.back().is_zero())
        y_.pop_back();
}

UniPoly BiPoly::ycoeff(std::size_t i) const
{
    return i < y_.size() ? y_[i] : UniPoly(field_);
}

UniPoly const & BiPoly::leading_y() const
{
    if (y_.empty())
        throw Error(ErrorKind::ZeroInput, "leading coefficient of the zero polynomial");
    return y_.back();
}

Degree BiPoly::deg_y() const noexcept
{
    if (y_.empty())
        return Degree::minus_infinity();
    return Degree(static_cast<long>(y_.size()) - 1);
}

Degree BiPoly::deg_x() const noexcept
{
    Degree d = Degree::minus_infinity();
    for (auto const & c : y_)
        d = std::max(d, c.degree());
    return d;
}

BiPoly BiPoly::operator-() const
{
    BiPoly r(field_);
    r.y_.reserve(y_.size());
    for (auto const & c : y_)
        r.y_.push_back(-c);
    return r;
}

BiPoly & BiPoly::operator+=(BiPoly const & o)
{
    require_same_field(field_, o.field_);
    if (o.y_.size() > y_.size())
        y_.resize(o.y_.size(), UniPoly(field_));
    for (std::size_t i = 0; i < o.y_.size(); ++i)
        y_[i] += o.y_[i];
    normalize();
    return *this;
}

BiPoly & BiPoly::operator-=(BiPoly const & o)
{
    require_same_field(field_, o.field_);
    if (o.y_.size() > y_.size())
        y_.resize(o.y_.size(), UniPoly(field_));
    for (std::size_t i = 0; i < o.y_.size(); ++i)
        y_[i] -= o.y_[i];
    normalize();
    return *this;
}

BiPoly & BiPoly::operator*=(BiPoly const & o)
{
    require_same_field(field_, o.field_);
    if (y_.empty() || o.y_.empty()) {
        y_.clear();
        return *this;
    }
    std::vector<UniPoly> r(y_.size() + o.y_.size() - 1, UniPoly(field_));
    for (std::size_t i = 0; i < y_.size(); ++i) {
        if (y_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < o.y_.size(); ++j)
            r[i + j] += y_[i] * o.y_[j];
    }
    y_ = std::move(r);
    normalize();
    return *this;
}

bool BiPoly::operator==(BiPoly const & o) const
{
    return *field_ == *o.field_ && y_ == o.y_;
}

BiPoly BiPoly::scaled(UniPoly const & c) const
{
    BiPoly r(field_);
    if (c.is_zero())
        return r;
    r.y_.reserve(y_.size());
    for (auto const & x : y_)
        r.y_.push_back(x * c);
    return r;
}

BiPoly BiPoly::pow(unsigned long e) const
{
    BiPoly result = from_uni(UniPoly::constant(field_, field_->one()));
    BiPoly base = *this;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

UniPoly BiPoly::evaluate_y(FieldElement const & y0) const
{
    UniPoly acc(field_);
    UniPoly c0 = UniPoly::constant(field_, y0);
    for (auto it = y_.rbegin(); it != y_.rend(); ++it)
        acc = acc * c0 + *it;
    return acc;
}

std::string BiPoly::to_string() const
{
    if (y_.empty())
        return "0";
    std::string out;
    for (std::size_t i = y_.size(); i-- > 0;) {
        auto cs = y_[i].coeffs();
        for (std::size_t k = cs.size(); k-- > 0;) {
            if (field_->is_zero(cs[k]))
                continue;
            std::string mono = detail::power_text("X", k);
            std::string ypart = detail::power_text("Y", i);
            if (!ypart.empty())
                mono = mono.empty() ? ypart : mono + "*" + ypart;
            detail::append_term(out, *field_, cs[k], mono);
        }
    }
    return out;
}

std::optional<BiPoly> divide_exact(BiPoly const & a, BiPoly const & b)
{
    require_same_field(a.field(), b.field());
    if (b.is_zero())
        throw Error(ErrorKind::DivisionByZero, "bivariate division by zero");
    auto const & field = a.field();
    if (a.is_zero())
        return BiPoly(field);
    if (a.deg_y() < b.deg_y())
        return std::nullopt;
    std::vector<UniPoly> rem = a.ycoeffs();
    auto const & bc = b.ycoeffs();
    std::size_t db = bc.size() - 1;
    std::size_t dq = rem.size() - 1 - db;
    std::vector<UniPoly> quo(dq + 1, UniPoly(field));
    for (std::size_t k = dq + 1; k-- > 0;) {
        if (rem[k + db].is_zero())
            continue;
        auto c = divide_exact(rem[k + db], bc[db]);
        if (!c)
            return std::nullopt;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k + j] -= *c * bc[j];
        quo[k] = std::move(*c);
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (!rem[i].is_zero())
            return std::nullopt;
    }
    return BiPoly(field, std::move(quo));
}

Degree h1_norm(BiPoly const & f)
{
    if (f.deg_y() < Degree(1))
        throw Error(ErrorKind::ConstantInY, "H1 needs deg_Y f >= 1");
    Degree h = Degree::minus_infinity();
    auto const & c = f.ycoeffs();
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        h = std::max(h, c[i].degree());
    return h;
}

BiPoly compose(BiPoly const & f, BiPoly const & g)
{
    require_same_field(f.field(), g.field());
    BiPoly acc(f.field());
    auto const & a = f.ycoeffs();
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        acc = acc * g + BiPoly::from_uni(*it);
    return acc;
}

ContentY content_y(BiPoly const & g)
{
    if (g.is_zero())
        throw Error(ErrorKind::ZeroInput, "Y-content of the zero polynomial");
    UniPoly b(g.field());
    for (auto const & c : g.ycoeffs()) {
        if (!c.is_zero())
            b = b.is_zero() ? c.monic() : gcd(b, c);
        if (b.is_one())
            break;
    }
    std::vector<UniPoly> prim;
    prim.reserve(g.ycoeffs().size());
    for (auto const & c : g.ycoeffs())
        prim.push_back(divmod(c, b).quotient);
    return {b, BiPoly(g.field(), std::move(prim))};
}

UniPoly resultant_y(BiPoly const & a, BiPoly const & b)
{
    require_same_field(a.field(), b.field());
    if (a.is_zero() || b.is_zero())
        throw Error(ErrorKind::ZeroInput, "resultant with a zero polynomial");
    long m = a.deg_y().value(), n = b.deg_y().value();
    if (m == 0 && n == 0)
        throw Error(ErrorKind::PreconditionViolated, "resultant of two Y-constants");
    auto const & field = a.field();
    std::size_t N = static_cast<std::size_t>(m + n);

    // Sylvester matrix, coefficients from the highest power of Y down.
    std::vector<std::vector<UniPoly>> M(N, std::vector<UniPoly>(N, UniPoly(field)));
    for (long i = 0; i < n; ++i)
        for (long k = 0; k <= m; ++k)
            M[i][i + k] = a.ycoeff(static_cast<std::size_t>(m - k));
    for (long i = 0; i < m; ++i)
        for (long k = 0; k <= n; ++k)
            M[n + i][i + k] = b.ycoeff(static_cast<std::size_t>(n - k));

    bool negate = false;
    UniPoly prev = UniPoly::constant(field, field->one());
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < N && M[r][k].is_zero())
                ++r;
            if (r == N)
                return UniPoly(field);
            std::swap(M[k], M[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j) {
                UniPoly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                auto q = divide_exact(num, prev);
                // Sylvester's identity guarantees exactness
                M[i][j] = std::move(*q);
            }
            M[i][k] = UniPoly(field);
        }
        prev = M[k][k];
    }
    UniPoly det = M[N - 1][N - 1];
    return negate ? -det : det;
}

}  // namespace compirr
