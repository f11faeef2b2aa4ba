#include "compirr/multipoly.hpp"

#include <algorithm>

#include "compirr/error.hpp"
#include "term_text.hpp"

namespace compirr {

MultiPoly::MultiPoly(FieldRef field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars)
{
    if (nvars_ == 0)
        throw Error(ErrorKind::IndexOutOfRange, "a multivariate polynomial needs at least one variable");
}

MultiPoly MultiPoly::constant(FieldRef field, std::size_t nvars, FieldElement c)
{
    MultiPoly r(std::move(field), nvars);
    r.add_term(Exponents(nvars, 0), c);
    return r;
}

MultiPoly MultiPoly::variable(FieldRef field, std::size_t nvars, std::size_t j)
{
    if (j < 1 || j > nvars)
        throw Error(ErrorKind::IndexOutOfRange, "variable X" + std::to_string(j));
    MultiPoly r(field, nvars);
    Exponents e(nvars, 0);
    e[j - 1] = 1;
    r.add_term(e, field->one());
    return r;
}

MultiPoly MultiPoly::from_bipoly(BiPoly const & f)
{
    MultiPoly r(f.field(), 2);
    auto const & yc = f.ycoeffs();
    for (std::size_t i = 0; i < yc.size(); ++i) {
        auto cs = yc[i].coeffs();
        for (std::size_t k = 0; k < cs.size(); ++k)
            r.add_term({static_cast<unsigned>(k), static_cast<unsigned>(i)}, cs[k]);
    }
    return r;
}

MultiPoly MultiPoly::from_uni(UniPoly const & u, std::size_t nvars, std::size_t j)
{
    if (j < 1 || j > nvars)
        throw Error(ErrorKind::IndexOutOfRange, "variable X" + std::to_string(j));
    MultiPoly r(u.field(), nvars);
    auto cs = u.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        Exponents e(nvars, 0);
        e[j - 1] = static_cast<unsigned>(k);
        r.add_term(e, cs[k]);
    }
    return r;
}

void MultiPoly::add_term(Exponents const & e, FieldElement const & c)
{
    if (e.size() != nvars_)
        throw Error(ErrorKind::MixedArity, "exponent vector of length " + std::to_string(e.size()));
    if (field_->is_zero(c))
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second = field_->add(it->second, c);
    if (field_->is_zero(it->second))
        terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r(field_, nvars_);
    for (auto const & [e, c] : terms_)
        r.terms_.emplace(e, field_->neg(c));
    return r;
}

MultiPoly & MultiPoly::operator+=(MultiPoly const & o)
{
    require_same_field(field_, o.field_);
    if (o.nvars_ != nvars_)
        throw Error(ErrorKind::MixedArity, "adding polynomials in different variable counts");
    for (auto const & [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly & MultiPoly::operator-=(MultiPoly const & o)
{
    return *this += -o;
}

MultiPoly operator*(MultiPoly const & a, MultiPoly const & b)
{
    require_same_field(a.field_, b.field_);
    if (a.nvars_ != b.nvars_)
        throw Error(ErrorKind::MixedArity, "multiplying polynomials in different variable counts");
    MultiPoly r(a.field_, a.nvars_);
    MultiPoly::Exponents e(a.nvars_);
    for (auto const & [ea, ca] : a.terms_) {
        for (auto const & [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, a.field_->mul(ca, cb));
        }
    }
    return r;
}

bool MultiPoly::operator==(MultiPoly const & o) const
{
    return *field_ == *o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(unsigned long e) const
{
    MultiPoly result = constant(field_, nvars_, field_->one());
    MultiPoly base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

std::vector<MultiPoly> MultiPoly::coeffs_in_last() const
{
    std::vector<MultiPoly> out;
    for (auto const & [e, c] : terms_) {
        std::size_t k = e.back();
        if (out.size() <= k)
            out.resize(k + 1, MultiPoly(field_, nvars_));
        Exponents rest = e;
        rest.back() = 0;
        out[k].add_term(rest, c);
    }
    return out;
}

BiPoly MultiPoly::to_bipoly() const
{
    if (nvars_ > 2)
        throw Error(ErrorKind::MixedArity, "to_bipoly needs at most two variables");
    std::vector<std::vector<FieldElement>> grid;
    for (auto const & [e, c] : terms_) {
        std::size_t x = e[0];
        std::size_t y = nvars_ == 2 ? e[1] : 0;
        if (grid.size() <= y)
            grid.resize(y + 1);
        if (grid[y].size() <= x)
            grid[y].resize(x + 1, field_->zero());
        grid[y][x] = c;
    }
    std::vector<UniPoly> yc;
    yc.reserve(grid.size());
    for (auto & row : grid)
        yc.emplace_back(field_, std::move(row));
    return BiPoly(field_, std::move(yc));
}

UniPoly MultiPoly::to_uni(std::size_t j) const
{
    if (j < 1 || j > nvars_)
        throw Error(ErrorKind::IndexOutOfRange, "variable X" + std::to_string(j));
    std::vector<FieldElement> cs;
    for (auto const & [e, c] : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (i != j - 1 && e[i] != 0)
                throw Error(ErrorKind::MixedArity,
                            "polynomial involves variables other than X" + std::to_string(j));
        }
        std::size_t k = e[j - 1];
        if (cs.size() <= k)
            cs.resize(k + 1, field_->zero());
        cs[k] = c;
    }
    return UniPoly(field_, std::move(cs));
}

std::string MultiPoly::to_string(bool xy_names) const
{
    if (terms_.empty())
        return "0";
    auto name = [&](std::size_t i) {
        if (xy_names && nvars_ <= 2)
            return std::string(i == 0 ? "X" : "Y");
        return "X" + std::to_string(i + 1);
    };
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            std::string part = detail::power_text(name(i), it->first[i]);
            if (part.empty())
                continue;
            mono = mono.empty() ? part : mono + "*" + part;
        }
        detail::append_term(out, *field_, it->second, mono);
    }
    return out;
}

Degree multi_deg(MultiPoly const & f, std::size_t j)
{
    if (j < 1 || j > f.nvars())
        throw Error(ErrorKind::IndexOutOfRange,
                    "index " + std::to_string(j) + " outside 1.." + std::to_string(f.nvars()));
    Degree d = Degree::minus_infinity();
    for (auto const & [e, c] : f.terms())
        d = std::max(d, Degree(static_cast<long>(e[j - 1])));
    return d;
}

Degree hj_norm(MultiPoly const & f, std::size_t j)
{
    std::size_t r = f.nvars();
    if (j < 1 || j + 1 > r)
        throw Error(ErrorKind::IndexOutOfRange,
                    "H_j index " + std::to_string(j) + " outside 1.." + std::to_string(r - 1));
    if (multi_deg(f, r) < Degree(1))
        throw Error(ErrorKind::ConstantInLastVariable, "H_j needs deg_{X_r} f >= 1");
    auto coeffs = f.coeffs_in_last();
    Degree h = Degree::minus_infinity();
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i)
        h = std::max(h, multi_deg(coeffs[i], j));
    return h;
}

std::optional<MultiPoly> divide_exact(MultiPoly const & a, MultiPoly const & b)
{
    require_same_field(a.field(), b.field());
    if (a.nvars() != b.nvars())
        throw Error(ErrorKind::MixedArity, "dividing polynomials in different variable counts");
    if (b.is_zero())
        throw Error(ErrorKind::DivisionByZero, "multivariate division by zero");
    auto const & field = *a.field();
    auto const & [lb_exp, lb_coeff] = *b.terms().rbegin();
    FieldElement lb_inv = field.inv(lb_coeff);
    MultiPoly q(a.field(), a.nvars());
    MultiPoly r = a;
    while (!r.is_zero()) {
        auto const & [lr_exp, lr_coeff] = *r.terms().rbegin();
        MultiPoly::Exponents shift(a.nvars());
        for (std::size_t i = 0; i < shift.size(); ++i) {
            if (lr_exp[i] < lb_exp[i])
                return std::nullopt;
            shift[i] = lr_exp[i] - lb_exp[i];
        }
        MultiPoly t(a.field(), a.nvars());
        t.add_term(shift, field.mul(lr_coeff, lb_inv));
        q += t;
        r -= t * b;
    }
    return q;
}

}  // namespace compirr
