#include "compirr/parser.hpp"

#include <cctype>
#include <string>

#include "compirr/error.hpp"

namespace compirr {

namespace {

constexpr unsigned long kMaxExponent = 10000;

class Parser {
  public:
    Parser(std::string_view text, FieldRef field, std::size_t arity)
        : text_(text), field_(std::move(field)), arity_(arity)
    {
    }

    MultiPoly parse()
    {
        MultiPoly p = expr();
        skip_space();
        if (pos_ < text_.size())
            fail("'+', '-', '*' or end of input");
        return p;
    }

  private:
    enum class Naming { Unset, Lettered, Indexed };

    [[noreturn]] void fail(std::string expected, ErrorKind kind = ErrorKind::SyntaxError) const
    {
        throw ParseError(kind, line_, column_, std::move(expected));
    }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() != c)
            return false;
        advance();
        return true;
    }

    std::string digits()
    {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            s += text_[pos_];
            advance();
        }
        return s;
    }

    MultiPoly constant(FieldElement c) const { return MultiPoly::constant(field_, arity_, std::move(c)); }

    MultiPoly expr()
    {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        MultiPoly acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    MultiPoly term()
    {
        MultiPoly acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                advance();
                acc = acc * factor();
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
                fail("'*' between factors");
            } else {
                return acc;
            }
        }
    }

    MultiPoly factor()
    {
        MultiPoly b = base();
        if (accept('^')) {
            skip_space();
            std::string e = digits();
            if (e.empty())
                fail("unsigned integer exponent");
            if (e.size() > 6 || std::stoul(e) > kMaxExponent)
                fail("exponent at most " + std::to_string(kMaxExponent));
            b = b.pow(std::stoul(e));
        }
        return b;
    }

    MultiPoly base()
    {
        char c = peek();
        if (c == '(') {
            advance();
            MultiPoly inner = expr();
            if (!accept(')'))
                fail("')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return coefficient();
        if (c == 'X' || c == 'Y')
            return variable();
        if (c == '\0')
            fail("coefficient, variable or '('");
        if (std::isalpha(static_cast<unsigned char>(c)))
            fail("variable X, Y or X<index>", ErrorKind::UnknownVariable);
        fail("coefficient, variable or '('");
    }

    MultiPoly coefficient()
    {
        mpz_class num(digits(), 10);
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            if (!field_->is_rationals())
                fail("integer coefficient (fractions need field Q)");
            advance();
            skip_space();
            std::string d = digits();
            if (d.empty())
                fail("unsigned integer denominator");
            mpz_class den(d, 10);
            if (den == 0)
                fail("nonzero denominator");
            return constant(field_->from_rational(mpq_class(num, den)));
        }
        return constant(field_->from_mpz(num));
    }

    MultiPoly variable()
    {
        char letter = text_[pos_];
        advance();
        std::size_t index = 0;
        Naming style = Naming::Lettered;
        if (letter == 'Y') {
            index = 2;
        } else {
            std::string idx = digits();
            if (idx.empty()) {
                index = 1;
            } else {
                style = Naming::Indexed;
                index = idx.size() > 6 ? 0 : std::stoul(idx);
            }
        }
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            fail("variable X, Y or X<index>", ErrorKind::UnknownVariable);
        if (style == Naming::Lettered && arity_ >= 3)
            fail("indexed variable X1..X" + std::to_string(arity_), ErrorKind::MixedArity);
        if (letter == 'Y' && arity_ == 1)
            fail("only X in a univariate polynomial", ErrorKind::MixedArity);
        if (index == 0 || index > arity_)
            fail("variable index in 1.." + std::to_string(arity_), ErrorKind::UnknownVariable);
        // X alone is X1 under either style; only X2 vs Y can conflict
        bool ambiguous = letter == 'X' && style == Naming::Lettered;
        if (!ambiguous) {
            if (naming_ != Naming::Unset && naming_ != style)
                fail("one naming style (X, Y or X1, X2)", ErrorKind::MixedArity);
            naming_ = style;
        }
        return MultiPoly::variable(field_, arity_, index);
    }

    std::string_view text_;
    FieldRef field_;
    std::size_t arity_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Naming naming_ = Naming::Unset;
};

}  // namespace

MultiPoly parse_multi(std::string_view text, FieldRef const & field, std::size_t arity)
{
    if (arity == 0)
        throw Error(ErrorKind::MixedArity, "arity must be at least 1");
    return Parser(text, field, arity).parse();
}

UniPoly parse_uni(std::string_view text, FieldRef const & field)
{
    return parse_multi(text, field, 1).to_uni(1);
}

BiPoly parse_bi(std::string_view text, FieldRef const & field)
{
    return parse_multi(text, field, 2).to_bipoly();
}

AnyPoly parse_poly(std::string_view text, FieldRef const & field, std::size_t arity)
{
    if (arity == 1)
        return parse_uni(text, field);
    if (arity == 2)
        return parse_bi(text, field);
    return parse_multi(text, field, arity);
}

std::size_t max_variable_index(std::string_view text)
{
    std::size_t best = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 'Y') {
            best = std::max<std::size_t>(best, 2);
        } else if (text[i] == 'X') {
            std::size_t j = i + 1, v = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && j - i < 7)
                v = v * 10 + static_cast<std::size_t>(text[j++] - '0');
            best = std::max(best, j == i + 1 ? std::size_t{1} : v);
        }
    }
    return best;
}

}  // namespace compirr
