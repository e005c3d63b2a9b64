#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "permgram/core/laurent_poly.hpp"

namespace permgram {

namespace detail {

// Recursive-descent reader for sums of products:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | name ['^' ['-'] digits ['/' digits]]
class ExpressionReader {
public:
    ExpressionReader(std::string_view text, const VarSetPtr& vars, std::size_t line)
        : text_(text), vars_(vars), line_(line) {}

    LaurentPoly read()
    {
        LaurentPoly result(vars_);
        skip_space();
        if (at_end())
            fail("empty expression");
        bool negative = false;
        if (peek() == '+' || peek() == '-')
            negative = get() == '-';
        while (true) {
            LaurentPoly t = term();
            if (negative)
                result -= t;
            else
                result += t;
            skip_space();
            if (at_end())
                break;
            char c = get();
            if (c != '+' && c != '-')
                fail(std::string("unexpected '") + c + "'");
            negative = c == '-';
        }
        return result;
    }

private:
    LaurentPoly term()
    {
        LaurentPoly t = LaurentPoly::constant(vars_, Rational(1));
        while (true) {
            skip_space();
            if (at_end())
                fail("expected a factor");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                t *= rational();
            } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
                std::string name = identifier();
                auto id = vars_->index_of(name);
                if (!id)
                    fail("undeclared variable '" + name + "'");
                HalfInt e(1);
                skip_space();
                if (!at_end() && peek() == '^') {
                    get();
                    e = exponent();
                }
                t = t.times(Monomial::single(*id, e));
            } else {
                fail(std::string("unexpected '") + peek() + "'");
            }
            skip_space();
            if (at_end() || peek() != '*')
                return t;
            get();
        }
    }

    Rational rational()
    {
        std::string digits = number();
        skip_space();
        if (!at_end() && peek() == '/') {
            get();
            skip_space();
            std::string den = number();
            if (den.empty())
                fail("expected a denominator");
            digits += "/" + den;
        }
        return parse_rational(digits);
    }

    HalfInt exponent()
    {
        skip_space();
        bool negative = false;
        if (!at_end() && peek() == '-') {
            get();
            negative = true;
        }
        std::string num = number();
        if (num.empty())
            fail("expected an exponent");
        std::string den = "1";
        if (!at_end() && peek() == '/') {
            get();
            den = number();
            if (den.empty())
                fail("expected an exponent denominator");
        }
        Rational e = parse_rational(num + "/" + den);
        Rational twice = e * 2;
        if (twice.get_den() != 1 || !twice.get_num().fits_slong_p())
            fail("exponent " + e.get_str() + " is not a multiple of 1/2");
        long t = twice.get_num().get_si();
        return HalfInt::from_twice(negative ? -t : t);
    }

    std::string number()
    {
        std::string s;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            s += get();
        return s;
    }

    std::string identifier()
    {
        std::string s;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            s += get();
        return s;
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " in '" + std::string(text_) + "'", line_);
    }

    std::string_view text_;
    const VarSetPtr& vars_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Parses a Laurent polynomial written in the same syntax `render` produces.
inline LaurentPoly parse_expression(std::string_view text, const VarSetPtr& vars, std::size_t line = 0)
{
    return detail::ExpressionReader(text, vars, line).read();
}

} // namespace permgram
