#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "permgram/core/monomial.hpp"
#include "permgram/core/rational.hpp"
#include "permgram/core/variable_set.hpp"

namespace permgram {

// Sparse Laurent polynomial with rational coefficients over a variable set.
//
// A default-constructed polynomial (or one built from a bare rational) has no
// variable set; it is a constant and combines with polynomials over any set.
// Two non-empty variable sets must agree, otherwise VariableSetMismatch.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(Rational c) { add_term(Monomial{}, c); }
    explicit LaurentPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(VarSetPtr vars, const Rational& c)
    {
        LaurentPoly p(std::move(vars));
        p.add_term(Monomial{}, c);
        return p;
    }

    static LaurentPoly variable(VarSetPtr vars, std::string_view name, HalfInt exponent = HalfInt(1))
    {
        auto id = vars->require(name);
        LaurentPoly p(std::move(vars));
        p.add_term(Monomial::single(id, exponent), Rational(1));
        return p;
    }

    static LaurentPoly term(VarSetPtr vars, const Monomial& m, const Rational& c)
    {
        LaurentPoly p(std::move(vars));
        p.add_term(m, c);
        return p;
    }

    const VarSetPtr& vars() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_constant() const noexcept
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rational constant_term() const { return coeff(Monomial{}); }

    Rational coeff(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::optional<std::pair<Monomial, Rational>> single_term() const
    {
        if (terms_.size() != 1)
            return std::nullopt;
        return *terms_.begin();
    }

    void add_term(const Monomial& m, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o)
    {
        adopt(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o)
    {
        adopt(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }

    LaurentPoly& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        LaurentPoly r(merged_vars(a, b));
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma * mb, ca * cb);
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly pow(unsigned e) const
    {
        LaurentPoly result = constant(vars_, Rational(1));
        LaurentPoly base = *this;
        while (e) {
            if (e & 1U)
                result *= base;
            e >>= 1U;
            if (e)
                base *= base;
        }
        return result;
    }

    // Multiplies every term by a monomial.
    LaurentPoly times(const Monomial& m) const
    {
        LaurentPoly r(vars_);
        for (const auto& [tm, c] : terms_)
            r.add_term(tm * m, c);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (a.vars_ && b.vars_ && !same_variables(a.vars_, b.vars_))
            return false;
        return a.terms_ == b.terms_;
    }

    static VarSetPtr merged_vars(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (!a.vars_)
            return b.vars_;
        if (!b.vars_ || same_variables(a.vars_, b.vars_))
            return a.vars_;
        throw VariableSetMismatch("polynomials are over different variable sets");
    }

private:
    void adopt(const LaurentPoly& o) { vars_ = merged_vars(*this, o); }

    VarSetPtr vars_;
    TermMap terms_;
};

// Exact assignment of rational values to variable names.
using Point = std::map<std::string, Rational, std::less<>>;

// Exact value at a point. Every variable that occurs must be assigned; its
// exponent must be an integer, and a zero value may not carry a negative power.
inline Rational evaluate(const LaurentPoly& p, const Point& point)
{
    Rational total(0);
    if (p.is_zero())
        return total;
    const auto& vars = p.vars();
    std::map<std::pair<std::uint32_t, std::int64_t>, Rational> powers;
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (const auto& [var, e] : m.entries()) {
            const std::string& name = vars->name(var);
            if (!e.is_integer())
                throw DomainError("cannot evaluate " + name + "^" + e.to_string() + " exactly");
            auto it = point.find(name);
            if (it == point.end())
                throw DomainError("no value given for variable '" + name + "'");
            auto key = std::make_pair(var, e.integer());
            auto pw = powers.find(key);
            if (pw == powers.end())
                pw = powers.emplace(key, pow(it->second, e.integer())).first;
            term *= pw->second;
        }
        total += term;
    }
    return total;
}

using Bindings = std::map<std::string, LaurentPoly, std::less<>>;

namespace detail {

inline LaurentPoly power_of_binding(const LaurentPoly& image, HalfInt e, const VarSetPtr& target,
                                    const std::string& name)
{
    if (e.is_integer() && e.integer() >= 0)
        return image.pow(static_cast<unsigned>(e.integer()));
    auto single = image.single_term();
    if (!single) {
        if (image.is_zero() && e.is_negative())
            throw DomainError("variable '" + name + "' bound to 0 appears with a negative power");
        throw DomainError("variable '" + name + "' appears with exponent " + e.to_string() +
                          " but is bound to a non-monomial");
    }
    const auto& [m, c] = *single;
    Monomial out;
    for (const auto& [var, f] : m.entries()) {
        auto pe = product(f, e);
        if (!pe)
            throw DomainError("binding of '" + name + "' raised to " + e.to_string() +
                              " leaves Z/2 exponents");
        out = out * Monomial::single(var, *pe);
    }
    Rational coeff;
    if (e.is_integer()) {
        coeff = pow(c, e.integer());
    } else if (c == 1) {
        coeff = 1;
    } else {
        throw DomainError("variable '" + name + "' has a half-integer exponent and a non-unit binding");
    }
    return LaurentPoly::term(target, out, coeff);
}

} // namespace detail

// Simultaneous substitution. Unbound variables map to the variable of the same
// name in `target`.
inline LaurentPoly substitute(const LaurentPoly& p, const Bindings& bindings, const VarSetPtr& target)
{
    LaurentPoly result(target);
    if (p.is_zero())
        return result;
    for (const auto& [name, image] : bindings)
        if (image.vars() && !same_variables(image.vars(), target))
            throw VariableSetMismatch("binding for '" + name + "' is over another variable set");
    const auto& vars = p.vars();
    std::map<Monomial::Entry, LaurentPoly> cache;
    for (const auto& [m, c] : p.terms()) {
        LaurentPoly term = LaurentPoly::constant(target, c);
        for (const auto& entry : m.entries()) {
            auto it = cache.find(entry);
            if (it == cache.end()) {
                const std::string& name = vars->name(entry.first);
                auto b = bindings.find(name);
                LaurentPoly image = b != bindings.end() ? b->second : LaurentPoly::variable(target, name);
                it = cache.emplace(entry, detail::power_of_binding(image, entry.second, target, name)).first;
            }
            term *= it->second;
        }
        result += term;
    }
    return result;
}

inline LaurentPoly substitute(const LaurentPoly& p, const Bindings& bindings)
{
    return substitute(p, bindings, p.vars());
}

// Canonical text form: terms in monomial order, `coeff*var^exp`, `^` only for
// exponents other than 1, coefficients as p/q.
inline std::string render(const Monomial& m, const VariableSet& vars)
{
    std::string out;
    for (const auto& [var, e] : m.entries()) {
        if (!out.empty())
            out += '*';
        out += vars.name(var);
        if (e != HalfInt(1))
            out += "^" + e.to_string();
    }
    return out;
}

inline std::string render(const LaurentPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0)
                out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1)
            out += mag.get_str() + "*";
        out += render(m, *p.vars());
    }
    return out;
}

} // namespace permgram
