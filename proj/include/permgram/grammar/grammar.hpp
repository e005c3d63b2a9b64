#pragma once

#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "permgram/core/laurent_poly.hpp"
#include "permgram/grammar/parser.hpp"

namespace permgram {

// A context-free grammar in Chen's sense: one substitution rule per variable.
// The rules determine the formal derivative D, a derivation of the Laurent
// polynomial ring with D(v) = rule(v) and D(c) = 0 for constants.
class Grammar {
public:
    Grammar(std::string name, VarSetPtr vars, std::vector<LaurentPoly> rules)
        : name_(std::move(name)), vars_(std::move(vars)), rules_(std::move(rules))
    {
        if (rules_.size() != vars_->size())
            throw std::invalid_argument("every variable needs a rule");
        for (auto& r : rules_) {
            if (r.vars() && !same_variables(r.vars(), vars_))
                throw VariableSetMismatch("rule image over a different variable set");
            r = LaurentPoly(vars_) + r;
        }
    }

    const std::string& name() const noexcept { return name_; }
    const VarSetPtr& vars() const noexcept { return vars_; }
    const LaurentPoly& rule(std::uint32_t var) const { return rules_.at(var); }
    const LaurentPoly& rule(std::string_view var) const { return rules_.at(vars_->require(var)); }

    LaurentPoly variable(std::string_view name) const { return LaurentPoly::variable(vars_, name); }
    LaurentPoly parse(std::string_view expr) const { return parse_expression(expr, vars_); }

    // Product rule on each monomial:
    //   D(prod v_i^e_i) = sum_i e_i v_i^(e_i - 1) (prod_{j != i} v_j^e_j) rule(v_i)
    LaurentPoly derive(const LaurentPoly& p) const
    {
        if (p.vars() && !same_variables(p.vars(), vars_))
            throw VariableSetMismatch("polynomial is not over the grammar's variables");
        LaurentPoly result(vars_);
        for (const auto& [m, c] : p.terms()) {
            for (const auto& [var, e] : m.entries()) {
                Rational factor = c * e.to_rational();
                Monomial reduced = m.shifted(var, HalfInt(-1));
                for (const auto& [rm, rc] : rules_[var].terms())
                    result.add_term(reduced * rm, factor * rc);
            }
        }
        return result;
    }

    // Rules in grammar-file syntax.
    std::string to_text() const
    {
        std::ostringstream out;
        out << "name: " << name_ << "\nvars:";
        for (const auto& n : vars_->names())
            out << ' ' << n;
        out << '\n';
        for (std::uint32_t i = 0; i < vars_->size(); ++i)
            out << "rule " << vars_->name(i) << " -> " << render(rules_[i]) << '\n';
        return out.str();
    }

    friend bool operator==(const Grammar& a, const Grammar& b)
    {
        return same_variables(a.vars_, b.vars_) && a.rules_ == b.rules_;
    }

private:
    std::string name_;
    VarSetPtr vars_;
    std::vector<LaurentPoly> rules_;
};

// Memoized D^n(seed). Not thread-safe; each worker owns its cache.
class DerivationCache {
public:
    DerivationCache(std::shared_ptr<const Grammar> grammar, LaurentPoly seed)
        : grammar_(std::move(grammar))
    {
        entries_.push_back(LaurentPoly(grammar_->vars()) + seed);
    }

    const LaurentPoly& seed() const { return entries_.front(); }
    const Grammar& grammar() const { return *grammar_; }
    std::size_t computed() const { return entries_.size(); }

    const LaurentPoly& at(std::size_t n)
    {
        while (entries_.size() <= n)
            entries_.push_back(grammar_->derive(entries_.back()));
        return entries_[n];
    }

    // D^0(seed), ..., D^order(seed)
    std::vector<LaurentPoly> prefix(std::size_t order)
    {
        at(order);
        return {entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(order + 1)};
    }

private:
    std::shared_ptr<const Grammar> grammar_;
    std::vector<LaurentPoly> entries_;
};

inline LaurentPoly derive_n(const Grammar& g, const LaurentPoly& seed, std::size_t n)
{
    LaurentPoly p = LaurentPoly(g.vars()) + seed;
    for (std::size_t i = 0; i < n; ++i)
        p = g.derive(p);
    return p;
}

// D^n(seed) for n = 0..order: the coefficients of t^n/n! in Gen(seed, t).
inline std::vector<LaurentPoly> gen_coeffs(const Grammar& g, const LaurentPoly& seed, std::size_t order)
{
    DerivationCache cache(std::make_shared<const Grammar>(g), seed);
    return cache.prefix(order);
}

} // namespace permgram
