#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "permgram/core/half_int.hpp"

namespace permgram {

// Product of variables raised to half-integer powers. Entries are sorted by
// variable id and never carry a zero exponent, so equal monomials have equal
// representations.
class Monomial {
public:
    using Entry = std::pair<std::uint32_t, HalfInt>;

    Monomial() = default;

    static Monomial single(std::uint32_t var, HalfInt exponent)
    {
        Monomial m;
        if (!exponent.is_zero())
            m.entries_.emplace_back(var, exponent);
        return m;
    }

    // Entries need not be sorted; repeated variables are combined.
    static Monomial from_entries(std::vector<Entry> entries)
    {
        Monomial m;
        for (const auto& [var, e] : entries)
            m = m * single(var, e);
        return m;
    }

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    bool is_one() const noexcept { return entries_.empty(); }

    HalfInt exponent(std::uint32_t var) const
    {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), var,
                                   [](const Entry& e, std::uint32_t v) { return e.first < v; });
        return it != entries_.end() && it->first == var ? it->second : HalfInt{};
    }

    bool all_integer() const
    {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const Entry& e) { return e.second.is_integer(); });
    }

    Monomial shifted(std::uint32_t var, HalfInt delta) const { return *this * single(var, delta); }

    Monomial inverse() const
    {
        Monomial m = *this;
        for (auto& e : m.entries_)
            e.second = -e.second;
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        Monomial r;
        r.entries_.reserve(a.entries_.size() + b.entries_.size());
        auto i = a.entries_.begin(), j = b.entries_.begin();
        while (i != a.entries_.end() || j != b.entries_.end()) {
            if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
                r.entries_.push_back(*i++);
            } else if (i == a.entries_.end() || j->first < i->first) {
                r.entries_.push_back(*j++);
            } else {
                HalfInt e = i->second + j->second;
                if (!e.is_zero())
                    r.entries_.emplace_back(i->first, e);
                ++i;
                ++j;
            }
        }
        return r;
    }

    // Lexicographic on (variable id, exponent) entries.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Entry> entries_;
};

} // namespace permgram
