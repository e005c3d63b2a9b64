#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permgram {

// A permutation of [n] in one-line notation, stored without the virtual
// boundary zeros that the statistics use.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> values) : values_(std::move(values))
    {
        std::vector<bool> seen(values_.size() + 1, false);
        for (int v : values_) {
            if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("not a permutation of [" + std::to_string(values_.size()) + "]");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n)
    {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    // "534621" (one digit per entry) or whitespace/comma separated entries.
    static Permutation parse(std::string_view text)
    {
        std::vector<int> v;
        bool separated = text.find_first_of(" ,") != std::string_view::npos;
        if (separated) {
            int cur = -1;
            for (char c : text) {
                if (std::isdigit(static_cast<unsigned char>(c))) {
                    cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
                } else if (c == ' ' || c == ',') {
                    if (cur >= 0)
                        v.push_back(cur);
                    cur = -1;
                } else {
                    throw std::invalid_argument("bad permutation text '" + std::string(text) + "'");
                }
            }
            if (cur >= 0)
                v.push_back(cur);
        } else {
            for (char c : text) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw std::invalid_argument("bad permutation text '" + std::string(text) + "'");
                v.push_back(c - '0');
            }
        }
        return Permutation(std::move(v));
    }

    int size() const noexcept { return static_cast<int>(values_.size()); }
    std::span<const int> values() const noexcept { return values_; }

    // pi_i for 1 <= i <= n, and 0 at the virtual positions 0 and n + 1.
    int at(int i) const
    {
        if (i == 0 || i == size() + 1)
            return 0;
        return values_.at(static_cast<std::size_t>(i - 1));
    }

    std::string to_string() const
    {
        std::string out;
        bool spaced = size() > 9;
        for (int v : values_) {
            if (spaced && !out.empty())
                out += ' ';
            out += std::to_string(v);
        }
        return out;
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

// Order-isomorphism class of a window: relabel with 1..m keeping relative order.
inline std::vector<int> reduce(std::span<const int> window)
{
    std::vector<int> order(window.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return window[static_cast<std::size_t>(a)] < window[static_cast<std::size_t>(b)];
    });
    std::vector<int> out(window.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        out[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
    return out;
}

// Number of windows of |pattern| adjacent entries whose reduction equals pattern.
inline std::size_t consecutive_count(const Permutation& p, const Permutation& pattern)
{
    if (pattern.size() == 0)
        throw std::invalid_argument("empty pattern");
    auto m = static_cast<std::size_t>(pattern.size());
    auto vals = p.values();
    if (m > vals.size())
        return 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i + m <= vals.size(); ++i) {
        auto r = reduce(vals.subspan(i, m));
        if (std::equal(r.begin(), r.end(), pattern.values().begin()))
            ++count;
    }
    return count;
}

// The n + 1 permutations of [n + 1] obtained by inserting n + 1 before each
// entry (slot 0..n-1) or at the end (slot n, i.e. before the appended 0).
inline std::vector<Permutation> insertion_children(const Permutation& p)
{
    int n = p.size();
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (int slot = 0; slot <= n; ++slot) {
        std::vector<int> v(p.values().begin(), p.values().end());
        v.insert(v.begin() + slot, n + 1);
        out.emplace_back(std::move(v));
    }
    return out;
}

inline bool is_involution(const Permutation& p)
{
    for (int i = 1; i <= p.size(); ++i)
        if (p.at(p.at(i)) != i)
            return false;
    return true;
}

// Visits every permutation of [n] in lexicographic order.
template <typename Visitor>
void for_each_permutation(int n, Visitor&& visit)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        visit(std::span<const int>(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

// Visits the permutations of [n] whose first entry is `first`.
template <typename Visitor>
void for_each_permutation_starting_with(int n, int first, Visitor&& visit)
{
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n));
    v.push_back(first);
    for (int i = 1; i <= n; ++i)
        if (i != first)
            v.push_back(i);
    do {
        visit(std::span<const int>(v));
    } while (std::next_permutation(v.begin() + 1, v.end()));
}

} // namespace permgram
