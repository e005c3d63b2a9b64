#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "permgram/core/laurent_poly.hpp"
#include "permgram/perm/permutation.hpp"

namespace permgram {

// Shape of index i (1 <= i <= n) with both boundaries pi_0 = pi_{n+1} = 0.
enum class Shape { peak132, peak231, valley, double_rise, double_descent };

// Shape of index i (1 <= i <= n - 1) with only the left boundary pi_0 = 0.
enum class ExteriorShape { none, peak132, peak231, proper_double_descent };

struct StatVector {
    int n = 0;
    int ep1 = 0;     // exterior peaks of pattern 132
    int ep2 = 0;     // exterior peaks of pattern 231
    int pdd = 0;     // proper double descents
    int p1 = 0;      // peaks of pattern 132 (non-strict comparison)
    int p2 = 0;      // peaks of pattern 231
    int valleys = 0;
    int dd = 0;      // double descents
    int dr = 0;      // double rises
    int des = 0;     // descents pi_i > pi_{i+1}, 1 <= i <= n - 1
    bool alternating = true; // pi_1 > pi_2 < pi_3 > ...

    int exterior_peaks() const noexcept { return ep1 + ep2; }
    int peaks() const noexcept { return p1 + p2; }
};

namespace detail {

inline int boundary_at(std::span<const int> v, int i)
{
    return (i == 0 || i == static_cast<int>(v.size()) + 1) ? 0 : v[static_cast<std::size_t>(i - 1)];
}

} // namespace detail

inline ExteriorShape exterior_shape(std::span<const int> v, int i)
{
    int n = static_cast<int>(v.size());
    if (i < 1 || i > n - 1)
        return ExteriorShape::none;
    int a = detail::boundary_at(v, i - 1), b = v[static_cast<std::size_t>(i - 1)],
        c = v[static_cast<std::size_t>(i)];
    if (a < b && b > c)
        return a < c ? ExteriorShape::peak132 : ExteriorShape::peak231;
    if (i >= 2 && a > b && b > c)
        return ExteriorShape::proper_double_descent;
    return ExteriorShape::none;
}

inline Shape shape(std::span<const int> v, int i)
{
    int n = static_cast<int>(v.size());
    if (i < 1 || i > n)
        throw std::out_of_range("index outside 1..n");
    int a = detail::boundary_at(v, i - 1), b = detail::boundary_at(v, i), c = detail::boundary_at(v, i + 1);
    if (a < b && b > c)
        return a <= c ? Shape::peak132 : Shape::peak231;
    if (a > b && b < c)
        return Shape::valley;
    if (a < b && b < c)
        return Shape::double_rise;
    return Shape::double_descent;
}

inline StatVector compute_stats(std::span<const int> v)
{
    StatVector s;
    int n = static_cast<int>(v.size());
    s.n = n;
    for (int i = 1; i <= n - 1; ++i) {
        switch (exterior_shape(v, i)) {
        case ExteriorShape::peak132: ++s.ep1; break;
        case ExteriorShape::peak231: ++s.ep2; break;
        case ExteriorShape::proper_double_descent: ++s.pdd; break;
        case ExteriorShape::none: break;
        }
        bool descent = v[static_cast<std::size_t>(i - 1)] > v[static_cast<std::size_t>(i)];
        if (descent)
            ++s.des;
        if (descent != (i % 2 == 1))
            s.alternating = false;
    }
    for (int i = 1; i <= n; ++i) {
        switch (shape(v, i)) {
        case Shape::peak132: ++s.p1; break;
        case Shape::peak231: ++s.p2; break;
        case Shape::valley: ++s.valleys; break;
        case Shape::double_rise: ++s.dr; break;
        case Shape::double_descent: ++s.dd; break;
        }
    }
    return s;
}

inline StatVector stats(const Permutation& p) { return compute_stats(p.values()); }

// Variables x y z w u v of the refined grammar, shared by weights and the
// enumerated generating polynomials.
inline const VarSetPtr& g_variables()
{
    static const VarSetPtr vars = make_variables({"x", "y", "z", "w", "u", "v"});
    return vars;
}

enum class LabelScheme { exterior, peak };

// One label per position 1..n+1 (the last is the appended 0), plus their product.
struct Labeling {
    std::string labels;
    LaurentPoly weight;
};

namespace detail {

inline void put_label(std::string& labels, int position, char label)
{
    char& slot = labels.at(static_cast<std::size_t>(position - 1));
    if (slot != '.')
        throw std::logic_error(std::string("position ") + std::to_string(position) + " labeled twice ('" +
                               slot + "' and '" + label + "')");
    slot = label;
}

inline LaurentPoly product_of_labels(const std::string& labels)
{
    const auto& vars = g_variables();
    std::vector<Monomial::Entry> entries;
    for (char c : labels)
        entries.emplace_back(vars->require(std::string(1, c)), HalfInt(1));
    return LaurentPoly::term(vars, Monomial::from_entries(std::move(entries)), Rational(1));
}

} // namespace detail

inline Labeling label(const Permutation& p, LabelScheme scheme)
{
    int n = p.size();
    auto v = p.values();
    std::string labels(static_cast<std::size_t>(n + 1), '.');
    if (scheme == LabelScheme::exterior) {
        detail::put_label(labels, n + 1, 'z');
        for (int i = 1; i <= n - 1; ++i) {
            switch (exterior_shape(v, i)) {
            case ExteriorShape::peak132:
                detail::put_label(labels, i, 'x');
                detail::put_label(labels, i + 1, 'v');
                break;
            case ExteriorShape::peak231:
                detail::put_label(labels, i, 'u');
                detail::put_label(labels, i + 1, 'z');
                break;
            case ExteriorShape::proper_double_descent:
                detail::put_label(labels, i + 1, 'y');
                break;
            case ExteriorShape::none:
                break;
            }
        }
        for (char& c : labels)
            if (c == '.')
                c = 'w';
    } else {
        for (int i = 1; i <= n; ++i) {
            switch (shape(v, i)) {
            case Shape::peak132:
                detail::put_label(labels, i, 'x');
                detail::put_label(labels, i + 1, 'v');
                break;
            case Shape::peak231:
                detail::put_label(labels, i, 'u');
                detail::put_label(labels, i + 1, 'z');
                break;
            case Shape::double_descent:
                detail::put_label(labels, i + 1, 'y');
                break;
            case Shape::double_rise:
                detail::put_label(labels, i, 'w');
                break;
            case Shape::valley:
                break;
            }
        }
        auto gap = labels.find('.');
        if (gap != std::string::npos)
            throw std::logic_error("position " + std::to_string(gap + 1) + " of " + p.to_string() +
                                   " received no label");
    }
    Labeling out{labels, detail::product_of_labels(labels)};
    return out;
}

// Closed-form weight from the statistics:
//   exterior: x^ep1 v^ep1 u^ep2 z^(ep2+1) y^pdd w^(n-2(ep1+ep2)-pdd)
//   peak:     x^p1 v^p1 u^p2 z^p2 y^dd w^dr
inline LaurentPoly weight_formula(const StatVector& s, LabelScheme scheme)
{
    const auto& vars = g_variables();
    auto mono = [&](int x, int y, int z, int w, int u, int v) {
        std::vector<Monomial::Entry> e;
        int exps[6] = {x, y, z, w, u, v};
        for (std::uint32_t i = 0; i < 6; ++i)
            e.emplace_back(i, HalfInt(exps[i]));
        return LaurentPoly::term(vars, Monomial::from_entries(std::move(e)), Rational(1));
    };
    if (scheme == LabelScheme::exterior)
        return mono(s.ep1, s.pdd, s.ep2 + 1, s.n - 2 * (s.ep1 + s.ep2) - s.pdd, s.ep2, s.ep1);
    return mono(s.p1, s.dd, s.p2, s.dr, s.p2, s.p1);
}

inline LaurentPoly weight_formula(const Permutation& p, LabelScheme scheme)
{
    return weight_formula(stats(p), scheme);
}

} // namespace permgram
