#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "permgram/core/errors.hpp"
#include "permgram/perm/stats.hpp"

namespace permgram {

enum class Family { P, Q, W };

// Polynomials computed straight from the statistics over S_n, independent of
// any grammar:
//   T        x^ep1 y^ep2
//   L        x^(ep2 + pdd), counted through consecutive 231/321 windows
//   U        y^pdd
//   F        x^(p-1) z^valleys y^dd w^dr                       (n >= 1)
//   TA       x^ep1 y^ep2 over alternating permutations only
//   Tbar     x^ep1
//   Ttilde   y^ep2
//   Eulerian x^des
//   GesselT  x^ep
//   FuP      x^ep y^pdd z^(ep+1) w^(n - 2ep - pdd)
enum class Target { T, L, U, F, TA, Tbar, Ttilde, Eulerian, GesselT, FuP };

inline constexpr int default_enumeration_cap = 9;
inline constexpr int large_enumeration_cap = 11;

struct EnumerationConfig {
    int cap = default_enumeration_cap;
    unsigned jobs = 1;
};

inline std::string_view to_string(Family f)
{
    switch (f) {
    case Family::P: return "P";
    case Family::Q: return "Q";
    case Family::W: return "W";
    }
    return "?";
}

inline std::string_view to_string(Target t)
{
    switch (t) {
    case Target::T: return "T";
    case Target::L: return "L";
    case Target::U: return "U";
    case Target::F: return "F";
    case Target::TA: return "TA";
    case Target::Tbar: return "Tbar";
    case Target::Ttilde: return "Ttilde";
    case Target::Eulerian: return "Eulerian";
    case Target::GesselT: return "GesselT";
    case Target::FuP: return "FuP";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view s)
{
    for (Family f : {Family::P, Family::Q, Family::W})
        if (to_string(f) == s)
            return f;
    return std::nullopt;
}

inline std::optional<Target> parse_target(std::string_view s)
{
    for (Target t : {Target::T, Target::L, Target::U, Target::F, Target::TA, Target::Tbar, Target::Ttilde,
                     Target::Eulerian, Target::GesselT, Target::FuP})
        if (to_string(t) == s)
            return t;
    return std::nullopt;
}

inline VarSetPtr target_variables(Target t)
{
    switch (t) {
    case Target::T:
    case Target::TA: return make_variables({"x", "y"});
    case Target::L:
    case Target::Tbar:
    case Target::Eulerian:
    case Target::GesselT: return make_variables({"x"});
    case Target::U:
    case Target::Ttilde: return make_variables({"y"});
    case Target::F:
    case Target::FuP: return make_variables({"x", "y", "z", "w"});
    }
    throw std::logic_error("unknown target");
}

using ExponentKey = std::array<int, 6>;
using Tally = std::map<ExponentKey, std::uint64_t>;

inline void check_cap(int n, const EnumerationConfig& cfg)
{
    if (n < 0)
        throw std::invalid_argument("negative permutation size");
    if (n > cfg.cap)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cfg.cap));
}

// Counts permutations of [n] by key; `key` returns nullopt to skip a
// permutation. S_n is split by first entry across cfg.jobs threads.
template <typename KeyFn>
Tally tally_permutations(int n, const EnumerationConfig& cfg, KeyFn key)
{
    check_cap(n, cfg);
    auto visit_into = [&](Tally& t) {
        return [&t, &key](std::span<const int> v) {
            if (auto k = key(v))
                ++t[*k];
        };
    };
    unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(std::max(n, 1))));
    if (jobs == 1 || n < 2) {
        Tally t;
        for_each_permutation(n, visit_into(t));
        return t;
    }
    std::vector<Tally> partial(jobs);
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
        workers.emplace_back([&, j] {
            for (int first = static_cast<int>(j) + 1; first <= n; first += static_cast<int>(jobs))
                for_each_permutation_starting_with(n, first, visit_into(partial[j]));
        });
    }
    for (auto& w : workers)
        w.join();
    Tally merged;
    for (const auto& t : partial)
        for (const auto& [k, c] : t)
            merged[k] += c;
    return merged;
}

inline LaurentPoly tally_to_poly(const Tally& tally, const VarSetPtr& vars)
{
    LaurentPoly p(vars);
    for (const auto& [key, count] : tally) {
        std::vector<Monomial::Entry> e;
        for (std::uint32_t i = 0; i < vars->size(); ++i)
            e.emplace_back(i, HalfInt(key[i]));
        p.add_term(Monomial::from_entries(std::move(e)), Rational(Integer(static_cast<unsigned long>(count))));
    }
    return p;
}

// Sum of weights over S_n in the variables x y z w u v.
inline LaurentPoly enumerate_poly(int n, Family family, const EnumerationConfig& cfg = {})
{
    if (family != Family::P && n < 1)
        throw std::invalid_argument(std::string(to_string(family)) + "_n needs n >= 1");
    Tally t = tally_permutations(n, cfg, [family](std::span<const int> v) -> std::optional<ExponentKey> {
        StatVector s = compute_stats(v);
        switch (family) {
        case Family::P:
            return ExponentKey{s.ep1, s.pdd, s.ep2 + 1, s.n - 2 * s.exterior_peaks() - s.pdd, s.ep2, s.ep1};
        case Family::Q:
            return ExponentKey{s.p1, s.dd, s.p2, s.dr, s.p2, s.p1};
        case Family::W:
            return ExponentKey{s.p1, s.dd, s.valleys + 1, s.dr, s.p2, 0};
        }
        return std::nullopt;
    });
    return tally_to_poly(t, g_variables());
}

namespace detail {

inline int consecutive_in(std::span<const int> v, int a, int b, int c)
{
    // windows order-isomorphic to abc, a b c a permutation of 1 2 3
    int count = 0;
    for (std::size_t i = 0; i + 2 < v.size(); ++i) {
        int p = v[i], q = v[i + 1], r = v[i + 2];
        int rp = 1 + (p > q) + (p > r), rq = 1 + (q > p) + (q > r), rr = 1 + (r > p) + (r > q);
        if (rp == a && rq == b && rr == c)
            ++count;
    }
    return count;
}

} // namespace detail

inline LaurentPoly specialized_poly(int n, Target target, const EnumerationConfig& cfg = {})
{
    if (target == Target::F && n < 1)
        throw std::invalid_argument("F_n needs n >= 1");
    Tally t = tally_permutations(n, cfg, [target](std::span<const int> v) -> std::optional<ExponentKey> {
        switch (target) {
        case Target::L:
            return ExponentKey{detail::consecutive_in(v, 2, 3, 1) + detail::consecutive_in(v, 3, 2, 1)};
        case Target::Eulerian: {
            int des = 0;
            for (std::size_t i = 0; i + 1 < v.size(); ++i)
                des += v[i] > v[i + 1];
            return ExponentKey{des};
        }
        default:
            break;
        }
        StatVector s = compute_stats(v);
        switch (target) {
        case Target::T: return ExponentKey{s.ep1, s.ep2};
        case Target::U: return ExponentKey{s.pdd};
        case Target::F: return ExponentKey{s.peaks() - 1, s.dd, s.valleys, s.dr};
        case Target::TA:
            if (!s.alternating)
                return std::nullopt;
            return ExponentKey{s.ep1, s.ep2};
        case Target::Tbar: return ExponentKey{s.ep1};
        case Target::Ttilde: return ExponentKey{s.ep2};
        case Target::GesselT: return ExponentKey{s.exterior_peaks()};
        case Target::FuP:
            return ExponentKey{s.exterior_peaks(), s.pdd, s.exterior_peaks() + 1,
                               s.n - 2 * s.exterior_peaks() - s.pdd};
        default: return std::nullopt;
        }
    });
    return tally_to_poly(t, target_variables(target));
}

inline Integer count_involutions(int n, const EnumerationConfig& cfg = {})
{
    Tally t = tally_permutations(n, cfg, [](std::span<const int> v) -> std::optional<ExponentKey> {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[static_cast<std::size_t>(v[i] - 1)] != static_cast<int>(i) + 1)
                return std::nullopt;
        return ExponentKey{};
    });
    return t.empty() ? Integer(0) : Integer(static_cast<unsigned long>(t.begin()->second));
}

// Row n holds the coefficients of x^0, x^1, ... of a one-variable target,
// without trailing zeros.
using Triangle = std::vector<std::vector<Integer>>;

inline Triangle export_triangle(Target target, int n_max, const EnumerationConfig& cfg = {})
{
    check_cap(n_max, cfg);
    if (target_variables(target)->size() != 1)
        throw std::invalid_argument("triangles are exported for one-variable targets only");
    Triangle rows;
    for (int n = 0; n <= n_max; ++n) {
        LaurentPoly p = specialized_poly(n, target, cfg);
        std::vector<Integer> row;
        for (const auto& [m, c] : p.terms()) {
            auto k = static_cast<std::size_t>(m.exponent(0).integer());
            if (row.size() <= k)
                row.resize(k + 1, Integer(0));
            row[k] = c.get_num();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void write_triangle_csv(std::ostream& out, const Triangle& rows, std::string_view label)
{
    out << "# " << label << ": row n, column k\n";
    for (std::size_t n = 0; n < rows.size(); ++n) {
        out << n;
        for (const auto& v : rows[n])
            out << ',' << v.get_str();
        out << '\n';
    }
}

inline std::vector<Integer> flatten(const Triangle& rows)
{
    std::vector<Integer> out;
    for (const auto& r : rows)
        out.insert(out.end(), r.begin(), r.end());
    return out;
}

} // namespace permgram
