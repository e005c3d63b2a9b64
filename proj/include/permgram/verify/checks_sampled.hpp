#pragma once

#include <functional>
#include <string>
#include <vector>

#include "permgram/series/closed_forms.hpp"
#include "permgram/verify/checks_symbolic.hpp"

namespace permgram::checks {

// Distinct rationals (2j - n)/3, j = 0..n.
inline std::vector<Rational> spread(int n)
{
    std::vector<Rational> v;
    for (int j = 0; j <= n; ++j)
        v.push_back(make_rational(2 * j - n, 3));
    return v;
}

inline std::vector<Rational> positive(int n)
{
    std::vector<Rational> v;
    for (int j = 0; j <= n; ++j)
        v.push_back(make_rational(j + 1, 2));
    return v;
}

inline std::vector<Rational> negative(int n)
{
    std::vector<Rational> v;
    for (int j = 0; j <= n; ++j)
        v.push_back(make_rational(-(j + 1), 3));
    return v;
}

inline std::vector<Point> grid1(const char* name, const std::vector<Rational>& values)
{
    std::vector<Point> g;
    for (const auto& v : values)
        g.push_back({{name, v}});
    return g;
}

inline std::vector<Point> grid2(const char* a, const std::vector<Rational>& av, const char* b,
                                const std::vector<Rational>& bv)
{
    std::vector<Point> g;
    for (const auto& x : av)
        for (const auto& y : bv)
            g.push_back({{a, x}, {b, y}});
    return g;
}

// Root-parametrized grids: a, b and w on disjoint sets; the fourth parameter
// only scales (fu) or does not enter (carlitz-scoville), two values suffice.
inline std::vector<Point> grid_roots(int n, const char* fourth)
{
    std::vector<Point> g;
    auto A = positive(n), B = negative(n), W = spread(n);
    std::size_t i = 0;
    for (const auto& a : A)
        for (const auto& b : B)
            for (const auto& w : W)
                g.push_back({{"a", a}, {"b", b}, {"w", w}, {fourth, (i++ % 2) ? make_rational(3, 2) : Rational(1)}});
    return g;
}

// Compares n! [t^n] of the closed form with the enumerated polynomial at every
// grid point, for n = 0..n_max. `oracle(n)` is evaluated at oracle_point().
inline void compare_closed_form(const ResolvedSpec& s, Report& r, const std::string& id,
                                const std::function<LaurentPoly(int)>& oracle, const std::vector<Point>& grid)
{
    std::vector<LaurentPoly> polys;
    for (int n = 0; n <= s.n_max; ++n)
        polys.push_back(oracle(n));
    for (const auto& params : grid) {
        TheoremRhs spec{id, params, static_cast<std::size_t>(s.n_max)};
        Series rhs = theorem_rhs(spec);
        Point pt = oracle_point(spec);
        for (int n = 0; n <= s.n_max; ++n)
            r.expect_equal(at_n(n) + " at " + describe(params), evaluate(polys[static_cast<std::size_t>(n)], pt),
                           rhs.egf_coeff(static_cast<std::size_t>(n)));
    }
    r.note("grid points", std::to_string(grid.size()));
}

inline std::function<LaurentPoly(int)> oracle_of(Target t, const ResolvedSpec& s)
{
    return [t, &s](int n) { return specialized_poly(n, t, s.enumeration); };
}

inline void gessel(const ResolvedSpec& s, Report& r)
{
    r.note("degree bound", "T_n(x) has degree <= n/2 in x; n_max+1 values of x");
    compare_closed_form(s, r, "gessel", oracle_of(Target::GesselT, s), grid1("x", spread(s.n_max)));
}

inline void elizalde_noy(const ResolvedSpec& s, Report& r)
{
    r.note("degree bound", "U_n(y) has degree <= n in y; a = 2..n_max+2 gives n_max+1 distinct y = a + 1/a - 1");
    std::vector<Rational> a;
    for (int j = 0; j <= s.n_max; ++j)
        a.push_back(Rational(j + 2));
    compare_closed_form(s, r, "elizalde-noy", oracle_of(Target::U, s), grid1("a", a));
}

inline void barry_basset(const ResolvedSpec& s, Report& r)
{
    compare_closed_form(s, r, "barry-basset", oracle_of(Target::U, s), {Point{}});
}

inline void fu(const ResolvedSpec& s, Report& r)
{
    r.note("degree bound", "after y = a+b-w, xz = ab the coefficient has degree <= n in each of a, b, w; "
                           "(n_max+1)^3 grid, z only scales");
    compare_closed_form(s, r, "fu", oracle_of(Target::FuP, s), grid_roots(s.n_max, "z"));
}

inline void carlitz_scoville(const ResolvedSpec& s, Report& r)
{
    r.note("degree bound", "after y = a+b-w, xz = ab the coefficient has degree <= n in each of a, b, w; "
                           "(n_max+1)^3 grid, x does not enter");
    auto F = [&s](int n) {
        return n == 0 ? LaurentPoly(target_variables(Target::F)) : specialized_poly(n, Target::F, s.enumeration);
    };
    compare_closed_form(s, r, "carlitz-scoville", F, grid_roots(s.n_max, "x"));
}

inline void thm_L(const ResolvedSpec& s, Report& r)
{
    r.note("degree bound", "L_n(x) has degree <= n in x; n_max+1 values of x");
    compare_closed_form(s, r, "thm-L", oracle_of(Target::L, s), grid1("x", spread(s.n_max)));
}

inline void thm_T(const ResolvedSpec& s, Report& r)
{
    r.note("degree bound", "T_n(x,y) has degree <= n/2 in each variable; (n_max+1)^2 grid with x > 0 > y");
    compare_closed_form(s, r, "thm-T", oracle_of(Target::T, s), grid2("x", positive(s.n_max), "y", negative(s.n_max)));
}

inline void tbar(const ResolvedSpec& s, Report& r)
{
    compare_closed_form(s, r, "tbar", oracle_of(Target::Tbar, s), grid1("x", spread(s.n_max)));
}

inline void ttilde(const ResolvedSpec& s, Report& r)
{
    compare_closed_form(s, r, "ttilde", oracle_of(Target::Ttilde, s), grid1("y", spread(s.n_max)));
}

inline void kitaev_132(const ResolvedSpec& s, Report& r)
{
    compare_closed_form(s, r, "kitaev-132", oracle_of(Target::T, s), {Point{}});
}

inline void kitaev_231(const ResolvedSpec& s, Report& r)
{
    compare_closed_form(s, r, "kitaev-231", oracle_of(Target::T, s), {Point{}});
}

// Closed form against alternating permutations, then the parity split
// P_n(x,0,1,0,y,1) = TA_n (n even), Q_n(x,0,1,0,y,1)/y = TA_n (n odd >= 3).
inline void thm_TA(const ResolvedSpec& s, Report& r)
{
    r.note("degree bound", "TA_n(x,y) has degree <= n/2 in each variable; (n_max+1)^2 grid with x > 0 > y");
    compare_closed_form(s, r, "thm-TA", oracle_of(Target::TA, s),
                        grid2("x", positive(s.n_max), "y", negative(s.n_max)));

    auto G = load_builtin("G");
    auto xy = target_variables(Target::TA);
    Bindings at{{"x", LaurentPoly::variable(xy, "x")}, {"y", LaurentPoly(Rational(0))},
                {"z", LaurentPoly(Rational(1))},       {"w", LaurentPoly(Rational(0))},
                {"u", LaurentPoly::variable(xy, "y")}, {"v", LaurentPoly(Rational(1))}};
    DerivationCache dz(G, G->variable("z")), dw(G, G->variable("w"));
    LaurentPoly zero(xy), y = LaurentPoly::variable(xy, "y");
    for (int n = 0; n <= s.n_max; ++n) {
        auto un = static_cast<std::size_t>(n);
        LaurentPoly ta = specialized_poly(n, Target::TA, s.enumeration);
        LaurentPoly p = substitute(dz.at(un), at, xy);
        r.expect_equal(at_n(n) + ", P_n(x,0,1,0,y,1)", n % 2 == 0 ? ta : zero, p);
        if (n >= 2)
            r.expect_equal(at_n(n) + ", Q_n(x,0,1,0,y,1)", n % 2 == 1 ? ta * y : zero, substitute(dw.at(un), at, xy));
    }
}

inline void involutions(const ResolvedSpec& s, Report& r)
{
    Series e = theorem_rhs({"involutions", {}, static_cast<std::size_t>(s.n_max)});
    for (int n = 0; n <= s.n_max; ++n) {
        Integer brute = count_involutions(n, s.enumeration);
        Rational l0 = evaluate(specialized_poly(n, Target::L, s.enumeration), {{"x", Rational(0)}});
        r.expect_equal(at_n(n) + ", L_n(0)", Rational(brute), l0);
        r.expect_equal(at_n(n) + ", n! [t^n] exp(t + t^2/2)", Rational(brute), e.egf_coeff(static_cast<std::size_t>(n)));
    }
}

} // namespace permgram::checks
