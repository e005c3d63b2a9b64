#pragma once

#include <array>
#include <string>
#include <string_view>

#include "permgram/series/series.hpp"

namespace permgram {

class DegenerateSample : public DomainError {
public:
    using DomainError::DomainError;
};

// A closed-form right-hand side evaluated at exact rational parameters.
//
//   id                params       compared against
//   gessel            x            sum_n GesselT_n(x) t^n/n!
//   elizalde-noy      a            U_n(y),  y = a + 1/a - 1
//   barry-basset      -            U_n(0)
//   fu                a b w z      FuP_n(x,y,z,w),  y = a + b - w, x = ab/z
//   carlitz-scoville  a b w x      F_n(x,y,z,w) with F_0 = 0,  y = a + b - w, z = ab/x
//   thm-L             x            L_n(x)
//   thm-T             x y          T_n(x,y),  x != y
//   tbar              x            T_n(x,1)
//   ttilde            y            T_n(1,y)
//   kitaev-132        -            T_n(0,1)
//   kitaev-231        -            T_n(1,0)
//   thm-TA            x y          TA_n(x,y),  x != y
//   involutions       -            L_n(0)
struct TheoremRhs {
    std::string id;
    Point params;
    std::size_t order = 9;
};

inline constexpr std::array<std::string_view, 13> closed_form_ids{
    "gessel", "elizalde-noy", "barry-basset", "fu",         "carlitz-scoville", "thm-L",       "thm-T",
    "tbar",   "ttilde",       "kitaev-132",   "kitaev-231", "thm-TA",           "involutions"};

namespace detail {

inline const Rational& param(const TheoremRhs& spec, std::string_view name)
{
    auto it = spec.params.find(name);
    if (it == spec.params.end())
        throw std::invalid_argument("closed form '" + spec.id + "' needs parameter '" + std::string(name) + "'");
    return it->second;
}

// exp((x-1) t^2/2) / (1 - int_0^t exp((x-1) s^2/2) ds)
inline Series tbar_series(const Rational& x, std::size_t order)
{
    Series e = ps_exp_poly(0, (x - 1) / 2, order);
    return e / (Series::constant(1, order) - ps_integrate(e));
}

// 1 / (1 - int_0^t exp((y-1) s^2/2) ds)
inline Series ttilde_series(const Rational& y, std::size_t order)
{
    Series e = ps_exp_poly(0, (y - 1) / 2, order);
    return Series::constant(1, order) / (Series::constant(1, order) - ps_integrate(e));
}

} // namespace detail

// Parameter values a spec implies for the oracle polynomial's variables.
inline Point oracle_point(const TheoremRhs& spec)
{
    const auto& id = spec.id;
    auto p = [&](std::string_view n) { return detail::param(spec, n); };
    if (id == "gessel" || id == "thm-L" || id == "tbar")
        return {{"x", p("x")}};
    if (id == "ttilde")
        return {{"y", p("y")}};
    if (id == "thm-T" || id == "thm-TA")
        return {{"x", p("x")}, {"y", p("y")}};
    if (id == "elizalde-noy") {
        if (p("a") == 0)
            throw DegenerateSample("elizalde-noy needs a != 0");
        return {{"y", p("a") + 1 / p("a") - 1}};
    }
    if (id == "barry-basset")
        return {{"y", Rational(0)}};
    if (id == "kitaev-132")
        return {{"x", Rational(0)}, {"y", Rational(1)}};
    if (id == "kitaev-231")
        return {{"x", Rational(1)}, {"y", Rational(0)}};
    if (id == "involutions")
        return {{"x", Rational(0)}};
    if (id == "fu") {
        if (p("z") == 0)
            throw DegenerateSample("fu needs z != 0");
        return {{"x", p("a") * p("b") / p("z")}, {"y", p("a") + p("b") - p("w")}, {"z", p("z")}, {"w", p("w")}};
    }
    if (id == "carlitz-scoville") {
        if (p("x") == 0)
            throw DegenerateSample("carlitz-scoville needs x != 0");
        return {{"x", p("x")}, {"y", p("a") + p("b") - p("w")}, {"z", p("a") * p("b") / p("x")}, {"w", p("w")}};
    }
    throw std::invalid_argument("unknown closed form '" + id + "'");
}

inline Series theorem_rhs(const TheoremRhs& spec)
{
    const auto& id = spec.id;
    std::size_t N = spec.order;
    auto p = [&](std::string_view n) { return detail::param(spec, n); };
    auto one = Series::constant(1, N);

    if (id == "gessel") {
        // sqrt(q) / (sqrt(q) cosh(sqrt(q) t) - sinh(sqrt(q) t)),  q = 1 - x
        auto [even, odd] = trig_sqrt(1 - p("x"), N);
        return one / (even - odd);
    }
    if (id == "barry-basset") {
        // cos(sqrt3 t/2 + pi/6) = (sqrt3/2)(cos(sqrt3 t/2) - sin(sqrt3 t/2)/sqrt3)
        auto [even, odd] = trig_sqrt(Rational(-3, 4), N);
        return ps_exp_poly(Rational(1, 2), 0, N) / (even - odd * Rational(1, 2));
    }
    if (id == "elizalde-noy") {
        // y = a + 1/a - 1, sqrt((y-1)(y+3)) = |a - 1/a|
        Rational a = p("a");
        if (a == 0 || a == 1 || a == -1)
            throw DegenerateSample("elizalde-noy needs a not in {0, 1, -1}");
        Rational y = a + 1 / a - 1, s = a - 1 / a;
        Series num = ps_exp_poly((1 - y + s) / 2, 0, N) * (2 * s);
        Series den = Series::constant(1 + y + s, N) - ps_exp_poly(s, 0, N) * Rational(1 + y - s);
        return num / den;
    }
    if (id == "fu") {
        // roots a, b of r^2 - (y+w) r + xz
        Rational a = p("a"), b = p("b"), w = p("w"), z = p("z");
        if (a == b)
            throw DegenerateSample("fu needs a != b");
        Series num = ps_exp_poly(w - b, 0, N) * Rational(z * (a - b));
        Series den = Series::constant(a, N) - ps_exp_poly(a - b, 0, N) * b;
        return num / den;
    }
    if (id == "carlitz-scoville") {
        // roots a, b with a + b = y + w, ab = xz
        Rational a = p("a"), b = p("b");
        if (a == b)
            throw DegenerateSample("carlitz-scoville needs a != b");
        Series ea = ps_exp_poly(a, 0, N), eb = ps_exp_poly(b, 0, N);
        return (eb - ea) / (eb * a * Rational(-1) + ea * b);
    }
    if (id == "thm-L") {
        // after s = 1 + u the prefactor e^{(x-1)/2} cancels
        Rational x = p("x");
        Series e = ps_exp_poly(1 - x, (1 - x) / 2, N);
        return e / (one - ps_integrate(e) * x);
    }
    if (id == "thm-T") {
        Rational x = p("x"), y = p("y");
        if (x == y)
            throw DegenerateSample("thm-T needs x != y");
        Rational A = (1 - y) / (2 * (x - y)), c = (x - y) / 2;
        Series den = hyp1f1_ct2(A, Rational(1, 2), c, N) -
                     Series::monomial(1, N) * hyp1f1_ct2(A + Rational(1, 2), Rational(3, 2), c, N);
        return ps_exp_poly(0, c, N) / den;
    }
    if (id == "tbar")
        return detail::tbar_series(p("x"), N);
    if (id == "ttilde")
        return detail::ttilde_series(p("y"), N);
    if (id == "kitaev-132")
        return detail::tbar_series(0, N);
    if (id == "kitaev-231")
        return detail::ttilde_series(0, N);
    if (id == "thm-TA") {
        Rational x = p("x"), y = p("y");
        if (x == y)
            throw DegenerateSample("thm-TA needs x != y");
        Rational d = x - y;
        Series num = ps_exp_poly(0, d / 2, N) *
                     (one + Series::monomial(1, N) * hyp1f1_ct2(x / (2 * d), Rational(3, 2), -d / 2, N));
        return num / hyp1f1_ct2(-y / (2 * d), Rational(1, 2), d / 2, N);
    }
    if (id == "involutions")
        return ps_exp_poly(1, Rational(1, 2), N);
    throw std::invalid_argument("unknown closed form '" + id + "'");
}

} // namespace permgram
