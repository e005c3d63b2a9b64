#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "permgram/special/main_theorems.hpp"
#include "permgram/verify/checks_sampled.hpp"

namespace permgram::checks {

// Sampling box for the main theorems: variables k/64 in [1/2, 2],
// t = k/100 with |t| <= 0.3, and |xv - zu| >= 1/4.
struct MainSample {
    Point exact;
    RealPoint real;
    Rational t;
};

inline std::vector<MainSample> main_samples(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> var(32, 128), tk(-30, 30);
    std::vector<MainSample> out;
    while (static_cast<int>(out.size()) < count) {
        MainSample s;
        for (const char* n : {"x", "y", "z", "w", "u", "v"}) {
            Rational v = make_rational(var(rng), 64);
            s.exact[n] = v;
            s.real[n] = v.get_d();
        }
        s.t = make_rational(tk(rng), 100);
        Rational d2 = s.exact["x"] * s.exact["v"] - s.exact["z"] * s.exact["u"];
        if (abs(d2) < Rational(1, 4))
            continue;
        out.push_back(std::move(s));
    }
    return out;
}

inline double truncated_gen(const std::vector<LaurentPoly>& d, const Point& pt, const Rational& t)
{
    Rational sum(0), tn(1);
    for (std::size_t n = 0; n < d.size(); ++n) {
        sum += evaluate(d[n], pt) * tn;
        tn *= t / Rational(static_cast<long>(n + 1));
    }
    return sum.get_d();
}

inline void main_numeric(const ResolvedSpec& s, Report& r, MainTheorem which)
{
    auto G = load_builtin("G");
    const std::size_t N = s.order;
    auto dz = gen_coeffs(*G, G->variable("z"), N + 1);
    auto dw = gen_coeffs(*G, G->variable("w"), N);
    EvalContext ctx;
    double imag_tol = s.tol / 100;
    r.note("sampling box", "x,y,z,w,u,v = k/64 in [1/2,2], t = k/100 in [-0.3,0.3], |xv-zu| >= 1/4");
    r.note("imaginary tolerance", describe(imag_tol));
    r.note("exact truncation", "N=" + std::to_string(N));

    for (const auto& smp : main_samples(s.seed, s.samples)) {
        double t = smp.t.get_d();
        std::string where = describe(smp.exact) + ", t=" + smp.t.get_str();
        NumericValue closed = theorem_rhs_num(which, smp.real, t, ctx);
        if (which == MainTheorem::GenP) {
            double exact = truncated_gen({dz.begin(), dz.begin() + static_cast<std::ptrdiff_t>(N + 1)}, smp.exact, smp.t);
            r.expect_close(where, exact, closed.value, s.tol, closed.imag, imag_tol);
        } else {
            double exact = truncated_gen(dw, smp.exact, smp.t);
            r.expect_close(where, exact, closed.value, s.tol, closed.imag, imag_tol);
            // Gen(w) = Gen'(z)/Gen(z) on the exact side
            std::vector<LaurentPoly> shifted(dz.begin() + 1, dz.end());
            double logderiv = truncated_gen(shifted, smp.exact, smp.t) /
                              truncated_gen({dz.begin(), dz.begin() + static_cast<std::ptrdiff_t>(N + 1)}, smp.exact, smp.t);
            r.expect_close(where + ", d/dt log GenP", logderiv, closed.value, s.tol, closed.imag, imag_tol);
        }
    }
    // at t = 0 the series is its seed
    RealPoint base{{"x", 2}, {"y", 1}, {"z", 0.75}, {"w", 1.5}, {"u", 1}, {"v", 1}};
    NumericValue at0 = theorem_rhs_num(which, base, 0.0, ctx);
    r.expect_close("t=0 at " + std::string(which == MainTheorem::GenP ? "seed z" : "seed w"),
                   which == MainTheorem::GenP ? base["z"] : base["w"], at0.value, s.tol, at0.imag, imag_tol);
}

inline void gen_p_num(const ResolvedSpec& s, Report& r) { main_numeric(s, r, MainTheorem::GenP); }
inline void gen_q_num(const ResolvedSpec& s, Report& r) { main_numeric(s, r, MainTheorem::GenQ); }

inline void special_functions(const ResolvedSpec&, Report& r)
{
    const double pi = std::numbers::pi;
    const double tight = 1e-12;
    r.note("closed-form tolerance", describe(tight));
    r.expect_close("Gamma(1)", 1.0, gamma_fn(1.0), tight);
    r.expect_close("Gamma(1/2)", std::sqrt(pi), gamma_fn(0.5), tight);
    r.expect_close("1/Gamma(0)", 0.0, rgamma(0.0), 0.0);
    r.expect_close("1F1(1;1;0.7)", std::exp(0.7), hyp1f1_num(1.0, 1.0, 0.7), tight);
    r.expect_close("1F1(1;3/2;1/4) vs erf", std::sqrt(pi) / (2 * 0.5) * std::exp(0.25) * erf_num(0.5),
                   hyp1f1_num(1.0, 1.5, 0.25), tight);
    r.expect_close("D_0(1.3)", std::exp(-1.3 * 1.3 / 4), pcf_d(0.0, 1.3), tight);
    r.expect_close("D_1(0.7)", 0.7 * std::exp(-0.7 * 0.7 / 4), pcf_d(1.0, 0.7), tight);
    r.expect_close("D_-1(0)", std::sqrt(pi / 2), pcf_d(-1.0, 0.0), tight);
    for (double z : {-1.0, 0.4, 1.7}) {
        double expected = std::sqrt(pi / 2) * std::exp(z * z / 4) * (1 - erf_num(z / std::numbers::sqrt2));
        r.expect_close("D_-1(" + describe(z) + ") vs erf", expected, pcf_d(-1.0, z), tight);
    }

    // recurrences, derivatives from the differentiated 1F1 series
    r.note("recurrence tolerance", "1e-10");
    for (int ai = -3; ai <= 3; ++ai) {
        double a = ai * 0.5;
        for (int zi = -4; zi <= 4; ++zi) {
            double z = zi * 0.5;
            auto jet = pcf_jet({a, {z, 0}});
            double d = jet.f.real(), d1 = jet.d1.real();
            std::string at = "a=" + describe(a) + ", z=" + describe(z);
            r.expect_close("recD1 " + at, z / 2 * d - pcf_d(a + 1, z), d1, 1e-10);
            r.expect_close("recD2 " + at, a * pcf_d(a - 1, z) - z / 2 * d, d1, 1e-10);
            r.expect_close("Weber " + at, (z * z / 4 - a - 0.5) * d, jet.d2.real(), 1e-10);
        }
    }

    // y(z) = D_a(rz + s) with the scalings of the general parabolic cylinder equation
    // y'' = (A z^2 + B z + C) y
    for (auto [A, B, Cc] : {std::array<double, 3>{0.5, 0.3, -0.2}, {2.0, -1.0, 0.5}, {1.0, 0.0, 1.0}}) {
        double a = (B * B - 4 * A * Cc - 4 * std::pow(A, 1.5)) / (8 * std::pow(A, 1.5));
        double rr = std::numbers::sqrt2 * std::pow(A, 0.25), ss = B / (std::numbers::sqrt2 * std::pow(A, 0.75));
        for (double z : {-0.8, 0.1, 0.9}) {
            auto jet = pcf_jet({a, {rr * z + ss, 0}});
            double y = jet.f.real(), y2 = rr * rr * jet.d2.real();
            std::string at = "A=" + describe(A) + ", B=" + describe(B) + ", C=" + describe(Cc) + ", z=" + describe(z);
            double arg = rr * z + ss;
            r.expect_close("second derivative " + at, rr * rr / 4 * (arg * arg - 4 * a - 2) * y, y2, 1e-8);
            r.expect_close("general equation " + at, (A * z * z + B * z + Cc) * y, y2, 1e-8);
        }
    }

    // Kummer and the contiguous relation
    for (auto [a, b, z] : {std::array<double, 3>{0.3, 1.7, 1.2}, {-1.4, 0.6, -2.0}, {2.5, 3.25, 0.8}}) {
        std::string at = "a=" + describe(a) + ", b=" + describe(b) + ", z=" + describe(z);
        r.expect_close("Kummer " + at, hyp1f1_num(a, b, z), std::exp(z) * hyp1f1_num(b - a, b, -z), 1e-10);
        r.expect_close("contiguous " + at, (1 + a - b) * hyp1f1_num(a, b, z),
                       a * hyp1f1_num(a + 1, b, z) + (1 - b) * hyp1f1_num(a, b - 1, z), 1e-10);
    }
}

inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int den)
{
    std::uniform_int_distribution<int> d(lo, hi);
    return make_rational(d(rng), den);
}

// Series-level identities for 1F1 and the exp/integral builders.
inline void kummer_series(const ResolvedSpec& s, Report& r)
{
    std::mt19937_64 rng(s.seed);
    const std::size_t N = s.order;
    for (int trial = 0; trial < s.samples; ++trial) {
        Rational a = random_rational(rng, -20, 20, 7);
        // b - 1 stays off the nonpositive integers: b = 1 + k/7, k not a multiple of 7
        Rational b;
        do {
            b = 1 + random_rational(rng, 1, 30, 7);
        } while (b.get_den() == 1);
        Rational c = random_rational(rng, -12, 12, 5);
        std::string at = "a=" + a.get_str() + ", b=" + b.get_str() + ", c=" + c.get_str();
        Series lhs = hyp1f1_ct2(a, b, c, N);
        r.expect_true("Kummer " + at, lhs == ps_exp_poly(0, c, N) * hyp1f1_ct2(b - a, b, -c, N));
        Series contiguous = hyp1f1_ct2(a + 1, b, c, N) * a + hyp1f1_ct2(a, b - 1, c, N) * Rational(1 - b);
        r.expect_true("contiguous " + at, lhs * Rational(1 + a - b) == contiguous);
        Series e = ps_exp_poly(a, c, N);
        r.expect_true("exp inverse " + at, e * ps_exp_poly(-a, -c, N) == Series::constant(1, N));
        Series q = hyp1f1_ct2(a, b, c, N) + Series::monomial(1, N);
        r.expect_true("div of mul " + at, (q * e) / e == q);
    }
    // t 1F1(1; 3/2; -t^2) = exp(-t^2) int_0^t exp(s^2) ds
    Series lhs = Series::monomial(1, N) * hyp1f1_ct2(1, Rational(3, 2), -1, N);
    Series rhs = ps_exp_poly(0, -1, N) * ps_integrate(ps_exp_poly(0, 1, N));
    r.expect_true("t 1F1(1;3/2;-t^2) vs integral", lhs == rhs);
}

} // namespace permgram::checks
