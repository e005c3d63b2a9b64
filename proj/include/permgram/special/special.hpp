#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "permgram/core/errors.hpp"

namespace permgram {

struct EvalContext {
    double tol = 1e-14;     // absolute tolerance of series summation
    int cutoff = 2000;      // maximum number of 1F1 terms
    double t_radius = 0.3;  // largest |t| for truncated-series comparisons
};

class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_nonpositive_integer(double x) { return x <= 0 && x == std::floor(x); }

inline double gamma_fn(double x)
{
    if (is_nonpositive_integer(x))
        throw DomainError("gamma pole at " + std::to_string(x));
    return std::tgamma(x);
}

// 1/Gamma(x), exactly 0 at the poles.
inline double rgamma(double x)
{
    if (is_nonpositive_integer(x))
        return 0.0;
    return 1.0 / std::tgamma(x);
}

inline double erf_num(double x) { return std::erf(x); }

// Value and first two z-derivatives, each summed term by term.
template <typename T>
struct Jet {
    T f{}, d1{}, d2{};
};

// 1F1(a; b; z) = sum (a)_n / (b)_n z^n / n! by direct summation.
template <typename T>
Jet<T> hyp1f1_jet(double a, double b, T z, const EvalContext& ctx = {})
{
    if (is_nonpositive_integer(b))
        throw DomainError("1F1 with b a nonpositive integer");
    Jet<T> out;
    // c = (a)_n / ((b)_n n!), zp = z^n; derivatives use n c z^(n-1), n(n-1) c z^(n-2)
    double c = 1.0;
    T zp_2 = T(0), zp_1 = T(0), zp = T(1);
    int quiet = 0;
    for (int n = 0; n < ctx.cutoff; ++n) {
        T t0 = c * zp, t1 = static_cast<double>(n) * c * zp_1,
          t2 = static_cast<double>(n) * static_cast<double>(n - 1) * c * zp_2;
        out.f += t0;
        out.d1 += t1;
        out.d2 += t2;
        if (c == 0.0)
            return out;
        double scale = std::max({1.0, std::abs(out.f), std::abs(out.d1), std::abs(out.d2)});
        double added = std::max({std::abs(t0), std::abs(t1), std::abs(t2)});
        // terms only shrink for good once n has passed |z| and |a|
        if (n > std::abs(z) + std::abs(a) && added < 0.1 * ctx.tol * scale) {
            if (++quiet >= 2)
                return out;
        } else {
            quiet = 0;
        }
        c *= (a + n) / ((b + n) * (n + 1));
        zp_2 = zp_1;
        zp_1 = zp;
        zp = zp * z;
    }
    throw NonConvergence("1F1 series did not converge within " + std::to_string(ctx.cutoff) + " terms");
}

inline double hyp1f1_num(double a, double b, double z, const EvalContext& ctx = {})
{
    return hyp1f1_jet(a, b, z, ctx).f;
}

inline std::complex<double> hyp1f1_num(double a, double b, std::complex<double> z, const EvalContext& ctx = {})
{
    return hyp1f1_jet(a, b, z, ctx).f;
}

struct PcfParams {
    double a = 0;
    std::complex<double> z{};
};

// D_a(z) = 2^(a/2) sqrt(pi) e^(-z^2/4) ( 1F1(-a/2; 1/2; z^2/2) / Gamma((1-a)/2)
//                                       - sqrt2 z 1F1((1-a)/2; 3/2; z^2/2) / Gamma(-a/2) )
// with z-derivatives from the term-wise differentiated 1F1 series.
inline Jet<std::complex<double>> pcf_jet(const PcfParams& p, const EvalContext& ctx = {})
{
    using C = std::complex<double>;
    double a = p.a;
    C z = p.z;
    double r1 = rgamma((1 - a) / 2), r2 = rgamma(-a / 2);
    if (r1 == 0.0 && r2 == 0.0)
        throw DomainError("both gamma factors of D_a at poles");
    C h = z * z / 2.0;
    Jet<C> m1, m2;
    if (r1 != 0.0)
        m1 = hyp1f1_jet(-a / 2, 0.5, h, ctx);
    if (r2 != 0.0)
        m2 = hyp1f1_jet((1 - a) / 2, 1.5, h, ctx);

    // A(z) = M1(z^2/2), B(z) = z M2(z^2/2)
    C A = m1.f, A1 = z * m1.d1, A2 = m1.d1 + z * z * m1.d2;
    C B = z * m2.f, B1 = m2.f + z * z * m2.d1, B2 = 3.0 * z * m2.d1 + z * z * z * m2.d2;
    double s2 = std::numbers::sqrt2;
    C g = r1 * A - s2 * r2 * B, g1 = r1 * A1 - s2 * r2 * B1, g2 = r1 * A2 - s2 * r2 * B2;

    C E = std::exp(-z * z / 4.0), E1 = -z / 2.0 * E, E2 = (z * z / 4.0 - 0.5) * E;
    double pref = std::pow(2.0, a / 2) * std::sqrt(std::numbers::pi);
    return {pref * E * g, pref * (E1 * g + E * g1), pref * (E2 * g + 2.0 * E1 * g1 + E * g2)};
}

inline std::complex<double> pcf_d(const PcfParams& p, const EvalContext& ctx = {}) { return pcf_jet(p, ctx).f; }

inline double pcf_d(double a, double z, const EvalContext& ctx = {})
{
    return pcf_d(PcfParams{a, {z, 0.0}}, ctx).real();
}

} // namespace permgram
