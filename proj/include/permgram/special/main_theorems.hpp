#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>

#include "permgram/special/special.hpp"

namespace permgram {

enum class MainTheorem { GenP, GenQ };

using RealPoint = std::map<std::string, double, std::less<>>;

// Closed form and the imaginary part left over from the complex intermediates.
struct NumericValue {
    double value = 0;
    double imag = 0;
};

// Closed forms of sum P_n t^n/n! and sum Q_n t^n/n! (Q_0 = w) through D_a
// at complex arguments: one of delta = sqrt(xv - zu), dhat = sqrt(zu - xv)
// is imaginary at every real point.
inline NumericValue theorem_rhs_num(MainTheorem which, const RealPoint& pt, double t, const EvalContext& ctx = {})
{
    using C = std::complex<double>;
    auto get = [&](const char* name) {
        auto it = pt.find(name);
        if (it == pt.end())
            throw std::invalid_argument(std::string("missing variable '") + name + "'");
        return it->second;
    };
    double x = get("x"), y = get("y"), z = get("z"), w = get("w"), u = get("u"), v = get("v");
    if (std::abs(t) > ctx.t_radius)
        throw DomainError("|t| outside the evaluation radius");
    double d2 = x * v - z * u;
    if (d2 == 0)
        throw DomainError("closed form needs xv != zu");
    C delta = std::sqrt(C(d2)), dhat = std::sqrt(C(-d2));
    double a1 = (z * u - y * w) / d2;   // (zu - yw)/delta^2
    double a2 = (x * v - y * w) / -d2;  // (xv - yw)/dhat^2
    double a3 = (x * v - y * w) / d2;   // (xv - yw)/delta^2
    double a4 = (z * u - y * w) / -d2;  // (zu - yw)/dhat^2
    auto D = [&](double a, C arg) { return pcf_d(PcfParams{a, arg}, ctx); };

    C zd = (w - y) / delta, zh = (y - w) / dhat;
    C p = D(a1, zd), q = D(a2, zh), r = D(a3, zd), s = D(a4, zh);
    C A = dhat * s - q * y, B = p * w - delta * r;
    C den = A * D(a1, delta * t + zd) + B * D(a2, dhat * t + zh);

    C result;
    if (which == MainTheorem::GenP) {
        C e = std::exp((w - y) / 2 * t + d2 / 4 * t * t);
        result = z * (p * q * (w - y) + (dhat * p * s - delta * q * r)) * e / den;
    } else {
        result = ((d2 * t + w - y) * B * D(a2, dhat * t + zh) + delta * A * D(a3, delta * t + zd) +
                  dhat * B * D(a4, dhat * t + zh)) /
                 den;
    }
    return {result.real(), result.imag()};
}

} // namespace permgram
