#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "permgram/core/laurent_poly.hpp"
#include "permgram/core/rational.hpp"

namespace permgram {

// Truncated power series sum_{n <= order} c_n t^n. Coefficients are exact:
// Rational for sampled closed forms, LaurentPoly for symbolic identities.
// Binary operations truncate to the smaller order.
template <typename C>
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1) {}
    explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}
    explicit TruncatedSeries(std::vector<C> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty())
            c_.emplace_back();
    }

    static TruncatedSeries constant(const C& c, std::size_t order)
    {
        TruncatedSeries s(order);
        s.c_[0] = c;
        return s;
    }

    // t^k
    static TruncatedSeries monomial(std::size_t k, std::size_t order)
    {
        TruncatedSeries s(order);
        if (k <= order)
            s.c_[k] = C(Rational(1));
        return s;
    }

    // sum d_n t^n / n!
    static TruncatedSeries from_egf(const std::vector<C>& d)
    {
        std::vector<C> c;
        c.reserve(d.size());
        for (std::size_t n = 0; n < d.size(); ++n)
            c.push_back(d[n] * Rational(Integer(1), factorial(n)));
        return TruncatedSeries(std::move(c));
    }

    std::size_t order() const noexcept { return c_.size() - 1; }
    const C& operator[](std::size_t n) const { return c_.at(n); }
    C& operator[](std::size_t n) { return c_.at(n); }
    const std::vector<C>& coeffs() const noexcept { return c_; }

    // n! c_n
    C egf_coeff(std::size_t n) const { return c_.at(n) * Rational(factorial(n)); }

    TruncatedSeries truncated(std::size_t order) const
    {
        std::size_t m = std::min(order, this->order());
        return TruncatedSeries(std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(m + 1)));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        std::size_t m = std::min(a.order(), b.order());
        TruncatedSeries r(m);
        for (std::size_t n = 0; n <= m; ++n)
            r.c_[n] = a.c_[n] + b.c_[n];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        std::size_t m = std::min(a.order(), b.order());
        TruncatedSeries r(m);
        for (std::size_t n = 0; n <= m; ++n)
            r.c_[n] = a.c_[n] - b.c_[n];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a) { return a * C(Rational(-1)); }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        std::size_t m = std::min(a.order(), b.order());
        TruncatedSeries r(m);
        for (std::size_t i = 0; i <= m; ++i) {
            if (is_zero_coeff(a.c_[i]))
                continue;
            for (std::size_t j = 0; i + j <= m; ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend TruncatedSeries operator*(TruncatedSeries a, const C& s)
    {
        for (auto& c : a.c_)
            c = c * s;
        return a;
    }

    friend TruncatedSeries operator*(const C& s, TruncatedSeries a) { return std::move(a) * s; }

    TruncatedSeries derivative() const
    {
        if (order() == 0)
            return TruncatedSeries(0);
        TruncatedSeries r(order() - 1);
        for (std::size_t n = 1; n <= order(); ++n)
            r.c_[n - 1] = c_[n] * Rational(static_cast<long>(n));
        return r;
    }

    // Antiderivative with zero constant term; known one order further.
    TruncatedSeries integral() const
    {
        TruncatedSeries r(order() + 1);
        for (std::size_t n = 0; n <= order(); ++n)
            r.c_[n + 1] = c_[n] * Rational(1, static_cast<long>(n + 1));
        return r;
    }

    // 1 / a, for field coefficients with a nonzero constant term.
    TruncatedSeries inverse() const
        requires std::is_same_v<C, Rational>
    {
        if (c_[0] == 0)
            throw DomainError("series with zero constant term is not invertible");
        TruncatedSeries r(order());
        Rational inv0 = 1 / c_[0];
        r.c_[0] = inv0;
        for (std::size_t n = 1; n <= order(); ++n) {
            Rational acc(0);
            for (std::size_t k = 1; k <= n; ++k)
                acc += c_[k] * r.c_[n - k];
            r.c_[n] = -acc * inv0;
        }
        return r;
    }

    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b)
        requires std::is_same_v<C, Rational>
    {
        return a * b.inverse();
    }

    // Coefficient-wise up to the shared order.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        std::size_t m = std::min(a.order(), b.order());
        for (std::size_t n = 0; n <= m; ++n)
            if (!(a.c_[n] == b.c_[n]))
                return false;
        return true;
    }

private:
    static bool is_zero_coeff(const C& c)
    {
        if constexpr (std::is_same_v<C, Rational>)
            return c == 0;
        else
            return c.is_zero();
    }

    std::vector<C> c_;
};

using Series = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<LaurentPoly>;

inline std::string render_coeff(const Rational& c) { return c.get_str(); }
inline std::string render_coeff(const LaurentPoly& c) { return render(c); }

// One line "n: c" per coefficient of t^n.
template <typename C>
std::string render(const TruncatedSeries<C>& s)
{
    std::string out;
    for (std::size_t n = 0; n <= s.order(); ++n)
        out += std::to_string(n) + ": " + render_coeff(s[n]) + "\n";
    return out;
}

inline Series ps_mul(const Series& a, const Series& b) { return a * b; }
inline Series ps_div(const Series& a, const Series& b) { return a / b; }
inline Series ps_integrate(const Series& a) { return a.integral().truncated(a.order()); }

// exp(c1 t + c2 t^2) from f' = (c1 + 2 c2 t) f.
inline Series ps_exp_poly(const Rational& c1, const Rational& c2, std::size_t order)
{
    Series f(order);
    f[0] = 1;
    for (std::size_t n = 0; n + 1 <= order; ++n) {
        Rational next = c1 * f[n];
        if (n >= 1)
            next += 2 * c2 * f[n - 1];
        f[n + 1] = next / Rational(static_cast<long>(n + 1));
    }
    return f;
}

// 1F1(a; b; c t^2): coefficient of t^(2n) is (a)_n c^n / ((b)_n n!).
inline Series hyp1f1_ct2(const Rational& a, const Rational& b, const Rational& c, std::size_t order)
{
    Series f(order);
    Rational term(1);
    for (std::size_t n = 0; 2 * n <= order; ++n) {
        f[2 * n] = term;
        Rational bn = b + Rational(static_cast<long>(n));
        if (2 * (n + 1) > order)
            break;
        if (bn == 0)
            throw DomainError("Pochhammer (b)_n vanishes within the truncation");
        term *= (a + Rational(static_cast<long>(n))) * c / (bn * Rational(static_cast<long>(n + 1)));
    }
    return f;
}

// even = sum q^n t^(2n)/(2n)!, odd = sum q^n t^(2n+1)/(2n+1)!
// i.e. cosh(sqrt(q) t) and sinh(sqrt(q) t)/sqrt(q), with exact coefficients.
inline std::pair<Series, Series> trig_sqrt(const Rational& q, std::size_t order)
{
    Series even(order), odd(order);
    Rational qn(1);
    for (std::size_t n = 0; 2 * n <= order; ++n) {
        even[2 * n] = qn / Rational(factorial(2 * n));
        if (2 * n + 1 <= order)
            odd[2 * n + 1] = qn / Rational(factorial(2 * n + 1));
        qn *= q;
    }
    return {even, odd};
}

} // namespace permgram
