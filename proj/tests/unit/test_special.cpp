#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "permgram/grammar/builtin.hpp"
#include "permgram/special/main_theorems.hpp"

using namespace permgram;

namespace {

const double pi = std::numbers::pi;

} // namespace

TEST(Gamma, Values)
{
    EXPECT_NEAR(gamma_fn(1), 1, 1e-14);
    EXPECT_NEAR(gamma_fn(0.5), std::sqrt(pi), 1e-14);
    EXPECT_NEAR(gamma_fn(-0.5), -2 * std::sqrt(pi), 1e-13);
    EXPECT_NEAR(gamma_fn(11) / 3628800.0, 1, 1e-13);
    EXPECT_EQ(rgamma(0), 0.0);
    EXPECT_EQ(rgamma(-3), 0.0);
    EXPECT_THROW(gamma_fn(0), DomainError);
    EXPECT_THROW(gamma_fn(-2), DomainError);
}

TEST(Erf, Values)
{
    EXPECT_EQ(erf_num(0), 0.0);
    EXPECT_NEAR(erf_num(-0.9), -erf_num(0.9), 1e-16);
    EXPECT_NEAR(erf_num(1), 0.842700792949715, 1e-15);
}

TEST(Hyp1F1, Values)
{
    for (double z : {-3.0, -0.4, 0.0, 0.7, 5.0})
        EXPECT_NEAR(hyp1f1_num(1, 1, z), std::exp(z), 1e-12 * std::exp(std::abs(z)));
    EXPECT_EQ(hyp1f1_num(2.3, 0.7, 0), 1.0);
    double z = 0.5;
    EXPECT_NEAR(hyp1f1_num(1, 1.5, z * z), std::sqrt(pi) / (2 * z) * std::exp(z * z) * erf_num(z), 1e-14);
    EXPECT_THROW(hyp1f1_num(1, -1, 0.5), DomainError);
}

TEST(Hyp1F1, NonConvergenceIsReported)
{
    EvalContext tiny;
    tiny.cutoff = 5;
    EXPECT_THROW(hyp1f1_num(0.5, 1.5, 10.0, tiny), NonConvergence);
}

TEST(ParabolicCylinder, ClosedForms)
{
    EXPECT_NEAR(pcf_d(0, 1.3), std::exp(-1.3 * 1.3 / 4), 1e-12);
    EXPECT_NEAR(pcf_d(1, 0.7), 0.7 * std::exp(-0.7 * 0.7 / 4), 1e-12);
    EXPECT_NEAR(pcf_d(-1, 0), std::sqrt(pi / 2), 1e-12);
    // D_2(z) = (z^2 - 1) e^{-z^2/4}
    EXPECT_NEAR(pcf_d(2, 1.1), (1.21 - 1) * std::exp(-1.21 / 4), 1e-12);
}

TEST(ParabolicCylinder, ImaginaryArgumentSatisfiesWeber)
{
    // D_a'' = (z^2/4 - a - 1/2) D_a also at z = ix
    for (double a : {-1.3, 0.25, 0.9})
        for (double x : {-1.2, 0.3, 1.5}) {
            auto jet = pcf_jet({a, {0, x}});
            std::complex<double> z{0, x};
            auto residual = jet.d2 - (z * z / 4.0 - a - 0.5) * jet.f;
            EXPECT_LT(std::abs(residual), 1e-10) << "a=" << a << " x=" << x;
        }
}

TEST(ParabolicCylinder, Recurrences)
{
    for (double a = -1.5; a <= 1.5; a += 0.5)
        for (double z = -2; z <= 2; z += 0.5) {
            auto jet = pcf_jet({a, {z, 0}});
            double d1 = jet.d1.real();
            EXPECT_NEAR(d1, z / 2 * pcf_d(a, z) - pcf_d(a + 1, z), 1e-10) << a << ' ' << z;
            EXPECT_NEAR(d1, a * pcf_d(a - 1, z) - z / 2 * pcf_d(a, z), 1e-10) << a << ' ' << z;
        }
}

TEST(MainTheorems, SeedAtTimeZero)
{
    RealPoint pt{{"x", 2}, {"y", 1}, {"z", 0.75}, {"w", 1.5}, {"u", 1}, {"v", 1}};
    auto p = theorem_rhs_num(MainTheorem::GenP, pt, 0.0);
    auto q = theorem_rhs_num(MainTheorem::GenQ, pt, 0.0);
    EXPECT_NEAR(p.value, 0.75, 1e-12);
    EXPECT_NEAR(q.value, 1.5, 1e-12);
    EXPECT_LT(std::abs(p.imag), 1e-12);
}

TEST(MainTheorems, DegenerateAndOutOfRange)
{
    RealPoint ones{{"x", 1}, {"y", 1}, {"z", 1}, {"w", 1}, {"u", 1}, {"v", 1}};
    EXPECT_THROW(theorem_rhs_num(MainTheorem::GenP, ones, 0.0), DomainError);
    RealPoint pt{{"x", 2}, {"y", 1}, {"z", 0.75}, {"w", 1.5}, {"u", 1}, {"v", 1}};
    EXPECT_THROW(theorem_rhs_num(MainTheorem::GenP, pt, 0.9), DomainError);
    RealPoint missing{{"x", 2}};
    EXPECT_THROW(theorem_rhs_num(MainTheorem::GenQ, missing, 0.1), std::invalid_argument);
}

TEST(MainTheorems, AgreesWithTruncatedSeriesOnBothSignsOfXvMinusZu)
{
    auto G = std::make_shared<const Grammar>(builtin_grammar("G"));
    DerivationCache dz(G, G->variable("z")), dw(G, G->variable("w"));
    // xv > zu and xv < zu
    for (auto [x, z] : {std::pair{1.5, 0.5}, std::pair{0.5, 1.75}}) {
        Point exact{{"x", Rational(x)}, {"y", make_rational(3, 4)}, {"z", Rational(z)},
                    {"w", make_rational(5, 4)}, {"u", Rational(1)}, {"v", Rational(1)}};
        RealPoint real;
        for (const auto& [k, v] : exact)
            real[k] = v.get_d();
        for (double t : {-0.25, 0.1, 0.3}) {
            Rational tr(t), sum_p(0), sum_q(0), tn(1);
            for (std::size_t n = 0; n <= 25; ++n) {
                sum_p += evaluate(dz.at(n), exact) * tn;
                sum_q += evaluate(dw.at(n), exact) * tn;
                tn *= tr / Rational(static_cast<long>(n + 1));
            }
            auto p = theorem_rhs_num(MainTheorem::GenP, real, t);
            auto q = theorem_rhs_num(MainTheorem::GenQ, real, t);
            EXPECT_NEAR(p.value, sum_p.get_d(), 1e-8) << x << ' ' << z << ' ' << t;
            EXPECT_NEAR(q.value, sum_q.get_d(), 1e-8) << x << ' ' << z << ' ' << t;
            EXPECT_LT(std::abs(p.imag), 1e-10);
            EXPECT_LT(std::abs(q.imag), 1e-10);
        }
    }
}
