#include <gtest/gtest.h>

#include <random>

#include "permgram/grammar/builtin.hpp"
#include "permgram/perm/enumerate.hpp"
#include "permgram/series/closed_forms.hpp"

using namespace permgram;

namespace {

Series S(std::initializer_list<Rational> c) { return Series(std::vector<Rational>(c)); }

Series exp_t(std::size_t order) { return ps_exp_poly(1, 0, order); }

Series geometric(std::size_t order) { return Series(std::vector<Rational>(order + 1, Rational(1))); }

} // namespace

TEST(Series, Products)
{
    EXPECT_EQ(ps_mul(S({1, 1, 0}), S({1, -1, 0})), S({1, 0, -1}));
    EXPECT_EQ(ps_mul(exp_t(10), ps_exp_poly(-1, 0, 10)), Series::constant(1, 10));
    // result carries the smaller order
    EXPECT_EQ(ps_mul(exp_t(3), exp_t(7)).order(), 3u);
}

TEST(Series, Division)
{
    EXPECT_EQ(ps_div(Series::constant(1, 8), S({1, -1, 0, 0, 0, 0, 0, 0, 0})), geometric(8));
    EXPECT_EQ(ps_div(S({1, 0, -1, 0}), S({1, -1, 0, 0})), S({1, 1, 0, 0}));
    EXPECT_EQ(ps_div(Series::constant(1, 9), exp_t(9)), ps_exp_poly(-1, 0, 9));
    EXPECT_THROW(ps_div(Series::constant(1, 3), Series::monomial(1, 3)), DomainError);
}

TEST(Series, DivisionUndoesMultiplication)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        Series a(7), b(7);
        for (std::size_t n = 0; n <= 7; ++n) {
            a[n] = make_rational(d(rng), 4);
            b[n] = make_rational(d(rng), 3);
        }
        if (b[0] == 0)
            b[0] = 1;
        EXPECT_EQ(ps_div(ps_mul(a, b), b), a);
    }
}

TEST(Series, ExpOfQuadratic)
{
    Series e = exp_t(6);
    for (std::size_t n = 0; n <= 6; ++n)
        EXPECT_EQ(e[n], Rational(Integer(1), factorial(n)));
    EXPECT_EQ(ps_exp_poly(0, 0, 5), Series::constant(1, 5));
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> d(-12, 12);
    for (int trial = 0; trial < 20; ++trial) {
        Rational c1 = make_rational(d(rng), 5), c2 = make_rational(d(rng), 7);
        EXPECT_EQ(ps_exp_poly(c1, c2, 12) * ps_exp_poly(-c1, -c2, 12), Series::constant(1, 12));
        // exp(c1 t) exp(c2 t^2) assembled independently
        Series sq(12);
        for (std::size_t k = 0; 2 * k <= 12; ++k)
            sq[2 * k] = pow(c2, static_cast<long>(k)) / Rational(factorial(k));
        EXPECT_EQ(ps_exp_poly(c1, c2, 12), ps_exp_poly(c1, 0, 12) * sq);
    }
}

TEST(Series, ExpOfQuadraticMatchesXInverseZ)
{
    auto G = std::make_shared<const Grammar>(builtin_grammar("G"));
    DerivationCache d(G, G->parse("x^-1*z"));
    Point pt{{"x", make_rational(3, 2)}, {"y", make_rational(-1, 3)}, {"z", Rational(2)},
             {"w", make_rational(5, 4)}, {"u", make_rational(-2, 5)}, {"v", Rational(1)}};
    Rational c1 = pt["w"] - pt["y"], c2 = (pt["x"] * pt["v"] - pt["z"] * pt["u"]) / 2;
    Rational seed = pt["z"] / pt["x"];
    Series e = ps_exp_poly(c1, c2, 10);
    for (std::size_t n = 0; n <= 10; ++n)
        EXPECT_EQ(evaluate(d.at(n), pt), seed * e.egf_coeff(n)) << n;
}

TEST(Series, Hyp1F1)
{
    EXPECT_EQ(hyp1f1_ct2(1, 1, make_rational(3, 7), 12), ps_exp_poly(0, make_rational(3, 7), 12));
    EXPECT_EQ(hyp1f1_ct2(make_rational(5, 3), make_rational(1, 2), 0, 12), Series::constant(1, 12));
    EXPECT_THROW(hyp1f1_ct2(1, -2, 1, 12), DomainError);
    // within the truncation (b)_n stays nonzero
    EXPECT_NO_THROW(hyp1f1_ct2(1, -2, 1, 5));
    Series f = hyp1f1_ct2(make_rational(1, 3), make_rational(3, 2), 2, 7);
    for (std::size_t n = 1; n <= 7; n += 2)
        EXPECT_EQ(f[n], Rational(0));
    EXPECT_EQ(f[2], make_rational(1, 3) * 2 / make_rational(3, 2));
}

TEST(Series, Hyp1F1AgainstErfIntegral)
{
    // t 1F1(1; 3/2; -t^2) = exp(-t^2) int_0^t exp(s^2) ds
    const std::size_t N = 15;
    Series lhs = Series::monomial(1, N) * hyp1f1_ct2(1, make_rational(3, 2), -1, N);
    Series integrand(N);
    for (std::size_t k = 0; 2 * k <= N; ++k)
        integrand[2 * k] = Rational(Integer(1), factorial(k));
    EXPECT_EQ(lhs, ps_exp_poly(0, -1, N) * ps_integrate(integrand));
}

TEST(Series, KummerAndContiguousAtSeriesLevel)
{
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int trial = 0; trial < 20; ++trial) {
        Rational a = make_rational(d(rng), 7), c = make_rational(d(rng), 5);
        Rational b = make_rational(2 * std::abs(d(rng)) + 1, 2);
        EXPECT_EQ(hyp1f1_ct2(a, b, c, 14), ps_exp_poly(0, c, 14) * hyp1f1_ct2(b - a, b, -c, 14));
        EXPECT_EQ(hyp1f1_ct2(a, b, c, 14) * Rational(1 + a - b),
                  hyp1f1_ct2(a + 1, b, c, 14) * a + hyp1f1_ct2(a, b - 1, c, 14) * Rational(1 - b));
    }
}

TEST(Series, Integration)
{
    EXPECT_EQ(ps_integrate(Series::constant(1, 4)), Series::monomial(1, 4));
    Series g = ps_integrate(geometric(6));
    EXPECT_EQ(g[0], Rational(0));
    for (std::size_t n = 1; n <= 6; ++n)
        EXPECT_EQ(g[n], Rational(Integer(1), Integer(static_cast<unsigned long>(n))));
    EXPECT_EQ(g.order(), 6u);
    EXPECT_EQ(exp_t(8).derivative(), exp_t(7));
}

TEST(Series, TrigSqrt)
{
    auto [c1, s1] = trig_sqrt(1, 6);
    EXPECT_EQ(c1, S({1, 0, make_rational(1, 2), 0, make_rational(1, 24), 0, make_rational(1, 720)}));
    auto [c0, s0] = trig_sqrt(0, 4);
    EXPECT_EQ(c0, Series::constant(1, 4));
    EXPECT_EQ(s0, Series::monomial(1, 4));
    // cosh(t) + sinh(t) = exp(t)
    EXPECT_EQ(c1 + s1, exp_t(6));
    // cos^2 + (sin/sqrt(-q))^2 (-q) = 1 at q = -4/9
    auto [c, s] = trig_sqrt(make_rational(-4, 9), 10);
    EXPECT_EQ(c * c - s * s * make_rational(-4, 9), Series::constant(1, 10));
}

TEST(Series, Rendering)
{
    EXPECT_EQ(render(S({1, make_rational(-1, 2), 0})), "0: 1\n1: -1/2\n2: 0\n");
}

TEST(TheoremRhs, Involutions)
{
    Series e = theorem_rhs({"involutions", {}, 8});
    std::vector<int> expect{1, 1, 2, 4, 10, 26, 76, 232, 764};
    for (std::size_t n = 0; n <= 8; ++n)
        EXPECT_EQ(e.egf_coeff(n), Rational(expect[n])) << n;
}

TEST(TheoremRhs, TAtThreeFiveMatchesEnumeration)
{
    Series rhs = theorem_rhs({"thm-T", {{"x", Rational(3)}, {"y", Rational(5)}}, 9});
    for (int n = 0; n <= 9; ++n)
        EXPECT_EQ(rhs.egf_coeff(static_cast<std::size_t>(n)),
                  evaluate(specialized_poly(n, Target::T), {{"x", Rational(3)}, {"y", Rational(5)}}))
            << n;
}

TEST(TheoremRhs, BarryBassetMatchesEnumeration)
{
    Series rhs = theorem_rhs({"barry-basset", {}, 9});
    for (int n = 0; n <= 9; ++n)
        EXPECT_EQ(rhs.egf_coeff(static_cast<std::size_t>(n)),
                  evaluate(specialized_poly(n, Target::U), {{"y", Rational(0)}}))
            << n;
}

TEST(TheoremRhs, GesselMatchesEnumeration)
{
    for (Rational x : {Rational(-2), make_rational(1, 3), Rational(1), Rational(5)}) {
        Series rhs = theorem_rhs({"gessel", {{"x", x}}, 9});
        for (int n = 0; n <= 9; ++n)
            EXPECT_EQ(rhs.egf_coeff(static_cast<std::size_t>(n)),
                      evaluate(specialized_poly(n, Target::GesselT), {{"x", x}}))
                << "x=" << x.get_str() << " n=" << n;
    }
}

TEST(TheoremRhs, DegenerateSamples)
{
    EXPECT_THROW(theorem_rhs({"thm-T", {{"x", Rational(2)}, {"y", Rational(2)}}, 6}), DegenerateSample);
    EXPECT_THROW(theorem_rhs({"elizalde-noy", {{"a", Rational(1)}}, 6}), DegenerateSample);
    EXPECT_THROW(theorem_rhs({"fu", {{"a", Rational(2)}, {"b", Rational(2)}, {"w", Rational(0)}, {"z", Rational(1)}}, 6}),
                 DegenerateSample);
    EXPECT_THROW(theorem_rhs({"thm-T", {{"x", Rational(2)}}, 6}), std::invalid_argument);
    EXPECT_THROW(theorem_rhs({"no-such-form", {}, 6}), std::invalid_argument);
}

TEST(TheoremRhs, OraclePoints)
{
    Point p = oracle_point({"elizalde-noy", {{"a", Rational(3)}}, 5});
    EXPECT_EQ(p.at("y"), Rational(3) + make_rational(1, 3) - 1);
    Point f = oracle_point({"fu", {{"a", Rational(2)}, {"b", Rational(-1)}, {"w", Rational(1)}, {"z", Rational(4)}}, 5});
    EXPECT_EQ(f.at("y") + f.at("w"), Rational(1));
    EXPECT_EQ(f.at("x") * f.at("z"), Rational(-2));
}
