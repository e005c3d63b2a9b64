#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "permgram/grammar/builtin.hpp"
#include "permgram/perm/enumerate.hpp"

using namespace permgram;

namespace {

Permutation perm(std::string_view s) { return Permutation::parse(s); }

LaurentPoly gpoly(std::string_view s) { return parse_expression(s, g_variables()); }

std::vector<int> indices_with(const Permutation& p, Shape want)
{
    std::vector<int> out;
    for (int i = 1; i <= p.size(); ++i)
        if (shape(p.values(), i) == want)
            out.push_back(i);
    return out;
}

template <typename F>
void for_all(int n, F&& f)
{
    for_each_permutation(n, [&](std::span<const int> v) { f(Permutation(std::vector<int>(v.begin(), v.end()))); });
}

} // namespace

TEST(Stats, ExteriorPeaks)
{
    auto p = perm("534621");
    auto s = stats(p);
    EXPECT_EQ(exterior_shape(p.values(), 1), ExteriorShape::peak132);
    EXPECT_EQ(exterior_shape(p.values(), 4), ExteriorShape::peak231);
    EXPECT_EQ(s.ep1, 1);
    EXPECT_EQ(s.ep2, 1);
}

TEST(Stats, ProperDoubleDescents)
{
    auto p = perm("653421");
    EXPECT_EQ(stats(p).pdd, 2);
    EXPECT_EQ(exterior_shape(p.values(), 2), ExteriorShape::proper_double_descent);
    EXPECT_EQ(exterior_shape(p.values(), 5), ExteriorShape::proper_double_descent);
    // index 1 is never a proper double descent
    EXPECT_NE(exterior_shape(p.values(), 1), ExteriorShape::proper_double_descent);
}

TEST(Stats, PeaksValleysRunsWithBothBoundaries)
{
    auto p = perm("4356721");
    auto s = stats(p);
    EXPECT_EQ(s.peaks(), 2);
    EXPECT_EQ(s.valleys, 1);
    EXPECT_EQ(s.dr, 2);
    EXPECT_EQ(s.dd, 2);
    auto peaks = indices_with(p, Shape::peak132), peaks231 = indices_with(p, Shape::peak231);
    peaks.insert(peaks.end(), peaks231.begin(), peaks231.end());
    std::sort(peaks.begin(), peaks.end());
    EXPECT_EQ(peaks, (std::vector<int>{1, 5}));
    EXPECT_EQ(indices_with(p, Shape::valley), (std::vector<int>{2}));
    EXPECT_EQ(indices_with(p, Shape::double_rise), (std::vector<int>{3, 4}));
    EXPECT_EQ(indices_with(p, Shape::double_descent), (std::vector<int>{6, 7}));
}

TEST(Stats, NonStrictPeakComparisonOnlyMattersForOne)
{
    // pi = 1: pi_0 = pi_2 = 0, a peak of pattern 132 under <=
    EXPECT_EQ(shape(perm("1").values(), 1), Shape::peak132);
    EXPECT_EQ(stats(perm("1")).p1, 1);
    EXPECT_EQ(stats(perm("1")).exterior_peaks(), 0);
    for (int n = 2; n <= 6; ++n)
        for_all(n, [](const Permutation& p) {
            auto v = p.values();
            for (int i = 1; i <= p.size(); ++i) {
                int prev = i == 1 ? 0 : v[static_cast<std::size_t>(i - 2)];
                int next = i == p.size() ? 0 : v[static_cast<std::size_t>(i)];
                ASSERT_NE(prev, next);
            }
        });
}

TEST(Stats, Invariants)
{
    for (int n = 1; n <= 8; ++n)
        for_all(n, [n](const Permutation& p) {
            auto s = stats(p);
            ASSERT_EQ(s.peaks(), s.valleys + 1) << p.to_string();
            ASSERT_LE(s.exterior_peaks(), n / 2) << p.to_string();
            ASSERT_LE(2 * s.exterior_peaks() + s.pdd, n) << p.to_string();
        });
}

TEST(Label, ExteriorScheme)
{
    auto lab = label(perm("534621"), LabelScheme::exterior);
    EXPECT_EQ(lab.labels, "xvwuzyz");
    EXPECT_EQ(lab.weight, gpoly("x*y*z^2*w*u*v"));

    auto empty = label(Permutation(), LabelScheme::exterior);
    EXPECT_EQ(empty.labels, "z");
    EXPECT_EQ(empty.weight, gpoly("z"));
}

TEST(Label, PeakSchemeOnTwoOne)
{
    auto p = perm("21");
    auto lab = label(p, LabelScheme::peak);
    auto s = stats(p);
    EXPECT_EQ(s.p1, 1);
    EXPECT_EQ(s.dd, 1);
    EXPECT_EQ(lab.labels, "xvy");
    EXPECT_EQ(lab.weight, weight_formula(s, LabelScheme::peak));
}

TEST(Label, TotalAndConsistentThroughEight)
{
    for (int n = 0; n <= 8; ++n)
        for_all(n, [n](const Permutation& p) {
            for (auto scheme : {LabelScheme::exterior, LabelScheme::peak}) {
                if (scheme == LabelScheme::peak && n == 0)
                    continue;
                Labeling lab = label(p, scheme);
                ASSERT_EQ(lab.labels.size(), static_cast<std::size_t>(n + 1));
                ASSERT_EQ(lab.labels.find('.'), std::string::npos);
                ASSERT_EQ(lab.weight, weight_formula(p, scheme)) << p.to_string();
            }
        });
}

TEST(ConsecutiveCount, Examples)
{
    EXPECT_EQ(consecutive_count(perm("123456"), perm("12")), 5u);
    EXPECT_EQ(consecutive_count(perm("321"), perm("321")), 1u);
    EXPECT_EQ(consecutive_count(perm("12"), perm("321")), 0u);
    EXPECT_THROW(consecutive_count(perm("12"), Permutation()), std::invalid_argument);
}

TEST(ConsecutiveCount, PatternsMatchExteriorStatistics)
{
    auto p231 = perm("231"), p321 = perm("321");
    for (int n = 0; n <= 7; ++n)
        for_all(n, [&](const Permutation& p) {
            auto s = stats(p);
            ASSERT_EQ(consecutive_count(p, p231) + consecutive_count(p, p321),
                      static_cast<std::size_t>(s.ep2 + s.pdd))
                << p.to_string();
        });
}

TEST(Insertion, Children)
{
    auto kids = insertion_children(Permutation());
    ASSERT_EQ(kids.size(), 1u);
    EXPECT_EQ(kids[0], perm("1"));
    auto k21 = insertion_children(perm("21"));
    EXPECT_EQ(k21, (std::vector<Permutation>{perm("321"), perm("231"), perm("213")}));
}

TEST(Insertion, MatchesDerivativeOfWeight)
{
    Grammar G = builtin_grammar("G");
    for (int n = 0; n <= 6; ++n)
        for_all(n, [&](const Permutation& p) {
            LaurentPoly sum(G.vars());
            for (const auto& c : insertion_children(p))
                sum += label(c, LabelScheme::exterior).weight;
            ASSERT_EQ(sum, G.derive(label(p, LabelScheme::exterior).weight)) << p.to_string();
        });
}

TEST(EnumeratePoly, SmallCases)
{
    EXPECT_EQ(enumerate_poly(0, Family::P), gpoly("z"));
    EXPECT_EQ(enumerate_poly(1, Family::P), gpoly("z*w"));
    EXPECT_EQ(enumerate_poly(4, Family::P),
              gpoly("6*x*z*w^2*v + 5*z^2*w^2*u + 5*x*y*z*w*v + y*z^2*w*u + x*y^2*z*v + 3*x^2*z*v^2"
                    " + 2*x*z^2*u*v + z*w^4"));
    EXPECT_THROW(enumerate_poly(0, Family::Q), std::invalid_argument);
    Bindings v_to_z{{"v", gpoly("z")}};
    for (int n = 1; n <= 7; ++n)
        EXPECT_EQ(substitute(enumerate_poly(n, Family::Q), v_to_z), enumerate_poly(n, Family::W)) << n;
}

TEST(EnumeratePoly, FivePermutationsCarryXYZWV)
{
    auto target = gpoly("x*y*z*w*v");
    std::set<std::string> found;
    for_all(4, [&](const Permutation& p) {
        if (label(p, LabelScheme::exterior).weight == target)
            found.insert(p.to_string());
    });
    EXPECT_EQ(found.size(), 5u);
    for (const char* listed : {"2431", "1432", "4213", "4312", "3214"})
        EXPECT_TRUE(found.count(listed)) << listed;
    EXPECT_EQ(enumerate_poly(4, Family::P).coeff(target.terms().begin()->first), Rational(5));
}

TEST(EnumeratePoly, ParallelMatchesSerial)
{
    for (Family f : {Family::P, Family::Q, Family::W})
        EXPECT_EQ(enumerate_poly(8, f, {9, 1}), enumerate_poly(8, f, {9, 4}));
    EXPECT_EQ(specialized_poly(8, Target::T, {9, 1}), specialized_poly(8, Target::T, {9, 3}));
}

TEST(EnumeratePoly, CapIsEnforced)
{
    EXPECT_THROW(enumerate_poly(10, Family::P), CapExceeded);
    EXPECT_THROW(specialized_poly(10, Target::L), CapExceeded);
    EXPECT_THROW(export_triangle(Target::L, 12, {11, 1}), CapExceeded);
}

TEST(SpecializedPoly, Examples)
{
    auto x = target_variables(Target::T);
    EXPECT_EQ(specialized_poly(2, Target::T), parse_expression("1 + x", x));
    EXPECT_EQ(specialized_poly(3, Target::L), parse_expression("4 + 2*x", make_variables({"x"})));
    EXPECT_THROW(specialized_poly(0, Target::F), std::invalid_argument);
    EXPECT_EQ(specialized_poly(0, Target::TA), parse_expression("1", x));
}

TEST(SpecializedPoly, LAtZeroCountsInvolutions)
{
    for (int n = 0; n <= 8; ++n) {
        std::size_t brute = 0;
        for_all(n, [&](const Permutation& p) { brute += is_involution(p); });
        EXPECT_EQ(evaluate(specialized_poly(n, Target::L), {{"x", Rational(0)}}), Rational(brute)) << n;
        EXPECT_EQ(count_involutions(n), Integer(static_cast<unsigned long>(brute)));
    }
}

TEST(Triangle, EulerianRows)
{
    Triangle t = export_triangle(Target::Eulerian, 4);
    auto I = [](std::initializer_list<int> v) {
        std::vector<Integer> out;
        for (int x : v)
            out.emplace_back(x);
        return out;
    };
    EXPECT_EQ(t, (Triangle{I({1}), I({1}), I({1, 1}), I({1, 4, 1}), I({1, 11, 11, 1})}));
    std::ostringstream csv;
    write_triangle_csv(csv, t, "Eulerian");
    EXPECT_EQ(csv.str(), "# Eulerian: row n, column k\n0,1\n1,1\n2,1,1\n3,1,4,1\n4,1,11,11,1\n");
}

TEST(Triangle, ColumnZeroOfL)
{
    Triangle t = export_triangle(Target::L, 5);
    std::vector<Integer> col;
    for (const auto& row : t)
        col.push_back(row.at(0));
    std::vector<Integer> brute;
    for (int n = 0; n <= 5; ++n) {
        std::size_t c = 0;
        for_all(n, [&](const Permutation& p) { c += is_involution(p); });
        brute.emplace_back(static_cast<unsigned long>(c));
    }
    EXPECT_EQ(col, brute);
}

TEST(Triangle, GesselRowsCountExteriorPeaks)
{
    Triangle t = export_triangle(Target::GesselT, 5);
    for (int n = 0; n <= 5; ++n) {
        std::vector<Integer> row;
        for_all(n, [&](const Permutation& p) {
            auto k = static_cast<std::size_t>(stats(p).exterior_peaks());
            if (row.size() <= k)
                row.resize(k + 1, Integer(0));
            row[k] += 1;
        });
        EXPECT_EQ(t[static_cast<std::size_t>(n)], row) << n;
    }
    EXPECT_THROW(export_triangle(Target::T, 3), std::invalid_argument);
}
