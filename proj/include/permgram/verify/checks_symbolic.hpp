#pragma once

#include <memory>
#include <string>

#include "permgram/grammar/builtin.hpp"
#include "permgram/perm/enumerate.hpp"
#include "permgram/series/series.hpp"
#include "permgram/verify/report.hpp"

namespace permgram::checks {

inline std::shared_ptr<const Grammar> load_builtin(std::string_view name)
{
    return std::make_shared<const Grammar>(builtin_grammar(name));
}

inline std::string at_n(std::size_t n) { return "n=" + std::to_string(n); }

inline void thm_P(const ResolvedSpec& s, Report& r)
{
    auto G = load_builtin("G");
    DerivationCache dz(G, G->variable("z"));
    for (int n = 0; n <= s.n_max; ++n)
        r.expect_equal(at_n(n), enumerate_poly(n, Family::P, s.enumeration), dz.at(n));
    if (s.n_max >= 4) {
        auto display = G->parse("6*x*z*w^2*v + 5*z^2*w^2*u + 5*x*y*z*w*v + y*z^2*w*u + x*y^2*z*v"
                                " + 3*x^2*z*v^2 + 2*x*z^2*u*v + z*w^4");
        r.expect_equal("n=4 against the printed expansion", display, dz.at(4));
    }
}

inline void thm_Q(const ResolvedSpec& s, Report& r)
{
    auto G = load_builtin("G");
    DerivationCache dw(G, G->variable("w"));
    for (int n = 1; n <= s.n_max; ++n)
        r.expect_equal(at_n(n), enumerate_poly(n, Family::Q, s.enumeration), dw.at(n));
}

inline void cor_W(const ResolvedSpec& s, Report& r)
{
    auto G = load_builtin("G");
    DerivationCache dw(G, G->variable("w"));
    Bindings v_to_z{{"v", G->variable("z")}};
    for (int n = 1; n <= s.n_max; ++n) {
        LaurentPoly W = enumerate_poly(n, Family::W, s.enumeration);
        r.expect_equal(at_n(n) + ", D^n(w) with v=z", W, substitute(dw.at(n), v_to_z));
        r.expect_equal(at_n(n) + ", Q_n with v=z", W,
                       substitute(enumerate_poly(n, Family::Q, s.enumeration), v_to_z));
    }
}

inline void insertion(const ResolvedSpec& s, Report& r)
{
    auto G = load_builtin("G");
    for (int n = 0; n <= s.n_max; ++n) {
        check_cap(n, s.enumeration);
        for_each_permutation(n, [&](std::span<const int> v) {
            Permutation p(std::vector<int>(v.begin(), v.end()));
            LaurentPoly children(G->vars());
            for (const auto& c : insertion_children(p))
                children += label(c, LabelScheme::exterior).weight;
            r.expect_equal("pi=" + p.to_string(), G->derive(label(p, LabelScheme::exterior).weight), children);
        });
    }
}

// P_{n+1} = sum_k C(n,k) P_k Q_{n-k} with Q_0 = w, both sides enumerated.
inline void convolution(const ResolvedSpec& s, Report& r)
{
    auto vars = g_variables();
    std::vector<LaurentPoly> P, Q;
    for (int k = 0; k <= s.n_max + 1; ++k) {
        P.push_back(enumerate_poly(k, Family::P, s.enumeration));
        Q.push_back(k == 0 ? LaurentPoly::variable(vars, "w") : enumerate_poly(k, Family::Q, s.enumeration));
    }
    for (int n = 1; n <= s.n_max; ++n) {
        LaurentPoly sum(vars);
        for (int k = 0; k <= n; ++k)
            sum += P[static_cast<std::size_t>(k)] * Q[static_cast<std::size_t>(n - k)] *
                   Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
        r.expect_equal(at_n(n), P[static_cast<std::size_t>(n + 1)], sum);
    }
}

// f = Gen(x^{-1/2} z^{-1/2}, t) satisfies f'' = (gamma/8 t^2 + beta/4 t + alpha/4) f
// through t^order, checked in the Laurent algebra.
inline void ode(const ResolvedSpec& s, Report& r)
{
    auto G = load_builtin("G");
    auto seed = G->parse("x^-1/2*z^-1/2");
    auto d = gen_coeffs(*G, seed, s.order + 2);
    auto alpha = G->parse("y + w").pow(2) - G->parse("2*x*v + 2*z*u");
    auto beta = G->parse("2*w - 2*y") * G->parse("x*v - z*u");
    auto gamma = G->parse("x*v - z*u").pow(2) * Rational(2);

    r.expect_equal("D^0", seed, d[0]);
    r.expect_equal("D^1", seed * G->parse("-1/2*y - 1/2*w"), d[1]);
    r.expect_equal("D^2", seed * alpha * Rational(1, 4), d[2]);

    PolySeries f = PolySeries::from_egf(d);
    PolySeries lhs = f.derivative().derivative();
    PolySeries coef(s.order);
    coef[0] = alpha * Rational(1, 4);
    if (s.order >= 1)
        coef[1] = beta * Rational(1, 4);
    if (s.order >= 2)
        coef[2] = gamma * Rational(1, 8);
    PolySeries rhs = coef * f;
    for (std::size_t m = 0; m <= s.order; ++m)
        r.expect_equal("coefficient of t^" + std::to_string(m), LaurentPoly(G->vars()), lhs[m] - rhs[m]);
}

// D^n(x^{-1} z) = x^{-1} z sum_k n!/(2^k (n-2k)! k!) (w-y)^{n-2k} (xv-zu)^k
inline void gen_xinv_z(const ResolvedSpec& s, Report& r)
{
    auto G = load_builtin("G");
    auto seed = G->parse("x^-1*z");
    auto d = gen_coeffs(*G, seed, s.order);
    auto wy = G->parse("w - y"), xz = G->parse("x*v - z*u");
    for (std::size_t n = 0; n <= s.order; ++n) {
        LaurentPoly sum(G->vars());
        for (std::size_t k = 0; 2 * k <= n; ++k) {
            Rational c(factorial(n), factorial(n - 2 * k) * factorial(k));
            c.canonicalize();
            c /= Rational(Integer(1) << static_cast<mp_bitcnt_t>(k));
            sum += wy.pow(static_cast<unsigned>(n - 2 * k)) * xz.pow(static_cast<unsigned>(k)) * c;
        }
        r.expect_equal(at_n(n), seed * sum, d[n]);
    }
    // the same coefficients as exp((w-y)t + (xv-zu)t^2/2) at sampled points
    for (const Point& pt : {Point{{"x", 2}, {"y", 3}, {"z", 5}, {"w", 7}, {"u", 11}, {"v", 13}},
                            Point{{"x", Rational(1, 2)}, {"y", -1}, {"z", Rational(3, 4)}, {"w", 2},
                                  {"u", Rational(-5, 3)}, {"v", 1}}}) {
        Rational base = evaluate(seed, pt);
        Series e = ps_exp_poly(evaluate(wy, pt), evaluate(xz, pt) / 2, s.order);
        for (std::size_t n = 0; n <= s.order; ++n)
            r.expect_equal(at_n(n) + " at " + describe(pt), e.egf_coeff(n), Rational(evaluate(d[n], pt) / base));
    }
}

// (Gen(z) Gen(x^{-1/2} z^{-1/2}))^2 = Gen(x^{-1} z)
inline void quotient(const ResolvedSpec& s, Report& r)
{
    auto G = load_builtin("G");
    auto gz = PolySeries::from_egf(gen_coeffs(*G, G->variable("z"), s.order));
    auto gh = PolySeries::from_egf(gen_coeffs(*G, G->parse("x^-1/2*z^-1/2"), s.order));
    auto gq = PolySeries::from_egf(gen_coeffs(*G, G->parse("x^-1*z"), s.order));
    PolySeries h = gz * gh;
    PolySeries sq = h * h;
    for (std::size_t n = 0; n <= s.order; ++n)
        r.expect_equal("coefficient of t^" + std::to_string(n), gq[n], sq[n]);
}

// Gen(z) Gen(w) = Gen'(z)
inline void gen_w(const ResolvedSpec& s, Report& r)
{
    auto G = load_builtin("G");
    auto gz = PolySeries::from_egf(gen_coeffs(*G, G->variable("z"), s.order + 1));
    auto gw = PolySeries::from_egf(gen_coeffs(*G, G->variable("w"), s.order));
    PolySeries lhs = gz.truncated(s.order) * gw;
    PolySeries rhs = gz.derivative();
    for (std::size_t n = 0; n <= s.order; ++n)
        r.expect_equal("coefficient of t^" + std::to_string(n), rhs[n], lhs[n]);
}

// Relabeling chain from G to a smaller grammar: each variable goes to a variable.
inline void chain_commutes(const Grammar& G, const Grammar& g, const Bindings& chain, std::string_view seed,
                           int n_max, Report& r)
{
    auto target = g.vars();
    for (std::uint32_t i = 0; i < G.vars()->size(); ++i) {
        const std::string& v = G.vars()->name(i);
        auto it = chain.find(v);
        std::string image = it == chain.end() ? v : render(it->second);
        r.expect_equal("rule for " + v + " after relabeling", g.rule(image), substitute(G.rule(i), chain, target));
    }
    DerivationCache big(std::make_shared<const Grammar>(G), G.parse(seed));
    auto small_seed = substitute(G.parse(seed), chain, target);
    DerivationCache small(std::make_shared<const Grammar>(g), small_seed);
    for (int n = 0; n <= std::min(n_max, 6); ++n)
        r.expect_equal(at_n(n) + ", relabeled D_G^n(" + std::string(seed) + ")", small.at(static_cast<std::size_t>(n)),
                       substitute(big.at(static_cast<std::size_t>(n)), chain, target));
}

inline Bindings relabel(const VarSetPtr& target, std::initializer_list<std::pair<const char*, const char*>> pairs)
{
    Bindings b;
    for (auto [from, to] : pairs)
        b.emplace(from, LaurentPoly::variable(target, to));
    return b;
}

// D^n(x)|_{y=1} = x A_n(x)
inline void grammar_g1(const ResolvedSpec& s, Report& r)
{
    auto G = load_builtin("G");
    auto g1 = load_builtin("g1");
    chain_commutes(*G, *g1, relabel(g1->vars(), {{"w", "x"}, {"u", "x"}, {"z", "y"}, {"v", "y"}}), "z", s.n_max, r);
    auto xonly = make_variables({"x"});
    DerivationCache dx(g1, g1->variable("x"));
    for (int n = 0; n <= s.n_max; ++n) {
        LaurentPoly lhs = substitute(dx.at(static_cast<std::size_t>(n)), {{"y", LaurentPoly(Rational(1))}}, xonly);
        LaurentPoly expected = LaurentPoly::variable(xonly, "x") * specialized_poly(n, Target::Eulerian, s.enumeration);
        r.expect_equal(at_n(n) + ", x A_n(x)", expected, lhs);
    }
}

// D^n(x) = sum_k T(n,k) x^{2k+1} y^{n-2k}, T(n,k) counting k exterior peaks
inline void grammar_g2(const ResolvedSpec& s, Report& r)
{
    auto G = load_builtin("G");
    auto g2 = load_builtin("g2");
    chain_commutes(*G, *g2, relabel(g2->vars(), {{"z", "x"}, {"u", "x"}, {"v", "x"}, {"w", "y"}}), "z", s.n_max, r);
    DerivationCache dx(g2, g2->variable("x"));
    for (int n = 0; n <= s.n_max; ++n) {
        LaurentPoly expected(g2->vars());
        LaurentPoly peaks = specialized_poly(n, Target::GesselT, s.enumeration);
        for (const auto& [m, c] : peaks.terms()) {
            std::int64_t k = m.exponent(0).integer();
            expected.add_term(Monomial::from_entries({{0, HalfInt(2 * k + 1)}, {1, HalfInt(n - 2 * k)}}), c);
        }
        r.expect_equal(at_n(n), expected, dx.at(static_cast<std::size_t>(n)));
    }
}

// D^n(z) = P_n(x,y,z,w) of Fu: x^ep y^pdd z^(ep+1) w^(n-2ep-pdd)
inline void grammar_g3(const ResolvedSpec& s, Report& r)
{
    auto G = load_builtin("G");
    auto g3 = load_builtin("g3");
    chain_commutes(*G, *g3, relabel(g3->vars(), {{"v", "z"}, {"u", "x"}}), "z", s.n_max, r);
    DerivationCache dz(g3, g3->variable("z"));
    for (int n = 0; n <= s.n_max; ++n)
        r.expect_equal(at_n(n), specialized_poly(n, Target::FuP, s.enumeration), dz.at(static_cast<std::size_t>(n)));
}

inline void stats_identities(const ResolvedSpec& s, Report& r)
{
    Permutation p231 = Permutation::parse("231"), p321 = Permutation::parse("321");
    for (int n = 0; n <= s.n_max; ++n) {
        check_cap(n, s.enumeration);
        for_each_permutation(n, [&](std::span<const int> v) {
            Permutation p(std::vector<int>(v.begin(), v.end()));
            StatVector st = stats(p);
            std::string where = "pi=" + p.to_string();
            auto consecutive = static_cast<long long>(consecutive_count(p, p231) + consecutive_count(p, p321));
            r.expect_equal(where + ", consecutive 231+321 vs ep2+pdd", static_cast<long long>(st.ep2 + st.pdd),
                           consecutive);
            if (n >= 1)
                r.expect_equal(where + ", peaks vs valleys+1", static_cast<long long>(st.valleys + 1),
                               static_cast<long long>(st.peaks()));
            r.expect_true(where + ", 2ep+pdd <= n", 2 * st.exterior_peaks() + st.pdd <= n);
            for (LabelScheme scheme : {LabelScheme::exterior, LabelScheme::peak}) {
                if (scheme == LabelScheme::peak && n == 0)
                    continue;
                std::string tag = scheme == LabelScheme::peak ? ", peak labeling" : ", exterior labeling";
                try {
                    Labeling l = label(p, scheme);
                    r.expect_equal(where + tag, weight_formula(st, scheme), l.weight);
                } catch (const std::logic_error& e) {
                    r.expect_true(where + tag, false, e.what());
                }
            }
        });
    }
}

} // namespace permgram::checks
