#pragma once

#include <atomic>
#include <chrono>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "permgram/verify/checks_numeric.hpp"
#include "permgram/verify/checks_sampled.hpp"
#include "permgram/verify/checks_symbolic.hpp"

namespace permgram {

// Unknown check id, mode not permitted, or an otherwise unusable request.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RegistryEntry {
    std::string_view id;
    std::string_view title;
    CheckMode mode;
    int n_max;           // default size bound, 0 if unused
    std::size_t order;   // default series order, 0 if unused
    double tol;          // default tolerance, 0 for exact checks
    int enumerated_past; // largest enumerated size is n_max + enumerated_past; -1 if none
    void (*run)(const ResolvedSpec&, Report&);
};

inline const std::vector<RegistryEntry>& registry()
{
    using M = CheckMode;
    namespace c = checks;
    static const std::vector<RegistryEntry> entries{
        {"thm-P", "D^n(z) equals the enumerated P_n", M::exact_symbolic, 8, 0, 0, 0, c::thm_P},
        {"thm-Q", "D^n(w) equals the enumerated Q_n", M::exact_symbolic, 8, 0, 0, 0, c::thm_Q},
        {"cor-W", "D^n(w) with v=z equals the enumerated W_n", M::exact_symbolic, 8, 0, 0, 0, c::cor_W},
        {"insertion", "insertion children sum to D of the exterior weight", M::exact_symbolic, 6, 0, 0, 0,
         c::insertion},
        {"conv", "P_{n+1} = sum C(n,k) P_k Q_{n-k}", M::exact_symbolic, 7, 0, 0, 1, c::convolution},
        {"stats-identities", "consecutive patterns, peak/valley balance, labelings", M::exact_symbolic, 7, 0, 0, 0,
         c::stats_identities},
        {"grammar-g1", "Dumont grammar gives x A_n(x)", M::exact_symbolic, 8, 0, 0, 0, c::grammar_g1},
        {"grammar-g2", "x -> xy, y -> x^2 gives the exterior-peak distribution", M::exact_symbolic, 8, 0, 0, 0,
         c::grammar_g2},
        {"grammar-g3", "g3 gives P_n(x,y,z,w) after relabeling", M::exact_symbolic, 8, 0, 0, 0, c::grammar_g3},
        {"ode", "Gen(x^-1/2 z^-1/2) solves the parabolic cylinder equation", M::exact_symbolic, 0, 14, 0, -1, c::ode},
        {"gen-xinv-z", "closed form of D^n(x^-1 z)", M::exact_symbolic, 0, 12, 0, -1, c::gen_xinv_z},
        {"quotient", "(Gen(z) Gen(x^-1/2 z^-1/2))^2 = Gen(x^-1 z)", M::exact_symbolic, 0, 12, 0, -1, c::quotient},
        {"gen-w", "Gen(z) Gen(w) = Gen'(z)", M::exact_symbolic, 0, 12, 0, -1, c::gen_w},
        {"gessel", "exterior peaks, Gessel", M::exact_sampled, 9, 0, 0, 0, c::gessel},
        {"elizalde-noy", "proper double descents U_n(y)", M::exact_sampled, 9, 0, 0, 0, c::elizalde_noy},
        {"barry-basset", "U(n,0) by the cosine formula", M::exact_sampled, 9, 0, 0, 0, c::barry_basset},
        {"fu", "P_n(x,y,z,w) through roots a, b", M::exact_sampled, 9, 0, 0, 0, c::fu},
        {"carlitz-scoville", "F_n(x,y,z,w) through roots a, b", M::exact_sampled, 9, 0, 0, 0, c::carlitz_scoville},
        {"thm-L", "L_n(x) by consecutive 231/321", M::exact_sampled, 9, 0, 0, 0, c::thm_L},
        {"thm-T", "T_n(x,y) through 1F1", M::exact_sampled, 9, 0, 0, 0, c::thm_T},
        {"tbar", "exterior peaks of pattern 132", M::exact_sampled, 9, 0, 0, 0, c::tbar},
        {"ttilde", "exterior peaks of pattern 231", M::exact_sampled, 9, 0, 0, 0, c::ttilde},
        {"kitaev-132", "no exterior peak of pattern 132", M::exact_sampled, 9, 0, 0, 0, c::kitaev_132},
        {"kitaev-231", "no exterior peak of pattern 231", M::exact_sampled, 9, 0, 0, 0, c::kitaev_231},
        {"thm-TA", "alternating permutations, both parities", M::exact_sampled, 9, 0, 0, 0, c::thm_TA},
        {"involutions", "L_n(0) counts involutions", M::exact_sampled, 8, 0, 0, 0, c::involutions},
        {"kummer-series", "Kummer and contiguous relations as series", M::exact_sampled, 0, 16, 0, -1,
         c::kummer_series},
        {"special-fn", "Gamma, erf, 1F1 and D_a identities", M::numeric, 0, 0, 1e-12, -1, c::special_functions},
        {"genP-num", "closed form of sum P_n t^n/n!", M::numeric, 0, 25, 1e-8, -1, c::gen_p_num},
        {"genQ-num", "closed form of sum Q_n t^n/n!", M::numeric, 0, 25, 1e-8, -1, c::gen_q_num},
    };
    return entries;
}

inline const RegistryEntry* find_check(std::string_view id)
{
    for (const auto& e : registry())
        if (e.id == id)
            return &e;
    return nullptr;
}

inline ResolvedSpec resolve(const CheckSpec& spec)
{
    const RegistryEntry* e = find_check(spec.id);
    if (!e)
        throw UsageError("unknown check id '" + spec.id + "'");
    if (spec.mode && *spec.mode != e->mode)
        throw UsageError("check '" + spec.id + "' runs in mode " + std::string(to_string(e->mode)) + ", not " +
                         std::string(to_string(*spec.mode)));
    ResolvedSpec r;
    r.id = spec.id;
    r.mode = e->mode;
    r.n_max = spec.n_max.value_or(e->n_max);
    r.order = spec.order.value_or(e->order);
    r.tol = spec.tol.value_or(e->tol);
    r.enumeration = {spec.cap, spec.jobs};
    r.seed = spec.seed;
    r.samples = spec.samples;
    if (r.n_max < 0)
        throw UsageError("n_max must be nonnegative");
    if (e->enumerated_past >= 0 && r.n_max + e->enumerated_past > spec.cap)
        throw CapExceeded("check '" + spec.id + "' would enumerate S_" + std::to_string(r.n_max + e->enumerated_past) +
                          " past the cap " + std::to_string(spec.cap));
    if (r.mode == CheckMode::numeric && r.tol <= 0)
        throw UsageError("tolerance must be positive");
    if (spec.samples < 1)
        throw UsageError("need at least one sample");
    return r;
}

// Usage problems throw; failures inside the check become a failing Report.
inline Report run_check(const CheckSpec& spec, bool timings = false)
{
    Report r;
    r.spec = resolve(spec);
    const RegistryEntry* e = find_check(spec.id);
    r.title = std::string(e->title);
    r.note("grammar G fingerprint", text_fingerprint(builtin_text::G));
    r.note("enumeration cap", std::to_string(r.spec.enumeration.cap));
    auto start = std::chrono::steady_clock::now();
    try {
        e->run(r.spec, r);
    } catch (const std::exception& ex) {
        r.passed = false;
        r.error = ex.what();
    }
    if (r.comparisons == 0 && r.error.empty()) {
        r.passed = false;
        r.error = "no comparisons were made";
    }
    if (timings)
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// Every registry entry with the same overrides, `jobs` checks at a time;
// reports come back in registry order.
inline std::vector<Report> run_all(const CheckSpec& overrides, unsigned jobs, bool timings = false)
{
    const auto& entries = registry();
    std::vector<CheckSpec> specs;
    for (const auto& e : entries) {
        CheckSpec s = overrides;
        s.id = std::string(e.id);
        s.mode.reset();
        if (jobs > 1)
            s.jobs = 1;
        resolve(s);
        specs.push_back(std::move(s));
    }
    std::vector<Report> reports(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < specs.size();)
            reports[i] = run_check(specs[i], timings);
    };
    unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(specs.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < n; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return reports;
}

inline nlohmann::ordered_json to_json(const std::vector<Report>& reports)
{
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    bool all = true;
    for (const auto& r : reports) {
        checks.push_back(to_json(r));
        all = all && r.passed;
    }
    return {{"verdict", all ? "pass" : "fail"}, {"checks", checks}};
}

} // namespace permgram
