#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "permgram/core/laurent_poly.hpp"
#include "permgram/perm/enumerate.hpp"

namespace permgram {

enum class CheckMode { exact_symbolic, exact_sampled, numeric };

inline std::string_view to_string(CheckMode m)
{
    switch (m) {
    case CheckMode::exact_symbolic: return "exact-symbolic";
    case CheckMode::exact_sampled: return "exact-sampled";
    case CheckMode::numeric: return "numeric";
    }
    return "?";
}

inline std::optional<CheckMode> parse_mode(std::string_view s)
{
    for (CheckMode m : {CheckMode::exact_symbolic, CheckMode::exact_sampled, CheckMode::numeric})
        if (to_string(m) == s)
            return m;
    return std::nullopt;
}

// What the caller asked for; unset fields take the registry defaults.
struct CheckSpec {
    std::string id;
    std::optional<CheckMode> mode;
    std::optional<int> n_max;
    std::optional<std::size_t> order;
    std::optional<double> tol;
    int cap = default_enumeration_cap;
    unsigned jobs = 1;
    std::uint64_t seed = 20240229;
    int samples = 8;
};

// CheckSpec with the defaults filled in.
struct ResolvedSpec {
    std::string id;
    CheckMode mode;
    int n_max = 0;
    std::size_t order = 0;
    double tol = 0;
    EnumerationConfig enumeration;
    std::uint64_t seed = 0;
    int samples = 0;
};

struct Counterexample {
    std::string where;
    std::string expected;
    std::string actual;
};

struct Residual {
    std::string where;
    double abs_error = 0;
    double imag = 0;
};

inline std::string describe(const Rational& v) { return v.get_str(); }
inline std::string describe(const Integer& v) { return v.get_str(); }
inline std::string describe(const LaurentPoly& v) { return render(v); }
inline std::string describe(bool v) { return v ? "true" : "false"; }
inline std::string describe(long long v) { return std::to_string(v); }

inline std::string describe(double v)
{
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

inline std::string describe(const Point& p)
{
    std::string out = "{";
    for (const auto& [k, v] : p) {
        if (out.size() > 1)
            out += ", ";
        out += k + "=" + v.get_str();
    }
    return out + "}";
}

struct Report {
    ResolvedSpec spec;
    std::string title;
    bool passed = true;
    std::size_t comparisons = 0;
    std::optional<Counterexample> counterexample;
    std::vector<Residual> residuals;
    std::vector<std::pair<std::string, std::string>> notes;
    std::string error;
    std::optional<double> seconds;

    void note(std::string key, std::string value) { notes.emplace_back(std::move(key), std::move(value)); }

    void fail(std::string where, std::string expected, std::string actual)
    {
        if (passed)
            counterexample = Counterexample{std::move(where), std::move(expected), std::move(actual)};
        passed = false;
    }

    // `expected` comes from the oracle side.
    template <typename T>
    bool expect_equal(std::string_view where, const T& expected, const T& actual)
    {
        ++comparisons;
        if (expected == actual)
            return true;
        fail(std::string(where), describe(expected), describe(actual));
        return false;
    }

    // Polynomial mismatches are reported at the first monomial that differs.
    bool expect_equal(std::string_view where, const LaurentPoly& expected, const LaurentPoly& actual)
    {
        ++comparisons;
        if (expected == actual)
            return true;
        if (expected.vars() && actual.vars() && !same_variables(expected.vars(), actual.vars())) {
            fail(std::string(where) + " (variable sets differ)", describe(expected), describe(actual));
            return false;
        }
        LaurentPoly diff = actual - expected;
        const auto& [m, c] = *diff.terms().begin();
        std::string mono = m.is_one() ? "1" : render(m, *diff.vars());
        fail(std::string(where) + ", monomial " + mono, describe(expected.coeff(m)), describe(actual.coeff(m)));
        return false;
    }

    bool expect_true(std::string_view where, bool ok, std::string detail = "true")
    {
        ++comparisons;
        if (!ok)
            fail(std::string(where), std::move(detail), "false");
        return ok;
    }

    bool expect_close(std::string_view where, double expected, double actual, double tol, double imag = 0,
                      double imag_tol = INFINITY)
    {
        ++comparisons;
        double err = std::abs(expected - actual);
        residuals.push_back({std::string(where), err, imag});
        bool ok = err <= tol && std::abs(imag) <= imag_tol;
        if (!ok) {
            std::string act = describe(actual);
            if (imag != 0)
                act += " (imaginary part " + describe(imag) + ")";
            fail(std::string(where), describe(expected), act);
        }
        return ok;
    }

    double max_residual() const
    {
        double m = 0;
        for (const auto& r : residuals)
            m = std::max(m, r.abs_error);
        return m;
    }

    double max_imag() const
    {
        double m = 0;
        for (const auto& r : residuals)
            m = std::max(m, std::abs(r.imag));
        return m;
    }
};

inline nlohmann::ordered_json to_json(const Report& r)
{
    using J = nlohmann::ordered_json;
    J spec{{"id", r.spec.id},
           {"mode", to_string(r.spec.mode)},
           {"n_max", r.spec.n_max},
           {"order", r.spec.order},
           {"tol", r.spec.tol},
           {"cap", r.spec.enumeration.cap},
           {"seed", r.spec.seed},
           {"samples", r.spec.samples}};
    J j{{"id", r.spec.id}, {"title", r.title}, {"verdict", r.passed ? "pass" : "fail"}, {"spec", spec}};
    j["comparisons"] = r.comparisons;
    if (!r.error.empty())
        j["error"] = r.error;
    if (r.counterexample)
        j["counterexample"] = J{{"where", r.counterexample->where},
                                {"expected", r.counterexample->expected},
                                {"actual", r.counterexample->actual}};
    if (!r.residuals.empty()) {
        j["max_abs_residual"] = r.max_residual();
        j["max_imag_residual"] = r.max_imag();
        J rows = J::array();
        for (const auto& res : r.residuals)
            rows.push_back(J{{"where", res.where}, {"abs_error", res.abs_error}, {"imag", res.imag}});
        j["residuals"] = rows;
    }
    J prov = J::object();
    for (const auto& [k, v] : r.notes)
        prov[k] = v;
    j["provenance"] = prov;
    if (r.seconds)
        j["seconds"] = *r.seconds;
    return j;
}

} // namespace permgram
