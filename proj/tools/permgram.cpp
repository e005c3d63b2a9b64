#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "oeis_fetch.hpp"
#include "permgram/verify/oeis.hpp"
#include "permgram/verify/registry.hpp"

using namespace permgram;

namespace {

constexpr int exit_pass = 0, exit_fail = 1, exit_usage = 2;

void print_report(const Report& r)
{
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.spec.id << "  " << r.title << "  (" << r.comparisons
              << " comparisons";
    if (r.spec.mode == CheckMode::numeric && !r.residuals.empty())
        std::cout << ", max residual " << describe(r.max_residual());
    if (r.seconds)
        std::cout << ", " << describe(*r.seconds) << " s";
    std::cout << ")\n";
    if (!r.error.empty())
        std::cout << "  error: " << r.error << '\n';
    if (r.counterexample)
        std::cout << "  first counterexample at " << r.counterexample->where << "\n    expected " << r.counterexample->expected
                  << "\n    actual   " << r.counterexample->actual << '\n';
}

void write_json(const std::string& path, const nlohmann::ordered_json& doc)
{
    if (path == "-") {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write '" + path + "'");
    out << doc.dump(2) << '\n';
}

struct DeriveArgs {
    std::string grammar = "G", seed;
    std::size_t n = 0;
    bool all = false;
};

int run_derive(const DeriveArgs& a)
{
    Grammar g = resolve_grammar(a.grammar);
    LaurentPoly p = parse_expression(a.seed, g.vars());
    for (std::size_t k = 0; k <= a.n; ++k) {
        if (a.all || k == a.n)
            std::cout << "D^" << k << ": " << render(p) << '\n';
        if (k < a.n)
            p = g.derive(p);
    }
    return exit_pass;
}

struct EnumerateArgs {
    std::string family, csv, seq, id;
    int n = 0;
    std::optional<std::size_t> column;
    bool allow_large = false;
    unsigned jobs = 1;
};

int run_enumerate(const EnumerateArgs& a)
{
    EnumerationConfig cfg{a.allow_large ? large_enumeration_cap : default_enumeration_cap, a.jobs};
    if (auto f = parse_family(a.family)) {
        if (!a.csv.empty() || !a.seq.empty())
            throw UsageError("--csv and --seq need a one-variable statistic, not " + a.family);
        std::cout << render(enumerate_poly(a.n, *f, cfg)) << '\n';
        return exit_pass;
    }
    auto t = parse_target(a.family);
    if (!t)
        throw UsageError("unknown family '" + a.family + "'");
    if (a.csv.empty() && a.seq.empty()) {
        std::cout << render(specialized_poly(a.n, *t, cfg)) << '\n';
        return exit_pass;
    }
    Triangle rows = export_triangle(*t, a.n, cfg);
    if (!a.csv.empty()) {
        std::ofstream out(a.csv);
        if (!out)
            throw UsageError("cannot write '" + a.csv + "'");
        write_triangle_csv(out, rows, a.family);
    }
    if (!a.seq.empty()) {
        std::ofstream out(a.seq);
        if (!out)
            throw UsageError("cannot write '" + a.seq + "'");
        std::vector<Integer> terms;
        if (a.column) {
            for (const auto& row : rows)
                terms.push_back(*a.column < row.size() ? row[*a.column] : Integer(0));
            out << "# " << a.family << " column " << *a.column << ", rows 0.." << a.n << '\n';
        } else {
            terms = flatten(rows);
            out << "# " << a.family << " rows 0.." << a.n << ", flattened\n";
        }
        write_sequence(out, a.id.empty() ? a.family : a.id, terms);
    }
    write_triangle_csv(std::cout, rows, a.family);
    return exit_pass;
}

struct VerifyArgs {
    std::string id, json, mode;
    std::optional<int> n_max;
    std::optional<std::size_t> order;
    std::optional<double> tol;
    unsigned jobs = 1;
    bool allow_large = false, timings = false, list = false;
    std::uint64_t seed = CheckSpec{}.seed;
    int samples = CheckSpec{}.samples;
};

int run_verify(const VerifyArgs& a)
{
    if (a.list) {
        for (const auto& e : registry())
            std::cout << e.id << "  [" << to_string(e.mode) << "]  " << e.title << '\n';
        return exit_pass;
    }
    if (a.id.empty())
        throw UsageError("verify needs a check id or 'all'");
    CheckSpec spec;
    spec.id = a.id;
    spec.n_max = a.n_max;
    spec.order = a.order;
    spec.tol = a.tol;
    spec.cap = a.allow_large ? large_enumeration_cap : default_enumeration_cap;
    spec.jobs = a.jobs;
    spec.seed = a.seed;
    spec.samples = a.samples;
    if (!a.mode.empty()) {
        spec.mode = parse_mode(a.mode);
        if (!spec.mode)
            throw UsageError("unknown mode '" + a.mode + "'");
    }

    std::vector<Report> reports;
    if (a.id == "all") {
        if (spec.mode)
            throw UsageError("--mode applies to a single check");
        reports = run_all(spec, a.jobs, a.timings);
    } else {
        reports.push_back(run_check(spec, a.timings));
    }
    bool all = true;
    for (const auto& r : reports) {
        print_report(r);
        all = all && r.passed;
    }
    if (reports.size() > 1)
        std::cout << (all ? "all " : "not all ") << reports.size() << " checks passed\n";
    if (!a.json.empty())
        write_json(a.json, to_json(reports));
    return all ? exit_pass : exit_fail;
}

struct OeisArgs {
    std::string local, ref, cache;
    bool fetch = false;
};

int run_oeis(const OeisArgs& a)
{
    std::vector<Integer> local = load_terms(a.local);
    std::string dir = a.cache.empty() ? sequence_cache_dir() : a.cache;
    std::vector<Integer> reference;
    std::string ref_name = a.ref;
    if (std::filesystem::exists(a.ref)) {
        reference = load_terms(a.ref);
    } else if (std::string cached = cached_path(a.ref, dir); std::filesystem::exists(cached)) {
        reference = load_terms(cached);
        ref_name = cached;
    } else if (a.fetch) {
        reference = fetch_bfile(a.ref);
        std::filesystem::create_directories(dir);
        std::ofstream out(cached);
        out << "# fetched b-file of " << a.ref << '\n';
        write_sequence(out, a.ref, reference);
        ref_name = a.ref + " (fetched into " + cached + ")";
    } else {
        throw UsageError("'" + a.ref + "' is neither a file nor cached in " + dir + "; pass --fetch to download it");
    }
    Report r = oeis_compare(local, reference, a.local, ref_name);
    print_report(r);
    for (const auto& [k, v] : r.notes)
        std::cout << "  " << k << ": " << v << '\n';
    return r.passed ? exit_pass : exit_fail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Grammar calculus for permutation statistics: derivations, enumeration oracles, identity checks"};
    app.require_subcommand(1);

    DeriveArgs da;
    auto* derive = app.add_subcommand("derive", "print D^n(seed) under a grammar");
    derive->add_option("--grammar", da.grammar, "built-in name (G, g1, g2, g3) or grammar file")->capture_default_str();
    derive->add_option("--seed", da.seed, "Laurent monomial or polynomial, e.g. z or x^-1/2*z^-1/2")->required();
    derive->add_option("--n", da.n, "number of derivatives")->required();
    derive->add_flag("--all", da.all, "print D^0 .. D^n");

    EnumerateArgs ea;
    auto* enumerate = app.add_subcommand("enumerate", "brute-force generating polynomial over S_n");
    enumerate
        ->add_option("--family", ea.family,
                     "P, Q, W, or a statistic: T, L, U, F, TA, Tbar, Ttilde, Eulerian, GesselT, FuP")
        ->required();
    enumerate->add_option("--n", ea.n, "permutation size (rows 0..n for --csv/--seq)")->required();
    enumerate->add_option("--csv", ea.csv, "write the triangle of a one-variable statistic as CSV");
    enumerate->add_option("--seq", ea.seq, "write the flattened triangle as a sequence file");
    enumerate->add_option("--column", ea.column, "with --seq, write column k instead of the flattened triangle");
    enumerate->add_option("--id", ea.id, "sequence id for --seq");
    enumerate->add_flag("--allow-large", ea.allow_large, "raise the enumeration cap from 9 to 11");
    enumerate->add_option("--jobs", ea.jobs, "worker threads")->check(CLI::PositiveNumber);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run identity checks");
    verify->add_option("id", va.id, "check id or 'all'");
    verify->add_flag("--list", va.list, "list the registered checks");
    verify->add_option("--n-max", va.n_max, "largest n");
    verify->add_option("--order", va.order, "series order");
    verify->add_option("--tol", va.tol, "absolute tolerance for numeric checks");
    verify->add_option("--mode", va.mode, "exact-symbolic, exact-sampled or numeric");
    verify->add_option("--json", va.json, "write the reports as JSON ('-' for stdout)");
    verify->add_option("--jobs", va.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--seed", va.seed, "seed for sampled points")->capture_default_str();
    verify->add_option("--samples", va.samples, "number of random samples")->capture_default_str();
    verify->add_flag("--allow-large", va.allow_large, "raise the enumeration cap from 9 to 11");
    verify->add_flag("--timings", va.timings, "record wall-clock time per check");

    OeisArgs oa;
    auto* oeis = app.add_subcommand("oeis", "compare a local sequence or triangle with a reference");
    oeis->add_option("--local", oa.local, "sequence file or triangle CSV")->required();
    oeis->add_option("--ref", oa.ref, "reference file, or an id looked up in the cache")->required();
    oeis->add_option("--cache", oa.cache, "cache directory (default $PERMGRAM_OEIS_CACHE or the shipped data)");
    oeis->add_flag("--fetch", oa.fetch, "download a missing reference b-file from oeis.org");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*derive)
            return run_derive(da);
        if (*enumerate)
            return run_enumerate(ea);
        if (*verify)
            return run_verify(va);
        return run_oeis(oa);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
    } catch (const FetchError& e) {
        std::cerr << "fetch failed: " << e.what() << '\n';
        return exit_fail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return exit_usage;
}
