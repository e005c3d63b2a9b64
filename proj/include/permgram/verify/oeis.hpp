#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "permgram/core/rational.hpp"
#include "permgram/grammar/grammar_file.hpp"
#include "permgram/verify/report.hpp"

#ifndef PERMGRAM_DATA_DIR
#define PERMGRAM_DATA_DIR "data"
#endif

namespace permgram {

// One `id: v0 v1 v2 ...` line of a sequence file.
struct SequenceRecord {
    std::string id;
    std::vector<Integer> values;
};

namespace detail {

inline Integer parse_integer(std::string_view tok, std::size_t line)
{
    std::string_view digits = tok;
    if (!digits.empty() && digits.front() == '-')
        digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError("not an integer: '" + std::string(tok) + "'", line);
    return Integer(std::string(tok));
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace detail

inline std::vector<SequenceRecord> parse_sequence_file(std::string_view text)
{
    std::vector<SequenceRecord> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
        std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("expected 'id: v0 v1 ...'", line_no);
        SequenceRecord rec;
        rec.id = std::string(detail::trim(line.substr(0, colon)));
        if (rec.id.empty() || rec.id.find_first_of(" \t") != std::string::npos)
            throw ParseError("malformed sequence id", line_no);
        std::istringstream words{std::string(line.substr(colon + 1))};
        for (std::string tok; words >> tok;)
            rec.values.push_back(detail::parse_integer(tok, line_no));
        out.push_back(std::move(rec));
    }
    return out;
}

inline void write_sequence(std::ostream& out, const std::string& id, const std::vector<Integer>& values)
{
    out << id << ':';
    for (const auto& v : values)
        out << ' ' << v.get_str();
    out << '\n';
}

// Triangle CSV as written by write_triangle_csv: `n,c0,c1,...` per row.
inline Triangle parse_triangle_csv(std::string_view text)
{
    Triangle rows;
    std::istringstream in{std::string(text)};
    std::string raw;
    for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
        std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        std::vector<Integer> cells;
        std::size_t start = 0;
        while (true) {
            auto comma = line.find(',', start);
            cells.push_back(detail::parse_integer(detail::trim(line.substr(start, comma - start)), line_no));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        if (cells.front() != Integer(static_cast<unsigned long>(rows.size())))
            throw ParseError("expected row " + std::to_string(rows.size()), line_no);
        std::vector<Integer> row(cells.begin() + 1, cells.end());
        while (!row.empty() && row.back() == 0)
            row.pop_back();
        rows.push_back(std::move(row));
    }
    return rows;
}

// Terms of a local file: a flattened triangle for .csv, otherwise the first
// record of a sequence file.
inline std::vector<Integer> load_terms(const std::string& path)
{
    std::string text = detail::read_file(path);
    try {
        if (std::filesystem::path(path).extension() == ".csv")
            return flatten(parse_triangle_csv(text));
        auto recs = parse_sequence_file(text);
        if (recs.empty())
            throw ParseError("no sequence in file");
        return recs.front().values;
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline std::string sequence_cache_dir()
{
    if (const char* env = std::getenv("PERMGRAM_OEIS_CACHE"); env && *env)
        return env;
    return std::string(PERMGRAM_DATA_DIR) + "/oeis";
}

inline std::string cached_path(const std::string& id, const std::string& dir)
{
    return (std::filesystem::path(dir) / (id + ".seq")).string();
}

// Term-by-term comparison over the common prefix.
inline Report oeis_compare(const std::vector<Integer>& local, const std::vector<Integer>& reference,
                           const std::string& local_name, const std::string& reference_name)
{
    Report r;
    r.spec.id = "oeis";
    r.spec.mode = CheckMode::exact_sampled;
    r.title = local_name + " against " + reference_name;
    std::size_t overlap = std::min(local.size(), reference.size());
    r.note("local terms", std::to_string(local.size()));
    r.note("reference terms", std::to_string(reference.size()));
    r.note("compared prefix", std::to_string(overlap));
    for (std::size_t i = 0; i < overlap; ++i)
        r.expect_equal("term " + std::to_string(i), reference[i], local[i]);
    if (overlap == 0) {
        r.passed = false;
        r.error = "no overlapping terms";
    }
    return r;
}

} // namespace permgram
