#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "permgram/grammar/grammar.hpp"

namespace permgram {

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline bool starts_with_word(std::string_view line, std::string_view word)
{
    return line.size() > word.size() && line.substr(0, word.size()) == word &&
           (std::isspace(static_cast<unsigned char>(line[word.size()])) || word.back() == ':');
}

} // namespace detail

// Line-oriented grammar files:
//
//   # comment
//   name: G
//   vars: x y z w u v
//   rule x -> x*y
//   rule u -> x*y*z^-1*v
//
// `name:` is optional. Exactly one `vars:` line must precede the rules, and
// every declared variable needs exactly one rule.
inline Grammar parse_grammar(std::string_view text, std::string default_name = "grammar")
{
    std::string name = std::move(default_name);
    VarSetPtr vars;
    std::vector<std::optional<LaurentPoly>> rules;
    std::size_t line_no = 0;
    std::size_t last_line = 0;

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        last_line = line_no;

        if (detail::starts_with_word(line, "name:")) {
            name = std::string(detail::trim(line.substr(5)));
            if (name.empty())
                throw ParseError("empty grammar name", line_no);
        } else if (detail::starts_with_word(line, "vars:")) {
            if (vars)
                throw ParseError("duplicate 'vars:' line", line_no);
            std::vector<std::string> names;
            std::istringstream words{std::string(line.substr(5))};
            for (std::string w; words >> w;)
                names.push_back(w);
            if (names.empty())
                throw ParseError("'vars:' declares no variables", line_no);
            try {
                vars = make_variables(std::move(names));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), line_no);
            }
            rules.assign(vars->size(), std::nullopt);
        } else if (detail::starts_with_word(line, "rule")) {
            if (!vars)
                throw ParseError("rule before 'vars:' line", line_no);
            auto arrow = line.find("->");
            if (arrow == std::string_view::npos)
                throw ParseError("expected 'rule <var> -> <expr>'", line_no);
            std::string head(detail::trim(line.substr(4, arrow - 4)));
            auto id = vars->index_of(head);
            if (!id)
                throw ParseError("rule for undeclared variable '" + head + "'", line_no);
            if (rules[*id])
                throw ParseError("duplicate rule for '" + head + "'", line_no);
            rules[*id] = parse_expression(detail::trim(line.substr(arrow + 2)), vars, line_no);
        } else {
            throw ParseError("unrecognized line '" + std::string(line) + "'", line_no);
        }
    }
    if (!vars)
        throw ParseError("missing 'vars:' line", last_line);

    std::vector<LaurentPoly> images;
    for (std::uint32_t i = 0; i < rules.size(); ++i) {
        if (!rules[i])
            throw ParseError("every variable needs a rule (missing: '" + vars->name(i) + "')", last_line);
        images.push_back(*rules[i]);
    }
    return Grammar(std::move(name), std::move(vars), std::move(images));
}

inline Grammar load_grammar_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open grammar file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_grammar(buffer.str(), path);
}

// 64-bit FNV-1a, for recording which grammar text a report was built from.
inline std::string text_fingerprint(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4)
        out[static_cast<std::size_t>(i)] = hex[h & 0xF];
    return out;
}

} // namespace permgram
