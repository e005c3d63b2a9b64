#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "permgram/grammar/grammar_file.hpp"

namespace permgram {

// Reference grammars, kept as grammar-file text and parsed on every use.
// The same files ship under data/grammars/.
namespace builtin_text {

inline constexpr std::string_view G = R"(# Refined grammar for exterior peaks of pattern 132/231 and proper double descents
name: G
vars: x y z w u v
rule x -> x*y
rule y -> z*u
rule z -> z*w
rule w -> x*v
rule u -> x*y*z^-1*v
rule v -> x^-1*z*w*u
)";

inline constexpr std::string_view g1 = R"(# Dumont's grammar for the Eulerian polynomials
name: g1
vars: x y
rule x -> x*y
rule y -> x*y
)";

inline constexpr std::string_view g2 = R"(# Exterior peaks
name: g2
vars: x y
rule x -> x*y
rule y -> x^2
)";

inline constexpr std::string_view g3 = R"(# Exterior peaks and proper double descents
name: g3
vars: x y z w
rule x -> x*y
rule y -> x*z
rule z -> z*w
rule w -> x*z
)";

} // namespace builtin_text

inline constexpr std::array<std::string_view, 4> builtin_grammar_names{"G", "g1", "g2", "g3"};

inline std::string_view builtin_grammar_text(std::string_view name)
{
    if (name == "G")
        return builtin_text::G;
    if (name == "g1")
        return builtin_text::g1;
    if (name == "g2")
        return builtin_text::g2;
    if (name == "g3")
        return builtin_text::g3;
    throw std::invalid_argument("unknown built-in grammar '" + std::string(name) + "'");
}

inline bool is_builtin_grammar(std::string_view name)
{
    for (auto n : builtin_grammar_names)
        if (n == name)
            return true;
    return false;
}

inline Grammar builtin_grammar(std::string_view name)
{
    return parse_grammar(builtin_grammar_text(name), std::string(name));
}

// Built-in name or path to a grammar file.
inline Grammar resolve_grammar(const std::string& name_or_path)
{
    return is_builtin_grammar(name_or_path) ? builtin_grammar(name_or_path) : load_grammar_file(name_or_path);
}

} // namespace permgram
