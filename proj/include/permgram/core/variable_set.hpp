#pragma once

#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permgram/core/errors.hpp"

namespace permgram {

inline bool is_variable_name(std::string_view s)
{
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front())))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

// Ordered list of variable names. A variable's id is its position.
class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names) : names_(std::move(names))
    {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!is_variable_name(names_[i]))
                throw std::invalid_argument("invalid variable name '" + names_[i] + "'");
            for (std::size_t j = 0; j < i; ++j)
                if (names_[j] == names_[i])
                    throw std::invalid_argument("duplicate variable '" + names_[i] + "'");
        }
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::uint32_t id) const { return names_.at(id); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::uint32_t> index_of(std::string_view name) const
    {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return static_cast<std::uint32_t>(i);
        return std::nullopt;
    }

    std::uint32_t require(std::string_view name) const
    {
        if (auto id = index_of(name))
            return *id;
        throw std::invalid_argument("undeclared variable '" + std::string(name) + "'");
    }

    bool operator==(const VariableSet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VariableSet>;

inline VarSetPtr make_variables(std::vector<std::string> names)
{
    return std::make_shared<const VariableSet>(std::move(names));
}

inline VarSetPtr make_variables(std::initializer_list<const char*> names)
{
    return make_variables(std::vector<std::string>(names.begin(), names.end()));
}

inline bool same_variables(const VarSetPtr& a, const VarSetPtr& b)
{
    return a == b || (a && b && *a == *b);
}

} // namespace permgram
