#include "sumset/variables.hpp"

#include <set>

namespace sumset {

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw ValidationError("variable names must be nonempty");
        if (!seen.insert(n).second)
            throw ValidationError("duplicate variable name: " + n);
    }
}

std::optional<std::size_t> VariableContext::find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

std::size_t VariableContext::index(const std::string& name) const {
    if (auto i = find(name))
        return *i;
    throw ValidationError("unknown variable: " + name);
}

VariableContext numbered_variables(const std::string& stem, std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 1; i <= count; ++i)
        names.push_back(stem + std::to_string(i));
    return VariableContext(std::move(names));
}

VariableContext concat(const VariableContext& a, const VariableContext& b) {
    std::vector<std::string> names = a.names();
    names.insert(names.end(), b.names().begin(), b.names().end());
    return VariableContext(std::move(names));
}

}  // namespace sumset
