// Ordered, named variable set shared by monomials, orders, and ideals.
#ifndef SUMSET_VARIABLES_HPP
#define SUMSET_VARIABLES_HPP

#include "sumset/integers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sumset {

class VariableContext {
public:
    VariableContext() = default;
    explicit VariableContext(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t index(const std::string& name) const;  // throws if absent

    bool operator==(const VariableContext&) const = default;

private:
    std::vector<std::string> names_;
};

// x1, x2, ..., x<count> style contexts.
VariableContext numbered_variables(const std::string& stem, std::size_t count);

// Concatenation; names must stay distinct.
VariableContext concat(const VariableContext& a, const VariableContext& b);

}  // namespace sumset

#endif
