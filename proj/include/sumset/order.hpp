// Multiplicative total orders on monomials: lex, block, and matrix orders.
#ifndef SUMSET_ORDER_HPP
#define SUMSET_ORDER_HPP

#include "sumset/monomial.hpp"
#include "sumset/variables.hpp"

#include <memory>
#include <string>
#include <vector>

namespace sumset {

class MonomialOrder {
public:
    enum class Kind { lex, block, matrix };

    // Lex with variables weighted by context position (index 0 heaviest).
    static MonomialOrder lex(std::size_t nvars);
    // Lex along an explicit priority permutation, heaviest variable first.
    static MonomialOrder lex(std::vector<std::size_t> priority);
    // Lex priority given by variable names, heaviest first; must list every variable.
    static MonomialOrder lex_names(const VariableContext& ctx, const std::vector<std::string>& heaviest_first);
    // Compares the front variable block first, then the back block.
    static MonomialOrder block(std::vector<std::size_t> front_vars, MonomialOrder front,
                               std::vector<std::size_t> back_vars, MonomialOrder back);
    // Compares weight vectors row by row; the matrix must have full column rank.
    static MonomialOrder matrix(std::vector<std::vector<Int>> rows);

    Kind kind() const { return kind_; }
    std::size_t vars() const { return nvars_; }

    // -1, 0, +1; total by construction, and 0 only when u == v.
    int compare(const Monomial& u, const Monomial& v) const;
    bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }
    bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

    // True when every monomial involving an eliminated variable exceeds every
    // monomial in the remaining variables. Sound but conservative for matrix orders.
    bool is_elimination_order_for(const std::vector<bool>& eliminated) const;

    // Canonical string; equal keys means identical comparison behaviour.
    const std::string& cache_key() const { return key_; }

    const std::vector<std::size_t>& lex_priority() const;
    const std::vector<std::vector<Int>>& matrix_rows() const;
    const std::vector<std::size_t>& front_vars() const;
    const std::vector<std::size_t>& back_vars() const;
    const MonomialOrder& front_order() const;
    const MonomialOrder& back_order() const;

private:
    MonomialOrder() = default;

    Kind kind_ = Kind::lex;
    std::size_t nvars_ = 0;
    std::string key_;
    std::vector<std::size_t> priority_;       // lex
    std::vector<std::vector<Int>> rows_;      // matrix
    std::vector<std::size_t> front_vars_, back_vars_;  // block
    std::shared_ptr<const MonomialOrder> front_, back_;
};

}  // namespace sumset

#endif
