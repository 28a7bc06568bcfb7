// Semigroup ideals of sumset semigroups: numerical-semigroup toric ideals,
// the closed-form two-generator pair ideal, the split construction, and the
// elimination pipeline for singleton-plus-grid generating families.
#ifndef SUMSET_SEMIGROUP_IDEAL_HPP
#define SUMSET_SEMIGROUP_IDEAL_HPP

#include "sumset/finite_set.hpp"
#include "sumset/groebner.hpp"
#include "sumset/relations.hpp"

#include <string>
#include <vector>

namespace sumset {

struct ShiftedGrid {
    Int offset;  // added to every grid element; >= 1
    Int n, m;    // grid exponents, n + m > 0
};

struct PureGrid {
    Int n, m;  // n + m > 0
};

// Generating family {b_1},...,{b_p}, {a_1}+grid(n_1,m_1), ..., grid(n_t,m_t)
// over the base pair {0, k*a}, {0, k*b} with a < b coprime.
struct SumsetSemigroupSpec {
    std::vector<Int> singletons;
    Int k = 1, a = 1, b = 2;
    std::vector<ShiftedGrid> shifted_grids;
    std::vector<PureGrid> pure_grids;

    void validate() const;
    std::size_t generator_count() const { return singletons.size() + grid_count(); }
    std::size_t grid_count() const { return shifted_grids.size() + pure_grids.size(); }

    // The generating sets, in output-variable order (singletons, then grids).
    std::vector<FiniteSet> generator_sets() const;
    // x1..xp, z1..zt
    VariableContext output_variables() const;
};

// Intermediate objects of the elimination pipeline, kept for inspection.
struct PipelineTrace {
    VariableContext numerical_vars;          // x1..xp, w1..ws
    std::vector<Binomial> numerical_basis;   // ideal of the singleton semigroup
    VariableContext working_vars;            // x, y, w1..ws, x1..xp, z1..zt
    std::vector<Binomial> base_generators;   // numerical basis plus the pair generator
    std::vector<Binomial> extended_generators;  // plus one defining binomial per grid
    std::vector<Binomial> full_basis;        // Groebner basis before restriction
};

struct IdealResult {
    BinomialIdeal ideal;  // over output_variables()
    PipelineTrace trace;
};

// Kernel of x_i -> t^{gens_i}: all binomials whose exponents weight to equal
// sums. Computed by adjoining t and eliminating it under lex with t heaviest.
// Returned as the reduced Groebner basis under lex on `vars`.
BinomialIdeal numerical_semigroup_ideal(const std::vector<Int>& gens, const VariableContext& vars);
BinomialIdeal numerical_semigroup_ideal(const std::vector<Int>& gens);

// Generator of the principal ideal of <{0,k*a}, {0,k*b}>:
// x^(2b-1) y^(a-1) - x^(b-1) y^(2a-1). Independent of k.
Binomial pair_ideal_generator(const Int& a, const Int& b, const Int& k);

// Sum ideal of a singleton block and a zero-minimum set block in disjoint
// variables; the set-block ideal is supplied by the caller.
BinomialIdeal split_ideal(const std::vector<Int>& singletons,
                          const std::vector<FiniteSet>& zero_min_sets,
                          const BinomialIdeal& set_block_ideal);
// Convenience for the two-generator family {0,k*a}, {0,k*b}.
BinomialIdeal split_ideal(const std::vector<Int>& singletons,
                          const std::vector<FiniteSet>& zero_min_sets);

// Full pipeline: numerical ideal, pair generator, grid definitions, Groebner
// basis under lex x > y > w > x_j > z, restriction to the output variables.
IdealResult compute_semigroup_ideal(const SumsetSemigroupSpec& spec);

// Classify raw generating sets as singletons or (shifted) grids for the given
// base parameters; throws naming the first set that fits neither form.
SumsetSemigroupSpec recognize_generators(const std::vector<FiniteSet>& raw, const Int& k,
                                         const Int& a, const Int& b);

// Ideal generated by all word relations of bounded degree; the only available
// handle on generating families outside the singleton-plus-grid form.
BinomialIdeal bounded_relations_ideal(const std::vector<FiniteSet>& gens, int degree,
                                      const VariableContext& vars);
BinomialIdeal bounded_relations_ideal(const std::vector<FiniteSet>& gens, int degree);

struct VerifyReport {
    struct Violation {
        std::string kind;  // "evaluation_mismatch" or "missing_relation"
        GeneratorWord left, right;
    };
    std::vector<Violation> violations;
    bool clean() const { return violations.empty(); }
};

// Cross-validates an ideal against enumeration: every basis binomial must be
// a sumset equality, and every bounded-degree relation must lie in the ideal.
VerifyReport verify_ideal(const IdealResult& result, const SumsetSemigroupSpec& spec, int degree);

}  // namespace sumset

#endif
