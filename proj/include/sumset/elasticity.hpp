// Factorization invariants derived from a semigroup ideal: the strongly
// reduced test, elasticity, atoms reaching it, acceptability, and expression
// of powers in terms of other generators.
#ifndef SUMSET_ELASTICITY_HPP
#define SUMSET_ELASTICITY_HPP

#include "sumset/finite_set.hpp"
#include "sumset/hilbert.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sumset {

struct FactorizationPair {
    GeneratorWord left, right;
    Rational ratio;  // sum(left) / sum(right), in lowest terms
};

// True iff the lattice of the ideal meets the nonnegative orthant only at 0.
bool strongly_reduced(const BinomialIdeal& ideal);

// Maximum length ratio over the minimal pair solutions; 1 for the free case.
// Requires a strongly reduced ideal.
Rational elasticity(const BinomialIdeal& ideal);

// Pairs (left, right) of the basis whose ratio equals rho. Basis elements are
// split halves (x | y) of the pair system's solutions.
std::vector<FactorizationPair> elasticity_atoms(const HilbertBasisSet& pair_basis,
                                                const Rational& rho);

struct AcceptableOptions {
    // Additionally test sums of elasticity atoms as candidate witnesses.
    bool combine_atoms = false;
    int combine_depth = 3;
};

struct AcceptableResult {
    bool acceptable = false;
    std::optional<Binomial> witness;  // over the ideal's variables
};

// Decides whether some element attains the elasticity: accept when an atom
// pair is itself a relation of the ideal, or when eliminating all variables
// outside the atoms' support leaves a binomial whose length ratio equals rho.
AcceptableResult acceptable_elasticity(const BinomialIdeal& ideal,
                                       const HilbertBasisSet& pair_basis,
                                       const AcceptableOptions& options = {});

// Normal form of target^power under the priority order; the word of the
// result when the target variable has been eliminated from it, nullopt
// otherwise. The priority order must rank the target variable heaviest.
std::optional<GeneratorWord> express(const BinomialIdeal& ideal, std::size_t target_var,
                                     const Int& power, const MonomialOrder& priority);

// Matrix order that weighs one variable above everything else, then total
// degree of the rest, then the remaining variables one by one.
MonomialOrder target_priority_order(std::size_t nvars, std::size_t target_var);

// Closed-form expression of the i-fold of {7,10,13} over the generators
// {3}, {4}, {6,12}, {0,3,6,9} of its ambient semigroup; valid for i >= 3.
// Word coordinates follow the variable order x1, x2, z1, z2, z3.
GeneratorWord fold_expression_closed_form(const Int& i);

// One-pass summary used by the command line driver.
struct ElasticityReport {
    bool strongly_reduced_ideal = false;
    bool saturated_lattice = true;
    std::optional<Rational> rho;           // absent when not strongly reduced
    HilbertBasisSet pair_basis;
    std::vector<FactorizationPair> atoms;  // atoms reaching rho
};

ElasticityReport analyze_elasticity(const BinomialIdeal& ideal);

}  // namespace sumset

#endif
