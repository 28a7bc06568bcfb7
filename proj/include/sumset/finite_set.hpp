// Finite nonempty subsets of the nonnegative integers and their sumset arithmetic.
#ifndef SUMSET_FINITE_SET_HPP
#define SUMSET_FINITE_SET_HPP

#include "sumset/integers.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace sumset {

// A finite nonempty set of nonnegative integers, stored strictly increasing.
class FiniteSet {
public:
    // Sorts, removes duplicates, and validates nonemptiness and nonnegativity.
    explicit FiniteSet(std::vector<Int> elements);

    static FiniteSet singleton(Int value) { return FiniteSet({std::move(value)}); }
    static FiniteSet zero() { return singleton(0); }

    const std::vector<Int>& elements() const { return elems_; }
    const Int& min() const { return elems_.front(); }
    const Int& max() const { return elems_.back(); }
    std::size_t size() const { return elems_.size(); }
    bool is_zero() const { return elems_.size() == 1 && elems_.front() == 0; }

    bool operator==(const FiniteSet&) const = default;
    // Lexicographic on element sequences; canonical container ordering.
    std::weak_ordering operator<=>(const FiniteSet& other) const {
        return elems_ <=> other.elems_;
    }

private:
    std::vector<Int> elems_;
};

// {a + b : a in A, b in B}
FiniteSet sumset_add(const FiniteSet& a, const FiniteSet& b);
inline FiniteSet operator+(const FiniteSet& a, const FiniteSet& b) { return sumset_add(a, b); }

// Sum of `count` copies of `a`; fold(0, a) = {0}.
FiniteSet fold(const Int& count, const FiniteSet& a);

// n-fold of {0, k*a} plus m-fold of {0, k*b}. Requires a < b coprime, k >= 1.
FiniteSet grid_set(const Int& n, const Int& m, const Int& k, const Int& a, const Int& b);

// Splits a as {min} + shifted where shifted starts at 0.
std::pair<Int, FiniteSet> normalize(const FiniteSet& a);

// Exponent vector over an ordered list of semigroup generators.
using GeneratorWord = std::vector<Int>;

// Sum over i of word[i]-fold of gens[i]; the all-zero word gives {0}.
FiniteSet eval_word(const GeneratorWord& word, const std::vector<FiniteSet>& gens);

Int word_degree(const GeneratorWord& word);

}  // namespace sumset

#endif
