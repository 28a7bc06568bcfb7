// Integer lattices attached to binomial ideals and exact linear algebra on them.
#ifndef SUMSET_LATTICE_HPP
#define SUMSET_LATTICE_HPP

#include "sumset/groebner.hpp"

#include <vector>

namespace sumset {

struct IntegerLattice {
    std::size_t dim = 0;
    std::vector<std::vector<Int>> generators;  // rows of length dim
};

// Homogeneous system A x = 0 over the nonnegative integers.
struct DiophantineSystem {
    std::size_t vars = 0;
    std::vector<std::vector<Int>> equations;  // rows of length vars

    void validate() const;
};

// Exponent differences lead - trail of the generating binomials, deduplicated
// and sorted lexicographically.
IntegerLattice lattice_from_ideal(const BinomialIdeal& ideal);

// A basis of the rational annihilator {v : v.g = 0 for all generators g},
// canonicalized by Hermite normal form. Describes the saturation of the lattice.
DiophantineSystem lattice_equations(const IntegerLattice& lattice);

// True when the lattice equals its saturation (all Smith divisors are 1).
bool is_saturated(const IntegerLattice& lattice);

// (A | -A): pairs (x, y) with A x = A y.
DiophantineSystem pair_system(const DiophantineSystem& sys);

// Exact linear algebra helpers.
std::size_t rational_rank(const std::vector<std::vector<Int>>& rows);
std::vector<std::vector<Int>> hermite_normal_form(std::vector<std::vector<Int>> rows);
std::vector<Int> smith_divisors(std::vector<std::vector<Int>> m);
bool same_row_space(const std::vector<std::vector<Int>>& a,
                    const std::vector<std::vector<Int>>& b);

}  // namespace sumset

#endif
