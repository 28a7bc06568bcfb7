// Hilbert bases of homogeneous linear Diophantine systems over the
// nonnegative integers, by Contejean-Devie completion.
#ifndef SUMSET_HILBERT_HPP
#define SUMSET_HILBERT_HPP

#include "sumset/lattice.hpp"

#include <vector>

namespace sumset {

struct HilbertBasisSet {
    // minimal nonzero solutions, sorted by total degree then lexicographically
    std::vector<std::vector<Int>> elements;

    bool empty() const { return elements.empty(); }
    std::size_t size() const { return elements.size(); }
};

// The unique minimal generating set of {x in N^n : A x = 0} minus the origin.
// Breadth-first completion: a candidate grows along coordinate i only while
// <A t, A e_i> < 0, and is pruned as soon as it dominates a known solution.
HilbertBasisSet hilbert_basis(const DiophantineSystem& sys);

}  // namespace sumset

#endif
