// Brute-force enumeration of word relations among sumset generators.
#ifndef SUMSET_RELATIONS_HPP
#define SUMSET_RELATIONS_HPP

#include "sumset/finite_set.hpp"

#include <utility>
#include <vector>

namespace sumset {

using WordPair = std::pair<GeneratorWord, GeneratorWord>;

// All pairs (u, v) of words, each of total degree <= max_degree, with
// eval_word(u) = eval_word(v) and u lexicographically greater than v.
// Deterministic: pairs sorted by graded-lex on u, then on v.
std::vector<WordPair> relations_up_to_degree(const std::vector<FiniteSet>& gens, int max_degree);

}  // namespace sumset

#endif
