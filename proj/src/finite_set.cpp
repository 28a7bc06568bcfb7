#include "sumset/finite_set.hpp"

#include <algorithm>

namespace sumset {

FiniteSet::FiniteSet(std::vector<Int> elements) : elems_(std::move(elements)) {
    if (elems_.empty())
        throw ValidationError("a finite set must be nonempty");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.front() < 0)
        throw ValidationError("finite set elements must be nonnegative, got " + elems_.front().str());
}

FiniteSet sumset_add(const FiniteSet& a, const FiniteSet& b) {
    std::vector<Int> sums;
    sums.reserve(a.size() * b.size());
    for (const Int& x : a.elements())
        for (const Int& y : b.elements())
            sums.push_back(x + y);
    return FiniteSet(std::move(sums));
}

FiniteSet fold(const Int& count, const FiniteSet& a) {
    if (count < 0)
        throw ValidationError("fold count must be nonnegative");
    if (count == 0)
        return FiniteSet::zero();
    if (count == 1)
        return a;
    FiniteSet half = fold(count / 2, a);
    FiniteSet result = half + half;
    if (count % 2 != 0)
        result = result + a;
    return result;
}

FiniteSet grid_set(const Int& n, const Int& m, const Int& k, const Int& a, const Int& b) {
    if (n < 0 || m < 0)
        throw ValidationError("grid exponents must be nonnegative");
    if (k < 1 || a < 1 || b < 1)
        throw ValidationError("grid parameters k, a, b must be positive");
    if (a >= b)
        throw ValidationError("grid parameters require a < b");
    if (int_gcd(a, b) != 1)
        throw ValidationError("grid parameters a and b must be coprime");
    FiniteSet left({Int(0), k * a});
    FiniteSet right({Int(0), k * b});
    return fold(n, left) + fold(m, right);
}

std::pair<Int, FiniteSet> normalize(const FiniteSet& a) {
    Int offset = a.min();
    std::vector<Int> shifted;
    shifted.reserve(a.size());
    for (const Int& x : a.elements())
        shifted.push_back(x - offset);
    return {std::move(offset), FiniteSet(std::move(shifted))};
}

FiniteSet eval_word(const GeneratorWord& word, const std::vector<FiniteSet>& gens) {
    if (word.size() != gens.size())
        throw ValidationError("word length does not match generator count");
    FiniteSet result = FiniteSet::zero();
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] < 0)
            throw ValidationError("word exponents must be nonnegative");
        if (word[i] != 0)
            result = result + fold(word[i], gens[i]);
    }
    return result;
}

Int word_degree(const GeneratorWord& word) {
    Int d = 0;
    for (const Int& c : word)
        d += c;
    return d;
}

}  // namespace sumset
