#include "sumset/relations.hpp"

#include <algorithm>
#include <map>

namespace sumset {

namespace {

void enumerate_words(std::size_t nvars, int max_degree,
                     std::vector<GeneratorWord>& out) {
    GeneratorWord current(nvars, 0);
    // recursive graded enumeration; degree is distributed left to right
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos == nvars) {
            out.push_back(current);
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            current[pos] = c;
            self(self, pos + 1, remaining - c);
        }
        current[pos] = 0;
    };
    rec(rec, 0, max_degree);
}

bool graded_lex_less(const GeneratorWord& a, const GeneratorWord& b) {
    Int da = word_degree(a), db = word_degree(b);
    if (da != db)
        return da < db;
    return a < b;
}

}  // namespace

std::vector<WordPair> relations_up_to_degree(const std::vector<FiniteSet>& gens, int max_degree) {
    if (max_degree < 1)
        throw ValidationError("relation search degree must be at least 1");

    std::vector<GeneratorWord> words;
    enumerate_words(gens.size(), max_degree, words);

    // cache of c-fold per generator, filled on demand up to max_degree
    std::vector<std::vector<FiniteSet>> folds(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        folds[i].reserve(max_degree + 1);
        folds[i].push_back(FiniteSet::zero());
        for (int c = 1; c <= max_degree; ++c)
            folds[i].push_back(folds[i].back() + gens[i]);
    }

    std::map<std::vector<Int>, std::vector<GeneratorWord>> buckets;
    for (const GeneratorWord& w : words) {
        FiniteSet value = FiniteSet::zero();
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != 0)
                value = value + folds[i][static_cast<std::size_t>(to_int64(w[i]))];
        buckets[value.elements()].push_back(w);
    }

    std::vector<WordPair> pairs;
    for (auto& [value, ws] : buckets) {
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (std::size_t j = i + 1; j < ws.size(); ++j) {
                const GeneratorWord& u = std::max(ws[i], ws[j]);
                const GeneratorWord& v = std::min(ws[i], ws[j]);
                pairs.emplace_back(u, v);
            }
    }
    std::sort(pairs.begin(), pairs.end(), [](const WordPair& p, const WordPair& q) {
        if (p.first != q.first)
            return graded_lex_less(p.first, q.first);
        return graded_lex_less(p.second, q.second);
    });
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

}  // namespace sumset
