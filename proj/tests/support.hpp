// Shared helpers for the test suites.
#ifndef SUMSET_TESTS_SUPPORT_HPP
#define SUMSET_TESTS_SUPPORT_HPP

#include "sumset/io_json.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <random>
#include <vector>

namespace testsup {

using namespace sumset;

inline FiniteSet fs(std::initializer_list<long long> values) {
    std::vector<Int> elems;
    for (long long v : values)
        elems.push_back(v);
    return FiniteSet(std::move(elems));
}

inline GeneratorWord word(std::initializer_list<long long> values) {
    GeneratorWord w;
    for (long long v : values)
        w.push_back(v);
    return w;
}

template <std::size_t N>
std::vector<Binomial> parse_basis(const VariableContext& ctx, const char* const (&texts)[N]) {
    std::vector<Binomial> out;
    out.reserve(N);
    for (const char* t : texts)
        out.push_back(binomial_from_text(ctx, t));
    return out;
}

inline bool same_binomial_set(std::vector<Binomial> a, std::vector<Binomial> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

template <std::size_t C, std::size_t R>
std::vector<std::vector<Int>> rows_of(const long long (&data)[R][C]) {
    std::vector<std::vector<Int>> rows(R, std::vector<Int>(C));
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c < C; ++c)
            rows[r][c] = data[r][c];
    return rows;
}

// all nonnegative solutions of A x = 0 with coordinates bounded by `cap`,
// found by meeting the two variable halves on their images
inline std::vector<std::vector<Int>> bounded_solutions(const DiophantineSystem& sys, int cap) {
    const std::size_t n = sys.vars, half = n / 2;
    auto image = [&](const std::vector<Int>& x, std::size_t from, std::size_t to) {
        std::vector<Int> img(sys.equations.size(), Int(0));
        for (std::size_t e = 0; e < sys.equations.size(); ++e)
            for (std::size_t i = from; i < to; ++i)
                img[e] += sys.equations[e][i] * x[i];
        return img;
    };
    std::vector<std::vector<Int>> lefts, rights;
    std::vector<Int> cur(n, Int(0));
    auto enumerate = [&](std::size_t from, std::size_t to, auto& bucket) {
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == to) {
                bucket.push_back(cur);
                return;
            }
            for (int v = 0; v <= cap; ++v) {
                cur[i] = v;
                self(self, i + 1);
            }
            cur[i] = 0;
        };
        rec(rec, from);
    };
    enumerate(0, half, lefts);
    enumerate(half, n, rights);
    std::map<std::vector<Int>, std::vector<std::size_t>> by_image;
    for (std::size_t r = 0; r < rights.size(); ++r) {
        std::vector<Int> img = image(rights[r], half, n);
        for (Int& v : img)
            v = -v;
        by_image[img].push_back(r);
    }
    std::vector<std::vector<Int>> solutions;
    for (const auto& l : lefts) {
        auto it = by_image.find(image(l, 0, half));
        if (it == by_image.end())
            continue;
        for (std::size_t r : it->second) {
            std::vector<Int> x = l;
            for (std::size_t i = half; i < n; ++i)
                x[i] = rights[r][i];
            bool zero = std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; });
            if (!zero)
                solutions.push_back(std::move(x));
        }
    }
    return solutions;
}

// x decomposes as a nonnegative integer combination of basis elements
inline bool decomposes(const std::vector<Int>& x, const std::vector<std::vector<Int>>& basis,
                       std::map<std::vector<Int>, bool>& memo) {
    if (std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; }))
        return true;
    auto it = memo.find(x);
    if (it != memo.end())
        return it->second;
    bool ok = false;
    for (const auto& b : basis) {
        bool fits = true;
        for (std::size_t i = 0; i < x.size() && fits; ++i)
            fits = b[i] <= x[i];
        if (!fits)
            continue;
        std::vector<Int> rest(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            rest[i] = x[i] - b[i];
        if (decomposes(rest, basis, memo)) {
            ok = true;
            break;
        }
    }
    memo[x] = ok;
    return ok;
}

// random generating family within the small randomized-property envelope
inline SumsetSemigroupSpec random_small_spec(std::mt19937& rng) {
    static const std::pair<int, int> coprime_pairs[] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}};
    std::uniform_int_distribution<int> pick_pair(0, 4), pick_k(1, 3), pick_p(0, 2),
        pick_t(1, 3), pick_value(1, 9), pick_nm(0, 3), coin(0, 1);
    SumsetSemigroupSpec spec;
    auto [a, b] = coprime_pairs[pick_pair(rng)];
    spec.a = a;
    spec.b = b;
    spec.k = pick_k(rng);
    int p = pick_p(rng), t = pick_t(rng);
    for (int i = 0; i < p; ++i)
        spec.singletons.push_back(pick_value(rng));
    for (int i = 0; i < t; ++i) {
        Int n = pick_nm(rng), m = pick_nm(rng);
        if (n == 0 && m == 0)
            n = 1;
        if (coin(rng))
            spec.shifted_grids.push_back({Int(pick_value(rng)), n, m});
        else
            spec.pure_grids.push_back({n, m});
    }
    return spec;
}

}  // namespace testsup

#endif
