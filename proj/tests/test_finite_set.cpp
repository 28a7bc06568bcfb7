#include "support.hpp"

#include <doctest.h>

using namespace testsup;

TEST_CASE("finite set construction") {
    CHECK(fs({3, 1, 3, 2}).elements() == std::vector<Int>{1, 2, 3});
    CHECK_THROWS_AS(FiniteSet({}), ValidationError);
    CHECK_THROWS_AS(FiniteSet({Int(-1), Int(2)}), ValidationError);
    CHECK(FiniteSet::zero().is_zero());
}

TEST_CASE("sumset addition") {
    CHECK(fs({1, 3}) + fs({1, 2, 3}) == fs({2, 3, 4, 5, 6}));
    CHECK(fs({0}) + fs({5, 9}) == fs({5, 9}));
    CHECK(fs({3}) + fs({7, 10, 13}) == fs({10, 13, 16}));
}

TEST_CASE("ambient monoid is non-cancellative and not torsion free") {
    CHECK(fs({1, 3}) + fs({1, 2, 3}) == fs({1, 2, 3}) + fs({1, 2, 3}));
    CHECK(fold(2, fs({1, 2, 4, 5})) == fold(2, fs({1, 2, 3, 4, 5})));
}

TEST_CASE("fold") {
    CHECK(fold(2, fs({1, 2, 4, 5})) == fs({2, 3, 4, 5, 6, 7, 8, 9, 10}));
    CHECK(fold(0, fs({7, 10, 13})) == FiniteSet::zero());
    CHECK(fold(3, fs({0, 3})) == fs({0, 3, 6, 9}));
    CHECK_THROWS_AS(fold(-1, fs({1})), ValidationError);
}

TEST_CASE("grid sets") {
    CHECK(grid_set(2, 0, 3, 1, 2) == fs({0, 3, 6}));
    CHECK(grid_set(0, 1, 3, 1, 2) == fs({0, 6}));
    CHECK(grid_set(0, 0, 5, 2, 3) == FiniteSet::zero());
    CHECK_THROWS_AS(grid_set(1, 1, 1, 3, 2), ValidationError);  // a >= b
    CHECK_THROWS_AS(grid_set(1, 1, 1, 2, 4), ValidationError);  // not coprime
}

TEST_CASE("normalize") {
    auto [o1, s1] = normalize(fs({7, 10, 13}));
    CHECK(o1 == 7);
    CHECK(s1 == fs({0, 3, 6}));
    auto [o2, s2] = normalize(fs({0, 3, 6, 9}));
    CHECK(o2 == 0);
    CHECK(s2 == fs({0, 3, 6, 9}));
    auto [o3, s3] = normalize(fs({5}));
    CHECK(o3 == 5);
    CHECK(s3 == FiniteSet::zero());
}

static std::vector<FiniteSet> five_gens() {
    return {fs({3}), fs({4}), fs({6, 12}), fs({7, 10, 13}), fs({0, 3, 6, 9})};
}

TEST_CASE("word evaluation") {
    auto gens = five_gens();
    CHECK(eval_word(word({1, 0, 0, 1, 1}), gens) == eval_word(word({0, 1, 1, 0, 1}), gens));
    CHECK(eval_word(word({0, 0, 0, 0, 0}), gens) == FiniteSet::zero());
    CHECK(eval_word(word({7, 0, 0, 0, 2}), gens) == eval_word(word({0, 0, 0, 3, 0}), gens));
    CHECK_THROWS_AS(eval_word(word({1, 2}), gens), ValidationError);
}

TEST_CASE("random algebraic laws") {
    std::mt19937 rng(20240217);
    std::uniform_int_distribution<int> size(1, 5), value(0, 30), small(0, 6);
    auto random_set = [&] {
        std::vector<Int> elems;
        int n = size(rng);
        for (int i = 0; i < n; ++i)
            elems.push_back(value(rng));
        return FiniteSet(std::move(elems));
    };
    for (int round = 0; round < 50; ++round) {
        FiniteSet a = random_set(), b = random_set(), c = random_set();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + FiniteSet::zero() == a);
        CHECK(fold(1, a) == a);
        Int alpha = small(rng), beta = small(rng);
        CHECK(fold(alpha, fold(beta, a)) == fold(alpha * beta, a));
        CHECK(fold(alpha, a + b) == fold(alpha, a) + fold(alpha, b));
    }
}

TEST_CASE("word evaluation extremes") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> value(0, 20), count(0, 4);
    auto gens = five_gens();
    for (int round = 0; round < 25; ++round) {
        GeneratorWord w;
        Int lo = 0, hi = 0;
        for (const FiniteSet& g : gens) {
            Int c = count(rng);
            w.push_back(c);
            lo += c * g.min();
            hi += c * g.max();
        }
        FiniteSet v = eval_word(w, gens);
        CHECK(v.min() == lo);
        CHECK(v.max() == hi);
        (void)value;
    }
}

TEST_CASE("grid equals folded pair by enumeration") {
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
            std::vector<Int> all;
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= m; ++j)
                    all.push_back(Int(i) * 6 + Int(j) * 10);
            CHECK(grid_set(n, m, 2, 3, 5) == FiniteSet(all));
        }
}

TEST_CASE("relation oracle") {
    auto pairs = relations_up_to_degree({fs({0, 3}), fs({0, 6})}, 3);
    WordPair expected{word({3, 0}), word({1, 1})};
    CHECK(std::find(pairs.begin(), pairs.end(), expected) != pairs.end());

    CHECK(relations_up_to_degree({fs({5})}, 4).empty());

    auto more = relations_up_to_degree(five_gens(), 3);
    WordPair witness{word({1, 0, 0, 1, 1}), word({0, 1, 1, 0, 1})};
    CHECK(std::find(more.begin(), more.end(), witness) != more.end());

    // deterministic and faithful: repeated runs agree, every pair evaluates equal
    CHECK(relations_up_to_degree(five_gens(), 3) == more);
    auto gens = five_gens();
    for (const auto& [u, v] : more) {
        CHECK(eval_word(u, gens) == eval_word(v, gens));
        CHECK(u > v);
    }
}
