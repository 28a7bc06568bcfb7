#include "golden/worked_cases.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace testsup;

namespace {

SumsetSemigroupSpec five_gen_spec() {
    SumsetSemigroupSpec spec;
    spec.singletons = {3, 4};
    spec.k = 3;
    spec.a = 1;
    spec.b = 2;
    spec.shifted_grids = {{6, 0, 1}, {7, 2, 0}};
    spec.pure_grids = {{3, 0}};
    return spec;
}

}  // namespace

TEST_CASE("numerical semigroup ideals") {
    VariableContext two({"x1", "x2"});
    BinomialIdeal i23 = numerical_semigroup_ideal({2, 3}, two);
    REQUIRE(i23.generators().size() == 1);
    CHECK(to_text(two, i23.generators()[0]) == "x1^3 - x2^2");
    // cross-checked against enumeration on the singleton semigroup
    auto pairs = relations_up_to_degree({fs({2}), fs({3})}, 4);
    MonomialOrder ord = MonomialOrder::lex(2);
    for (const auto& [u, v] : pairs)
        CHECK(contains_binomial(i23, make_binomial(Monomial(u), Monomial(v)), ord));

    CHECK(numerical_semigroup_ideal({5}).generators().empty());
    CHECK_THROWS_AS(numerical_semigroup_ideal({3, 0}), ValidationError);

    VariableContext four({"x1", "x2", "w1", "w2"});
    BinomialIdeal g1 = numerical_semigroup_ideal({3, 4, 6, 7}, four);
    CHECK(same_binomial_set(g1.generators(),
                            parse_basis(four, golden::five_gen::kNumericalBasis)));
}

TEST_CASE("pair ideal generator") {
    VariableContext xy({"x", "y"});
    CHECK(to_text(xy, pair_ideal_generator(1, 2, 3)) == "x^3 - x*y");
    CHECK(to_text(xy, pair_ideal_generator(2, 3, 1)) == "x^5*y - x^2*y^3");
    CHECK(pair_ideal_generator(1, 2, 1) == pair_ideal_generator(1, 2, 3));
    CHECK_THROWS_AS(pair_ideal_generator(2, 4, 1), ValidationError);
    CHECK_THROWS_AS(pair_ideal_generator(3, 2, 1), ValidationError);

    // the generator is a genuine relation of <{0,ka},{0,kb}>
    Binomial g = pair_ideal_generator(2, 3, 1);
    std::vector<FiniteSet> gens{fs({0, 2}), fs({0, 3})};
    CHECK(eval_word(g.lead().exponents(), gens) == eval_word(g.trail().exponents(), gens));
}

TEST_CASE("minimal pair relations match the closed form") {
    for (int b = 2; b <= 5; ++b)
        for (int a = 1; a < b; ++a) {
            if (int_gcd(a, b) != 1)
                continue;
            for (int k = 1; k <= 3; ++k) {
                std::vector<FiniteSet> gens{grid_set(1, 0, k, a, b), grid_set(0, 1, k, a, b)};
                auto pairs = relations_up_to_degree(gens, 2 * a + 2 * b);
                REQUIRE_FALSE(pairs.empty());
                auto size_of = [](const WordPair& p) {
                    return word_degree(p.first) + word_degree(p.second);
                };
                WordPair minimal = *std::min_element(
                    pairs.begin(), pairs.end(), [&](const WordPair& p, const WordPair& q) {
                        if (size_of(p) != size_of(q))
                            return size_of(p) < size_of(q);
                        return p < q;
                    });
                Binomial expected = pair_ideal_generator(a, b, k);
                CHECK(minimal.first == expected.lead().exponents());
                CHECK(minimal.second == expected.trail().exponents());
                int count_at_min = 0;
                for (const auto& p : pairs)
                    if (size_of(p) == size_of(minimal))
                        ++count_at_min;
                CHECK(count_at_min == 1);

                // structural facts about every relation of the pair semigroup
                for (const auto& [u, v] : pairs) {
                    const Int &al = u[0], &be = u[1], &ga = v[0], &de = v[1];
                    CHECK(al != ga);
                    CHECK(be != de);
                    CHECK(al >= 1);
                    CHECK(be >= 1);
                    CHECK(ga >= 1);
                    CHECK(de >= 1);
                    CHECK(ga >= b - 1);
                    CHECK(be >= a - 1);
                    // u is lex-greater, so the x exponent grows by a multiple of b
                    Int dx = al - ga, dy = de - be;
                    CHECK(dx > 0);
                    CHECK(dx % b == 0);
                    CHECK(dy == dx / b * a);
                }
            }
        }
}

TEST_CASE("split ideals") {
    BinomialIdeal split = split_ideal({3, 4, 6, 7}, {fs({0, 3}), fs({0, 6})});
    VariableContext ctx = split.context();
    CHECK(ctx.names() == std::vector<std::string>{"x1", "x2", "x3", "x4", "x", "y"});
    // the set block contributes exactly the closed-form generator
    CHECK(std::count_if(split.generators().begin(), split.generators().end(),
                        [&](const Binomial& b) {
                            return to_text(ctx, b) == "x^3 - x*y";
                        }) == 1);
    // and the singleton block the ideal of <3,4,6,7>
    CHECK(split.generators().size() == 10);

    BinomialIdeal pair_only = split_ideal({}, {fs({0, 2}), fs({0, 3})});
    REQUIRE(pair_only.generators().size() == 1);
    CHECK(to_text(pair_only.context(), pair_only.generators()[0]) == "x^5*y - x^2*y^3");

    CHECK(split_ideal({5}, {}).generators().empty());
    CHECK_THROWS_AS(split_ideal({5}, {fs({1, 3})}), ValidationError);
    CHECK_THROWS_AS(split_ideal({5}, {fs({0, 2}), fs({0, 3}), fs({0, 5})}), ValidationError);
}

TEST_CASE("ideal pipeline reproduces the worked family") {
    IdealResult result = compute_semigroup_ideal(five_gen_spec());

    CHECK(same_binomial_set(
        result.trace.numerical_basis,
        parse_basis(result.trace.numerical_vars, golden::five_gen::kNumericalBasis)));
    CHECK(same_binomial_set(
        result.trace.full_basis,
        parse_basis(result.trace.working_vars, golden::five_gen::kFullBasis)));

    const VariableContext& out = result.ideal.context();
    CHECK(out.names() == std::vector<std::string>{"x1", "x2", "z1", "z2", "z3"});
    REQUIRE(result.ideal.generators().size() == 25);
    for (std::size_t i = 0; i < 25; ++i)
        CHECK(to_text(out, result.ideal.generators()[i]) == golden::five_gen::kIdeal[i]);
}

TEST_CASE("single free grid generator yields the zero ideal") {
    SumsetSemigroupSpec spec;
    spec.k = 2;
    spec.a = 1;
    spec.b = 3;
    spec.pure_grids = {{1, 0}};
    CHECK(compute_semigroup_ideal(spec).ideal.generators().empty());
}

TEST_CASE("pipeline agrees with the split construction on pure families") {
    SumsetSemigroupSpec spec;
    spec.k = 2;
    spec.a = 1;
    spec.b = 2;
    spec.singletons = {5};
    spec.pure_grids = {{1, 0}, {0, 1}};
    IdealResult piped = compute_semigroup_ideal(spec);
    BinomialIdeal split = split_ideal({5}, {fs({0, 2}), fs({0, 4})});
    // same exponent structure in matching variable order
    auto exps = [](const std::vector<Binomial>& bs) {
        std::vector<std::pair<std::vector<Int>, std::vector<Int>>> out;
        for (const Binomial& b : bs)
            out.emplace_back(b.lead().exponents(), b.trail().exponents());
        std::sort(out.begin(), out.end());
        return out;
    };
    MonomialOrder ord = MonomialOrder::lex(3);
    CHECK(exps(buchberger(piped.ideal.generators(), ord)) ==
          exps(buchberger(split.generators(), ord)));
}

TEST_CASE("generator recognition") {
    std::vector<FiniteSet> raw{fs({3}), fs({4}), fs({6, 12}), fs({7, 10, 13}),
                               fs({0, 3, 6, 9})};
    SumsetSemigroupSpec spec = recognize_generators(raw, 3, 1, 2);
    CHECK(spec.singletons == std::vector<Int>{3, 4});
    REQUIRE(spec.shifted_grids.size() == 2);
    CHECK(spec.shifted_grids[0].offset == 6);
    CHECK(spec.shifted_grids[0].n == 0);
    CHECK(spec.shifted_grids[0].m == 1);
    CHECK(spec.shifted_grids[1].offset == 7);
    CHECK(spec.shifted_grids[1].n == 2);
    CHECK(spec.shifted_grids[1].m == 0);
    REQUIRE(spec.pure_grids.size() == 1);
    CHECK(spec.pure_grids[0].n == 3);
    CHECK(spec.pure_grids[0].m == 0);

    SumsetSemigroupSpec other = recognize_generators({fs({5, 8, 11}), fs({0, 6})}, 3, 1, 2);
    CHECK(other.singletons.empty());
    REQUIRE(other.shifted_grids.size() == 1);
    CHECK(other.shifted_grids[0].offset == 5);
    CHECK(other.shifted_grids[0].n == 2);
    CHECK(other.shifted_grids[0].m == 0);
    REQUIRE(other.pure_grids.size() == 1);
    CHECK(other.pure_grids[0].n == 0);
    CHECK(other.pure_grids[0].m == 1);

    CHECK_THROWS_WITH_AS(recognize_generators({fs({1, 2})}, 3, 1, 2),
                         doctest::Contains("{1,2}"), ValidationError);
    CHECK_THROWS_AS(recognize_generators({fs({0})}, 3, 1, 2), ValidationError);
}

TEST_CASE("oracle verification") {
    IdealResult result = compute_semigroup_ideal(five_gen_spec());
    CHECK(verify_ideal(result, five_gen_spec(), 3).clean());

    // a planted bogus binomial is reported
    IdealResult bogus = result;
    std::vector<Binomial> gens = bogus.ideal.generators();
    gens.push_back(binomial_from_text(bogus.ideal.context(), "x1 - x2"));
    bogus.ideal = BinomialIdeal(bogus.ideal.context(), gens);
    VerifyReport report = verify_ideal(bogus, five_gen_spec(), 2);
    REQUIRE_FALSE(report.clean());
    CHECK(report.violations[0].kind == "evaluation_mismatch");
    CHECK(report.violations[0].left == word({1, 0, 0, 0, 0}));

    SumsetSemigroupSpec free_spec;
    free_spec.k = 1;
    free_spec.a = 1;
    free_spec.b = 2;
    free_spec.pure_grids = {{1, 0}};
    IdealResult free_result = compute_semigroup_ideal(free_spec);
    CHECK(verify_ideal(free_result, free_spec, 5).clean());
}

TEST_CASE("randomized small specs are sound and complete at low degree") {
    std::mt19937 rng(424242);
    for (int round = 0; round < 20; ++round) {
        SumsetSemigroupSpec spec = random_small_spec(rng);
        CAPTURE(round);
        IdealResult result = compute_semigroup_ideal(spec);
        VerifyReport report = verify_ideal(result, spec, 4);
        CHECK(report.clean());
    }
}
