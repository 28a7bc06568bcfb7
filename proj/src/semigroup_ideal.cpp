#include "sumset/semigroup_ideal.hpp"

#include <algorithm>
#include <sstream>

namespace sumset {

namespace {

std::string set_to_string(const FiniteSet& s) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out << (i ? "," : "") << s.elements()[i];
    out << "}";
    return out.str();
}

Monomial embed(const Monomial& m, std::size_t nvars, const std::vector<std::size_t>& positions) {
    std::vector<Int> exps(nvars, Int(0));
    for (std::size_t i = 0; i < m.vars(); ++i)
        exps[positions[i]] = m[i];
    return Monomial(std::move(exps));
}

Binomial embed(const Binomial& b, std::size_t nvars, const std::vector<std::size_t>& positions) {
    return Binomial(embed(b.lead(), nvars, positions), embed(b.trail(), nvars, positions));
}

Monomial project(const Monomial& m, const std::vector<std::size_t>& coords) {
    std::vector<Int> exps;
    exps.reserve(coords.size());
    for (std::size_t c : coords)
        exps.push_back(m[c]);
    return Monomial(std::move(exps));
}

}  // namespace

void SumsetSemigroupSpec::validate() const {
    if (k < 1 || a < 1 || b < 1)
        throw ValidationError("spec requires positive k, a, b");
    if (a >= b)
        throw ValidationError("spec requires a < b");
    if (int_gcd(a, b) != 1)
        throw ValidationError("spec requires a and b coprime");
    if (grid_count() == 0)
        throw ValidationError("spec requires at least one grid generator");
    for (const Int& v : singletons)
        if (v < 1)
            throw ValidationError("singleton generators must be positive");
    for (const auto& g : shifted_grids) {
        if (g.offset < 1)
            throw ValidationError("shifted grid offsets must be positive");
        if (g.n < 0 || g.m < 0 || g.n + g.m == 0)
            throw ValidationError("grid exponents must be nonnegative with n + m > 0");
    }
    for (const auto& g : pure_grids)
        if (g.n < 0 || g.m < 0 || g.n + g.m == 0)
            throw ValidationError("grid exponents must be nonnegative with n + m > 0");
}

std::vector<FiniteSet> SumsetSemigroupSpec::generator_sets() const {
    std::vector<FiniteSet> gens;
    gens.reserve(generator_count());
    for (const Int& v : singletons)
        gens.push_back(FiniteSet::singleton(v));
    for (const auto& g : shifted_grids)
        gens.push_back(FiniteSet::singleton(g.offset) + grid_set(g.n, g.m, k, a, b));
    for (const auto& g : pure_grids)
        gens.push_back(grid_set(g.n, g.m, k, a, b));
    return gens;
}

VariableContext SumsetSemigroupSpec::output_variables() const {
    return concat(numbered_variables("x", singletons.size()),
                  numbered_variables("z", grid_count()));
}

BinomialIdeal numerical_semigroup_ideal(const std::vector<Int>& gens, const VariableContext& vars) {
    if (gens.size() != vars.size())
        throw ValidationError("generator count does not match the variable context");
    for (const Int& g : gens)
        if (g < 1)
            throw ValidationError("numerical semigroup generators must be positive");
    if (gens.empty())
        return BinomialIdeal(vars, {});

    std::string tname = "t";
    while (vars.find(tname))
        tname += "_";
    VariableContext work = concat(VariableContext({tname}), vars);
    const std::size_t n = vars.size();

    std::vector<Binomial> defs;
    defs.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        defs.emplace_back(Monomial::of(n + 1, {{0, gens[i]}}),
                          Monomial::of(n + 1, {{i + 1, 1}}));

    MonomialOrder ord = MonomialOrder::lex(work.size());
    std::vector<bool> keep(n + 1, true);
    keep[0] = false;
    std::vector<Binomial> basis = eliminate(defs, ord, keep);

    std::vector<std::size_t> coords(n);
    for (std::size_t i = 0; i < n; ++i)
        coords[i] = i + 1;
    std::vector<Binomial> projected;
    projected.reserve(basis.size());
    for (const Binomial& b : basis)
        projected.emplace_back(project(b.lead(), coords), project(b.trail(), coords));
    return BinomialIdeal(vars, std::move(projected));
}

BinomialIdeal numerical_semigroup_ideal(const std::vector<Int>& gens) {
    return numerical_semigroup_ideal(gens, numbered_variables("x", gens.size()));
}

Binomial pair_ideal_generator(const Int& a, const Int& b, const Int& k) {
    if (k < 1 || a < 1 || b < 1)
        throw ValidationError("pair ideal parameters must be positive");
    if (a >= b)
        throw ValidationError("pair ideal requires a < b");
    if (int_gcd(a, b) != 1)
        throw ValidationError("pair ideal requires a and b coprime");
    // x^(2b-1) y^(a-1) - x^(b-1) y^(2a-1), the same for every k
    return Binomial(Monomial({2 * b - 1, a - 1}), Monomial({b - 1, 2 * a - 1}));
}

BinomialIdeal split_ideal(const std::vector<Int>& singletons,
                          const std::vector<FiniteSet>& zero_min_sets,
                          const BinomialIdeal& set_block_ideal) {
    for (const FiniteSet& s : zero_min_sets)
        if (s.min() != 0)
            throw ValidationError("set " + set_to_string(s) + " does not start at 0");
    if (set_block_ideal.context().size() != zero_min_sets.size())
        throw ValidationError("set-block ideal does not match the number of sets");

    VariableContext xpart = numbered_variables("x", singletons.size());
    VariableContext ctx = concat(xpart, set_block_ideal.context());
    const std::size_t n = ctx.size(), p = singletons.size();

    std::vector<Binomial> gens;
    BinomialIdeal numerical = numerical_semigroup_ideal(singletons, xpart);
    std::vector<std::size_t> xpos(p), ypos(zero_min_sets.size());
    for (std::size_t i = 0; i < p; ++i)
        xpos[i] = i;
    for (std::size_t i = 0; i < ypos.size(); ++i)
        ypos[i] = p + i;
    for (const Binomial& b : numerical.generators())
        gens.push_back(embed(b, n, xpos));
    for (const Binomial& b : set_block_ideal.generators())
        gens.push_back(embed(b, n, ypos));
    return BinomialIdeal(ctx, std::move(gens));
}

BinomialIdeal split_ideal(const std::vector<Int>& singletons,
                          const std::vector<FiniteSet>& zero_min_sets) {
    if (zero_min_sets.empty())
        return split_ideal(singletons, zero_min_sets,
                           BinomialIdeal(VariableContext(), {}));
    if (zero_min_sets.size() == 2 && zero_min_sets[0].size() == 2 &&
        zero_min_sets[1].size() == 2 && zero_min_sets[0].min() == 0 &&
        zero_min_sets[1].min() == 0) {
        Int ka = zero_min_sets[0].max(), kb = zero_min_sets[1].max();
        Int k = int_gcd(ka, kb);
        Int a = ka / k, b = kb / k;
        if (a < b) {
            Binomial gen = pair_ideal_generator(a, b, k);
            return split_ideal(singletons, zero_min_sets,
                               BinomialIdeal(VariableContext({"x", "y"}), {gen}));
        }
    }
    throw ValidationError(
        "no closed form for this set family; supply the set-block ideal explicitly");
}

IdealResult compute_semigroup_ideal(const SumsetSemigroupSpec& spec) {
    spec.validate();
    const std::size_t p = spec.singletons.size();
    const std::size_t s = spec.shifted_grids.size();
    const std::size_t t = spec.grid_count();

    PipelineTrace trace;

    // ideal of the singleton semigroup <b_1..b_p, a_1..a_s>
    std::vector<Int> values = spec.singletons;
    for (const auto& g : spec.shifted_grids)
        values.push_back(g.offset);
    trace.numerical_vars =
        concat(numbered_variables("x", p), numbered_variables("w", s));
    BinomialIdeal numerical = numerical_semigroup_ideal(values, trace.numerical_vars);
    trace.numerical_basis = numerical.generators();

    // working variables in elimination priority: x > y > w_i > x_j > z_l
    VariableContext work = concat(VariableContext({"x", "y"}),
                                  concat(numbered_variables("w", s),
                                         concat(numbered_variables("x", p),
                                                numbered_variables("z", t))));
    trace.working_vars = work;
    const std::size_t nw = work.size();
    const std::size_t wbase = 2, xbase = 2 + s, zbase = 2 + s + p;

    std::vector<std::size_t> numpos(p + s);
    for (std::size_t j = 0; j < p; ++j)
        numpos[j] = xbase + j;
    for (std::size_t i = 0; i < s; ++i)
        numpos[p + i] = wbase + i;

    std::vector<Binomial> base;
    for (const Binomial& b : numerical.generators())
        base.push_back(embed(b, nw, numpos));
    base.push_back(embed(pair_ideal_generator(spec.a, spec.b, spec.k), nw, {0, 1}));
    trace.base_generators = base;

    std::vector<Binomial> extended = base;
    for (std::size_t i = 0; i < s; ++i) {
        const auto& g = spec.shifted_grids[i];
        extended.emplace_back(
            Monomial::of(nw, {{zbase + i, 1}}),
            Monomial::of(nw, {{wbase + i, 1}, {0, g.n}, {1, g.m}}));
    }
    for (std::size_t j = 0; j < spec.pure_grids.size(); ++j) {
        const auto& g = spec.pure_grids[j];
        extended.emplace_back(Monomial::of(nw, {{zbase + s + j, 1}}),
                              Monomial::of(nw, {{0, g.n}, {1, g.m}}));
    }
    trace.extended_generators = extended;

    MonomialOrder ord = MonomialOrder::lex(nw);
    trace.full_basis = buchberger(extended, ord);

    std::vector<bool> keep(nw, false);
    std::vector<std::size_t> coords;
    coords.reserve(p + t);
    for (std::size_t j = 0; j < p; ++j) {
        keep[xbase + j] = true;
        coords.push_back(xbase + j);
    }
    for (std::size_t l = 0; l < t; ++l) {
        keep[zbase + l] = true;
        coords.push_back(zbase + l);
    }
    std::vector<Binomial> restricted;
    for (const Binomial& b : trace.full_basis)
        if (supported_on(b.lead(), keep) && supported_on(b.trail(), keep))
            restricted.emplace_back(project(b.lead(), coords), project(b.trail(), coords));

    return IdealResult{BinomialIdeal(spec.output_variables(), std::move(restricted)),
                       std::move(trace)};
}

SumsetSemigroupSpec recognize_generators(const std::vector<FiniteSet>& raw, const Int& k,
                                         const Int& a, const Int& b) {
    if (k < 1 || a < 1 || b < 1 || a >= b || int_gcd(a, b) != 1)
        throw ValidationError("recognition requires k >= 1 and coprime a < b");
    SumsetSemigroupSpec spec;
    spec.k = k;
    spec.a = a;
    spec.b = b;
    const Int ka = k * a, kb = k * b;
    for (const FiniteSet& set : raw) {
        if (set.size() == 1) {
            if (set.min() == 0)
                throw ValidationError("generator {0} is the identity and not allowed");
            spec.singletons.push_back(set.min());
            continue;
        }
        auto [offset, tilde] = normalize(set);
        bool found = false;
        Int n = 0, m = 0;
        // smallest m whose grid reproduces the shifted set; n is forced by the maximum
        for (Int mc = 0; mc * kb <= tilde.max() && !found; ++mc) {
            Int rem = tilde.max() - mc * kb;
            if (rem % ka != 0)
                continue;
            Int nc = rem / ka;
            if (grid_set(nc, mc, k, a, b) == tilde) {
                n = nc;
                m = mc;
                found = true;
            }
        }
        if (!found)
            throw ValidationError("generator " + set_to_string(set) +
                                  " is not of the form {offset}+grid for k=" + k.str() +
                                  ", a=" + a.str() + ", b=" + b.str());
        if (offset == 0)
            spec.pure_grids.push_back({n, m});
        else
            spec.shifted_grids.push_back({offset, n, m});
    }
    spec.validate();
    return spec;
}

BinomialIdeal bounded_relations_ideal(const std::vector<FiniteSet>& gens, int degree,
                                      const VariableContext& vars) {
    if (vars.size() != gens.size())
        throw ValidationError("variable context does not match the generator count");
    std::vector<Binomial> binomials;
    for (const auto& [u, v] : relations_up_to_degree(gens, degree))
        binomials.emplace_back(Monomial(u), Monomial(v));
    return BinomialIdeal(vars, std::move(binomials));
}

BinomialIdeal bounded_relations_ideal(const std::vector<FiniteSet>& gens, int degree) {
    return bounded_relations_ideal(gens, degree, numbered_variables("g", gens.size()));
}

VerifyReport verify_ideal(const IdealResult& result, const SumsetSemigroupSpec& spec,
                          int degree) {
    VerifyReport report;
    std::vector<FiniteSet> gens = spec.generator_sets();
    for (const Binomial& b : result.ideal.generators()) {
        GeneratorWord left = b.lead().exponents(), right = b.trail().exponents();
        if (eval_word(left, gens) != eval_word(right, gens))
            report.violations.push_back({"evaluation_mismatch", left, right});
    }
    MonomialOrder ord = MonomialOrder::lex(result.ideal.context().size());
    for (const auto& [u, v] : relations_up_to_degree(gens, degree)) {
        auto f = make_binomial(Monomial(u), Monomial(v));
        if (!contains_binomial(result.ideal, f, ord))
            report.violations.push_back({"missing_relation", u, v});
    }
    return report;
}

}  // namespace sumset
