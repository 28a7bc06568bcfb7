#include "sumset/elasticity.hpp"

#include <algorithm>

namespace sumset {

namespace {

Int coord_sum(const std::vector<Int>& v, std::size_t from, std::size_t to) {
    Int s = 0;
    for (std::size_t i = from; i < to; ++i)
        s += v[i];
    return s;
}

Rational max_ratio(const HilbertBasisSet& pair_basis) {
    Rational rho = 1;
    for (const auto& v : pair_basis.elements) {
        const std::size_t n = v.size() / 2;
        Int num = coord_sum(v, 0, n), den = coord_sum(v, n, v.size());
        if (den == 0)
            throw InternalError("pair solution with empty right factorization");
        Rational r(num, den);
        if (r > rho)
            rho = r;
    }
    return rho;
}

// graded-lex key for choosing a deterministic witness
bool witness_less(const Binomial& a, const Binomial& b) {
    Int da = a.lead().degree() + a.trail().degree();
    Int db = b.lead().degree() + b.trail().degree();
    if (da != db)
        return da < db;
    if (a.lead() != b.lead()) {
        if (a.lead().degree() != b.lead().degree())
            return a.lead().degree() < b.lead().degree();
        return a.lead() < b.lead();
    }
    return a.trail() < b.trail();
}

}  // namespace

bool strongly_reduced(const BinomialIdeal& ideal) {
    DiophantineSystem eq = lattice_equations(lattice_from_ideal(ideal));
    return hilbert_basis(eq).empty();
}

Rational elasticity(const BinomialIdeal& ideal) {
    DiophantineSystem eq = lattice_equations(lattice_from_ideal(ideal));
    if (!hilbert_basis(eq).empty())
        throw ValidationError("elasticity requires a strongly reduced ideal");
    return max_ratio(hilbert_basis(pair_system(eq)));
}

std::vector<FactorizationPair> elasticity_atoms(const HilbertBasisSet& pair_basis,
                                                const Rational& rho) {
    std::vector<FactorizationPair> atoms;
    for (const auto& v : pair_basis.elements) {
        const std::size_t n = v.size() / 2;
        Rational r(coord_sum(v, 0, n), coord_sum(v, n, v.size()));
        if (r == rho)
            atoms.push_back({GeneratorWord(v.begin(), v.begin() + n),
                             GeneratorWord(v.begin() + n, v.end()), r});
    }
    return atoms;
}

AcceptableResult acceptable_elasticity(const BinomialIdeal& ideal,
                                       const HilbertBasisSet& pair_basis,
                                       const AcceptableOptions& options) {
    if (!strongly_reduced(ideal))
        throw ValidationError("acceptable elasticity requires a strongly reduced ideal");

    const std::size_t n = ideal.context().size();
    Rational rho = max_ratio(pair_basis);
    if (rho == 1)
        return {true, std::nullopt};  // every element attains ratio 1

    std::vector<FactorizationPair> atoms = elasticity_atoms(pair_basis, rho);
    MonomialOrder lex = MonomialOrder::lex(n);
    std::vector<Binomial> candidates;

    // direct route: an atom pair that is itself a relation
    for (const auto& atom : atoms) {
        auto f = make_binomial(Monomial(atom.left), Monomial(atom.right));
        if (f && ideal.contains(*f, lex))
            candidates.push_back(*f);
    }

    // elimination route: keep only the variables supporting the atoms
    std::vector<bool> keep(n, false);
    for (const auto& atom : atoms)
        for (std::size_t i = 0; i < n; ++i)
            if (atom.left[i] > 0 || atom.right[i] > 0)
                keep[i] = true;
    std::vector<std::size_t> priority;
    for (std::size_t i = 0; i < n; ++i)
        if (!keep[i])
            priority.push_back(i);
    for (std::size_t i = 0; i < n; ++i)
        if (keep[i])
            priority.push_back(i);
    MonomialOrder elim_order = MonomialOrder::lex(std::move(priority));
    for (const Binomial& g : eliminate(ideal.generators(), elim_order, keep)) {
        Int dl = g.lead().degree(), dt = g.trail().degree();
        if (dl == dt)
            continue;
        Rational r = dl > dt ? Rational(dl, dt) : Rational(dt, dl);
        if (r == rho)
            candidates.push_back(dl > dt ? g : Binomial(g.trail(), g.lead()));
    }

    // optional route: bounded sums of atoms
    if (options.combine_atoms && !atoms.empty()) {
        std::vector<std::pair<GeneratorWord, GeneratorWord>> frontier;
        for (const auto& atom : atoms)
            frontier.emplace_back(atom.left, atom.right);
        for (int depth = 2; depth <= options.combine_depth; ++depth) {
            std::vector<std::pair<GeneratorWord, GeneratorWord>> next;
            for (const auto& [l, r] : frontier)
                for (const auto& atom : atoms) {
                    GeneratorWord nl = l, nr = r;
                    for (std::size_t i = 0; i < n; ++i) {
                        nl[i] += atom.left[i];
                        nr[i] += atom.right[i];
                    }
                    next.emplace_back(std::move(nl), std::move(nr));
                }
            for (const auto& [l, r] : next) {
                auto f = make_binomial(Monomial(l), Monomial(r));
                if (f && ideal.contains(*f, lex))
                    candidates.push_back(*f);
            }
            frontier = std::move(next);
        }
    }

    if (candidates.empty())
        return {false, std::nullopt};
    return {true, *std::min_element(candidates.begin(), candidates.end(), witness_less)};
}

std::optional<GeneratorWord> express(const BinomialIdeal& ideal, std::size_t target_var,
                                     const Int& power, const MonomialOrder& priority) {
    const std::size_t n = ideal.context().size();
    if (target_var >= n)
        throw ValidationError("target variable index out of range");
    if (power < 1)
        throw ValidationError("power must be positive");
    if (priority.vars() != n)
        throw ValidationError("priority order does not match the ideal's variables");
    auto basis = ideal.groebner_basis(priority);
    Monomial nf = normal_form(Monomial::of(n, {{target_var, power}}), *basis, priority);
    if (nf[target_var] != 0)
        return std::nullopt;
    return nf.exponents();
}

MonomialOrder target_priority_order(std::size_t nvars, std::size_t target_var) {
    if (target_var >= nvars)
        throw ValidationError("target variable index out of range");
    std::vector<std::vector<Int>> rows;
    std::vector<Int> first(nvars, Int(0));
    first[target_var] = 1;
    rows.push_back(std::move(first));
    if (nvars > 1) {
        std::vector<Int> second(nvars, Int(1));
        second[target_var] = 0;
        rows.push_back(std::move(second));
        std::size_t added = 0;
        for (std::size_t i = 0; i < nvars && added + 2 < nvars; ++i) {
            if (i == target_var)
                continue;
            std::vector<Int> row(nvars, Int(0));
            row[i] = 1;
            rows.push_back(std::move(row));
            ++added;
        }
    }
    return MonomialOrder::matrix(std::move(rows));
}

GeneratorWord fold_expression_closed_form(const Int& i) {
    if (i < 3)
        throw ValidationError("the closed form holds for folds of at least 3");
    auto mod_floor = [](Int v, const Int& md) {
        Int r = v % md;
        if (r < 0)
            r += md;
        return r;
    };
    GeneratorWord word(5, Int(0));
    word[0] = mod_floor(2 - i, 4);
    word[1] = (i + 1) / 4 + 2 + mod_floor(i - 3, 4);
    word[2] = i - 3;
    word[4] = 2;
    return word;
}

ElasticityReport analyze_elasticity(const BinomialIdeal& ideal) {
    ElasticityReport report;
    IntegerLattice lattice = lattice_from_ideal(ideal);
    report.saturated_lattice = is_saturated(lattice);
    DiophantineSystem eq = lattice_equations(lattice);
    report.strongly_reduced_ideal = hilbert_basis(eq).empty();
    if (!report.strongly_reduced_ideal)
        return report;
    report.pair_basis = hilbert_basis(pair_system(eq));
    report.rho = max_ratio(report.pair_basis);
    report.atoms = elasticity_atoms(report.pair_basis, *report.rho);
    return report;
}

}  // namespace sumset
