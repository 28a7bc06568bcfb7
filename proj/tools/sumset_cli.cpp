// Command line front end: ideal computation, elasticity analysis, fold
// expression, raw sumset arithmetic, Hilbert bases, and oracle verification.
#include "sumset/elasticity.hpp"
#include "sumset/io_json.hpp"
#include "sumset/semigroup_ideal.hpp"
#include "sumset/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace sumset;

Json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in)
            throw ValidationError("cannot open input file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("malformed JSON input: ") + e.what());
    }
}

void emit(const Json& out) { std::cout << out.dump(2) << "\n"; }

struct LoadedIdeal {
    BinomialIdeal ideal;
    std::optional<SumsetSemigroupSpec> spec;  // present when derived from one
    std::optional<IdealResult> result;
};

// Accepts a structured spec, a raw generator list (with or without base
// parameters), or a previously emitted ideal.
LoadedIdeal load_ideal(const Json& j, int oracle_degree) {
    if (j.contains("ideal"))
        return {ideal_from_json(j), std::nullopt, std::nullopt};
    if (j.contains("generators")) {
        std::vector<FiniteSet> raw;
        for (const auto& g : j.at("generators"))
            raw.push_back(finite_set_from_json(g));
        if (j.contains("k") && j.contains("a") && j.contains("b")) {
            SumsetSemigroupSpec spec =
                recognize_generators(raw, int_from_json(j.at("k")), int_from_json(j.at("a")),
                                     int_from_json(j.at("b")));
            IdealResult result = compute_semigroup_ideal(spec);
            BinomialIdeal ideal = result.ideal;
            return {std::move(ideal), std::move(spec), std::move(result)};
        }
        // outside the singleton-plus-grid family: bounded-degree relations only
        return {bounded_relations_ideal(raw, oracle_degree), std::nullopt, std::nullopt};
    }
    SumsetSemigroupSpec spec = spec_from_json(j);
    IdealResult result = compute_semigroup_ideal(spec);
    BinomialIdeal ideal = result.ideal;
    return {std::move(ideal), std::move(spec), std::move(result)};
}

Json atoms_to_json(const std::vector<FactorizationPair>& atoms) {
    Json arr = Json::array();
    for (const auto& a : atoms)
        arr.push_back(Json{{"left", word_to_json(a.left)},
                           {"right", word_to_json(a.right)},
                           {"ratio", rational_to_string(a.ratio)}});
    return arr;
}

std::string pretty_folds(const std::vector<FiniteSet>& gens, const GeneratorWord& word) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == 0)
            continue;
        if (!first)
            out << " + ";
        out << word[i] << "⊗{";
        for (std::size_t e = 0; e < gens[i].size(); ++e)
            out << (e ? "," : "") << gens[i].elements()[e];
        out << "}";
        first = false;
    }
    if (first)
        out << "{0}";
    return out.str();
}

int run_ideal(const std::string& input, bool provenance, bool pretty) {
    Json j = read_input(input);
    LoadedIdeal loaded = load_ideal(j, 4);
    if (!loaded.result)
        throw ValidationError("the ideal command needs a spec or raw generators");
    if (pretty) {
        const auto& ideal = loaded.result->ideal;
        std::cout << "variables:";
        for (const auto& n : ideal.context().names())
            std::cout << " " << n;
        std::cout << "\nideal (" << ideal.generators().size() << " binomials):\n";
        for (const Binomial& b : ideal.generators())
            std::cout << "  " << to_text(ideal.context(), b) << "\n";
        if (provenance) {
            const auto& tr = loaded.result->trace;
            std::cout << "numerical basis (" << tr.numerical_basis.size() << "):\n";
            for (const Binomial& b : tr.numerical_basis)
                std::cout << "  " << to_text(tr.numerical_vars, b) << "\n";
            std::cout << "full basis (" << tr.full_basis.size() << "):\n";
            for (const Binomial& b : tr.full_basis)
                std::cout << "  " << to_text(tr.working_vars, b) << "\n";
        }
    } else {
        emit(result_to_json(*loaded.result, provenance));
    }
    return 0;
}

int run_elasticity(const std::string& input, int degree, bool pretty) {
    Json j = read_input(input);
    LoadedIdeal loaded = load_ideal(j, degree);
    ElasticityReport rep = analyze_elasticity(loaded.ideal);
    Json out{{"strongly_reduced", rep.strongly_reduced_ideal},
             {"lattice_saturated", rep.saturated_lattice},
             {"hilbert_basis_size", rep.pair_basis.size()}};
    out["rho"] = rep.rho ? Json(rational_to_string(*rep.rho)) : Json(nullptr);
    out["atoms_at_rho"] = atoms_to_json(rep.atoms);
    if (pretty) {
        std::cout << "strongly reduced: " << (rep.strongly_reduced_ideal ? "yes" : "no") << "\n";
        if (rep.rho)
            std::cout << "elasticity: " << rational_to_string(*rep.rho) << "\n"
                      << "pair Hilbert basis size: " << rep.pair_basis.size() << "\n";
    } else {
        emit(out);
    }
    return 0;
}

int run_acceptable(const std::string& input, int degree, bool combine, bool pretty) {
    Json j = read_input(input);
    LoadedIdeal loaded = load_ideal(j, degree);
    ElasticityReport rep = analyze_elasticity(loaded.ideal);
    if (!rep.strongly_reduced_ideal)
        throw ValidationError("acceptable elasticity requires a strongly reduced ideal");
    AcceptableOptions opts;
    opts.combine_atoms = combine;
    AcceptableResult acc = acceptable_elasticity(loaded.ideal, rep.pair_basis, opts);
    Json out{{"rho", rational_to_string(*rep.rho)},
             {"acceptable", acc.acceptable},
             {"atoms_at_rho", atoms_to_json(rep.atoms)}};
    out["witness"] =
        acc.witness ? Json(to_text(loaded.ideal.context(), *acc.witness)) : Json(nullptr);
    if (pretty) {
        std::cout << "elasticity " << rational_to_string(*rep.rho) << " is "
                  << (acc.acceptable ? "" : "not ") << "attained";
        if (acc.witness)
            std::cout << "; witness " << to_text(loaded.ideal.context(), *acc.witness);
        std::cout << "\n";
    } else {
        emit(out);
    }
    return 0;
}

int run_express(const std::string& input, const std::string& target, long long power,
                const std::string& order_arg, int degree, bool pretty) {
    Json j = read_input(input);
    LoadedIdeal loaded = load_ideal(j, degree);
    const VariableContext& ctx = loaded.ideal.context();
    std::size_t target_idx = ctx.index(target);
    MonomialOrder ord = target_priority_order(ctx.size(), target_idx);
    if (!order_arg.empty() && order_arg != "auto") {
        if (order_arg.rfind("matrix:", 0) == 0) {
            Json oj = read_input(order_arg.substr(7));
            ord = order_from_json(ctx, oj);
        } else if (order_arg == "lex") {
            std::vector<std::size_t> pr{target_idx};
            for (std::size_t i = 0; i < ctx.size(); ++i)
                if (i != target_idx)
                    pr.push_back(i);
            ord = MonomialOrder::lex(std::move(pr));
        } else {
            throw ValidationError("unknown --order value: " + order_arg);
        }
    }
    auto word = express(loaded.ideal, target_idx, Int(power), ord);
    Json out{{"target", target}, {"power", power}, {"expressible", word.has_value()}};
    if (word) {
        out["word"] = word_to_json(*word);
        out["monomial"] = to_text(ctx, Monomial(*word));
        if (loaded.spec)
            out["folds"] = pretty_folds(loaded.spec->generator_sets(), *word);
    }
    if (pretty) {
        if (!word) {
            std::cout << target << "^" << power << " is not expressible\n";
        } else {
            std::cout << target << "^" << power << " = " << to_text(ctx, Monomial(*word));
            if (loaded.spec)
                std::cout << "  i.e. " << pretty_folds(loaded.spec->generator_sets(), *word);
            std::cout << "\n";
        }
    } else {
        emit(out);
    }
    return 0;
}

int run_sumset(const std::string& input, bool pretty) {
    Json j = read_input(input);
    std::string op = j.at("op").get<std::string>();
    Json out;
    if (op == "add") {
        out["result"] = to_json(finite_set_from_json(j.at("a")) + finite_set_from_json(j.at("b")));
    } else if (op == "fold") {
        out["result"] = to_json(fold(int_from_json(j.at("count")), finite_set_from_json(j.at("a"))));
    } else if (op == "grid") {
        out["result"] = to_json(grid_set(int_from_json(j.at("n")), int_from_json(j.at("m")),
                                         int_from_json(j.at("k")), int_from_json(j.at("a")),
                                         int_from_json(j.at("b"))));
    } else if (op == "normalize") {
        auto [offset, shifted] = normalize(finite_set_from_json(j.at("a")));
        out["offset"] = int_to_json(offset);
        out["shifted"] = to_json(shifted);
    } else if (op == "eval") {
        std::vector<FiniteSet> gens;
        for (const auto& g : j.at("generators"))
            gens.push_back(finite_set_from_json(g));
        out["result"] = to_json(eval_word(word_from_json(j.at("word")), gens));
    } else {
        throw ValidationError("unknown sumset op: " + op);
    }
    if (pretty)
        std::cout << out.dump() << "\n";
    else
        emit(out);
    return 0;
}

int run_hilbert(const std::string& input, bool pairs, bool pretty) {
    Json j = read_input(input);
    DiophantineSystem sys = system_from_json(j);
    if (pairs)
        sys = pair_system(sys);
    HilbertBasisSet basis = hilbert_basis(sys);
    if (pretty) {
        std::cout << basis.size() << " basis elements\n";
        for (const auto& v : basis.elements) {
            for (std::size_t i = 0; i < v.size(); ++i)
                std::cout << (i ? " " : "") << v[i];
            std::cout << "\n";
        }
    } else {
        emit(to_json(basis));
    }
    return 0;
}

int run_verify(const std::string& input, int degree, bool pretty) {
    Json j = read_input(input);
    LoadedIdeal loaded = load_ideal(j, degree);
    if (!loaded.spec || !loaded.result)
        throw ValidationError("the verify command needs a spec or recognizable raw generators");
    VerifyReport report = verify_ideal(*loaded.result, *loaded.spec, degree);
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back(Json{{"kind", v.kind},
                                  {"left", word_to_json(v.left)},
                                  {"right", word_to_json(v.right)}});
    Json out{{"clean", report.clean()}, {"degree", degree}, {"violations", violations}};
    if (pretty)
        std::cout << (report.clean() ? "clean" : "violations found") << "\n";
    else
        emit(out);
    return report.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semigroup ideals and factorization invariants of sumset semigroups"};
    app.set_version_flag("--version", std::string("sumset ") + sumset::kVersion);
    app.require_subcommand(1);
    app.fallthrough();  // global --input/--pretty may follow the subcommand

    std::string input;
    bool pretty = false;
    app.add_option("--input", input, "input JSON file ('-' or empty reads stdin)");
    app.add_flag("--pretty", pretty, "human readable output instead of JSON");

    auto* ideal_cmd = app.add_subcommand("ideal", "compute the semigroup ideal of a generating family");
    bool provenance = false;
    ideal_cmd->add_flag("--provenance", provenance, "include the intermediate bases");

    auto* elast_cmd = app.add_subcommand("elasticity", "strongly-reduced test, elasticity, atoms");
    auto* accept_cmd = app.add_subcommand("acceptable", "decide whether the elasticity is attained");
    bool combine = false;
    accept_cmd->add_flag("--combine-atoms", combine, "also test bounded sums of elasticity atoms");

    auto* express_cmd = app.add_subcommand("express", "express a power of one generator in the others");
    std::string target, order_arg = "auto";
    long long power = 1;
    express_cmd->add_option("--target", target, "variable to express")->required();
    express_cmd->add_option("--power", power, "fold count")->required();
    express_cmd->add_option("--order", order_arg, "auto | lex | matrix:<file>");

    auto* sumset_cmd = app.add_subcommand("sumset", "finite set arithmetic: add, fold, grid, normalize, eval");
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert basis of a homogeneous system");
    bool pairs = false;
    hilbert_cmd->add_flag("--pair", pairs, "solve (A|-A)(x,y) = 0 instead of A x = 0");

    auto* verify_cmd = app.add_subcommand("verify", "cross-check an ideal against enumeration");
    int degree = 4;
    verify_cmd->add_option("--degree", degree, "relation search degree bound");
    elast_cmd->add_option("--degree", degree, "oracle degree for unrecognized generators");
    accept_cmd->add_option("--degree", degree, "oracle degree for unrecognized generators");
    express_cmd->add_option("--degree", degree, "oracle degree for unrecognized generators");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ideal_cmd->parsed())
            return run_ideal(input, provenance, pretty);
        if (elast_cmd->parsed())
            return run_elasticity(input, degree, pretty);
        if (accept_cmd->parsed())
            return run_acceptable(input, degree, combine, pretty);
        if (express_cmd->parsed())
            return run_express(input, target, power, order_arg, degree, pretty);
        if (sumset_cmd->parsed())
            return run_sumset(input, pretty);
        if (hilbert_cmd->parsed())
            return run_hilbert(input, pairs, pretty);
        if (verify_cmd->parsed())
            return run_verify(input, degree, pretty);
        std::cerr << sumset::Json{{"error", "no command"}}.dump() << "\n";
        return 1;
    } catch (const sumset::ValidationError& e) {
        std::cerr << sumset::Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << sumset::Json{{"error", e.what()}, {"internal", true}}.dump() << "\n";
        return 2;
    }
}
