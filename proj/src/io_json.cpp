#include "sumset/io_json.hpp"

#include <sstream>

namespace sumset {

Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer())
        return Int(j.get<std::int64_t>());
    if (j.is_string())
        return Int(j.get<std::string>());
    throw ValidationError("expected an integer or integer string, got: " + j.dump());
}

Json to_json(const FiniteSet& s) {
    Json arr = Json::array();
    for (const Int& v : s.elements())
        arr.push_back(int_to_json(v));
    return arr;
}

FiniteSet finite_set_from_json(const Json& j) {
    if (!j.is_array())
        throw ValidationError("a finite set must be a JSON array of integers");
    std::vector<Int> elems;
    for (const auto& v : j)
        elems.push_back(int_from_json(v));
    return FiniteSet(std::move(elems));
}

Json word_to_json(const GeneratorWord& w) {
    Json arr = Json::array();
    for (const Int& v : w)
        arr.push_back(int_to_json(v));
    return arr;
}

GeneratorWord word_from_json(const Json& j) {
    if (!j.is_array())
        throw ValidationError("a word must be a JSON array of integers");
    GeneratorWord w;
    for (const auto& v : j)
        w.push_back(int_from_json(v));
    return w;
}

std::string to_text(const VariableContext& ctx, const Monomial& m) {
    if (m.vars() != ctx.size())
        throw ValidationError("monomial does not match the variable context");
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < m.vars(); ++i) {
        if (m[i] == 0)
            continue;
        if (!first)
            out << "*";
        out << ctx.name(i);
        if (m[i] != 1)
            out << "^" << m[i];
        first = false;
    }
    if (first)
        out << "1";
    return out.str();
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Monomial monomial_from_text(const VariableContext& ctx, std::string_view text) {
    text = strip(text);
    std::vector<Int> exps(ctx.size(), Int(0));
    if (text == "1")
        return Monomial(std::move(exps));
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t star = text.find('*', pos);
        std::string_view factor =
            strip(text.substr(pos, star == std::string_view::npos ? star : star - pos));
        if (factor.empty())
            throw ValidationError("empty factor in monomial: " + std::string(text));
        std::size_t caret = factor.find('^');
        std::string name(strip(factor.substr(0, caret)));
        Int exp = 1;
        if (caret != std::string_view::npos) {
            std::string digits(strip(factor.substr(caret + 1)));
            if (digits.empty())
                throw ValidationError("missing exponent in monomial: " + std::string(text));
            exp = Int(digits);
        }
        if (exp < 1)
            throw ValidationError("monomial exponents must be positive in text form");
        exps[ctx.index(name)] += exp;
        if (star == std::string_view::npos)
            break;
        pos = star + 1;
    }
    return Monomial(std::move(exps));
}

std::string to_text(const VariableContext& ctx, const Binomial& b) {
    return to_text(ctx, b.lead()) + " - " + to_text(ctx, b.trail());
}

Binomial binomial_from_text(const VariableContext& ctx, std::string_view text) {
    std::size_t sep = text.find(" - ");
    if (sep == std::string_view::npos)
        throw ValidationError("binomial text must contain ' - ': " + std::string(text));
    return Binomial(monomial_from_text(ctx, text.substr(0, sep)),
                    monomial_from_text(ctx, text.substr(sep + 3)));
}

namespace {

Json monomial_to_json(const VariableContext& ctx, const Monomial& m) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < m.vars(); ++i)
        if (m[i] != 0)
            obj[ctx.name(i)] = int_to_json(m[i]);
    return obj;
}

Monomial monomial_from_json(const VariableContext& ctx, const Json& j) {
    if (!j.is_object())
        throw ValidationError("a monomial must be a JSON object of exponents");
    std::vector<Int> exps(ctx.size(), Int(0));
    for (const auto& [name, value] : j.items())
        exps[ctx.index(name)] = int_from_json(value);
    return Monomial(std::move(exps));
}

}  // namespace

Json to_json(const VariableContext& ctx, const Binomial& b) {
    return Json{{"lead", monomial_to_json(ctx, b.lead())},
                {"trail", monomial_to_json(ctx, b.trail())}};
}

Binomial binomial_from_json(const VariableContext& ctx, const Json& j) {
    if (!j.contains("lead") || !j.contains("trail"))
        throw ValidationError("a binomial needs 'lead' and 'trail' objects");
    return Binomial(monomial_from_json(ctx, j.at("lead")),
                    monomial_from_json(ctx, j.at("trail")));
}

Json order_to_json(const VariableContext& ctx, const MonomialOrder& ord) {
    switch (ord.kind()) {
    case MonomialOrder::Kind::lex: {
        Json vars = Json::array();
        for (std::size_t v : ord.lex_priority())
            vars.push_back(ctx.name(v));
        return Json{{"kind", "lex"}, {"vars", vars}};
    }
    case MonomialOrder::Kind::matrix: {
        Json rows = Json::array();
        for (const auto& row : ord.matrix_rows()) {
            Json r = Json::array();
            for (const Int& v : row)
                r.push_back(int_to_json(v));
            rows.push_back(r);
        }
        return Json{{"kind", "matrix"}, {"rows", rows}};
    }
    case MonomialOrder::Kind::block: {
        Json front_vars = Json::array(), back_vars = Json::array();
        std::vector<std::string> front_names, back_names;
        for (std::size_t v : ord.front_vars()) {
            front_vars.push_back(ctx.name(v));
            front_names.push_back(ctx.name(v));
        }
        for (std::size_t v : ord.back_vars()) {
            back_vars.push_back(ctx.name(v));
            back_names.push_back(ctx.name(v));
        }
        return Json{{"kind", "block"},
                    {"front_vars", front_vars},
                    {"front", order_to_json(VariableContext(front_names), ord.front_order())},
                    {"back_vars", back_vars},
                    {"back", order_to_json(VariableContext(back_names), ord.back_order())}};
    }
    }
    throw InternalError("unknown order kind");
}

MonomialOrder order_from_json(const VariableContext& ctx, const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "lex") {
        std::vector<std::string> names;
        for (const auto& v : j.at("vars"))
            names.push_back(v.get<std::string>());
        return MonomialOrder::lex_names(ctx, names);
    }
    if (kind == "matrix") {
        std::vector<std::vector<Int>> rows;
        for (const auto& r : j.at("rows")) {
            std::vector<Int> row;
            for (const auto& v : r)
                row.push_back(int_from_json(v));
            rows.push_back(std::move(row));
        }
        return MonomialOrder::matrix(std::move(rows));
    }
    if (kind == "block") {
        std::vector<std::string> front_names, back_names;
        for (const auto& v : j.at("front_vars"))
            front_names.push_back(v.get<std::string>());
        for (const auto& v : j.at("back_vars"))
            back_names.push_back(v.get<std::string>());
        std::vector<std::size_t> front_idx, back_idx;
        for (const auto& n : front_names)
            front_idx.push_back(ctx.index(n));
        for (const auto& n : back_names)
            back_idx.push_back(ctx.index(n));
        return MonomialOrder::block(
            front_idx, order_from_json(VariableContext(front_names), j.at("front")),
            back_idx, order_from_json(VariableContext(back_names), j.at("back")));
    }
    throw ValidationError("unknown order kind: " + kind);
}

Json to_json(const SumsetSemigroupSpec& spec) {
    Json singles = Json::array();
    for (const Int& v : spec.singletons)
        singles.push_back(int_to_json(v));
    Json shifted = Json::array();
    for (const auto& g : spec.shifted_grids)
        shifted.push_back(Json{{"a", int_to_json(g.offset)},
                               {"n", int_to_json(g.n)},
                               {"m", int_to_json(g.m)}});
    Json pure = Json::array();
    for (const auto& g : spec.pure_grids)
        pure.push_back(Json{{"n", int_to_json(g.n)}, {"m", int_to_json(g.m)}});
    return Json{{"singletons", singles},
                {"k", int_to_json(spec.k)},
                {"a", int_to_json(spec.a)},
                {"b", int_to_json(spec.b)},
                {"shifted_grids", shifted},
                {"pure_grids", pure}};
}

SumsetSemigroupSpec spec_from_json(const Json& j) {
    SumsetSemigroupSpec spec;
    spec.k = int_from_json(j.at("k"));
    spec.a = int_from_json(j.at("a"));
    spec.b = int_from_json(j.at("b"));
    if (j.contains("singletons"))
        for (const auto& v : j.at("singletons"))
            spec.singletons.push_back(int_from_json(v));
    if (j.contains("shifted_grids"))
        for (const auto& g : j.at("shifted_grids"))
            spec.shifted_grids.push_back({int_from_json(g.at("a")), int_from_json(g.at("n")),
                                          int_from_json(g.at("m"))});
    if (j.contains("pure_grids"))
        for (const auto& g : j.at("pure_grids"))
            spec.pure_grids.push_back({int_from_json(g.at("n")), int_from_json(g.at("m"))});
    spec.validate();
    return spec;
}

Json to_json(const DiophantineSystem& sys) {
    Json rows = Json::array();
    for (const auto& row : sys.equations) {
        Json r = Json::array();
        for (const Int& v : row)
            r.push_back(int_to_json(v));
        rows.push_back(r);
    }
    return Json{{"equations", rows}, {"vars", sys.vars}};
}

DiophantineSystem system_from_json(const Json& j) {
    DiophantineSystem sys;
    if (!j.contains("equations"))
        throw ValidationError("a system needs an 'equations' array");
    for (const auto& r : j.at("equations")) {
        std::vector<Int> row;
        for (const auto& v : r)
            row.push_back(int_from_json(v));
        sys.equations.push_back(std::move(row));
    }
    if (j.contains("vars"))
        sys.vars = j.at("vars").get<std::size_t>();
    else if (!sys.equations.empty())
        sys.vars = sys.equations[0].size();
    else
        throw ValidationError("a system without equations needs an explicit 'vars' count");
    sys.validate();
    return sys;
}

Json to_json(const HilbertBasisSet& basis) {
    Json arr = Json::array();
    for (const auto& v : basis.elements)
        arr.push_back(word_to_json(v));
    return Json{{"elements", arr}};
}

Json ideal_to_json(const BinomialIdeal& ideal) {
    Json vars = Json::array();
    for (const auto& n : ideal.context().names())
        vars.push_back(n);
    Json gens = Json::array();
    for (const Binomial& b : ideal.generators())
        gens.push_back(to_json(ideal.context(), b));
    return Json{{"variables", vars}, {"ideal", gens}};
}

BinomialIdeal ideal_from_json(const Json& j) {
    std::vector<std::string> names;
    for (const auto& v : j.at("variables"))
        names.push_back(v.get<std::string>());
    VariableContext ctx(std::move(names));
    std::vector<Binomial> gens;
    for (const auto& g : j.at("ideal")) {
        if (g.is_string())
            gens.push_back(binomial_from_text(ctx, g.get<std::string>()));
        else
            gens.push_back(binomial_from_json(ctx, g));
    }
    return BinomialIdeal(std::move(ctx), std::move(gens));
}

Json result_to_json(const IdealResult& result, bool with_trace) {
    Json out = ideal_to_json(result.ideal);
    if (with_trace) {
        const PipelineTrace& tr = result.trace;
        auto basis_json = [](const VariableContext& ctx, const std::vector<Binomial>& basis) {
            Json arr = Json::array();
            for (const Binomial& b : basis)
                arr.push_back(to_text(ctx, b));
            return arr;
        };
        out["provenance"] = Json{
            {"numerical_vars", tr.numerical_vars.names()},
            {"numerical_basis", basis_json(tr.numerical_vars, tr.numerical_basis)},
            {"working_vars", tr.working_vars.names()},
            {"base_generators", basis_json(tr.working_vars, tr.base_generators)},
            {"extended_generators", basis_json(tr.working_vars, tr.extended_generators)},
            {"full_basis", basis_json(tr.working_vars, tr.full_basis)}};
    }
    return out;
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1)
        out << "/" << denominator(r);
    return out.str();
}

}  // namespace sumset
