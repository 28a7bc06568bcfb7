// JSON and text serialization of the library's value types.
#ifndef SUMSET_IO_JSON_HPP
#define SUMSET_IO_JSON_HPP

#include "sumset/elasticity.hpp"
#include "sumset/semigroup_ideal.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace sumset {

using Json = nlohmann::json;

Json int_to_json(const Int& v);  // number when it fits 64 bits, decimal string otherwise
Int int_from_json(const Json& j);

Json to_json(const FiniteSet& s);
FiniteSet finite_set_from_json(const Json& j);

Json word_to_json(const GeneratorWord& w);
GeneratorWord word_from_json(const Json& j);

// x1^7*z3^2 with "1" for the empty monomial
std::string to_text(const VariableContext& ctx, const Monomial& m);
Monomial monomial_from_text(const VariableContext& ctx, std::string_view text);

// lead - trail, e.g. "x1^7*z3^2 - z2^3"
std::string to_text(const VariableContext& ctx, const Binomial& b);
Binomial binomial_from_text(const VariableContext& ctx, std::string_view text);

Json to_json(const VariableContext& ctx, const Binomial& b);
Binomial binomial_from_json(const VariableContext& ctx, const Json& j);

Json order_to_json(const VariableContext& ctx, const MonomialOrder& ord);
MonomialOrder order_from_json(const VariableContext& ctx, const Json& j);

Json to_json(const SumsetSemigroupSpec& spec);
SumsetSemigroupSpec spec_from_json(const Json& j);

Json to_json(const DiophantineSystem& sys);
DiophantineSystem system_from_json(const Json& j);

Json to_json(const HilbertBasisSet& basis);

Json ideal_to_json(const BinomialIdeal& ideal);
BinomialIdeal ideal_from_json(const Json& j);

Json result_to_json(const IdealResult& result, bool with_trace);

std::string rational_to_string(const Rational& r);  // "3" or "4/3"

}  // namespace sumset

#endif
