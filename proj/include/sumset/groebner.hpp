// Buchberger's algorithm specialized to binomial ideals, plus normal forms,
// variable elimination, and a cached ideal wrapper.
#ifndef SUMSET_GROEBNER_HPP
#define SUMSET_GROEBNER_HPP

#include "sumset/binomial.hpp"
#include "sumset/variables.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace sumset {

// S(f, g) of two oriented binomials; nullopt when the sides cancel.
std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g, const MonomialOrder& ord);

// Repeatedly rewrites any monomial divisible by a basis lead with the matching
// trail multiple. Unique remainder when `basis` is a Groebner basis.
Monomial normal_form(Monomial m, const std::vector<Binomial>& basis, const MonomialOrder& ord);

// Normal form of both sides; nullopt when the binomial lies in the span.
std::optional<Binomial> reduce_binomial(const Binomial& b, const std::vector<Binomial>& basis,
                                        const MonomialOrder& ord);

// The unique reduced Groebner basis, oriented and sorted by ascending lead.
std::vector<Binomial> buchberger(std::vector<Binomial> gens, const MonomialOrder& ord);

// Subset of the reduced basis supported on the kept variables; a Groebner
// basis of the intersection ideal. The order must rank every eliminated
// variable above every kept one.
std::vector<Binomial> eliminate(const std::vector<Binomial>& gens, const MonomialOrder& ord,
                                const std::vector<bool>& keep);

class BinomialIdeal {
public:
    BinomialIdeal(VariableContext ctx, std::vector<Binomial> generators);

    BinomialIdeal(const BinomialIdeal& other);
    BinomialIdeal& operator=(const BinomialIdeal& other);
    BinomialIdeal(BinomialIdeal&&) noexcept = default;
    BinomialIdeal& operator=(BinomialIdeal&&) noexcept = default;

    const VariableContext& context() const { return ctx_; }
    const std::vector<Binomial>& generators() const { return gens_; }

    // Reduced Groebner basis for the order; computed once per order and cached.
    std::shared_ptr<const std::vector<Binomial>> groebner_basis(const MonomialOrder& ord) const;

    bool contains(const Binomial& f, const MonomialOrder& ord) const;
    bool contains(const Binomial& f) const;  // lex on the context order

private:
    VariableContext ctx_;
    std::vector<Binomial> gens_;
    mutable std::unique_ptr<std::mutex> mu_;
    mutable std::map<std::string, std::shared_ptr<const std::vector<Binomial>>> cache_;
};

// Membership that treats the zero binomial (nullopt) as trivially contained.
bool contains_binomial(const BinomialIdeal& ideal, const std::optional<Binomial>& f,
                       const MonomialOrder& ord);

}  // namespace sumset

#endif
