// Differences of two distinct monomials with unit coefficients.
#ifndef SUMSET_BINOMIAL_HPP
#define SUMSET_BINOMIAL_HPP

#include "sumset/monomial.hpp"
#include "sumset/order.hpp"

#include <compare>
#include <optional>

namespace sumset {

// lead - trail with lead != trail. The zero binomial is never a Binomial
// value; interfaces that can produce it use std::optional instead.
class Binomial {
public:
    Binomial(Monomial lead, Monomial trail);

    const Monomial& lead() const { return lead_; }
    const Monomial& trail() const { return trail_; }
    std::size_t vars() const { return lead_.vars(); }

    bool oriented_under(const MonomialOrder& ord) const { return ord.greater(lead_, trail_); }
    Binomial oriented(const MonomialOrder& ord) const;

    // lead - trail exponent differences, one entry per variable
    std::vector<Int> exponent_difference() const;

    bool operator==(const Binomial&) const = default;
    std::weak_ordering operator<=>(const Binomial&) const = default;

private:
    Monomial lead_, trail_;
};

// nullopt when the two monomials coincide (the zero binomial).
std::optional<Binomial> make_binomial(Monomial a, Monomial b);

}  // namespace sumset

#endif
