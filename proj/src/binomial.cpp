#include "sumset/binomial.hpp"

namespace sumset {

Binomial::Binomial(Monomial lead, Monomial trail)
    : lead_(std::move(lead)), trail_(std::move(trail)) {
    if (lead_.vars() != trail_.vars())
        throw ValidationError("binomial sides live in different variable contexts");
    if (lead_ == trail_)
        throw ValidationError("the zero binomial has no Binomial representation");
}

Binomial Binomial::oriented(const MonomialOrder& ord) const {
    if (ord.greater(lead_, trail_))
        return *this;
    return Binomial(trail_, lead_);
}

std::vector<Int> Binomial::exponent_difference() const {
    std::vector<Int> d(lead_.vars());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = lead_[i] - trail_[i];
    return d;
}

std::optional<Binomial> make_binomial(Monomial a, Monomial b) {
    if (a == b)
        return std::nullopt;
    return Binomial(std::move(a), std::move(b));
}

}  // namespace sumset
