// Dense exponent vectors with exact arbitrary-precision entries.
#ifndef SUMSET_MONOMIAL_HPP
#define SUMSET_MONOMIAL_HPP

#include "sumset/integers.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace sumset {

class Monomial {
public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, Int(0)) {}
    explicit Monomial(std::vector<Int> exps);

    // Convenience: 1 everywhere except the listed (index, exponent) entries.
    static Monomial of(std::size_t nvars, std::initializer_list<std::pair<std::size_t, Int>> entries);

    std::size_t vars() const { return exps_.size(); }
    const Int& operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<Int>& exponents() const { return exps_; }

    Int degree() const;
    bool is_one() const;

    bool operator==(const Monomial&) const = default;
    // Plain componentwise lex; used for canonical container ordering only.
    std::weak_ordering operator<=>(const Monomial& other) const {
        return exps_ <=> other.exps_;
    }

private:
    std::vector<Int> exps_;
};

Monomial operator*(const Monomial& a, const Monomial& b);
bool divides(const Monomial& divisor, const Monomial& m);
Monomial quotient(const Monomial& m, const Monomial& divisor);  // requires divides()
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// True when every variable with positive exponent is allowed.
bool supported_on(const Monomial& m, const std::vector<bool>& allowed);

}  // namespace sumset

#endif
