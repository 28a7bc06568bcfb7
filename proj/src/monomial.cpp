#include "sumset/monomial.hpp"

namespace sumset {

Monomial::Monomial(std::vector<Int> exps) : exps_(std::move(exps)) {
    for (const Int& e : exps_)
        if (e < 0)
            throw ValidationError("monomial exponents must be nonnegative");
}

Monomial Monomial::of(std::size_t nvars,
                      std::initializer_list<std::pair<std::size_t, Int>> entries) {
    std::vector<Int> exps(nvars, Int(0));
    for (const auto& [i, e] : entries) {
        if (i >= nvars)
            throw ValidationError("monomial entry index out of range");
        exps[i] = e;
    }
    return Monomial(std::move(exps));
}

Int Monomial::degree() const {
    Int d = 0;
    for (const Int& e : exps_)
        d += e;
    return d;
}

bool Monomial::is_one() const {
    for (const Int& e : exps_)
        if (e != 0)
            return false;
    return true;
}

namespace {
void check_same_vars(const Monomial& a, const Monomial& b) {
    if (a.vars() != b.vars())
        throw ValidationError("monomials belong to different variable contexts");
}
}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    std::vector<Int> exps(a.vars());
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = a[i] + b[i];
    return Monomial(std::move(exps));
}

bool divides(const Monomial& divisor, const Monomial& m) {
    check_same_vars(divisor, m);
    for (std::size_t i = 0; i < m.vars(); ++i)
        if (divisor[i] > m[i])
            return false;
    return true;
}

Monomial quotient(const Monomial& m, const Monomial& divisor) {
    check_same_vars(divisor, m);
    std::vector<Int> exps(m.vars());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        exps[i] = m[i] - divisor[i];
        if (exps[i] < 0)
            throw InternalError("quotient by a non-divisor");
    }
    return Monomial(std::move(exps));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    std::vector<Int> exps(a.vars());
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = a[i] > b[i] ? a[i] : b[i];
    return Monomial(std::move(exps));
}

bool coprime(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    for (std::size_t i = 0; i < a.vars(); ++i)
        if (a[i] > 0 && b[i] > 0)
            return false;
    return true;
}

bool supported_on(const Monomial& m, const std::vector<bool>& allowed) {
    for (std::size_t i = 0; i < m.vars(); ++i)
        if (m[i] > 0 && !allowed[i])
            return false;
    return true;
}

}  // namespace sumset
