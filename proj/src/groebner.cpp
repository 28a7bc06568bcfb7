#include "sumset/groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <utility>

namespace sumset {

std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g, const MonomialOrder& ord) {
    Binomial fo = f.oriented(ord), go = g.oriented(ord);
    Monomial l = lcm(fo.lead(), go.lead());
    // S = (l / lead g) * trail g - (l / lead f) * trail f
    Monomial left = quotient(l, go.lead()) * go.trail();
    Monomial right = quotient(l, fo.lead()) * fo.trail();
    auto s = make_binomial(std::move(left), std::move(right));
    if (!s)
        return std::nullopt;
    return s->oriented(ord);
}

Monomial normal_form(Monomial m, const std::vector<Binomial>& basis, const MonomialOrder& ord) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Binomial& g : basis) {
            if (divides(g.lead(), m)) {
                m = quotient(m, g.lead()) * g.trail();
                changed = true;
                break;
            }
        }
    }
    (void)ord;  // termination relies on the basis being oriented under ord
    return m;
}

std::optional<Binomial> reduce_binomial(const Binomial& b, const std::vector<Binomial>& basis,
                                        const MonomialOrder& ord) {
    Monomial l = normal_form(b.lead(), basis, ord);
    Monomial t = normal_form(b.trail(), basis, ord);
    auto r = make_binomial(std::move(l), std::move(t));
    if (!r)
        return std::nullopt;
    return r->oriented(ord);
}

namespace {

struct CriticalPair {
    std::size_t i, j;
    Monomial lcm_monomial;
};

// normal selection: smallest lcm first, ties by pair index
struct PairLater {
    const MonomialOrder* ord;
    bool operator()(const CriticalPair& a, const CriticalPair& b) const {
        int c = ord->compare(a.lcm_monomial, b.lcm_monomial);
        if (c != 0)
            return c > 0;
        return std::pair(a.i, a.j) > std::pair(b.i, b.j);
    }
};

std::vector<Binomial> interreduce(std::vector<Binomial> basis, const MonomialOrder& ord) {
    // drop elements whose lead is divisible by another surviving lead
    std::vector<bool> alive(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !alive[i] || !alive[j])
                continue;
            if (divides(basis[j].lead(), basis[i].lead())) {
                alive[i] = false;
                break;
            }
        }
    }
    std::vector<Binomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (alive[i])
            minimal.push_back(basis[i]);

    // reduce every element against the others until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Binomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i)
                    others.push_back(minimal[j]);
            auto r = reduce_binomial(minimal[i], others, ord);
            if (!r) {
                minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            if (*r != minimal[i]) {
                minimal[i] = *r;
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Binomial& a, const Binomial& b) {
        int c = ord.compare(a.lead(), b.lead());
        if (c != 0)
            return c < 0;
        return ord.less(a.trail(), b.trail());
    });
    return minimal;
}

}  // namespace

std::vector<Binomial> buchberger(std::vector<Binomial> gens, const MonomialOrder& ord) {
    std::vector<Binomial> basis;
    for (Binomial& g : gens) {
        Binomial o = g.oriented(ord);
        if (std::find(basis.begin(), basis.end(), o) == basis.end())
            basis.push_back(std::move(o));
    }

    std::priority_queue<CriticalPair, std::vector<CriticalPair>, PairLater> queue{
        PairLater{&ord}};
    std::set<std::pair<std::size_t, std::size_t>> done;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            queue.push({i, j, lcm(basis[i].lead(), basis[j].lead())});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        push_pairs(j);

    while (!queue.empty()) {
        CriticalPair pair = queue.top();
        queue.pop();
        done.insert({pair.i, pair.j});

        if (coprime(basis[pair.i].lead(), basis[pair.j].lead()))
            continue;

        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pair.i || k == pair.j)
                continue;
            if (!divides(basis[k].lead(), pair.lcm_monomial))
                continue;
            auto key = [](std::size_t a, std::size_t b) {
                return a < b ? std::pair(a, b) : std::pair(b, a);
            };
            if (done.count(key(pair.i, k)) && done.count(key(pair.j, k)))
                chained = true;
        }
        if (chained)
            continue;

        auto s = s_binomial(basis[pair.i], basis[pair.j], ord);
        if (!s)
            continue;
        auto r = reduce_binomial(*s, basis, ord);
        if (!r)
            continue;
        basis.push_back(std::move(*r));
        push_pairs(basis.size() - 1);
    }

    return interreduce(std::move(basis), ord);
}

std::vector<Binomial> eliminate(const std::vector<Binomial>& gens, const MonomialOrder& ord,
                                const std::vector<bool>& keep) {
    if (gens.empty())
        return {};
    if (keep.size() != ord.vars())
        throw ValidationError("keep mask does not match the variable count");
    std::vector<bool> eliminated(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        eliminated[i] = !keep[i];
    if (!ord.is_elimination_order_for(eliminated))
        throw ValidationError("order does not rank the eliminated variables above the kept ones");

    std::vector<Binomial> basis = buchberger(gens, ord);
    std::vector<Binomial> kept;
    for (const Binomial& g : basis)
        if (supported_on(g.lead(), keep) && supported_on(g.trail(), keep))
            kept.push_back(g);
    return kept;
}

BinomialIdeal::BinomialIdeal(VariableContext ctx, std::vector<Binomial> generators)
    : ctx_(std::move(ctx)), gens_(std::move(generators)), mu_(std::make_unique<std::mutex>()) {
    for (const Binomial& g : gens_)
        if (g.vars() != ctx_.size())
            throw ValidationError("generator does not match the ideal's variable context");
}

BinomialIdeal::BinomialIdeal(const BinomialIdeal& other)
    : ctx_(other.ctx_), gens_(other.gens_), mu_(std::make_unique<std::mutex>()) {
    std::scoped_lock lock(*other.mu_);
    cache_ = other.cache_;
}

BinomialIdeal& BinomialIdeal::operator=(const BinomialIdeal& other) {
    if (this == &other)
        return *this;
    std::scoped_lock lock(*other.mu_);
    ctx_ = other.ctx_;
    gens_ = other.gens_;
    cache_ = other.cache_;
    return *this;
}

std::shared_ptr<const std::vector<Binomial>> BinomialIdeal::groebner_basis(
    const MonomialOrder& ord) const {
    if (ord.vars() != ctx_.size())
        throw ValidationError("order does not match the ideal's variable context");
    {
        std::scoped_lock lock(*mu_);
        auto it = cache_.find(ord.cache_key());
        if (it != cache_.end())
            return it->second;
    }
    auto basis = std::make_shared<const std::vector<Binomial>>(buchberger(gens_, ord));
    std::scoped_lock lock(*mu_);
    // first computation wins; the reduced basis is unique so both agree
    auto [it, inserted] = cache_.emplace(ord.cache_key(), std::move(basis));
    return it->second;
}

bool BinomialIdeal::contains(const Binomial& f, const MonomialOrder& ord) const {
    if (f.vars() != ctx_.size())
        throw ValidationError("binomial does not match the ideal's variable context");
    auto basis = groebner_basis(ord);
    return !reduce_binomial(f, *basis, ord).has_value();
}

bool BinomialIdeal::contains(const Binomial& f) const {
    return contains(f, MonomialOrder::lex(ctx_.size()));
}

bool contains_binomial(const BinomialIdeal& ideal, const std::optional<Binomial>& f,
                       const MonomialOrder& ord) {
    if (!f)
        return true;
    return ideal.contains(*f, ord);
}

}  // namespace sumset
