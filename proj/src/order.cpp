#include "sumset/order.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sumset {

namespace {

// rank over the rationals, by fraction-free elimination
std::size_t column_rank(std::vector<std::vector<Int>> m) {
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0)
                continue;
            Int g = int_gcd(m[rank][col], m[r][col]);
            Int fr = m[rank][col] / g, fp = m[r][col] / g;
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = m[r][c] * fr - m[rank][c] * fp;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
    std::vector<std::size_t> priority(nvars);
    std::iota(priority.begin(), priority.end(), std::size_t{0});
    return lex(std::move(priority));
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> priority) {
    std::set<std::size_t> seen(priority.begin(), priority.end());
    if (seen.size() != priority.size() ||
        (!priority.empty() && (*seen.begin() != 0 || *seen.rbegin() != priority.size() - 1)))
        throw ValidationError("lex priority must be a permutation of the variables");
    MonomialOrder o;
    o.kind_ = Kind::lex;
    o.nvars_ = priority.size();
    o.priority_ = std::move(priority);
    std::ostringstream key;
    key << "lex(";
    for (std::size_t i = 0; i < o.priority_.size(); ++i)
        key << (i ? "," : "") << o.priority_[i];
    key << ")";
    o.key_ = key.str();
    return o;
}

MonomialOrder MonomialOrder::lex_names(const VariableContext& ctx,
                                       const std::vector<std::string>& heaviest_first) {
    std::vector<std::size_t> priority;
    priority.reserve(heaviest_first.size());
    for (const auto& name : heaviest_first)
        priority.push_back(ctx.index(name));
    if (priority.size() != ctx.size())
        throw ValidationError("lex priority must mention every variable exactly once");
    return lex(std::move(priority));
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> front_vars, MonomialOrder front,
                                   std::vector<std::size_t> back_vars, MonomialOrder back) {
    std::set<std::size_t> seen(front_vars.begin(), front_vars.end());
    for (std::size_t v : back_vars)
        if (!seen.insert(v).second)
            throw ValidationError("block order: variable listed twice");
    const std::size_t nvars = front_vars.size() + back_vars.size();
    if (seen.size() != nvars || (!seen.empty() && *seen.rbegin() != nvars - 1))
        throw ValidationError("block order: blocks must partition the variables");
    if (front.vars() != front_vars.size() || back.vars() != back_vars.size())
        throw ValidationError("block order: inner order sizes do not match the blocks");
    MonomialOrder o;
    o.kind_ = Kind::block;
    o.nvars_ = nvars;
    o.front_vars_ = std::move(front_vars);
    o.back_vars_ = std::move(back_vars);
    o.key_ = "block[";
    for (std::size_t i = 0; i < o.front_vars_.size(); ++i)
        o.key_ += (i ? "," : "") + std::to_string(o.front_vars_[i]);
    o.key_ += "|";
    for (std::size_t i = 0; i < o.back_vars_.size(); ++i)
        o.key_ += (i ? "," : "") + std::to_string(o.back_vars_[i]);
    o.key_ += "](" + front.cache_key() + ";" + back.cache_key() + ")";
    o.front_ = std::make_shared<const MonomialOrder>(std::move(front));
    o.back_ = std::make_shared<const MonomialOrder>(std::move(back));
    return o;
}

MonomialOrder MonomialOrder::matrix(std::vector<std::vector<Int>> rows) {
    if (rows.empty())
        throw ValidationError("matrix order needs at least one row");
    const std::size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols)
            throw ValidationError("matrix order rows must have equal length");
    if (column_rank(rows) != cols)
        throw ValidationError("matrix order requires full column rank; ties would be possible");
    MonomialOrder o;
    o.kind_ = Kind::matrix;
    o.nvars_ = cols;
    o.rows_ = std::move(rows);
    std::ostringstream key;
    key << "mat(";
    for (std::size_t r = 0; r < o.rows_.size(); ++r) {
        if (r)
            key << ";";
        for (std::size_t c = 0; c < cols; ++c)
            key << (c ? "," : "") << o.rows_[r][c];
    }
    key << ")";
    o.key_ = key.str();
    return o;
}

int MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
    if (u.vars() != nvars_ || v.vars() != nvars_)
        throw ValidationError("monomial does not match the order's variable context");
    switch (kind_) {
    case Kind::lex:
        for (std::size_t var : priority_) {
            if (u[var] != v[var])
                return u[var] > v[var] ? 1 : -1;
        }
        return 0;
    case Kind::block: {
        auto restrict_to = [](const Monomial& m, const std::vector<std::size_t>& vars) {
            std::vector<Int> exps;
            exps.reserve(vars.size());
            for (std::size_t v2 : vars)
                exps.push_back(m[v2]);
            return Monomial(std::move(exps));
        };
        int c = front_->compare(restrict_to(u, front_vars_), restrict_to(v, front_vars_));
        if (c != 0)
            return c;
        return back_->compare(restrict_to(u, back_vars_), restrict_to(v, back_vars_));
    }
    case Kind::matrix:
        for (const auto& row : rows_) {
            Int s = 0;
            for (std::size_t i = 0; i < nvars_; ++i)
                s += row[i] * (u[i] - v[i]);
            if (s != 0)
                return s > 0 ? 1 : -1;
        }
        if (u != v)
            throw InternalError("matrix order tie despite full column rank");
        return 0;
    }
    throw InternalError("unknown order kind");
}

bool MonomialOrder::is_elimination_order_for(const std::vector<bool>& eliminated) const {
    if (eliminated.size() != nvars_)
        throw ValidationError("elimination mask does not match the order's variable count");
    if (std::none_of(eliminated.begin(), eliminated.end(), [](bool b) { return b; }))
        return true;
    switch (kind_) {
    case Kind::lex: {
        // every eliminated variable must outrank every kept one
        std::size_t last_elim = 0, first_kept = nvars_;
        for (std::size_t pos = 0; pos < priority_.size(); ++pos) {
            if (eliminated[priority_[pos]])
                last_elim = pos;
            else
                first_kept = std::min(first_kept, pos);
        }
        return last_elim < first_kept;
    }
    case Kind::block: {
        bool front_all_elim = true, front_covers = true;
        for (std::size_t v : front_vars_)
            front_all_elim = front_all_elim && eliminated[v];
        std::size_t elim_outside = 0;
        for (std::size_t v : back_vars_)
            if (eliminated[v])
                ++elim_outside;
        front_covers = elim_outside == 0;
        if (front_all_elim && front_covers)
            return true;
        if (front_all_elim) {
            std::vector<bool> rest(back_vars_.size(), false);
            for (std::size_t i = 0; i < back_vars_.size(); ++i)
                rest[i] = eliminated[back_vars_[i]];
            return back_->is_elimination_order_for(rest);
        }
        return false;
    }
    case Kind::matrix: {
        // sufficient condition: a row prefix that is zero on kept columns,
        // nonnegative on eliminated ones, and positive somewhere in each
        // eliminated column
        std::vector<bool> covered(nvars_, false);
        auto all_covered = [&] {
            for (std::size_t i = 0; i < nvars_; ++i)
                if (eliminated[i] && !covered[i])
                    return false;
            return true;
        };
        for (const auto& row : rows_) {
            if (all_covered())
                return true;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (!eliminated[i] && row[i] != 0)
                    return false;
                if (eliminated[i] && row[i] < 0)
                    return false;
                if (eliminated[i] && row[i] > 0)
                    covered[i] = true;
            }
        }
        return all_covered();
    }
    }
    throw InternalError("unknown order kind");
}

const std::vector<std::size_t>& MonomialOrder::lex_priority() const {
    if (kind_ != Kind::lex)
        throw InternalError("not a lex order");
    return priority_;
}

const std::vector<std::vector<Int>>& MonomialOrder::matrix_rows() const {
    if (kind_ != Kind::matrix)
        throw InternalError("not a matrix order");
    return rows_;
}

const std::vector<std::size_t>& MonomialOrder::front_vars() const {
    if (kind_ != Kind::block)
        throw InternalError("not a block order");
    return front_vars_;
}

const std::vector<std::size_t>& MonomialOrder::back_vars() const {
    if (kind_ != Kind::block)
        throw InternalError("not a block order");
    return back_vars_;
}

const MonomialOrder& MonomialOrder::front_order() const {
    if (kind_ != Kind::block)
        throw InternalError("not a block order");
    return *front_;
}

const MonomialOrder& MonomialOrder::back_order() const {
    if (kind_ != Kind::block)
        throw InternalError("not a block order");
    return *back_;
}

}  // namespace sumset
