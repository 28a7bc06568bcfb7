#include "sumset/lattice.hpp"

#include <algorithm>
#include <set>

namespace sumset {

void DiophantineSystem::validate() const {
    for (const auto& row : equations)
        if (row.size() != vars)
            throw ValidationError("equation row length does not match the variable count");
}

IntegerLattice lattice_from_ideal(const BinomialIdeal& ideal) {
    std::set<std::vector<Int>> diffs;
    for (const Binomial& b : ideal.generators())
        diffs.insert(b.exponent_difference());
    IntegerLattice lattice;
    lattice.dim = ideal.context().size();
    lattice.generators.assign(diffs.begin(), diffs.end());
    return lattice;
}

DiophantineSystem lattice_equations(const IntegerLattice& lattice) {
    const std::size_t n = lattice.dim;
    DiophantineSystem sys;
    sys.vars = n;

    // reduced row echelon form of the generator matrix over the rationals
    std::vector<std::vector<Rational>> m;
    m.reserve(lattice.generators.size());
    for (const auto& g : lattice.generators) {
        if (g.size() != n)
            throw ValidationError("lattice generator length does not match the dimension");
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i)
            row[i] = g[i];
        m.push_back(std::move(row));
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m.size(); ++col) {
        std::size_t p = r;
        while (p < m.size() && m[p][col] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[r], m[p]);
        Rational inv = m[r][col];
        for (std::size_t c = col; c < n; ++c)
            m[r][c] /= inv;
        for (std::size_t q = 0; q < m.size(); ++q) {
            if (q == r || m[q][col] == 0)
                continue;
            Rational f = m[q][col];
            for (std::size_t c = col; c < n; ++c)
                m[q][c] -= f * m[r][c];
        }
        pivot_cols.push_back(col);
        ++r;
    }

    // kernel basis: one vector per free column
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_cols)
        is_pivot[c] = true;
    std::vector<std::vector<Int>> kernel;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<Rational> v(n, Rational(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = -m[i][free_col];
        Int denom = 1;
        for (const Rational& x : v)
            denom = denom / int_gcd(denom, Int(denominator(x))) * Int(denominator(x));
        std::vector<Int> w(n);
        for (std::size_t i = 0; i < n; ++i)
            w[i] = Int(numerator(v[i])) * (denom / Int(denominator(v[i])));
        Int g = 0;
        for (const Int& x : w)
            g = int_gcd(g, x);
        if (g > 1)
            for (Int& x : w)
                x /= g;
        kernel.push_back(std::move(w));
    }

    sys.equations = hermite_normal_form(std::move(kernel));
    return sys;
}

bool is_saturated(const IntegerLattice& lattice) {
    if (lattice.generators.empty())
        return true;
    for (const Int& d : smith_divisors(lattice.generators))
        if (d != 1)
            return false;
    return true;
}

DiophantineSystem pair_system(const DiophantineSystem& sys) {
    sys.validate();
    DiophantineSystem out;
    out.vars = 2 * sys.vars;
    out.equations.reserve(sys.equations.size());
    for (const auto& row : sys.equations) {
        std::vector<Int> wide(2 * sys.vars);
        for (std::size_t i = 0; i < sys.vars; ++i) {
            wide[i] = row[i];
            wide[sys.vars + i] = -row[i];
        }
        out.equations.push_back(std::move(wide));
    }
    return out;
}

std::size_t rational_rank(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty())
        return 0;
    std::vector<std::vector<Int>> m = rows;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t p = rank;
        while (p < m.size() && m[p][col] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[rank], m[p]);
        for (std::size_t q = rank + 1; q < m.size(); ++q) {
            if (m[q][col] == 0)
                continue;
            Int g = int_gcd(m[rank][col], m[q][col]);
            Int fr = m[rank][col] / g, fq = m[q][col] / g;
            for (std::size_t c = col; c < cols; ++c)
                m[q][c] = m[q][c] * fr - m[rank][c] * fq;
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Int>> hermite_normal_form(std::vector<std::vector<Int>> rows) {
    if (rows.empty())
        return rows;
    const std::size_t cols = rows[0].size();
    for (const auto& rrow : rows)
        if (rrow.size() != cols)
            throw ValidationError("ragged matrix");
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        // clear the column below row r by gcd steps
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t q = r; q < rows.size(); ++q)
                if (rows[q][col] != 0 &&
                    (best == rows.size() ||
                     abs(rows[q][col]) < abs(rows[best][col])))
                    best = q;
            if (best == rows.size())
                break;  // column is zero from r down
            std::swap(rows[r], rows[best]);
            bool cleared = true;
            for (std::size_t q = r + 1; q < rows.size(); ++q) {
                if (rows[q][col] == 0)
                    continue;
                Int f = rows[q][col] / rows[r][col];
                for (std::size_t c = 0; c < cols; ++c)
                    rows[q][c] -= f * rows[r][c];
                if (rows[q][col] != 0)
                    cleared = false;
            }
            if (cleared)
                break;
        }
        if (rows[r][col] == 0)
            continue;
        if (rows[r][col] < 0)
            for (std::size_t c = 0; c < cols; ++c)
                rows[r][c] = -rows[r][c];
        // reduce the entries above the pivot into [0, pivot)
        for (std::size_t q = 0; q < r; ++q) {
            Int f = rows[q][col] / rows[r][col];
            if (rows[q][col] % rows[r][col] < 0)
                f -= 1;
            if (f != 0)
                for (std::size_t c = 0; c < cols; ++c)
                    rows[q][c] -= f * rows[r][c];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<Int> smith_divisors(std::vector<std::vector<Int>> m) {
    std::vector<Int> divisors;
    if (m.empty() || m[0].empty())
        return divisors;
    std::size_t top = 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    while (top < rows && top < cols) {
        // locate the smallest nonzero entry in the remaining block
        std::size_t bi = rows, bj = cols;
        for (std::size_t i = top; i < rows; ++i)
            for (std::size_t j = top; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (bi == rows || abs(m[i][j]) < abs(m[bi][bj]))) {
                    bi = i;
                    bj = j;
                }
        if (bi == rows)
            break;
        std::swap(m[top], m[bi]);
        for (std::size_t i = top; i < rows; ++i)
            std::swap(m[i][top], m[i][bj]);

        bool clean = true;
        for (std::size_t i = top + 1; i < rows; ++i) {
            if (m[i][top] == 0)
                continue;
            Int f = m[i][top] / m[top][top];
            for (std::size_t j = top; j < cols; ++j)
                m[i][j] -= f * m[top][j];
            if (m[i][top] != 0)
                clean = false;
        }
        for (std::size_t j = top + 1; j < cols; ++j) {
            if (m[top][j] == 0)
                continue;
            Int f = m[top][j] / m[top][top];
            for (std::size_t i = top; i < rows; ++i)
                m[i][j] -= f * m[i][top];
            if (m[top][j] != 0)
                clean = false;
        }
        if (!clean)
            continue;  // repeat with a smaller pivot

        // pivot must divide the rest of the block
        bool divides_all = true;
        for (std::size_t i = top + 1; i < rows && divides_all; ++i)
            for (std::size_t j = top + 1; j < cols && divides_all; ++j)
                if (m[i][j] % m[top][top] != 0) {
                    for (std::size_t c = top; c < cols; ++c)
                        m[top][c] += m[i][c];
                    divides_all = false;
                }
        if (!divides_all)
            continue;

        divisors.push_back(abs(m[top][top]));
        ++top;
    }
    return divisors;
}

bool same_row_space(const std::vector<std::vector<Int>>& a,
                    const std::vector<std::vector<Int>>& b) {
    if (a.empty() && b.empty())
        return true;
    std::size_t cols = a.empty() ? b[0].size() : a[0].size();
    for (const auto& row : a)
        if (row.size() != cols)
            return false;
    for (const auto& row : b)
        if (row.size() != cols)
            return false;
    std::vector<std::vector<Int>> stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    std::size_t ra = rational_rank(a), rb = rational_rank(b);
    return ra == rb && rational_rank(stacked) == ra;
}

}  // namespace sumset
