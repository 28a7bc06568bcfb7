#include "sumset/hilbert.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <type_traits>

namespace sumset {

namespace {

template <class T>
using Wide = std::conditional_t<std::is_same_v<T, std::int64_t>, __int128, Int>;

template <class T>
struct Node {
    std::vector<T> x;    // candidate vector
    std::vector<T> img;  // A x
};

template <class T>
bool dominates_some(const std::vector<T>& x, const std::vector<std::vector<T>>& sols) {
    for (const auto& s : sols) {
        bool ge = true;
        for (std::size_t i = 0; i < x.size() && ge; ++i)
            ge = x[i] >= s[i];
        if (ge)
            return true;
    }
    return false;
}

template <class T>
std::vector<std::vector<T>> completion(const std::vector<std::vector<T>>& a, std::size_t n) {
    const std::size_t m = a.size();
    std::vector<std::vector<T>> col(n, std::vector<T>(m));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i)
            col[i][j] = a[j][i];

    auto descends = [&](const std::vector<T>& img, std::size_t i) {
        Wide<T> dot = 0;
        for (std::size_t j = 0; j < m; ++j)
            dot += Wide<T>(img[j]) * Wide<T>(col[i][j]);
        return dot < 0;
    };
    auto is_zero = [](const std::vector<T>& img) {
        for (const T& v : img)
            if (v != 0)
                return false;
        return true;
    };

    std::vector<std::vector<T>> sols;
    std::vector<Node<T>> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        Node<T> node;
        node.x.assign(n, T(0));
        node.x[i] = T(1);
        node.img = col[i];
        if (is_zero(node.img))
            sols.push_back(node.x);
        else
            frontier.push_back(std::move(node));
    }

    while (!frontier.empty()) {
        std::vector<Node<T>> next;
        std::set<std::vector<T>> seen;
        std::vector<std::vector<T>> found;
        for (const Node<T>& t : frontier) {
            if (dominates_some(t.x, sols))
                continue;
            for (std::size_t i = 0; i < n; ++i) {
                if (!descends(t.img, i))
                    continue;
                std::vector<T> x = t.x;
                x[i] += 1;
                if (!seen.insert(x).second)
                    continue;
                if (dominates_some(x, sols))
                    continue;
                Node<T> u;
                u.x = std::move(x);
                u.img.resize(m);
                for (std::size_t j = 0; j < m; ++j)
                    u.img[j] = t.img[j] + col[i][j];
                if (is_zero(u.img))
                    found.push_back(std::move(u.x));
                else
                    next.push_back(std::move(u));
            }
        }
        sols.insert(sols.end(), found.begin(), found.end());
        frontier = std::move(next);
    }
    return sols;
}

bool fits_fast_path(const DiophantineSystem& sys) {
    const Int bound = Int(1) << 20;
    for (const auto& row : sys.equations)
        for (const Int& v : row)
            if (v > bound || v < -bound)
                return false;
    return true;
}

}  // namespace

HilbertBasisSet hilbert_basis(const DiophantineSystem& sys) {
    sys.validate();
    const std::size_t n = sys.vars;

    std::vector<std::vector<Int>> raw;
    if (fits_fast_path(sys)) {
        std::vector<std::vector<std::int64_t>> a(sys.equations.size(),
                                                 std::vector<std::int64_t>(n));
        for (std::size_t j = 0; j < sys.equations.size(); ++j)
            for (std::size_t i = 0; i < n; ++i)
                a[j][i] = to_int64(sys.equations[j][i]);
        for (const auto& s : completion<std::int64_t>(a, n)) {
            std::vector<Int> v(n);
            for (std::size_t i = 0; i < n; ++i)
                v[i] = s[i];
            raw.push_back(std::move(v));
        }
    } else {
        raw = completion<Int>(sys.equations, n);
    }

    std::sort(raw.begin(), raw.end(), [](const std::vector<Int>& a, const std::vector<Int>& b) {
        Int da = 0, db = 0;
        for (const Int& v : a)
            da += v;
        for (const Int& v : b)
            db += v;
        if (da != db)
            return da < db;
        return a < b;
    });

    HilbertBasisSet out;
    out.elements = std::move(raw);
    return out;
}

}  // namespace sumset
