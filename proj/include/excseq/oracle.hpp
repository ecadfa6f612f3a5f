#pragma once

#include <cstdlib>
#include <vector>

#include "interval_module.hpp"

// Brute-force linear-algebra oracle for Hom and Ext of interval modules.
// Representations are chains of identity/zero maps; Hom is computed as the
// space of intertwiners, Ext^1 through the projective resolution
// 0 -> P_{b+1} -> P_a -> M(a,b) -> 0 (with P_{n+1} = 0). This code path is
// deliberately independent of the closed forms in interval_module.hpp so the
// latter can be checked against it exhaustively.

namespace excseq::oracle {

namespace detail {

// Rank of a small integer matrix, fraction-free.
inline int int_rank(std::vector<std::vector<long long>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[row], m[piv]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            const long long p = m[row][col];
            const long long q = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = m[r][c] * p - m[row][c] * q;
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Kernel basis of a small integer matrix (columns = variables).
inline std::vector<std::vector<long long>> int_kernel(std::vector<std::vector<long long>> m,
                                                      std::size_t cols) {
    // Gauss-Jordan over the rationals; pivots here are always +-1 so integer
    // arithmetic stays exact.
    std::size_t row = 0;
    std::vector<long long> pivot_col(m.size(), -1);
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        if (m[row][col] < 0)
            for (auto& v : m[row]) v = -v;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const long long q = m[r][col];
            for (std::size_t c = 0; c < cols; ++c)
                m[r][c] = m[r][c] * m[row][col] - m[row][c] * q;
        }
        pivot_col[row] = static_cast<long long>(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t r = 0; r < row; ++r)
        is_pivot[static_cast<std::size_t>(pivot_col[r])] = true;
    std::vector<std::vector<long long>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<long long> v(cols, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < row; ++r) {
            const auto pc = static_cast<std::size_t>(pivot_col[r]);
            // pivot * v[pc] + m[r][free_col] = 0
            if (m[r][free_col] != 0) {
                const long long p = m[r][pc];
                if (std::abs(p) != 1) {
                    // scale the whole vector to keep it integral
                    for (auto& x : v) x *= p;
                    v[pc] = -m[r][free_col];
                } else {
                    v[pc] = -m[r][free_col] * p;
                }
            }
        }
        basis.push_back(v);
    }
    return basis;
}

}  // namespace detail

// Basis of intertwiners X -> Y, each vector indexed by vertex 1..n.
inline std::vector<std::vector<long long>> hom_basis(const IntervalModule& x,
                                                     const IntervalModule& y) {
    require_same_rank(x, y);
    const int n = x.n;
    auto dim_at = [](const IntervalModule& m, int v) { return (m.a <= v && v <= m.b) ? 1 : 0; };
    auto arrow = [&](const IntervalModule& m, int v) {
        return (dim_at(m, v) && dim_at(m, v + 1)) ? 1 : 0;
    };
    // variable f_v exists when X_v and Y_v are both nonzero
    std::vector<int> var_of(static_cast<std::size_t>(n) + 1, -1);
    int nvars = 0;
    for (int v = 1; v <= n; ++v)
        if (dim_at(x, v) && dim_at(y, v)) var_of[static_cast<std::size_t>(v)] = nvars++;
    // one equation per arrow v -> v+1 with X_v != 0 and Y_{v+1} != 0:
    //   f_{v+1} * Xarr(v) - Yarr(v) * f_v = 0
    std::vector<std::vector<long long>> rows;
    for (int v = 1; v < n; ++v) {
        if (!dim_at(x, v) || !dim_at(y, v + 1)) continue;
        std::vector<long long> r(static_cast<std::size_t>(nvars), 0);
        bool nontrivial = false;
        if (arrow(x, v) && var_of[static_cast<std::size_t>(v + 1)] >= 0) {
            r[static_cast<std::size_t>(var_of[static_cast<std::size_t>(v + 1)])] += 1;
            nontrivial = true;
        }
        if (arrow(y, v) && var_of[static_cast<std::size_t>(v)] >= 0) {
            r[static_cast<std::size_t>(var_of[static_cast<std::size_t>(v)])] -= 1;
            nontrivial = true;
        }
        if (nontrivial) rows.push_back(std::move(r));
    }
    auto kernel = detail::int_kernel(std::move(rows), static_cast<std::size_t>(nvars));
    // expand to full vertex coordinates
    std::vector<std::vector<long long>> out;
    for (const auto& k : kernel) {
        std::vector<long long> f(static_cast<std::size_t>(n) + 1, 0);
        for (int v = 1; v <= n; ++v)
            if (var_of[static_cast<std::size_t>(v)] >= 0)
                f[static_cast<std::size_t>(v)] =
                    k[static_cast<std::size_t>(var_of[static_cast<std::size_t>(v)])];
        out.push_back(std::move(f));
    }
    return out;
}

inline int hom_dim_oracle(const IntervalModule& x, const IntervalModule& y) {
    return static_cast<int>(hom_basis(x, y).size());
}

// dim Ext^1(X,Y) = dim Hom(P_{b+1},Y) - rank of the restriction map
// Hom(P_a,Y) -> Hom(P_{b+1},Y) along P_{b+1} c P_a.
inline int ext_dim_oracle(const IntervalModule& x, const IntervalModule& y) {
    require_same_rank(x, y);
    const int n = x.n;
    if (x.b == n) return 0;  // X projective
    const IntervalModule pa(x.a, n, n);
    const IntervalModule pnext(x.b + 1, n, n);
    const auto basis_a = hom_basis(pa, y);
    const auto basis_next = hom_basis(pnext, y);
    // restrict each P_a -> Y map to vertices >= b+1 and measure the image
    std::vector<std::vector<long long>> restricted;
    for (const auto& f : basis_a) {
        std::vector<long long> r;
        for (int v = x.b + 1; v <= n; ++v) r.push_back(f[static_cast<std::size_t>(v)]);
        restricted.push_back(std::move(r));
    }
    const int image_rank = restricted.empty() ? 0 : detail::int_rank(restricted);
    return static_cast<int>(basis_next.size()) - image_rank;
}

}  // namespace excseq::oracle
