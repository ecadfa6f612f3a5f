#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

// Interval modules of the linearly oriented type A quiver 1 -> 2 -> ... -> n.
// Vertices are 1-based. M(a,b) denotes the indecomposable supported on the
// interval [a,b]; its top is the simple S(a) and its socle is S(b).
// Projectives are the M(a,n), injectives the M(1,b).

namespace excseq {

struct IntervalModule {
    int a = 1;
    int b = 1;
    int n = 1;

    IntervalModule() = default;
    IntervalModule(int top, int socle, int rank) : a(top), b(socle), n(rank) {
        if (n < 1)
            throw std::invalid_argument("IntervalModule: rank must be >= 1");
        if (a < 1 || a > b || b > n)
            throw std::invalid_argument("IntervalModule: need 1 <= a <= b <= n");
    }

    int length() const { return b - a + 1; }
    int top() const { return a; }
    int socle() const { return b; }
    bool is_projective() const { return b == n; }
    bool is_injective() const { return a == 1; }
    bool is_simple() const { return a == b; }

    std::vector<int> dim_vector() const {
        std::vector<int> d(static_cast<std::size_t>(n), 0);
        for (int v = a; v <= b; ++v) d[static_cast<std::size_t>(v - 1)] = 1;
        return d;
    }

    friend auto operator<=>(const IntervalModule&, const IntervalModule&) = default;
};

using DimensionVector = std::vector<int>;

inline void require_same_rank(const IntervalModule& x, const IntervalModule& y) {
    if (x.n != y.n)
        throw std::invalid_argument("rank mismatch between interval modules");
}

// dim Hom(X,Y) in {0,1}: nonzero exactly when Y.a <= X.a <= Y.b <= X.b,
// i.e. the image M(X.a, Y.b) is a quotient of X and a submodule of Y.
inline int hom_dim(const IntervalModule& x, const IntervalModule& y) {
    require_same_rank(x, y);
    return (y.a <= x.a && x.a <= y.b && y.b <= x.b) ? 1 : 0;
}

// dim Ext^1(X,Y) in {0,1}: nonzero exactly when X.a < Y.a <= X.b+1 <= Y.b
// (overlapping or consecutive supports with Y sticking out below).
inline int ext_dim(const IntervalModule& x, const IntervalModule& y) {
    require_same_rank(x, y);
    return (x.a < y.a && y.a <= x.b + 1 && x.b + 1 <= y.b) ? 1 : 0;
}

// Euler form <d,e> = sum_i d_i e_i - sum_{i -> i+1} d_i e_{i+1}.
inline long long euler_form(const DimensionVector& d, const DimensionVector& e) {
    if (d.size() != e.size())
        throw std::invalid_argument("euler_form: length mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        s += static_cast<long long>(d[i]) * e[i];
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        s -= static_cast<long long>(d[i]) * e[i + 1];
    return s;
}

// chi(X,Y) = dim Hom - dim Ext, through the closed forms.
inline long long euler_pairing(const IntervalModule& x, const IntervalModule& y) {
    return hom_dim(x, y) - ext_dim(x, y);
}

// AR translate extended to projectives: M(a,b) -> M(a+1,b+1) for b < n,
// and P_a = M(a,n) -> I_a = M(1,a).
inline IntervalModule tau_star(const IntervalModule& x) {
    if (!x.is_projective()) return IntervalModule(x.a + 1, x.b + 1, x.n);
    return IntervalModule(1, x.a, x.n);
}

// All n(n+1)/2 interval modules, ordered lexicographically by (a,b).
inline std::vector<IntervalModule> all_interval_modules(int n) {
    if (n < 1)
        throw std::invalid_argument("all_interval_modules: rank must be >= 1");
    std::vector<IntervalModule> out;
    out.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            out.emplace_back(a, b, n);
    return out;
}

}  // namespace excseq
