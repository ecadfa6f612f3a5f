#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "bijections.hpp"
#include "exceptional_sequence.hpp"
#include "forest.hpp"

// Sparse trivariate polynomials with exact 64-bit coefficients, and the
// generating functions for forest statistics and relative projectivity /
// injectivity statistics of exceptional sequences.

namespace excseq {

namespace checked {

inline long long add(long long x, long long y) {
    long long r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer overflow");
    return r;
}

inline long long mul(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow");
    return r;
}

}  // namespace checked

struct TrivariatePolynomial {
    // exponent triple (p,q,r) for a^p b^q c^r -> coefficient; zeros are never stored
    std::map<std::array<int, 3>, long long> terms;

    static TrivariatePolynomial zero() { return {}; }

    static TrivariatePolynomial monomial(int p, int q, int r, long long coeff = 1) {
        TrivariatePolynomial poly;
        if (coeff != 0) poly.terms[{p, q, r}] = coeff;
        return poly;
    }

    void add_term(int p, int q, int r, long long coeff) {
        if (p < 0 || q < 0 || r < 0)
            throw std::invalid_argument("TrivariatePolynomial: negative exponent");
        auto& slot = terms[{p, q, r}];
        slot = checked::add(slot, coeff);
        if (slot == 0) terms.erase({p, q, r});
    }

    TrivariatePolynomial operator+(const TrivariatePolynomial& other) const {
        TrivariatePolynomial out = *this;
        for (const auto& [e, c] : other.terms) out.add_term(e[0], e[1], e[2], c);
        return out;
    }

    TrivariatePolynomial operator*(const TrivariatePolynomial& other) const {
        TrivariatePolynomial out;
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : other.terms)
                out.add_term(e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2],
                             checked::mul(c1, c2));
        return out;
    }

    friend bool operator==(const TrivariatePolynomial&, const TrivariatePolynomial&) = default;
};

inline long long evaluate(const TrivariatePolynomial& poly, long long a, long long b,
                          long long c) {
    long long total = 0;
    for (const auto& [e, coeff] : poly.terms) {
        long long t = coeff;
        for (int i = 0; i < e[0]; ++i) t = checked::mul(t, a);
        for (int i = 0; i < e[1]; ++i) t = checked::mul(t, b);
        for (int i = 0; i < e[2]; ++i) t = checked::mul(t, c);
        total = checked::add(total, t);
    }
    return total;
}

// P_n(a,b,c) = c (a + (n-1)b + c)(2a + (n-2)b + c) ... ((n-1)a + b + c).
inline TrivariatePolynomial formula_poly(int n) {
    if (n < 1) throw std::invalid_argument("formula_poly: rank must be >= 1");
    TrivariatePolynomial poly = TrivariatePolynomial::monomial(0, 0, 1);
    for (int j = 1; j <= n - 1; ++j) {
        TrivariatePolynomial factor;
        factor.add_term(1, 0, 0, j);
        factor.add_term(0, 1, 0, n - j);
        factor.add_term(0, 0, 1, 1);
        poly = poly * factor;
    }
    return poly;
}

namespace detail {

// substitute c -> b + c
inline TrivariatePolynomial subst_c_to_b_plus_c(const TrivariatePolynomial& poly) {
    TrivariatePolynomial out;
    for (const auto& [e, coeff] : poly.terms) {
        // (b+c)^r expanded by binomials
        long long binom = 1;
        for (int k = 0; k <= e[2]; ++k) {
            out.add_term(e[0], e[1] + e[2] - k, k, checked::mul(coeff, binom));
            binom = checked::mul(binom, e[2] - k) / (k + 1);
        }
    }
    return out;
}

// exact division by (b + c); synthetic division in the variable c
inline TrivariatePolynomial divide_exact_b_plus_c(const TrivariatePolynomial& poly) {
    int max_c = 0;
    for (const auto& [e, coeff] : poly.terms) max_c = std::max(max_c, e[2]);
    // group by c-degree: slice[k] maps (p,q) -> coeff
    std::vector<std::map<std::array<int, 2>, long long>> slice(
        static_cast<std::size_t>(max_c) + 1);
    for (const auto& [e, coeff] : poly.terms) slice[static_cast<std::size_t>(e[2])][{e[0], e[1]}] = coeff;
    // quotient R with R_{k-1} = Q_k - b R_k, remainder Q_0 - b R_0 must vanish
    std::vector<std::map<std::array<int, 2>, long long>> quot(
        static_cast<std::size_t>(std::max(max_c, 1)));
    for (int k = max_c; k >= 1; --k) {
        std::map<std::array<int, 2>, long long> rk = slice[static_cast<std::size_t>(k)];
        if (k < max_c) {
            for (const auto& [e, c] : quot[static_cast<std::size_t>(k)]) {
                auto& slot = rk[{e[0], e[1] + 1}];
                slot = checked::add(slot, -c);
                if (slot == 0) rk.erase({e[0], e[1] + 1});
            }
        }
        quot[static_cast<std::size_t>(k - 1)] = std::move(rk);
    }
    std::map<std::array<int, 2>, long long> rem = slice[0];
    for (const auto& [e, c] : quot[0]) {
        auto& slot = rem[{e[0], e[1] + 1}];
        slot = checked::add(slot, -c);
        if (slot == 0) rem.erase({e[0], e[1] + 1});
    }
    if (!rem.empty())
        throw std::logic_error("divide_exact_b_plus_c: division is not exact");
    TrivariatePolynomial out;
    for (int k = 0; k < static_cast<int>(quot.size()); ++k)
        for (const auto& [e, c] : quot[static_cast<std::size_t>(k)]) out.add_term(e[0], e[1], k, c);
    return out;
}

}  // namespace detail

// The two-term recursion P_n = c Q + (n-1) a c Q/(b+c) with
// Q = P_{n-1}(a, b, b+c); the division is exact.
inline TrivariatePolynomial recursion_poly(int n) {
    if (n < 1) throw std::invalid_argument("recursion_poly: rank must be >= 1");
    TrivariatePolynomial poly = TrivariatePolynomial::monomial(0, 0, 1);
    for (int m = 2; m <= n; ++m) {
        const TrivariatePolynomial q = detail::subst_c_to_b_plus_c(poly);
        const TrivariatePolynomial ratio = detail::divide_exact_b_plus_c(q);
        const TrivariatePolynomial c_mono = TrivariatePolynomial::monomial(0, 0, 1);
        const TrivariatePolynomial ac_mono = TrivariatePolynomial::monomial(1, 0, 1, m - 1);
        poly = c_mono * q + ac_mono * ratio;
    }
    return poly;
}

enum class StatSource { forests, sequences };

// Sum of a^p b^q c^r over forests (vertex statistics) or over complete
// exceptional sequences (p = relatively projective only, q = relatively
// injective only, r = both, via the perpendicular-category oracle).
inline TrivariatePolynomial statistic_poly(int n, StatSource source) {
    TrivariatePolynomial poly;
    if (source == StatSource::forests) {
        enumerate_forests(n, [&](const RootedLabeledForest& f) {
            const auto s = statistics(f);
            poly.add_term(s.p, s.q, s.r, 1);
        });
    } else {
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            int p = 0, q = 0, r = 0;
            for (const auto& fl : relative_flags(seq)) {
                if (fl.rel_proj && fl.rel_inj)
                    ++r;
                else if (fl.rel_proj)
                    ++p;
                else if (fl.rel_inj)
                    ++q;
                else
                    throw std::logic_error("statistic_poly: position with neither flag");
            }
            poly.add_term(p, q, r, 1);
        });
    }
    return poly;
}

}  // namespace excseq
