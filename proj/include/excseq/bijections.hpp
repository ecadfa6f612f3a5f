#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "exceptional_sequence.hpp"
#include "forest.hpp"
#include "interval_module.hpp"

// The correspondences between complete exceptional sequences, rooted labeled
// forests, parking functions, Prufer codes and transposition factorizations
// of the (n+1)-cycle (0 1 2 ... n).

namespace excseq {

using ParkingFunction = std::vector<int>;

// At most p entries may exceed n-p, for every p.
inline bool is_parking_function(const ParkingFunction& p) {
    const int n = static_cast<int>(p.size());
    if (n == 0) return false;
    for (int e : p)
        if (e < 1 || e > n) return false;
    ParkingFunction sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < n; ++k)
        if (sorted[static_cast<std::size_t>(k)] > k + 1) return false;
    return true;
}

// Recursive layout of the sequence attached to a forest: roots get
// consecutive blocks of [1,n] in ascending label order; inside a block
// [a,b] the larger-labeled children are laid out first, then a one-vertex
// gap, then the smaller-labeled children ending at b.
inline ExceptionalSequence forest_to_ces(const RootedLabeledForest& f) {
    const int n = f.n;
    ExceptionalSequence seq(n);
    seq.objects.resize(static_cast<std::size_t>(n));
    std::function<void(int, int, int)> assign = [&](int v, int a, int b) {
        seq.objects[static_cast<std::size_t>(v - 1)] = IntervalModule(a, b, n);
        const auto kids = f.children(v);  // ascending
        int pos = a;
        for (int c : kids)
            if (c > v) {
                const int w = f.weight(c);
                assign(c, pos, pos + w - 1);
                pos += w;
            }
        ++pos;  // the gap
        for (int c : kids)
            if (c < v) {
                const int w = f.weight(c);
                assign(c, pos, pos + w - 1);
                pos += w;
            }
        if (pos != b + 1) throw std::logic_error("forest_to_ces: block layout mismatch");
    };
    int offset = 1;
    for (int r : f.roots()) {
        const int w = f.weight(r);
        assign(r, offset, offset + w - 1);
        offset += w;
    }
    if (offset != n + 1) throw std::logic_error("forest_to_ces: root layout mismatch");
    if (!is_exceptional_sequence(seq))
        throw std::logic_error("forest_to_ces: output is not exceptional");
    return seq;
}

// Hasse diagram of support inclusion: the parent of i is the j whose support
// is the minimal strict superset of supp E_i, or 0 if none.
inline RootedLabeledForest ces_to_forest(const ExceptionalSequence& seq) {
    require_complete_exceptional(seq);
    const int n = seq.n;
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        const auto& mi = seq.objects[static_cast<std::size_t>(i - 1)];
        int best = 0;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            const auto& mj = seq.objects[static_cast<std::size_t>(j - 1)];
            if (!(mj.a <= mi.a && mi.b <= mj.b) || mj.length() == mi.length()) continue;
            if (best == 0 || mj.length() < seq.objects[static_cast<std::size_t>(best - 1)].length())
                best = j;
        }
        parent[static_cast<std::size_t>(i - 1)] = best;
    }
    return RootedLabeledForest(n, std::move(parent));
}

// Relative flags read off the forest: roots get both flags, ascending
// vertices are relatively projective, descending ones relatively injective.
inline std::vector<RelativeFlags> forest_flags(const RootedLabeledForest& f) {
    std::vector<RelativeFlags> flags(static_cast<std::size_t>(f.n));
    for (int v = 1; v <= f.n; ++v) {
        const int p = f.parent_of(v);
        if (p == 0)
            flags[static_cast<std::size_t>(v - 1)] = {true, true};
        else if (p > v)
            flags[static_cast<std::size_t>(v - 1)] = {true, false};
        else
            flags[static_cast<std::size_t>(v - 1)] = {false, true};
    }
    return flags;
}

inline ParkingFunction ces_tops(const ExceptionalSequence& seq) {
    require_complete_exceptional(seq);
    ParkingFunction tops;
    tops.reserve(seq.objects.size());
    for (const auto& m : seq.objects) tops.push_back(m.a);
    if (!is_parking_function(tops))
        throw std::logic_error("ces_tops: tops are not a parking function");
    return tops;
}

// Cars n down to 1 take the first free spot >= their preference.
inline ExceptionalSequence park_nondecreasing(const ParkingFunction& p) {
    const int n = static_cast<int>(p.size());
    if (!std::is_sorted(p.begin(), p.end()))
        throw std::invalid_argument("park_nondecreasing: input must be nondecreasing");
    if (!is_parking_function(p))
        throw std::invalid_argument("park_nondecreasing: input is not a parking function");
    std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> spot(static_cast<std::size_t>(n), 0);
    for (int car = n; car >= 1; --car) {
        int s = p[static_cast<std::size_t>(car - 1)];
        while (s <= n && taken[static_cast<std::size_t>(s)]) ++s;
        if (s > n) throw std::logic_error("park_nondecreasing: parking overflow");
        taken[static_cast<std::size_t>(s)] = true;
        spot[static_cast<std::size_t>(car - 1)] = s;
    }
    ExceptionalSequence seq(n);
    seq.objects.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        seq.objects.emplace_back(p[static_cast<std::size_t>(i - 1)],
                                 spot[static_cast<std::size_t>(i - 1)], n);
    if (!is_exceptional_sequence(seq))
        throw std::logic_error("park_nondecreasing: output is not exceptional");
    return seq;
}

// Inverse of ces_tops: sort the parking function with adjacent swaps, park
// the sorted function, then undo the swaps with inverse braid moves (an
// inverse move swaps two distinct adjacent tops in ascending position).
inline ExceptionalSequence parking_to_ces(const ParkingFunction& p) {
    if (!is_parking_function(p))
        throw std::invalid_argument("parking_to_ces: input is not a parking function");
    const int n = static_cast<int>(p.size());
    ParkingFunction s = p;
    std::vector<int> swaps;  // 1-based positions, in the order performed
    for (int pass = 0; pass < n; ++pass) {
        bool moved = false;
        for (int j = 0; j + 1 < n; ++j) {
            if (s[static_cast<std::size_t>(j)] > s[static_cast<std::size_t>(j + 1)]) {
                std::swap(s[static_cast<std::size_t>(j)], s[static_cast<std::size_t>(j + 1)]);
                swaps.push_back(j + 1);
                moved = true;
            }
        }
        if (!moved) break;
    }
    ExceptionalSequence seq = park_nondecreasing(s);
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
        seq = braid_sigma(seq, *it, true);
    if (ces_tops(seq) != p)
        throw std::logic_error("parking_to_ces: tops postcondition failed");
    return seq;
}

// Consecutive differences mod n+1.
inline PruferCode parking_prufer(const ParkingFunction& p) {
    if (!is_parking_function(p))
        throw std::invalid_argument("parking_prufer: input is not a parking function");
    const int n = static_cast<int>(p.size());
    PruferCode code;
    for (int i = 0; i + 1 < n; ++i) {
        int d = (p[static_cast<std::size_t>(i + 1)] - p[static_cast<std::size_t>(i)]) % (n + 1);
        if (d < 0) d += n + 1;
        code.push_back(d);
    }
    return code;
}

// The unique additive shift of a lift that lands on a parking function.
inline ParkingFunction prufer_parking(const PruferCode& code) {
    const int n = static_cast<int>(code.size()) + 1;
    for (int e : code)
        if (e < 0 || e > n)
            throw std::invalid_argument("prufer_parking: entry out of range 0..n");
    std::optional<ParkingFunction> found;
    for (int t = 1; t <= n; ++t) {
        ParkingFunction cand{t};
        bool ok = true;
        for (int e : code) {
            const int next = (cand.back() + e) % (n + 1);
            if (next == 0) {
                ok = false;
                break;
            }
            cand.push_back(next);
        }
        if (!ok || !is_parking_function(cand)) continue;
        if (found) throw std::logic_error("prufer_parking: shift is not unique");
        found = cand;
    }
    if (!found) throw std::logic_error("prufer_parking: no shift yields a parking function");
    return *found;
}

// Unordered pairs in {0..n}; rendered with the module's orientation
// (a, b+1 mod n+1) first.
using TranspositionFactorization = std::vector<std::pair<int, int>>;

inline TranspositionFactorization ces_to_factorization(const ExceptionalSequence& seq) {
    require_complete_exceptional(seq);
    const int n = seq.n;
    TranspositionFactorization fac;
    for (const auto& m : seq.objects) fac.emplace_back(m.a, (m.b + 1) % (n + 1));
    return fac;
}

// Composite with the rightmost factor applied first.
inline std::vector<int> factorization_composite(const TranspositionFactorization& fac, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n) + 1);
    for (int v = 0; v <= n; ++v) perm[static_cast<std::size_t>(v)] = v;
    for (int v = 0; v <= n; ++v) {
        int y = v;
        for (auto it = fac.rbegin(); it != fac.rend(); ++it) {
            if (y == it->first)
                y = it->second;
            else if (y == it->second)
                y = it->first;
        }
        perm[static_cast<std::size_t>(v)] = y;
    }
    return perm;
}

inline bool composite_is_full_cycle(const TranspositionFactorization& fac, int n) {
    const auto perm = factorization_composite(fac, n);
    for (int v = 0; v <= n; ++v)
        if (perm[static_cast<std::size_t>(v)] != (v + 1) % (n + 1)) return false;
    return true;
}

inline ExceptionalSequence factorization_to_ces(const TranspositionFactorization& fac) {
    const int n = static_cast<int>(fac.size());
    if (n < 1) throw std::invalid_argument("factorization_to_ces: empty factorization");
    for (const auto& [x, y] : fac) {
        if (x < 0 || x > n || y < 0 || y > n || x == y)
            throw std::invalid_argument("factorization_to_ces: bad transposition");
    }
    if (!composite_is_full_cycle(fac, n))
        throw std::invalid_argument("factorization_to_ces: composite is not the (n+1)-cycle");
    ExceptionalSequence seq(n);
    for (const auto& [x, y] : fac) {
        // unique reading {x,y} = {a, b+1 mod n+1} with 1 <= a <= b <= n
        std::optional<IntervalModule> m;
        auto try_reading = [&](int first, int second) {
            const int a = first;
            const int b = second == 0 ? n : second - 1;
            if (a >= 1 && a <= b && b <= n) {
                if (m) throw std::logic_error("factorization_to_ces: ambiguous pair");
                m = IntervalModule(a, b, n);
            }
        };
        try_reading(x, y);
        try_reading(y, x);
        if (!m) throw std::invalid_argument("factorization_to_ces: pair has no interval reading");
        seq.objects.push_back(*m);
    }
    if (!is_exceptional_sequence(seq))
        throw std::logic_error("factorization_to_ces: output is not exceptional");
    return seq;
}

}  // namespace excseq
