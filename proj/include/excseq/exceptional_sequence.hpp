#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "interval_module.hpp"

// Exceptional sequences for linear A_n and the braid group action on them.
// A sequence (E_1,...,E_k) is exceptional when Hom(E_j,E_i) = 0 = Ext(E_j,E_i)
// for all i < j; complete when k = n. The generator sigma_i moves E_i to
// position i+1 and inserts the uniquely determined E_i' at position i.
//
// Braid words are lists of signed generator indices (-i = inverse) and are
// applied rightmost letter first, so the word {1,2,...,n-1} acts as the
// fundamental braid delta.

namespace excseq {

struct ExceptionalSequence {
    int n = 1;
    std::vector<IntervalModule> objects;

    ExceptionalSequence() = default;
    explicit ExceptionalSequence(int rank) : n(rank) {
        if (n < 1) throw std::invalid_argument("ExceptionalSequence: rank must be >= 1");
    }
    explicit ExceptionalSequence(std::vector<IntervalModule> objs) : objects(std::move(objs)) {
        if (objects.empty())
            throw std::invalid_argument("ExceptionalSequence: cannot infer rank from empty list");
        n = objects.front().n;
        for (const auto& m : objects)
            if (m.n != n) throw std::invalid_argument("ExceptionalSequence: mixed ranks");
    }

    bool complete() const { return static_cast<int>(objects.size()) == n; }
    std::size_t size() const { return objects.size(); }

    friend bool operator==(const ExceptionalSequence&, const ExceptionalSequence&) = default;
};

inline bool is_exceptional_sequence(std::span<const IntervalModule> objects) {
    for (std::size_t j = 1; j < objects.size(); ++j)
        if (objects[j].n != objects[0].n)
            throw std::invalid_argument("is_exceptional_sequence: mixed ranks");
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = i + 1; j < objects.size(); ++j)
            if (hom_dim(objects[j], objects[i]) != 0 || ext_dim(objects[j], objects[i]) != 0)
                return false;
    return true;
}

inline bool is_exceptional_sequence(const ExceptionalSequence& seq) {
    return is_exceptional_sequence(std::span<const IntervalModule>(seq.objects));
}

inline void require_complete_exceptional(const ExceptionalSequence& seq) {
    if (!seq.complete())
        throw std::invalid_argument("expected a complete exceptional sequence");
    if (!is_exceptional_sequence(seq))
        throw std::invalid_argument("sequence is not exceptional");
}

enum class Side { left, right };

// Right (left) perpendicular category of Z inside the interval modules of
// rank n: all X with hom and ext from (to) every member of Z vanishing.
inline std::vector<IntervalModule> perpendicular(std::span<const IntervalModule> z, Side side,
                                                 int n) {
    for (const auto& m : z)
        if (m.n != n) throw std::invalid_argument("perpendicular: rank mismatch");
    std::vector<IntervalModule> out;
    for (const auto& x : all_interval_modules(n)) {
        bool ok = true;
        for (const auto& m : z) {
            if (side == Side::right ? (hom_dim(m, x) != 0 || ext_dim(m, x) != 0)
                                    : (hom_dim(x, m) != 0 || ext_dim(x, m) != 0)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

struct RelativeFlags {
    bool rel_proj = false;
    bool rel_inj = false;

    friend bool operator==(const RelativeFlags&, const RelativeFlags&) = default;
};

// Position i is relatively projective iff E_i is Ext-projective in the right
// perpendicular category of E_{i+1},...,E_n, and dually for injectivity.
// The ambient Ext suffices because these subcategories are extension closed.
inline std::vector<RelativeFlags> relative_flags(const ExceptionalSequence& seq) {
    require_complete_exceptional(seq);
    const int n = seq.n;
    std::vector<RelativeFlags> flags(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::span<const IntervalModule> later(seq.objects.data() + i + 1,
                                              static_cast<std::size_t>(n - i - 1));
        std::span<const IntervalModule> earlier(seq.objects.data(), static_cast<std::size_t>(i));
        bool proj = true;
        for (const auto& x : perpendicular(later, Side::right, n))
            if (ext_dim(seq.objects[static_cast<std::size_t>(i)], x) != 0) {
                proj = false;
                break;
            }
        bool inj = true;
        for (const auto& x : perpendicular(earlier, Side::left, n))
            if (ext_dim(x, seq.objects[static_cast<std::size_t>(i)]) != 0) {
                inj = false;
                break;
            }
        flags[static_cast<std::size_t>(i)] = {proj, inj};
    }
    return flags;
}

namespace detail {

// The inserted object for the exceptional pair (first, second), by support
// case: orthogonal, shared socle (submodule), shared top (quotient), or
// consecutive. Returns nullopt when the pair is not exceptional.
inline std::optional<IntervalModule> braid_insert(const IntervalModule& first,
                                                  const IntervalModule& second) {
    const int n = first.n;
    int fired = 0;
    std::optional<IntervalModule> result;
    const bool disjoint_gap = second.b + 1 < first.a || first.b + 1 < second.a;
    const bool nested_strict = (first.a > second.a && first.b < second.b) ||
                               (first.a < second.a && first.b > second.b);
    if (disjoint_gap || nested_strict) {
        ++fired;
        result = second;
    }
    if (first.b == second.b && first.a > second.a) {  // first submodule of second
        ++fired;
        result = IntervalModule(second.a, first.a - 1, n);
    }
    if (first.a == second.a && first.b > second.b) {  // second quotient of first
        ++fired;
        result = IntervalModule(second.b + 1, first.b, n);
    }
    if (first.b + 1 == second.a) {  // consecutive supports
        ++fired;
        result = IntervalModule(first.a, second.b, n);
    }
    if (fired != 1) return std::nullopt;
    return result;
}

}  // namespace detail

// sigma_i(E_1,...,E_n) = (E_1,...,E_{i-1}, E_i', E_i, E_{i+2},...,E_n).
// The inverse is found by searching the interval modules for the unique
// partner that the forward move sends back to the input.
inline ExceptionalSequence braid_sigma(const ExceptionalSequence& seq, int i,
                                       bool inverse = false) {
    require_complete_exceptional(seq);
    const int n = seq.n;
    if (i < 1 || i > n - 1)
        throw std::invalid_argument("braid_sigma: generator index out of range 1..n-1");
    const std::size_t p = static_cast<std::size_t>(i - 1);
    ExceptionalSequence out = seq;
    if (!inverse) {
        auto inserted = detail::braid_insert(seq.objects[p], seq.objects[p + 1]);
        if (!inserted)
            throw std::logic_error("braid_sigma: adjacent pair is not exceptional");
        out.objects[p] = *inserted;
        out.objects[p + 1] = seq.objects[p];
    } else {
        // preimage has E_{i} = seq[i+1]; search its partner W
        int found = 0;
        for (const auto& w : all_interval_modules(n)) {
            auto inserted = detail::braid_insert(seq.objects[p + 1], w);
            if (!inserted || !(*inserted == seq.objects[p])) continue;
            ExceptionalSequence cand = seq;
            cand.objects[p] = seq.objects[p + 1];
            cand.objects[p + 1] = w;
            if (!is_exceptional_sequence(cand)) continue;
            ++found;
            out = cand;
        }
        if (found != 1)
            throw std::logic_error("braid_sigma: inverse preimage is not unique");
    }
    if (!is_exceptional_sequence(out))
        throw std::logic_error("braid_sigma: output is not exceptional");
    return out;
}

using BraidWord = std::vector<int>;

inline void validate_braid_word(const BraidWord& word, int n) {
    for (int letter : word) {
        const int idx = letter < 0 ? -letter : letter;
        if (letter == 0 || idx < 1 || idx > n - 1)
            throw std::invalid_argument("braid word: generator index out of range 1.." +
                                        std::to_string(n - 1));
    }
}

// Letters act rightmost first.
inline ExceptionalSequence apply_braid_word(const ExceptionalSequence& seq,
                                            const BraidWord& word) {
    require_complete_exceptional(seq);
    validate_braid_word(word, seq.n);
    ExceptionalSequence cur = seq;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = braid_sigma(cur, *it < 0 ? -*it : *it, *it < 0);
    return cur;
}

// delta = sigma_1 sigma_2 ... sigma_{n-1}.
inline BraidWord delta_word(int n) {
    BraidWord w;
    for (int i = 1; i <= n - 1; ++i) w.push_back(i);
    return w;
}

// delta_k = sigma_1 ... sigma_k, 1 <= k <= n-1.
inline BraidWord delta_k_word(int n, int k) {
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("delta_k_word: k out of range 1..n-1");
    BraidWord w;
    for (int i = 1; i <= k; ++i) w.push_back(i);
    return w;
}

// Garside element Delta = delta_{n-1} delta_{n-2} ... delta_1.
inline BraidWord garside_word(int n) {
    BraidWord w;
    for (int k = n - 1; k >= 1; --k)
        for (int i = 1; i <= k; ++i) w.push_back(i);
    return w;
}

inline BraidWord inverse_word(const BraidWord& word) {
    BraidWord w(word.rbegin(), word.rend());
    for (auto& letter : w) letter = -letter;
    return w;
}

inline BraidWord garside_inverse_word(int n) { return inverse_word(garside_word(n)); }

// Full twist delta^n = Delta^2.
inline BraidWord full_twist_word(int n) {
    BraidWord w;
    for (int rep = 0; rep < n; ++rep)
        for (int i = 1; i <= n - 1; ++i) w.push_back(i);
    return w;
}

// Duality D: reverse the order and send M(a,b) to M(n+1-b, n+1-a).
inline ExceptionalSequence duality(const ExceptionalSequence& seq) {
    require_complete_exceptional(seq);
    const int n = seq.n;
    ExceptionalSequence out(n);
    out.objects.reserve(static_cast<std::size_t>(n));
    for (auto it = seq.objects.rbegin(); it != seq.objects.rend(); ++it)
        out.objects.emplace_back(n + 1 - it->b, n + 1 - it->a, n);
    return out;
}

// Conjugation C = D o Delta.
inline ExceptionalSequence conjugation(const ExceptionalSequence& seq) {
    return duality(apply_braid_word(seq, garside_word(seq.n)));
}

// Enumerates every complete exceptional sequence exactly once, backtracking
// left to right over the interval modules with incremental pair checks kept
// as candidate bitmasks. Order: lexicographic in module indices.
inline void enumerate_ces(int n, const std::function<void(const ExceptionalSequence&)>& visit) {
    if (n < 1) throw std::invalid_argument("enumerate_ces: rank must be >= 1");
    const auto modules = all_interval_modules(n);
    const std::size_t m = modules.size();
    if (m > 64) throw std::invalid_argument("enumerate_ces: rank too large");
    // can_precede[w] = set of x allowed anywhere before w
    std::vector<std::uint64_t> can_precede(m, 0);
    for (std::size_t w = 0; w < m; ++w)
        for (std::size_t x = 0; x < m; ++x)
            if (hom_dim(modules[w], modules[x]) == 0 && ext_dim(modules[w], modules[x]) == 0)
                can_precede[w] |= std::uint64_t{1} << x;
    ExceptionalSequence seq(n);
    seq.objects.resize(static_cast<std::size_t>(n));
    // after_mask[x] = candidates still allowed once x is placed
    std::vector<std::uint64_t> after_mask(m, 0);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t w = 0; w < m; ++w)
            if (can_precede[w] & (std::uint64_t{1} << x)) after_mask[x] |= std::uint64_t{1} << w;
    const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    std::function<void(int, std::uint64_t)> rec = [&](int depth, std::uint64_t avail) {
        if (depth == n) {
            visit(seq);
            return;
        }
        std::uint64_t bits = avail;
        while (bits) {
            const int x = __builtin_ctzll(bits);
            bits &= bits - 1;
            seq.objects[static_cast<std::size_t>(depth)] = modules[static_cast<std::size_t>(x)];
            rec(depth + 1, avail & after_mask[static_cast<std::size_t>(x)]);
        }
    };
    rec(0, full);
}

inline std::vector<ExceptionalSequence> all_ces(int n) {
    std::vector<ExceptionalSequence> out;
    enumerate_ces(n, [&](const ExceptionalSequence& s) { out.push_back(s); });
    return out;
}

}  // namespace excseq
