#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "bijections.hpp"
#include "exceptional_sequence.hpp"
#include "interval_module.hpp"

// Cluster tilting sets (modules plus shifted projectives), signed exceptional
// sequences, the Garside map between them and the c-vector pairing.

namespace excseq {

struct SignedObject {
    IntervalModule module;
    bool shifted = false;  // true represents M[1]; the sign epsilon = -1

    friend auto operator<=>(const SignedObject&, const SignedObject&) = default;
};

struct SignedSequence {
    int n = 1;
    std::vector<SignedObject> items;

    ExceptionalSequence underlying() const {
        ExceptionalSequence seq(n);
        for (const auto& it : items) seq.objects.push_back(it.module);
        return seq;
    }
    std::vector<int> signs() const {
        std::vector<int> out;
        for (const auto& it : items) out.push_back(it.shifted ? -1 : 1);
        return out;
    }

    friend bool operator==(const SignedSequence&, const SignedSequence&) = default;
};

struct ClusterTiltingSet {
    int n = 1;
    std::vector<SignedObject> items;  // kept sorted by (module, shifted)

    void normalize() { std::sort(items.begin(), items.end()); }

    friend bool operator==(const ClusterTiltingSet&, const ClusterTiltingSet&) = default;
};

// Pairwise Ext vanishing among the modules, no shifted non-projectives, no
// maps from a shifted projective to a module, all underlying modules
// distinct, n items in total.
inline bool is_cluster_tilting(const ClusterTiltingSet& set) {
    if (static_cast<int>(set.items.size()) != set.n) return false;
    for (const auto& it : set.items) {
        if (it.module.n != set.n) throw std::invalid_argument("is_cluster_tilting: rank mismatch");
        if (it.shifted && !it.module.is_projective()) return false;
    }
    for (std::size_t i = 0; i < set.items.size(); ++i)
        for (std::size_t j = 0; j < set.items.size(); ++j) {
            if (i == j) continue;
            const auto& x = set.items[i];
            const auto& y = set.items[j];
            if (i < j && x.module == y.module) return false;
            if (!x.shifted && !y.shifted && ext_dim(x.module, y.module) != 0) return false;
            if (x.shifted && !y.shifted && hom_dim(x.module, y.module) != 0) return false;
        }
    return true;
}

// Subset search over the interval modules and the shifted projectives.
inline void enumerate_clusters(int n, const std::function<void(const ClusterTiltingSet&)>& visit) {
    if (n < 1) throw std::invalid_argument("enumerate_clusters: rank must be >= 1");
    std::vector<SignedObject> candidates;
    for (const auto& m : all_interval_modules(n)) candidates.push_back({m, false});
    for (int a = 1; a <= n; ++a) candidates.push_back({IntervalModule(a, n, n), true});
    auto compatible = [](const SignedObject& x, const SignedObject& y) {
        if (x.module == y.module) return false;
        if (!x.shifted && !y.shifted)
            return ext_dim(x.module, y.module) == 0 && ext_dim(y.module, x.module) == 0;
        if (x.shifted && !y.shifted) return hom_dim(x.module, y.module) == 0;
        if (!x.shifted && y.shifted) return hom_dim(y.module, x.module) == 0;
        return true;
    };
    ClusterTiltingSet set;
    set.n = n;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(set.items.size()) == n) {
            visit(set);
            return;
        }
        const std::size_t need = static_cast<std::size_t>(n) - set.items.size();
        for (std::size_t k = from; k + need <= candidates.size(); ++k) {
            bool ok = true;
            for (const auto& chosen : set.items)
                if (!compatible(chosen, candidates[k])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            set.items.push_back(candidates[k]);
            rec(k + 1);
            set.items.pop_back();
        }
    };
    rec(0);
}

inline std::vector<ClusterTiltingSet> all_clusters(int n) {
    std::vector<ClusterTiltingSet> out;
    enumerate_clusters(n, [&](const ClusterTiltingSet& s) { out.push_back(s); });
    return out;
}

// Underlying complete exceptional sequence whose shifted positions are all
// relatively projective.
inline bool is_signed_exceptional_sequence(const SignedSequence& seq) {
    if (static_cast<int>(seq.items.size()) != seq.n) return false;
    const ExceptionalSequence under = seq.underlying();
    if (!under.complete() || !is_exceptional_sequence(under)) return false;
    const auto flags = relative_flags(under);
    for (std::size_t i = 0; i < seq.items.size(); ++i)
        if (seq.items[i].shifted && !flags[i].rel_proj) return false;
    return true;
}

// Arrange a cluster as a signed sequence: modules in the left-to-right order
// of the AR quiver (decreasing a+b, ties by (a,b)), then the shifted
// projectives by increasing length.
inline SignedSequence cluster_to_signed_sequence(const ClusterTiltingSet& set) {
    if (!is_cluster_tilting(set))
        throw std::invalid_argument("cluster_to_signed_sequence: not a cluster tilting set");
    SignedSequence seq;
    seq.n = set.n;
    std::vector<SignedObject> modules, shifted;
    for (const auto& it : set.items) (it.shifted ? shifted : modules).push_back(it);
    std::sort(modules.begin(), modules.end(), [](const SignedObject& x, const SignedObject& y) {
        const int sx = x.module.a + x.module.b;
        const int sy = y.module.a + y.module.b;
        if (sx != sy) return sx > sy;
        return x.module < y.module;
    });
    std::sort(shifted.begin(), shifted.end(), [](const SignedObject& x, const SignedObject& y) {
        return x.module.length() < y.module.length();
    });
    seq.items = std::move(modules);
    seq.items.insert(seq.items.end(), shifted.begin(), shifted.end());
    if (!is_signed_exceptional_sequence(seq))
        throw std::logic_error("cluster_to_signed_sequence: output is not a signed sequence");
    return seq;
}

// Garside action on a signed sequence. The sign of the partner E'_{n-k+1} of
// E_k is: the sign of E_k when E_k is projective; +1 when E_k is relatively
// projective but not projective; -1 otherwise (relatively injective only).
inline SignedSequence garside_signed(const SignedSequence& seq) {
    const int n = seq.n;
    const ExceptionalSequence under = seq.underlying();
    const auto flags = relative_flags(under);
    const ExceptionalSequence image = apply_braid_word(under, garside_word(n));
    SignedSequence out;
    out.n = n;
    out.items.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const auto& ek = under.objects[static_cast<std::size_t>(k - 1)];
        const auto& fk = flags[static_cast<std::size_t>(k - 1)];
        bool image_shifted;
        if (ek.is_projective())
            image_shifted = seq.items[static_cast<std::size_t>(k - 1)].shifted;
        else if (fk.rel_proj)
            image_shifted = false;
        else
            image_shifted = true;
        out.items[static_cast<std::size_t>(n - k)] = {
            image.objects[static_cast<std::size_t>(n - k)], image_shifted};
    }
    if (!is_signed_exceptional_sequence(out))
        throw std::logic_error("garside_signed: output is not a signed sequence");
    return out;
}

// The pairing eps_k eps'_j chi(E_k, E'_j) must be +1 at the partner position
// j = n-k+1 and 0 elsewhere.
inline bool c_vector_check(const SignedSequence& seq, const SignedSequence& image) {
    if (seq.n != image.n || seq.items.size() != image.items.size())
        throw std::invalid_argument("c_vector_check: shape mismatch");
    const int n = seq.n;
    const auto es = seq.signs();
    const auto is = image.signs();
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j) {
            const long long chi = euler_pairing(seq.items[static_cast<std::size_t>(k - 1)].module,
                                                image.items[static_cast<std::size_t>(j - 1)].module);
            const long long val =
                es[static_cast<std::size_t>(k - 1)] * is[static_cast<std::size_t>(j - 1)] * chi;
            if (val != (j == n - k + 1 ? 1 : 0)) return false;
        }
    return true;
}

// c-vectors of the cluster: -eps'_j dim E'_j, certified through the pairing.
inline std::vector<std::vector<int>> c_vectors(const SignedSequence& image) {
    std::vector<std::vector<int>> out;
    for (const auto& it : image.items) {
        auto d = it.module.dim_vector();
        if (!it.shifted)
            for (auto& x : d) x = -x;
        out.push_back(std::move(d));
    }
    return out;
}

// Number of signed exceptional sequences: sum over complete sequences of
// 2^{number of relatively projective positions}.
inline long long count_signed(int n) {
    long long total = 0;
    enumerate_ces(n, [&](const ExceptionalSequence& seq) {
        int rel_proj = 0;
        for (const auto& fl : relative_flags(seq))
            if (fl.rel_proj) ++rel_proj;
        total += 1LL << rel_proj;
    });
    return total;
}

}  // namespace excseq
