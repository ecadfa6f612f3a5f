#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

// Rooted labeled forests on vertices 1..n. The parent map stores 0 for roots;
// attaching every root to an extra master root 0 turns the forest F into a
// tree F_+ on labels 0..n. A non-root vertex is ascending when its parent
// label is larger, descending when smaller.

namespace excseq {

struct RootedLabeledForest {
    int n = 1;
    std::vector<int> parent;  // parent[i-1] is the parent label of i, 0 for roots

    RootedLabeledForest() : parent{0} {}
    RootedLabeledForest(int rank, std::vector<int> parents)
        : n(rank), parent(std::move(parents)) {
        validate();
    }

    void validate() const {
        if (n < 1) throw std::invalid_argument("forest: rank must be >= 1");
        if (static_cast<int>(parent.size()) != n)
            throw std::invalid_argument("forest: parent map must have n entries");
        for (int p : parent)
            if (p < 0 || p > n) throw std::invalid_argument("forest: parent label out of range");
        // every label must reach 0 without cycling
        for (int v = 1; v <= n; ++v) {
            int cur = v;
            for (int steps = 0; cur != 0; ++steps) {
                if (steps > n) throw std::invalid_argument("forest: parent map has a cycle");
                cur = parent[static_cast<std::size_t>(cur - 1)];
            }
        }
    }

    int parent_of(int v) const { return parent[static_cast<std::size_t>(v - 1)]; }
    bool is_root(int v) const { return parent_of(v) == 0; }

    std::vector<int> roots() const {
        std::vector<int> out;
        for (int v = 1; v <= n; ++v)
            if (is_root(v)) out.push_back(v);
        return out;
    }

    std::vector<int> children(int v) const {  // v may be 0 (master root)
        std::vector<int> out;
        for (int c = 1; c <= n; ++c)
            if (parent_of(c) == v) out.push_back(c);
        return out;
    }

    // size of the subtree hanging at v (v included)
    int weight(int v) const {
        int w = 1;
        for (int c : children(v)) w += weight(c);
        return w;
    }

    friend bool operator==(const RootedLabeledForest&, const RootedLabeledForest&) = default;
};

struct ForestStatistics {
    int p = 0;  // ascending vertices: parent label > own label
    int q = 0;  // descending vertices: parent label < own label
    int r = 0;  // roots

    friend bool operator==(const ForestStatistics&, const ForestStatistics&) = default;
};

inline ForestStatistics statistics(const RootedLabeledForest& f) {
    ForestStatistics s;
    for (int v = 1; v <= f.n; ++v) {
        const int p = f.parent_of(v);
        if (p == 0)
            ++s.r;
        else if (p > v)
            ++s.p;
        else
            ++s.q;
    }
    return s;
}

// Vertices carrying the projective modules of the associated sequence:
// start at the largest-labeled root and repeatedly descend to the
// largest-labeled child with smaller label. Returned ascending.
inline std::vector<int> projective_vertices(const RootedLabeledForest& f) {
    std::vector<int> chain;
    int cur = f.roots().back();
    chain.push_back(cur);
    for (;;) {
        int next = 0;
        for (int c : f.children(cur))
            if (c < cur && c > next) next = c;
        if (next == 0) break;
        chain.push_back(next);
        cur = next;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

// Dual chain: smallest-labeled root, then smallest larger-labeled children.
inline std::vector<int> injective_vertices(const RootedLabeledForest& f) {
    std::vector<int> chain;
    int cur = f.roots().front();
    chain.push_back(cur);
    for (;;) {
        int next = 0;
        for (int c : f.children(cur))
            if (c > cur && (next == 0 || c < next)) next = c;
        if (next == 0) break;
        chain.push_back(next);
        cur = next;
    }
    return chain;
}

using PruferCode = std::vector<int>;

// Prufer code of F_+ by repeatedly deleting the largest-labeled leaf and
// recording its neighbor; the master root 0 is never deleted, so a root
// deleted while isolated records 0.
inline PruferCode prufer_encode(const RootedLabeledForest& f) {
    const int n = f.n;
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> parent(static_cast<std::size_t>(n) + 1, -1);
    parent[0] = -1;
    for (int v = 1; v <= n; ++v) {
        parent[static_cast<std::size_t>(v)] = f.parent_of(v);
        ++degree[static_cast<std::size_t>(v)];
        ++degree[static_cast<std::size_t>(f.parent_of(v))];
    }
    std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
    PruferCode code;
    auto neighbor = [&](int v) {
        if (parent[static_cast<std::size_t>(v)] >= 0 &&
            !removed[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])])
            return parent[static_cast<std::size_t>(v)];
        for (int c = 1; c <= n; ++c)
            if (!removed[static_cast<std::size_t>(c)] && parent[static_cast<std::size_t>(c)] == v)
                return c;
        return -1;
    };
    for (int step = 0; step < n - 1; ++step) {
        int leaf = -1;
        for (int v = n; v >= 1; --v) {
            if (removed[static_cast<std::size_t>(v)]) continue;
            if (degree[static_cast<std::size_t>(v)] == 1) {
                leaf = v;
                break;
            }
        }
        const int nb = neighbor(leaf);
        code.push_back(nb);
        removed[static_cast<std::size_t>(leaf)] = true;
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(nb)];
    }
    return code;
}

// Inverse reconstruction: attach the largest current leaf candidate to the
// next code entry; the final two survivors are joined, then the tree is
// rooted at 0.
inline RootedLabeledForest prufer_decode(const PruferCode& code, int n) {
    if (n < 1) throw std::invalid_argument("prufer_decode: rank must be >= 1");
    if (static_cast<int>(code.size()) != n - 1)
        throw std::invalid_argument("prufer_decode: code must have n-1 entries");
    for (int e : code)
        if (e < 0 || e > n) throw std::invalid_argument("prufer_decode: entry out of range 0..n");
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (int e : code) ++degree[static_cast<std::size_t>(e)];
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int e : code) {
        int leaf = -1;
        for (int v = n; v >= 0; --v)
            if (!used[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] == 1) {
                leaf = v;
                break;
            }
        adj[static_cast<std::size_t>(leaf)].push_back(e);
        adj[static_cast<std::size_t>(e)].push_back(leaf);
        used[static_cast<std::size_t>(leaf)] = true;
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(e)];
    }
    std::vector<int> last;
    for (int v = 0; v <= n; ++v)
        if (!used[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] == 1)
            last.push_back(v);
    adj[static_cast<std::size_t>(last[0])].push_back(last[1]);
    adj[static_cast<std::size_t>(last[1])].push_back(last[0]);
    // root at 0
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    seen[0] = true;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            parent[static_cast<std::size_t>(w - 1)] = v;
            stack.push_back(w);
        }
    }
    return RootedLabeledForest(n, std::move(parent));
}

// Vertices i, j are close when they are siblings in F_+ (including two
// roots) or one is the parent of the other.
inline bool vertices_close(const RootedLabeledForest& f, int i, int j) {
    return f.parent_of(i) == f.parent_of(j) || f.parent_of(i) == j || f.parent_of(j) == i;
}

namespace detail {

inline void relabel_children(std::vector<int>& parent, int from, int to) {
    for (auto& p : parent)
        if (p == from) p = to;
}

}  // namespace detail

// The braid move on forests. Case 0 swaps the labels i, i+1; in the close
// cases the node v_{i+1} is removed, v_i is relabeled to i+1, and a new node
// v_i' is inserted per the case analysis.
inline RootedLabeledForest sigma_forest(const RootedLabeledForest& f, int i,
                                        bool inverse = false) {
    if (i < 1 || i > f.n - 1)
        throw std::invalid_argument("sigma_forest: generator index out of range 1..n-1");
    if (inverse) {
        // order of sigma_i on any forest is 2 or 3
        RootedLabeledForest f1 = sigma_forest(f, i);
        RootedLabeledForest f2 = sigma_forest(f1, i);
        if (f2 == f) return f1;
        if (!(sigma_forest(f2, i) == f))
            throw std::logic_error("sigma_forest: generator order exceeds 3");
        return f2;
    }
    auto parent = f.parent;
    auto& pi = parent[static_cast<std::size_t>(i - 1)];
    auto& pi1 = parent[static_cast<std::size_t>(i)];
    const int old_pi = pi;
    const int old_pi1 = pi1;
    if (old_pi1 == i) {
        // Case 1: v_i is the parent of v_{i+1}
        pi1 = old_pi;
        pi = i + 1;
    } else if (old_pi == i + 1) {
        // Case 2: v_i is a child of v_{i+1}; children of v_i move to the
        // relabeled node, the other children of v_{i+1} move to the new node
        std::vector<int> ci, ci1;
        for (int v = 1; v <= f.n; ++v) {
            if (v != i && v != i + 1 && f.parent_of(v) == i) ci.push_back(v);
            if (v != i && v != i + 1 && f.parent_of(v) == i + 1) ci1.push_back(v);
        }
        for (int v : ci) parent[static_cast<std::size_t>(v - 1)] = i + 1;
        for (int v : ci1) parent[static_cast<std::size_t>(v - 1)] = i;
        pi = old_pi1;
    } else if (old_pi == old_pi1) {
        // Case 3: siblings in F_+; the children sets swap
        std::vector<int> ci, ci1;
        for (int v = 1; v <= f.n; ++v) {
            if (v != i && v != i + 1 && f.parent_of(v) == i) ci.push_back(v);
            if (v != i && v != i + 1 && f.parent_of(v) == i + 1) ci1.push_back(v);
        }
        for (int v : ci) parent[static_cast<std::size_t>(v - 1)] = i + 1;
        for (int v : ci1) parent[static_cast<std::size_t>(v - 1)] = i;
        pi1 = i;
    } else {
        // Case 0: not close; swap the labels
        pi = old_pi1;
        pi1 = old_pi;
        std::vector<int> ci, ci1;
        for (int v = 1; v <= f.n; ++v) {
            if (v != i && v != i + 1 && f.parent_of(v) == i) ci.push_back(v);
            if (v != i && v != i + 1 && f.parent_of(v) == i + 1) ci1.push_back(v);
        }
        for (int v : ci) parent[static_cast<std::size_t>(v - 1)] = i + 1;
        for (int v : ci1) parent[static_cast<std::size_t>(v - 1)] = i;
    }
    return RootedLabeledForest(f.n, std::move(parent));
}

inline RootedLabeledForest apply_braid_word_forest(const RootedLabeledForest& f,
                                                   const std::vector<int>& word) {
    for (int letter : word) {
        const int idx = letter < 0 ? -letter : letter;
        if (letter == 0 || idx < 1 || idx > f.n - 1)
            throw std::invalid_argument("braid word: generator index out of range 1.." +
                                        std::to_string(f.n - 1));
    }
    RootedLabeledForest cur = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = sigma_forest(cur, *it < 0 ? -*it : *it, *it < 0);
    return cur;
}

// delta relabels cyclically (old n becomes 1, old j becomes j+1); when the
// old v_n was a root it is additionally exchanged with the master root:
// its children become roots and the other former roots become its children.
inline RootedLabeledForest delta_forest(const RootedLabeledForest& f) {
    const int n = f.n;
    const bool vn_root = f.is_root(n);
    auto shift = [n](int v) { return v == 0 ? 0 : (v == n ? 1 : v + 1); };
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    for (int v = 1; v <= n; ++v)
        parent[static_cast<std::size_t>(shift(v) - 1)] = shift(f.parent_of(v));
    if (vn_root) {
        std::vector<int> new_roots, new_children;
        for (int v = 2; v <= n; ++v) {
            if (parent[static_cast<std::size_t>(v - 1)] == 1) new_roots.push_back(v);
            if (parent[static_cast<std::size_t>(v - 1)] == 0) new_children.push_back(v);
        }
        for (int v : new_roots) parent[static_cast<std::size_t>(v - 1)] = 0;
        for (int v : new_children) parent[static_cast<std::size_t>(v - 1)] = 1;
    }
    return RootedLabeledForest(n, std::move(parent));
}

// D relabels i -> n+1-i, keeping the shape of F_+.
inline RootedLabeledForest duality_forest(const RootedLabeledForest& f) {
    const int n = f.n;
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    for (int v = 1; v <= n; ++v) {
        const int p = f.parent_of(v);
        parent[static_cast<std::size_t>(n - v)] = p == 0 ? 0 : n + 1 - p;
    }
    return RootedLabeledForest(n, std::move(parent));
}

inline RootedLabeledForest conjugation_forest(const RootedLabeledForest& f) {
    // C = D o Delta
    std::vector<int> word;
    for (int k = f.n - 1; k >= 1; --k)
        for (int i = 1; i <= k; ++i) word.push_back(i);
    return duality_forest(apply_braid_word_forest(f, word));
}

// All (n+1)^{n-1} forests, by decoding every Prufer code in lexicographic
// order.
inline void enumerate_forests(int n,
                              const std::function<void(const RootedLabeledForest&)>& visit) {
    if (n < 1) throw std::invalid_argument("enumerate_forests: rank must be >= 1");
    PruferCode code(static_cast<std::size_t>(n - 1), 0);
    for (;;) {
        visit(prufer_decode(code, n));
        int pos = n - 2;
        while (pos >= 0 && code[static_cast<std::size_t>(pos)] == n) {
            code[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++code[static_cast<std::size_t>(pos)];
    }
}

inline std::vector<RootedLabeledForest> all_forests(int n) {
    std::vector<RootedLabeledForest> out;
    enumerate_forests(n, [&](const RootedLabeledForest& f) { out.push_back(f); });
    return out;
}

// Canonical form of F_+ as an unlabeled tree (AHU rooted at the centers), so
// shape-preservation statements can be tested as string equality.
inline std::string plus_tree_canonical_form(const RootedLabeledForest& f) {
    const int n = f.n;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) {
        adj[static_cast<std::size_t>(v)].push_back(f.parent_of(v));
        adj[static_cast<std::size_t>(f.parent_of(v))].push_back(v);
    }
    // peel leaves to find the 1 or 2 centers
    std::vector<int> degree(static_cast<std::size_t>(n) + 1);
    for (int v = 0; v <= n; ++v)
        degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    std::vector<int> layer;
    std::vector<bool> gone(static_cast<std::size_t>(n) + 1, false);
    for (int v = 0; v <= n; ++v)
        if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    int remaining = n + 1;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            gone[static_cast<std::size_t>(v)] = true;
            --remaining;
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (gone[static_cast<std::size_t>(w)]) continue;
                if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v <= n; ++v)
        if (!gone[static_cast<std::size_t>(v)]) centers.push_back(v);
    std::function<std::string(int, int)> ahu = [&](int v, int from) {
        std::vector<std::string> parts;
        for (int w : adj[static_cast<std::size_t>(v)])
            if (w != from) parts.push_back(ahu(w, v));
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (const auto& p : parts) s += p;
        s += ")";
        return s;
    };
    if (centers.size() == 1) return ahu(centers[0], -1);
    std::string s1 = ahu(centers[0], centers[1]);
    std::string s2 = ahu(centers[1], centers[0]);
    if (s2 < s1) std::swap(s1, s2);
    return "(" + s1 + s2 + ")";
}

}  // namespace excseq
