#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bijections.hpp"
#include "cluster.hpp"
#include "exceptional_sequence.hpp"
#include "forest.hpp"
#include "formats.hpp"
#include "genfun.hpp"
#include "interval_module.hpp"
#include "oracle.hpp"

// Exhaustive verification suites. Each suite runs its identities over every
// object up to the requested rank, counts the elementary checks and records
// the first counterexample. The same functions back the `verify` subcommand
// of the CLI and the acceptance test binary.

namespace excseq::fixtures {

inline RootedLabeledForest a9_forest() {
    return RootedLabeledForest(9, {3, 5, 0, 5, 0, 5, 4, 1, 4});
}

inline ExceptionalSequence a9_sequence() {
    ExceptionalSequence seq(9);
    for (auto [a, b] : {std::pair{2, 3}, {6, 6}, {1, 3}, {7, 9}, {4, 9}, {4, 4}, {7, 7}, {2, 2},
                        {8, 8}})
        seq.objects.emplace_back(a, b, 9);
    return seq;
}

inline TranspositionFactorization a9_chords() {
    return {{2, 4}, {6, 7}, {1, 4}, {7, 0}, {4, 0}, {4, 5}, {7, 8}, {2, 3}, {8, 9}};
}

// the A7 Hasse-diagram example (S4,S5,M15,M67,S6,M12,S1)
inline ExceptionalSequence a7_hasse_sequence() {
    ExceptionalSequence seq(7);
    for (auto [a, b] :
         {std::pair{4, 4}, {5, 5}, {1, 5}, {6, 7}, {6, 6}, {1, 2}, {1, 1}})
        seq.objects.emplace_back(a, b, 7);
    return seq;
}

inline RootedLabeledForest a7_hasse_forest() {
    return RootedLabeledForest(7, {3, 3, 0, 0, 4, 3, 6});
}

// the Garside example triple (Delta^{-1} F, F, Delta F) on A7
inline RootedLabeledForest a7_garside_f() {
    return RootedLabeledForest(7, {2, 3, 0, 1, 1, 7, 3});
}
inline RootedLabeledForest a7_garside_delta_f() {
    return RootedLabeledForest(7, {5, 1, 4, 7, 0, 0, 0});
}
inline RootedLabeledForest a7_garside_delta_inv_f() {
    return RootedLabeledForest(7, {0, 1, 4, 7, 0, 5, 5});
}

// the four rows of the comparison table on A4: sequence, forest, Prufer
// code, parking function obtained through the code
struct TableRow {
    ExceptionalSequence seq;
    RootedLabeledForest forest;
    PruferCode code;
    ParkingFunction parking;
};

inline std::vector<TableRow> comparison_table() {
    auto mk = [](std::vector<std::pair<int, int>> mods, std::vector<int> parents,
                 PruferCode code, ParkingFunction parking) {
        ExceptionalSequence seq(4);
        for (auto [a, b] : mods) seq.objects.emplace_back(a, b, 4);
        return TableRow{seq, RootedLabeledForest(4, std::move(parents)), std::move(code),
                        std::move(parking)};
    };
    return {
        mk({{1, 4}, {1, 3}, {1, 2}, {1, 1}}, {0, 1, 2, 3}, {3, 2, 1}, {1, 4, 1, 2}),
        mk({{4, 4}, {1, 4}, {1, 2}, {1, 1}}, {2, 0, 2, 3}, {3, 2, 2}, {1, 4, 1, 3}),
        mk({{4, 4}, {3, 4}, {1, 4}, {1, 1}}, {2, 3, 0, 3}, {3, 2, 3}, {3, 1, 3, 1}),
        mk({{4, 4}, {3, 4}, {2, 4}, {1, 4}}, {2, 3, 4, 0}, {2, 3, 4}, {2, 4, 2, 1}),
    };
}

}  // namespace excseq::fixtures

namespace excseq::verify {

struct Report {
    std::string suite;
    int n = 0;
    bool pass = true;
    long long checks = 0;
    std::string failure;  // first counterexample, empty when pass

    Report() = default;
    Report(std::string name, int rank) : suite(std::move(name)), n(rank) {}

    void check(bool ok, const std::string& describe) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            failure = describe;
        }
    }
    void merge(const Report& other) {
        checks += other.checks;
        if (!other.pass && pass) {
            pass = false;
            failure = "[" + other.suite + "] " + other.failure;
        }
    }
};

inline long long expected_count(int n) {  // (n+1)^(n-1)
    long long v = 1;
    for (int i = 0; i < n - 1; ++i) v *= n + 1;
    return v;
}

namespace detail {

inline std::uint64_t forest_key(const RootedLabeledForest& f) {
    std::uint64_t key = 0;
    for (int p : f.parent) key = key * static_cast<std::uint64_t>(f.n + 1) + static_cast<std::uint64_t>(p);
    return key;
}

inline void enumerate_parking_functions(int n, const std::function<void(const ParkingFunction&)>& visit) {
    ParkingFunction p(static_cast<std::size_t>(n), 1);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            if (is_parking_function(p)) visit(p);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            p[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1);
        }
    };
    rec(0);
}

}  // namespace detail

// --- counting and the forest <-> sequence bijection -----------------------

inline Report verify_counting(int nmax) {
    Report rep{"counting", nmax};
    for (int n = 1; n <= nmax; ++n) {
        long long ces_count = 0;
        std::vector<std::uint64_t> mapped;
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            ++ces_count;
            mapped.push_back(detail::forest_key(ces_to_forest(seq)));
        });
        rep.check(ces_count == expected_count(n),
                  "ces count at n=" + std::to_string(n) + " is " + std::to_string(ces_count));
        long long forest_count = 0;
        std::vector<std::uint64_t> direct;
        enumerate_forests(n, [&](const RootedLabeledForest& f) {
            ++forest_count;
            direct.push_back(detail::forest_key(f));
        });
        rep.check(forest_count == expected_count(n),
                  "forest count at n=" + std::to_string(n) + " is " + std::to_string(forest_count));
        std::sort(mapped.begin(), mapped.end());
        std::sort(direct.begin(), direct.end());
        rep.check(std::adjacent_find(mapped.begin(), mapped.end()) == mapped.end(),
                  "ces_to_forest is not injective at n=" + std::to_string(n));
        rep.check(mapped == direct,
                  "ces_to_forest image differs from the forest enumeration at n=" + std::to_string(n));
    }
    return rep;
}

inline Report verify_roundtrip(int nmax) {
    Report rep{"roundtrip", nmax};
    for (int n = 1; n <= nmax; ++n) {
        enumerate_forests(n, [&](const RootedLabeledForest& f) {
            const auto seq = forest_to_ces(f);
            rep.check(ces_to_forest(seq) == f,
                      "forest round trip fails for " + render_forest_json(f));
            // weight of each vertex equals the length of its module
            bool lengths = true;
            for (int v = 1; v <= n; ++v)
                if (seq.objects[static_cast<std::size_t>(v - 1)].length() != f.weight(v))
                    lengths = false;
            rep.check(lengths, "length/weight mismatch for " + render_forest_json(f));
        });
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            rep.check(forest_to_ces(ces_to_forest(seq)) == seq,
                      "sequence round trip fails for " + render_ces(seq));
        });
    }
    return rep;
}

inline Report verify_flags(int nmax) {
    Report rep{"flags", nmax};
    for (int n = 1; n <= nmax; ++n) {
        long long all_both = 0;
        ExceptionalSequence simples(n);
        for (int v = 1; v <= n; ++v) simples.objects.emplace_back(v, v, n);
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            const auto oracle_flags = relative_flags(seq);
            const auto forest_view = forest_flags(ces_to_forest(seq));
            rep.check(oracle_flags == forest_view,
                      "flag classification differs for " + render_ces(seq));
            bool cor_c = true;
            bool both_everywhere = true;
            for (const auto& fl : oracle_flags) {
                if (!fl.rel_proj && !fl.rel_inj) cor_c = false;
                if (!(fl.rel_proj && fl.rel_inj)) both_everywhere = false;
            }
            rep.check(cor_c, "position with neither flag in " + render_ces(seq));
            if (both_everywhere) {
                ++all_both;
                rep.check(seq == simples, "unexpected all-both sequence " + render_ces(seq));
            }
        });
        rep.check(all_both == 1, "all-both count at n=" + std::to_string(n) + " is " +
                                     std::to_string(all_both));
    }
    return rep;
}

// --- hom/ext closed forms -------------------------------------------------

inline Report verify_homext_oracle(int nmax) {
    Report rep{"homext-oracle", nmax};
    for (int n = 1; n <= nmax; ++n) {
        const auto modules = all_interval_modules(n);
        for (const auto& x : modules)
            for (const auto& y : modules) {
                rep.check(hom_dim(x, y) == oracle::hom_dim_oracle(x, y),
                          "hom mismatch " + render_module(x) + " -> " + render_module(y) +
                              " at n=" + std::to_string(n));
                rep.check(ext_dim(x, y) == oracle::ext_dim_oracle(x, y),
                          "ext mismatch " + render_module(x) + " -> " + render_module(y) +
                              " at n=" + std::to_string(n));
            }
    }
    return rep;
}

inline Report verify_homext_euler(int nmax) {
    Report rep{"homext-euler", nmax};
    for (int n = 1; n <= nmax; ++n) {
        const auto modules = all_interval_modules(n);
        for (const auto& x : modules) {
            rep.check(hom_dim(x, x) == 1 && ext_dim(x, x) == 0,
                      "self hom/ext wrong for " + render_module(x));
            for (const auto& y : modules)
                rep.check(hom_dim(x, y) - ext_dim(x, y) ==
                              euler_form(x.dim_vector(), y.dim_vector()),
                          "euler form mismatch " + render_module(x) + ", " + render_module(y));
        }
        // tau* restricted to non-projectives: injective, lands in
        // non-injectives, preserves length
        std::set<IntervalModule> images;
        for (const auto& x : modules) {
            if (x.is_projective()) continue;
            const auto t = tau_star(x);
            rep.check(!t.is_injective() && t.length() == x.length(),
                      "tau* image wrong for " + render_module(x));
            rep.check(images.insert(t).second, "tau* not injective at " + render_module(x));
        }
    }
    return rep;
}

// --- braid action ----------------------------------------------------------

inline Report verify_equivariance(int nmax) {
    Report rep{"equivariance", nmax};
    for (int n = 1; n <= nmax; ++n) {
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            const auto f = ces_to_forest(seq);
            for (int i = 1; i <= n - 1; ++i) {
                rep.check(ces_to_forest(braid_sigma(seq, i)) == sigma_forest(f, i),
                          "equivariance fails for " + render_ces(seq) + " at i=" +
                              std::to_string(i));
                // distinct adjacent tops are swapped by sigma_i when
                // descending and by its inverse when ascending
                const int ti = seq.objects[static_cast<std::size_t>(i - 1)].a;
                const int ti1 = seq.objects[static_cast<std::size_t>(i)].a;
                if (ti != ti1) {
                    const auto moved = braid_sigma(seq, i, ti < ti1);
                    auto want = ces_tops(seq);
                    std::swap(want[static_cast<std::size_t>(i - 1)], want[static_cast<std::size_t>(i)]);
                    rep.check(ces_tops(moved) == want,
                              "tops transport fails for " + render_ces(seq) + " at i=" +
                                  std::to_string(i));
                }
            }
        });
    }
    return rep;
}

inline Report verify_braid_relations(int nmax) {
    Report rep{"braid-relations", nmax};
    for (int n = 1; n <= nmax; ++n) {
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            for (int i = 1; i <= n - 1; ++i) {
                rep.check(braid_sigma(braid_sigma(seq, i), i, true) == seq,
                          "sigma inverse round trip fails for " + render_ces(seq));
                for (int j = i + 2; j <= n - 1; ++j)
                    rep.check(apply_braid_word(seq, {i, j}) == apply_braid_word(seq, {j, i}),
                              "commutation fails on " + render_ces(seq));
                if (i + 1 <= n - 1)
                    rep.check(apply_braid_word(seq, {i, i + 1, i}) ==
                                  apply_braid_word(seq, {i + 1, i, i + 1}),
                              "braid relation fails on " + render_ces(seq));
            }
        });
        enumerate_forests(n, [&](const RootedLabeledForest& f) {
            for (int i = 1; i <= n - 1; ++i) {
                const auto g1 = sigma_forest(f, i);
                const auto g2 = sigma_forest(g1, i);
                if (vertices_close(f, i, i + 1))
                    rep.check(sigma_forest(g2, i) == f && !(g2 == f),
                              "close pair is not a 3-cycle in " + render_forest_json(f));
                else
                    rep.check(g2 == f, "non-close pair is not an involution in " +
                                           render_forest_json(f));
                rep.check(f.is_root(i + 1) == g1.is_root(i),
                          "root transport fails in " + render_forest_json(f));
                for (int j = i + 2; j <= n - 1; ++j)
                    rep.check(apply_braid_word_forest(f, {i, j}) ==
                                  apply_braid_word_forest(f, {j, i}),
                              "forest commutation fails on " + render_forest_json(f));
                if (i + 1 <= n - 1)
                    rep.check(apply_braid_word_forest(f, {i, i + 1, i}) ==
                                  apply_braid_word_forest(f, {i + 1, i, i + 1}),
                              "forest braid relation fails on " + render_forest_json(f));
            }
        });
    }
    return rep;
}

// --- delta and the full twist ----------------------------------------------

inline Report verify_delta(int nmax) {
    Report rep{"delta", nmax};
    for (int n = 1; n <= nmax; ++n) {
        enumerate_forests(n, [&](const RootedLabeledForest& f) {
            rep.check(delta_forest(f) == apply_braid_word_forest(f, delta_word(n)),
                      "delta_forest differs from the word action on " + render_forest_json(f));
            rep.check(plus_tree_canonical_form(delta_forest(f)) == plus_tree_canonical_form(f),
                      "delta changes the shape of " + render_forest_json(f));
        });
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            const auto moved = apply_braid_word(seq, delta_word(n));
            bool ok = moved.objects.front() == tau_star(seq.objects.back());
            for (int i = 0; i + 1 < n; ++i)
                ok = ok && moved.objects[static_cast<std::size_t>(i + 1)] ==
                               seq.objects[static_cast<std::size_t>(i)];
            rep.check(ok, "delta action wrong on " + render_ces(seq));
        });
    }
    return rep;
}

// Expected delta^n F: projective vertices and the master root cycle, all
// other labels fixed.
inline RootedLabeledForest full_twist_expected(const RootedLabeledForest& f) {
    const int n = f.n;
    const auto pv = projective_vertices(f);
    std::vector<int> new_label(static_cast<std::size_t>(n) + 1);
    for (int v = 0; v <= n; ++v) new_label[static_cast<std::size_t>(v)] = v;
    for (std::size_t i = 0; i + 1 < pv.size(); ++i)
        new_label[static_cast<std::size_t>(pv[i + 1])] = pv[i];
    new_label[0] = pv.back();
    new_label[static_cast<std::size_t>(pv.front())] = 0;
    // relabel the edges of F_+ and root at the node now labeled 0
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) {
        const int a = new_label[static_cast<std::size_t>(v)];
        const int b = new_label[static_cast<std::size_t>(f.parent_of(v))];
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
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

inline Report verify_central(int nmax) {
    Report rep{"central", nmax};
    for (int n = 1; n <= nmax; ++n) {
        enumerate_forests(n, [&](const RootedLabeledForest& f) {
            RootedLabeledForest twist = f;
            for (int rep_i = 0; rep_i < n; ++rep_i) twist = delta_forest(twist);
            rep.check(twist == full_twist_expected(f),
                      "full twist relabeling wrong on " + render_forest_json(f));
            rep.check(apply_braid_word_forest(apply_braid_word_forest(f, garside_word(n)),
                                              garside_word(n)) == twist,
                      "Delta^2 differs from delta^n on " + render_forest_json(f));
            const auto pv = projective_vertices(f);
            rep.check(injective_vertices(twist) == pv,
                      "full twist injective vertices wrong on " + render_forest_json(f));
            std::vector<int> roots_expect{pv.front()};
            for (int c : f.children(pv.front())) roots_expect.push_back(c);
            std::sort(roots_expect.begin(), roots_expect.end());
            rep.check(twist.roots() == roots_expect,
                      "full twist roots wrong on " + render_forest_json(f));
        });
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            rep.check(apply_braid_word(apply_braid_word(seq, garside_word(n)), garside_word(n)) ==
                          apply_braid_word(seq, full_twist_word(n)),
                      "Delta^2 differs from the full twist on " + render_ces(seq));
        });
    }
    return rep;
}

// --- Garside element, duality and conjugation -------------------------------

inline Report verify_garside(int nmax) {
    Report rep{"garside", nmax};
    for (int n = 1; n <= nmax; ++n) {
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            // Delta sigma_i Delta^{-1} = sigma_{n-i}
            for (int i = 1; i <= n - 1; ++i) {
                BraidWord conj = garside_word(n);
                conj.push_back(i);
                const auto inv = garside_inverse_word(n);
                conj.insert(conj.end(), inv.begin(), inv.end());
                rep.check(apply_braid_word(seq, conj) == braid_sigma(seq, n - i),
                          "Delta conjugation fails on " + render_ces(seq));
            }
            const auto image = apply_braid_word(seq, garside_word(n));
            const auto flags = relative_flags(seq);
            const auto image_flags = relative_flags(image);
            for (int k = 1; k <= n; ++k) {
                rep.check(flags[static_cast<std::size_t>(k - 1)].rel_proj ==
                              image_flags[static_cast<std::size_t>(n - k)].rel_inj,
                          "relative projectivity duality fails on " + render_ces(seq));
                for (int j = 1; j <= n; ++j) {
                    const long long chi =
                        euler_pairing(seq.objects[static_cast<std::size_t>(k - 1)],
                                      image.objects[static_cast<std::size_t>(j - 1)]);
                    if (j == n - k + 1)
                        rep.check(chi == (flags[static_cast<std::size_t>(k - 1)].rel_proj ? 1 : -1),
                                  "partner pairing wrong on " + render_ces(seq));
                    else
                        rep.check(chi == 0, "off-partner pairing wrong on " + render_ces(seq));
                }
            }
            // duality
            rep.check(duality(duality(seq)) == seq, "duality is not an involution on " +
                                                        render_ces(seq));
            for (int i = 1; i <= n - 1; ++i)
                rep.check(duality(braid_sigma(seq, i)) == braid_sigma(duality(seq), n - i, true),
                          "duality conjugation fails on " + render_ces(seq));
        });
        enumerate_forests(n, [&](const RootedLabeledForest& f) {
            const auto df = apply_braid_word_forest(f, garside_word(n));
            const auto pv = projective_vertices(f);
            const auto iv = injective_vertices(f);
            auto reflect = [n](std::vector<int> xs) {
                for (auto& x : xs) x = n + 1 - x;
                std::sort(xs.begin(), xs.end());
                return xs;
            };
            rep.check(df.roots() == reflect(pv),
                      "Delta roots differ from projective vertices on " + render_forest_json(f));
            rep.check(reflect(injective_vertices(df)) == f.roots(),
                      "Delta injective vertices differ from roots on " + render_forest_json(f));
            std::vector<int> pv_after{pv.front()};
            for (int c : f.children(pv.front())) pv_after.push_back(c);
            rep.check(projective_vertices(df) == reflect(pv_after),
                      "Delta projective vertices wrong on " + render_forest_json(f));
            const auto iv_df = injective_vertices(df);
            rep.check(iv_df.back() == n - iv.front() + 1,
                      "last injective vertex of Delta F wrong on " + render_forest_json(f));
            std::vector<int> iv_rest(iv.begin() + 1, iv.end());
            rep.check(df.children(iv_df.back()) == reflect(iv_rest),
                      "children of the last injective vertex wrong on " + render_forest_json(f));
            // conjugation C = D Delta
            const auto cf = conjugation_forest(f);
            rep.check(cf.roots() == pv,
                      "C roots differ from projective vertices on " + render_forest_json(f));
            rep.check(projective_vertices(cf).front() == iv.front(),
                      "first projective vertex of C F wrong on " + render_forest_json(f));
            rep.check(cf.children(iv.front()) == iv_rest,
                      "children of the first projective vertex of C F wrong on " +
                          render_forest_json(f));
            const auto f2 = duality_forest(apply_braid_word_forest(f, garside_inverse_word(n)));
            std::vector<int> lv{f.children(iv.back())};
            lv.push_back(iv.back());
            std::sort(lv.begin(), lv.end());
            rep.check(projective_vertices(f2) == lv,
                      "projective vertices of D Delta^{-1} F wrong on " + render_forest_json(f));
            // duality on forests
            rep.check(duality_forest(duality_forest(f)) == f,
                      "forest duality is not an involution on " + render_forest_json(f));
            rep.check(ces_to_forest(duality(forest_to_ces(f))) == duality_forest(f),
                      "forest duality differs from sequence duality on " + render_forest_json(f));
        });
    }
    // the worked Garside triple
    using namespace fixtures;
    const auto f = a7_garside_f();
    rep.check(apply_braid_word_forest(f, garside_word(7)) == a7_garside_delta_f(),
              "A7 Delta F fixture mismatch");
    rep.check(apply_braid_word_forest(f, garside_inverse_word(7)) == a7_garside_delta_inv_f(),
              "A7 Delta^{-1} F fixture mismatch");
    rep.check(projective_vertices(f) == std::vector<int>({1, 2, 3}) &&
                  injective_vertices(f) == std::vector<int>({3, 7}),
              "A7 projective/injective vertices mismatch");
    return rep;
}

// --- generating functions ----------------------------------------------------

inline Report verify_genfun(int n_forest, int n_seq) {
    Report rep{"genfun", n_forest};
    for (int n = 1; n <= n_forest; ++n) {
        const auto formula = formula_poly(n);
        rep.check(recursion_poly(n) == formula, "recursion != formula at n=" + std::to_string(n));
        rep.check(statistic_poly(n, StatSource::forests) == formula,
                  "forest statistic != formula at n=" + std::to_string(n));
        rep.check(evaluate(formula, 1, 1, 1) == expected_count(n),
                  "P_n(1,1,1) wrong at n=" + std::to_string(n));
        long long catalan_form = 2;  // 2 (2n+1)! / (n+2)!
        for (long long k = n + 3; k <= 2 * n + 1; ++k) catalan_form *= k;
        rep.check(evaluate(formula, 2, 1, 2) == catalan_form,
                  "P_n(2,1,2) wrong at n=" + std::to_string(n));
        const auto it = formula.terms.find({0, 0, n});
        rep.check(it != formula.terms.end() && it->second == 1,
                  "coefficient of c^n wrong at n=" + std::to_string(n));
    }
    for (int n = 1; n <= n_seq; ++n)
        rep.check(statistic_poly(n, StatSource::sequences) == formula_poly(n),
                  "sequence statistic != formula at n=" + std::to_string(n));
    return rep;
}

// --- parking functions ---------------------------------------------------------

inline Report verify_parking(int nmax) {
    Report rep{"parking", nmax};
    for (int n = 1; n <= nmax; ++n) {
        long long parking_count = 0;
        detail::enumerate_parking_functions(n, [&](const ParkingFunction& p) {
            ++parking_count;
            rep.check(ces_tops(parking_to_ces(p)) == p,
                      "tops o parking_to_ces != id on " + render_parking(p));
        });
        rep.check(parking_count == expected_count(n),
                  "parking function count at n=" + std::to_string(n) + " is " +
                      std::to_string(parking_count));
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            rep.check(parking_to_ces(ces_tops(seq)) == seq,
                      "parking_to_ces o tops != id on " + render_ces(seq));
        });
    }
    // the introductory example
    {
        const auto seq = parking_to_ces({1, 1, 2, 2});
        rep.check(render_ces(seq) == "M(1,4);M(1,1);M(2,3);M(2,2)", "parking example mismatch");
    }
    // the comparison table rows, bit exact, plus the sigma chain between them
    const auto table = fixtures::comparison_table();
    for (std::size_t r = 0; r < table.size(); ++r) {
        const auto& row = table[r];
        rep.check(ces_to_forest(row.seq) == row.forest,
                  "table row " + std::to_string(r + 1) + " forest mismatch");
        rep.check(prufer_encode(row.forest) == row.code,
                  "table row " + std::to_string(r + 1) + " code mismatch");
        rep.check(prufer_parking(row.code) == row.parking,
                  "table row " + std::to_string(r + 1) + " parking mismatch");
        rep.check(parking_prufer(row.parking) == row.code,
                  "table row " + std::to_string(r + 1) + " reverse code mismatch");
        if (r + 1 < table.size())
            rep.check(braid_sigma(row.seq, static_cast<int>(r) + 1) == table[r + 1].seq,
                      "table sigma chain broken at row " + std::to_string(r + 1));
    }
    // the two forest -> parking routes disagree on the first table row
    rep.check(ces_tops(table[0].seq) == ParkingFunction({1, 1, 1, 1}) &&
                  table[0].parking == ParkingFunction({1, 4, 1, 2}),
              "route disagreement witness missing");
    return rep;
}

// --- Prufer codes -----------------------------------------------------------------

inline Report verify_prufer(int nmax) {
    Report rep{"prufer", nmax};
    for (int n = 1; n <= nmax; ++n) {
        enumerate_forests(n, [&](const RootedLabeledForest& f) {
            rep.check(prufer_decode(prufer_encode(f), n) == f,
                      "prufer round trip fails on " + render_forest_json(f));
        });
        detail::enumerate_parking_functions(n, [&](const ParkingFunction& p) {
            rep.check(prufer_parking(parking_prufer(p)) == p,
                      "parking/prufer round trip fails on " + render_parking(p));
        });
    }
    // the code series of the comparison example
    rep.check(parking_prufer({1, 1, 1, 1}) == PruferCode({0, 0, 0}), "code of (1,1,1,1) wrong");
    rep.check(parking_prufer({4, 1, 1, 1}) == PruferCode({2, 0, 0}), "code of (4,1,1,1) wrong");
    rep.check(parking_prufer({4, 3, 1, 1}) == PruferCode({4, 3, 0}), "code of (4,3,1,1) wrong");
    rep.check(parking_prufer({4, 3, 2, 1}) == PruferCode({4, 4, 4}), "code of (4,3,2,1) wrong");
    return rep;
}

// --- factorizations -----------------------------------------------------------------

inline Report verify_factorization(int nmax) {
    Report rep{"factorization", nmax};
    for (int n = 1; n <= nmax; ++n) {
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            const auto fac = ces_to_factorization(seq);
            rep.check(composite_is_full_cycle(fac, n),
                      "composite is not the full cycle for " + render_ces(seq));
            rep.check(factorization_to_ces(fac) == seq,
                      "factorization round trip fails for " + render_ces(seq));
            // the Hasse diagram of the half-open supports is the forest
            std::vector<int> parent(static_cast<std::size_t>(n), 0);
            for (int i = 1; i <= n; ++i) {
                int best = 0;
                for (int j = 1; j <= n; ++j) {
                    if (j == i) continue;
                    const auto& mi = seq.objects[static_cast<std::size_t>(i - 1)];
                    const auto& mj = seq.objects[static_cast<std::size_t>(j - 1)];
                    if (mj.a <= mi.a && mi.b + 1 <= mj.b + 1 && mj.length() > mi.length()) {
                        if (best == 0 ||
                            mj.length() < seq.objects[static_cast<std::size_t>(best - 1)].length())
                            best = j;
                    }
                }
                parent[static_cast<std::size_t>(i - 1)] = best;
            }
            rep.check(RootedLabeledForest(n, parent) == ces_to_forest(seq),
                      "half-open Hasse diagram differs for " + render_ces(seq));
        });
    }
    rep.check(ces_to_factorization(fixtures::a9_sequence()) == fixtures::a9_chords(),
              "A9 chord list mismatch");
    return rep;
}

// --- clusters ------------------------------------------------------------------------

inline Report verify_clusters(int nmax) {
    Report rep{"clusters", nmax};
    for (int n = 1; n <= nmax; ++n) {
        long long catalan = 1;  // C_{n+1} = binom(2n+2, n+1)/(n+2)
        for (int k = 0; k < n + 1; ++k) catalan = catalan * (n + 2 + k) / (k + 1);
        catalan /= n + 2;
        long long count = 0;
        std::set<std::string> signed_images;
        enumerate_clusters(n, [&](const ClusterTiltingSet& set) {
            ++count;
            rep.check(is_cluster_tilting(set), "enumerated set fails the predicate");
            const auto seq = cluster_to_signed_sequence(set);
            rep.check(is_signed_exceptional_sequence(seq),
                      "cluster does not arrange into a signed sequence: " +
                          render_signed_list(set.items));
            signed_images.insert(render_signed_list(seq.items));
            const auto image = garside_signed(seq);
            rep.check(c_vector_check(seq, image),
                      "c-vector identity fails for " + render_signed_list(set.items));
        });
        rep.check(count == catalan, "cluster count at n=" + std::to_string(n) + " is " +
                                        std::to_string(count));
        rep.check(static_cast<long long>(signed_images.size()) == count,
                  "cluster_to_signed_sequence is not injective at n=" + std::to_string(n));
        rep.check(count_signed(n) == evaluate(formula_poly(n), 2, 1, 2),
                  "signed sequence count differs from P_n(2,1,2) at n=" + std::to_string(n));
    }
    // the worked example (S_2, I_2, S_3[1]) -> (P_1[1], S_1, S_2)
    {
        ClusterTiltingSet set;
        set.n = 3;
        set.items = {{IntervalModule(2, 2, 3), false},
                     {IntervalModule(1, 2, 3), false},
                     {IntervalModule(3, 3, 3), true}};
        rep.check(is_cluster_tilting(set), "worked example is not cluster tilting");
        const auto seq = cluster_to_signed_sequence(set);
        rep.check(render_signed_list(seq.items) == "M(2,2);M(1,2);M(3,3)[1]",
                  "worked example arrangement mismatch");
        const auto image = garside_signed(seq);
        rep.check(render_signed_list(image.items) == "M(1,3)[1];M(1,1);M(2,2)",
                  "worked example Garside image mismatch");
        rep.check(c_vector_check(seq, image), "worked example pairing fails");
        auto flipped = image;
        flipped.items[0].shifted = false;  // P_1 sits at a relatively projective position
        rep.check(is_signed_exceptional_sequence(flipped) && !c_vector_check(seq, flipped),
                  "flipped sign must break the pairing");
    }
    return rep;
}

// --- suite dispatch --------------------------------------------------------------------

inline Report run_suite(const std::string& name, int n) {
    if (name == "homext") {
        Report rep = verify_homext_oracle(n);
        rep.suite = "homext";
        rep.merge(verify_homext_euler(n));
        return rep;
    }
    if (name == "bijection") {
        Report rep = verify_counting(n);
        rep.suite = "bijection";
        rep.merge(verify_roundtrip(n));
        rep.merge(verify_flags(std::min(n, 5)));
        return rep;
    }
    if (name == "equivariance") return verify_equivariance(n);
    if (name == "braid-relations") return verify_braid_relations(n);
    if (name == "delta") {
        Report rep = verify_delta(n);
        rep.merge(verify_central(std::min(n, 5)));
        return rep;
    }
    if (name == "garside") return verify_garside(n);
    if (name == "genfun") return verify_genfun(n, std::min(n, 5));
    if (name == "clusters") return verify_clusters(n);
    if (name == "parking") return verify_parking(n);
    if (name == "prufer") return verify_prufer(n);
    if (name == "factorization") return verify_factorization(n);
    throw std::out_of_range("unknown suite: " + name);
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "homext",  "bijection", "equivariance", "braid-relations", "delta", "garside",
        "genfun",  "clusters",  "parking",      "prufer",          "factorization"};
    return names;
}

}  // namespace excseq::verify
