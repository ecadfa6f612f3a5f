#include "doctest.h"

#include "excseq/bijections.hpp"
#include "excseq/formats.hpp"
#include "excseq/verify.hpp"

using namespace excseq;

TEST_CASE("forest_to_ces reproduces the A9 example") {
    CHECK(forest_to_ces(fixtures::a9_forest()) == fixtures::a9_sequence());
    CHECK(ces_to_forest(fixtures::a9_sequence()) == fixtures::a9_forest());
}

TEST_CASE("forest_to_ces basics") {
    const auto simples = forest_to_ces(RootedLabeledForest(3, {0, 0, 0}));
    CHECK(render_ces(simples) == "M(1,1);M(2,2);M(3,3)");
    // root 2 with children 1 and 3
    const auto seq = forest_to_ces(RootedLabeledForest(3, {2, 0, 2}));
    CHECK(render_ces(seq) == "M(3,3);M(1,3);M(1,1)");
}

TEST_CASE("ces_to_forest reproduces the A7 Hasse example") {
    CHECK(ces_to_forest(fixtures::a7_hasse_sequence()) == fixtures::a7_hasse_forest());
    ExceptionalSequence bad(2);
    bad.objects = {IntervalModule(2, 2, 2), IntervalModule(1, 1, 2)};
    CHECK_THROWS_AS(ces_to_forest(bad), std::invalid_argument);
}

TEST_CASE("round trips, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_forests(n, [&](const RootedLabeledForest& f) {
            const auto seq = forest_to_ces(f);
            CHECK(ces_to_forest(seq) == f);
            for (int v = 1; v <= n; ++v) CHECK(seq.objects[v - 1].length() == f.weight(v));
        });
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            CHECK(forest_to_ces(ces_to_forest(seq)) == seq);
        });
    }
}

TEST_CASE("ces_tops") {
    ExceptionalSequence seq(4);
    for (auto [a, b] : {std::pair{1, 4}, {1, 1}, {2, 3}, {2, 2}}) seq.objects.emplace_back(a, b, 4);
    CHECK(ces_tops(seq) == ParkingFunction({1, 1, 2, 2}));
    ExceptionalSequence row2(4);
    for (auto [a, b] : {std::pair{4, 4}, {1, 4}, {1, 2}, {1, 1}}) row2.objects.emplace_back(a, b, 4);
    CHECK(ces_tops(row2) == ParkingFunction({4, 1, 1, 1}));
}

TEST_CASE("park_nondecreasing") {
    CHECK(render_ces(park_nondecreasing({1, 1, 2, 2})) == "M(1,4);M(1,1);M(2,3);M(2,2)");
    CHECK(render_ces(park_nondecreasing({1, 2, 3})) == "M(1,1);M(2,2);M(3,3)");
    CHECK(render_ces(park_nondecreasing({1, 1, 1, 1})) == "M(1,4);M(1,3);M(1,2);M(1,1)");
    CHECK_THROWS_AS(park_nondecreasing({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(park_nondecreasing({2, 2}), std::invalid_argument);
}

TEST_CASE("parking_to_ces") {
    CHECK(render_ces(parking_to_ces({4, 1, 1, 1})) == "M(4,4);M(1,4);M(1,2);M(1,1)");
    CHECK(render_ces(parking_to_ces({4, 3, 2, 1})) == "M(4,4);M(3,4);M(2,4);M(1,4)");
    CHECK(parking_to_ces({1, 1, 2, 2}) == park_nondecreasing({1, 1, 2, 2}));
    CHECK_THROWS_AS(parking_to_ces({2, 2}), std::invalid_argument);
    for (int n = 1; n <= 4; ++n)
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            CHECK(parking_to_ces(ces_tops(seq)) == seq);
        });
}

TEST_CASE("parking <-> prufer difference codes") {
    CHECK(parking_prufer({1, 1, 1, 1}) == PruferCode({0, 0, 0}));
    CHECK(parking_prufer({4, 1, 1, 1}) == PruferCode({2, 0, 0}));
    for (int n = 1; n <= 4; ++n) {
        long long count = 0;
        ParkingFunction p(n, 1);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == n) {
                if (!is_parking_function(p)) return;
                ++count;
                CHECK(prufer_parking(parking_prufer(p)) == p);
                return;
            }
            for (int v = 1; v <= n; ++v) {
                p[pos] = v;
                rec(pos + 1);
            }
        };
        rec(0);
        CHECK(count == verify::expected_count(n));
    }
}

TEST_CASE("the two forest-to-parking routes differ at n=4") {
    const RootedLabeledForest chain(4, {0, 1, 2, 3});
    const auto via_tops = ces_tops(forest_to_ces(chain));
    const auto via_code = prufer_parking(prufer_encode(chain));
    CHECK(via_tops == ParkingFunction({1, 1, 1, 1}));
    CHECK(via_code == ParkingFunction({1, 4, 1, 2}));
    CHECK(via_tops != via_code);
}

TEST_CASE("factorizations") {
    CHECK(ces_to_factorization(fixtures::a9_sequence()) == fixtures::a9_chords());
    CHECK(composite_is_full_cycle(fixtures::a9_chords(), 9));
    ExceptionalSequence simples(3);
    for (int v = 1; v <= 3; ++v) simples.objects.emplace_back(v, v, 3);
    CHECK(ces_to_factorization(simples) ==
          TranspositionFactorization({{1, 2}, {2, 3}, {3, 0}}));
    for (int n = 1; n <= 4; ++n)
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            const auto fac = ces_to_factorization(seq);
            CHECK(composite_is_full_cycle(fac, n));
            CHECK(factorization_to_ces(fac) == seq);
        });
    // a factorization of the wrong permutation
    CHECK_THROWS_AS(factorization_to_ces({{1, 2}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(factorization_to_ces({{1, 1}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("equivariance of the braid actions, n <= 4") {
    for (int n = 2; n <= 4; ++n)
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            const auto f = ces_to_forest(seq);
            for (int i = 1; i <= n - 1; ++i)
                CHECK(ces_to_forest(braid_sigma(seq, i)) == sigma_forest(f, i));
        });
}

TEST_CASE("flags match the forest classification, n <= 4") {
    for (int n = 1; n <= 4; ++n)
        enumerate_ces(n, [&](const ExceptionalSequence& seq) {
            CHECK(relative_flags(seq) == forest_flags(ces_to_forest(seq)));
        });
}
