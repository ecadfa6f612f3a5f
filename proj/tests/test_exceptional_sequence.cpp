#include "doctest.h"

#include <algorithm>

#include "excseq/exceptional_sequence.hpp"
#include "excseq/formats.hpp"
#include "excseq/verify.hpp"

using namespace excseq;

namespace {

ExceptionalSequence seq_of(std::vector<std::pair<int, int>> mods, int n) {
    ExceptionalSequence s(n);
    for (auto [a, b] : mods) s.objects.emplace_back(a, b, n);
    return s;
}

}  // namespace

TEST_CASE("is_exceptional_sequence") {
    CHECK(is_exceptional_sequence(seq_of({{1, 4}, {1, 1}, {2, 3}, {2, 2}}, 4)));
    CHECK(is_exceptional_sequence(seq_of({{1, 1}, {2, 2}}, 2)));
    CHECK(!is_exceptional_sequence(seq_of({{2, 2}, {1, 1}}, 2)));  // Ext(S1,S2) = 1
    CHECK(is_exceptional_sequence(seq_of({{2, 3}, {2, 3}}, 3)) == false);  // repeats
    CHECK(is_exceptional_sequence(seq_of({{1, 2}}, 3)));
    std::vector<IntervalModule> mixed{IntervalModule(1, 1, 2), IntervalModule(1, 1, 3)};
    CHECK_THROWS_AS(is_exceptional_sequence(std::span<const IntervalModule>(mixed)),
                    std::invalid_argument);
}

TEST_CASE("perpendicular categories") {
    std::vector<IntervalModule> z{IntervalModule(1, 2, 2)};
    CHECK(perpendicular(z, Side::right, 2) ==
          std::vector<IntervalModule>{IntervalModule(2, 2, 2)});
    CHECK(perpendicular({}, Side::right, 2) == all_interval_modules(2));
    // M(1,3) = P_1, so its right perp is everything supported on [2,3]
    std::vector<IntervalModule> p1{IntervalModule(1, 3, 3)};
    CHECK(perpendicular(p1, Side::right, 3) ==
          std::vector<IntervalModule>({{2, 2, 3}, {2, 3, 3}, {3, 3, 3}}));
}

TEST_CASE("relative flags") {
    const auto flags = relative_flags(fixtures::a9_sequence());
    const RootedLabeledForest f = fixtures::a9_forest();
    for (int v = 1; v <= 9; ++v) {
        const int parent = f.parent_of(v);
        CHECK(flags[v - 1].rel_proj == (parent == 0 || parent > v));
        CHECK(flags[v - 1].rel_inj == (parent == 0 || parent < v));
    }
    CHECK(flags[2] == RelativeFlags{true, true});   // root
    CHECK(flags[4] == RelativeFlags{true, true});   // root
    CHECK(flags[7] == RelativeFlags{false, true});  // descending

    const auto simples = seq_of({{1, 1}, {2, 2}, {3, 3}, {4, 4}}, 4);
    for (const auto& fl : relative_flags(simples)) CHECK(fl == RelativeFlags{true, true});

    ExceptionalSequence incomplete(3);
    incomplete.objects.emplace_back(1, 1, 3);
    CHECK_THROWS_AS(relative_flags(incomplete), std::invalid_argument);
}

TEST_CASE("braid_sigma on the comparison-table sequences") {
    const auto injectives = seq_of({{1, 4}, {1, 3}, {1, 2}, {1, 1}}, 4);
    const auto moved = braid_sigma(injectives, 1);
    CHECK(moved == seq_of({{4, 4}, {1, 4}, {1, 2}, {1, 1}}, 4));
    CHECK_THROWS_AS(braid_sigma(injectives, 4), std::invalid_argument);
    CHECK_THROWS_AS(braid_sigma(injectives, 0), std::invalid_argument);
}

TEST_CASE("sigma_1 cycles the A2 sequences") {
    const auto start = seq_of({{1, 1}, {2, 2}}, 2);
    const auto once = braid_sigma(start, 1);
    CHECK(once == seq_of({{1, 2}, {1, 1}}, 2));
    CHECK(braid_sigma(braid_sigma(once, 1), 1) == start);
}

TEST_CASE("sigma inverse round trips, n = 3") {
    for (const auto& seq : all_ces(3))
        for (int i = 1; i <= 2; ++i) {
            CHECK(braid_sigma(braid_sigma(seq, i), i, true) == seq);
            CHECK(braid_sigma(braid_sigma(seq, i, true), i) == seq);
        }
}

TEST_CASE("word application order realizes delta") {
    const auto seq = seq_of({{3, 3}, {1, 3}, {1, 1}}, 3);
    CHECK(apply_braid_word(seq, delta_word(3)) == seq_of({{2, 2}, {3, 3}, {1, 3}}, 3));
    CHECK(apply_braid_word(seq, {}) == seq);
    for (const auto& s : all_ces(3))
        CHECK(apply_braid_word(s, {1, 2, 1}) == apply_braid_word(s, {2, 1, 2}));
}

TEST_CASE("named words") {
    CHECK(garside_word(3) == BraidWord({1, 2, 1}));
    CHECK(delta_word(2) == BraidWord({1}));
    CHECK(delta_word(1).empty());
    CHECK(garside_word(1).empty());
    CHECK(delta_k_word(5, 3) == BraidWord({1, 2, 3}));
    CHECK_THROWS_AS(delta_k_word(3, 3), std::invalid_argument);
    CHECK(garside_inverse_word(3) == BraidWord({-1, -2, -1}));
    for (int n = 2; n <= 5; ++n)
        for (const auto& s : all_ces(n)) {
            BraidWord twice = garside_word(n);
            const auto again = garside_word(n);
            twice.insert(twice.end(), again.begin(), again.end());
            CHECK(apply_braid_word(s, twice) == apply_braid_word(s, full_twist_word(n)));
        }
}

TEST_CASE("duality") {
    const auto simples = seq_of({{1, 1}, {2, 2}, {3, 3}}, 3);
    CHECK(duality(simples) == simples);
    for (int n = 1; n <= 4; ++n)
        for (const auto& s : all_ces(n)) {
            CHECK(duality(duality(s)) == s);
            for (int i = 1; i <= n - 1; ++i)
                CHECK(duality(braid_sigma(s, i)) == braid_sigma(duality(s), n - i, true));
        }
}

TEST_CASE("conjugation agrees with Delta-inverse-then-duality") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& s : all_ces(n))
            CHECK(conjugation(s) == apply_braid_word(duality(s), garside_inverse_word(n)));
}

TEST_CASE("enumerate_ces counts") {
    CHECK(all_ces(1).size() == 1);
    CHECK(all_ces(2).size() == 3);
    CHECK(all_ces(3).size() == 16);
    CHECK(all_ces(5).size() == 1296);
}

TEST_CASE("tops transport needs the direction convention") {
    // consecutive supports with ascending tops: the forward move merges the
    // tops instead of swapping them
    const auto seq = seq_of({{1, 1}, {2, 2}}, 2);
    CHECK(ces_tops(braid_sigma(seq, 1)) == ParkingFunction({1, 1}));
    CHECK(ces_tops(braid_sigma(seq, 1, true)) == ParkingFunction({2, 1}));
}

TEST_CASE("braid_sigma outputs are exceptional, n = 4") {
    for (const auto& s : all_ces(4))
        for (int i = 1; i <= 3; ++i) {
            CHECK(is_exceptional_sequence(braid_sigma(s, i)));
            CHECK(is_exceptional_sequence(braid_sigma(s, i, true)));
        }
}
