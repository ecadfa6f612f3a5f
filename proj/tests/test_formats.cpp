#include "doctest.h"

#include "excseq/formats.hpp"
#include "excseq/verify.hpp"

using namespace excseq;

TEST_CASE("module text") {
    CHECK(render_module(IntervalModule(2, 4, 5)) == "M(2,4)");
    const auto seq = parse_ces("M(2,3);S(6);M(1,3);M(7,9);M(4,9);S(4);S(7);S(2);S(8)");
    CHECK(seq == fixtures::a9_sequence());
    CHECK(render_ces(fixtures::a9_sequence()) ==
          "M(2,3);M(6,6);M(1,3);M(7,9);M(4,9);M(4,4);M(7,7);M(2,2);M(8,8)");
    CHECK_THROWS_WITH_AS(parse_ces("M(1,2);X(1)"), "expected 'M' or 'S' at offset 7",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_ces("M(1,4);M(1,4)"), std::invalid_argument);  // b exceeds the rank 2
}

TEST_CASE("parking and prufer text") {
    CHECK(render_parking({1, 1, 2, 2}) == "1,1,2,2");
    CHECK(parse_parking("1,1,2,2") == ParkingFunction({1, 1, 2, 2}));
    CHECK_THROWS_AS(parse_parking("2,2"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_parking("1,x"), "expected integer at offset 2",
                         std::invalid_argument);
    CHECK(parse_prufer("3,2,1") == PruferCode({3, 2, 1}));
    CHECK(render_prufer({0, 0, 0}) == "0,0,0");
    CHECK_THROWS_AS(parse_prufer("9,0,0"), std::invalid_argument);
}

TEST_CASE("braid word text") {
    CHECK(parse_braid_word("3 -2 1") == BraidWord({3, -2, 1}));
    CHECK(parse_braid_word("") == BraidWord{});
    CHECK(render_braid_word({1, 2, 1}) == "1 2 1");
}

TEST_CASE("factorization text") {
    const std::string a9 = "2-4 6-7 1-4 7-0 4-0 4-5 7-8 2-3 8-9";
    CHECK(render_factorization(fixtures::a9_chords()) == a9);
    CHECK(parse_factorization(a9) == fixtures::a9_chords());
}

TEST_CASE("forest json") {
    const std::string text = "{\"n\":9,\"parent\":[3,5,0,5,0,5,4,1,4]}";
    CHECK(render_forest_json(fixtures::a9_forest()) == text);
    CHECK(parse_forest_json(text) == fixtures::a9_forest());
    CHECK_THROWS_AS(parse_forest_json("{\"n\":2}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_forest_json("{\"n\":2,\"parent\":[2,1]}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_forest_json("not json"), std::invalid_argument);
}

TEST_CASE("signed object text") {
    CHECK(render_signed({IntervalModule(2, 3, 4), true}) == "M(2,3)[1]");
    const auto items = parse_signed_list("M(2,2);M(1,2);M(3,3)[1]");
    CHECK(items.size() == 3);
    CHECK(items[2].shifted);
    CHECK(render_signed_list(items) == "M(2,2);M(1,2);M(3,3)[1]");
    CHECK(render_cluster_json(items) ==
          "[{\"a\":2,\"b\":2,\"shifted\":false},{\"a\":1,\"b\":2,\"shifted\":false},"
          "{\"a\":3,\"b\":3,\"shifted\":true}]");
}

TEST_CASE("ces json") {
    ExceptionalSequence seq(2);
    seq.objects = {IntervalModule(1, 2, 2), IntervalModule(1, 1, 2)};
    CHECK(render_ces_json(seq) == "[{\"a\":1,\"b\":2},{\"a\":1,\"b\":1}]");
}

TEST_CASE("dot output") {
    const std::string dot = forest_to_dot(RootedLabeledForest(3, {0, 1, 1}));
    CHECK(dot == "digraph forest {\n  rankdir=BT;\n  1 [style=filled];\n  2;\n  3;\n"
                 "  2 -> 1;\n  3 -> 1;\n}\n");
}

TEST_CASE("text parse and render round trip over all A3 objects") {
    enumerate_ces(3, [&](const ExceptionalSequence& seq) {
        CHECK(parse_ces(render_ces(seq)) == seq);
        CHECK(parse_factorization(render_factorization(ces_to_factorization(seq))) ==
              ces_to_factorization(seq));
    });
    enumerate_forests(3, [&](const RootedLabeledForest& f) {
        CHECK(parse_forest_json(render_forest_json(f)) == f);
        CHECK(parse_prufer(render_prufer(prufer_encode(f))) == prufer_encode(f));
    });
}
