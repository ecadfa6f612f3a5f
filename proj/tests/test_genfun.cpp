#include "doctest.h"

#include "excseq/formats.hpp"
#include "excseq/genfun.hpp"
#include "excseq/verify.hpp"

using namespace excseq;

TEST_CASE("formula_poly") {
    CHECK(formula_poly(1) == TrivariatePolynomial::monomial(0, 0, 1));
    // n=3: c(a+2b+c)(2a+b+c), coefficient of c^3 is 1
    const auto p3 = formula_poly(3);
    CHECK(p3.terms.at({0, 0, 3}) == 1);
    CHECK(p3.terms.at({1, 1, 1}) == 5);  // (a)(b)c*2 + (2b)(2a)... expanded: 2ab c + ... = 5abc
    for (int n = 1; n <= 7; ++n)
        CHECK(evaluate(formula_poly(n), 1, 1, 1) == verify::expected_count(n));
}

TEST_CASE("statistic_poly for small forests, by hand") {
    TrivariatePolynomial expected;
    expected.add_term(0, 0, 2, 1);  // edgeless
    expected.add_term(1, 0, 1, 1);  // ascending chain
    expected.add_term(0, 1, 1, 1);  // descending chain
    CHECK(statistic_poly(2, StatSource::forests) == expected);
    CHECK(statistic_poly(2, StatSource::sequences) == expected);
}

TEST_CASE("recursion_poly") {
    CHECK(recursion_poly(1) == TrivariatePolynomial::monomial(0, 0, 1));
    TrivariatePolynomial p2;
    p2.add_term(1, 0, 1, 1);
    p2.add_term(0, 1, 1, 1);
    p2.add_term(0, 0, 2, 1);
    CHECK(recursion_poly(2) == p2);  // c(a+b+c)
    for (int n = 1; n <= 7; ++n) CHECK(recursion_poly(n) == formula_poly(n));
}

TEST_CASE("three-way equality with the statistics") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(statistic_poly(n, StatSource::forests) == formula_poly(n));
        CHECK(statistic_poly(n, StatSource::sequences) == formula_poly(n));
    }
    CHECK(statistic_poly(6, StatSource::forests) == formula_poly(6));
}

TEST_CASE("evaluate") {
    CHECK(evaluate(formula_poly(3), 2, 1, 2) == 84);
    CHECK(evaluate(formula_poly(4), 2, 1, 2) == 1008);
    CHECK(evaluate(formula_poly(3), 0, 0, 0) == 0);
    CHECK_THROWS_AS(evaluate(formula_poly(4), 1'000'000'000'000'000LL, 1, 1),
                    std::overflow_error);
}

TEST_CASE("polynomial text and json forms") {
    CHECK(render_poly_text(formula_poly(1)) == "1 a^0 b^0 c^1");
    CHECK(render_poly_text(recursion_poly(2)) == "1 a^0 b^0 c^2 + 1 a^0 b^1 c^1 + 1 a^1 b^0 c^1");
    CHECK(render_poly_json(formula_poly(1)) == "[[0,0,1,1]]");
    CHECK(render_poly_text(TrivariatePolynomial::zero()) == "0");
}
