#include "doctest.h"

#include "excseq/interval_module.hpp"
#include "excseq/oracle.hpp"

using namespace excseq;

TEST_CASE("interval module basics") {
    IntervalModule m(2, 4, 5);
    CHECK(m.length() == 3);
    CHECK(m.top() == 2);
    CHECK(m.socle() == 4);
    CHECK(!m.is_projective());
    CHECK(!m.is_injective());
    CHECK(IntervalModule(2, 5, 5).is_projective());
    CHECK(IntervalModule(1, 3, 5).is_injective());
    CHECK(m.dim_vector() == std::vector<int>({0, 1, 1, 1, 0}));
    CHECK_THROWS_AS(IntervalModule(3, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(IntervalModule(1, 6, 5), std::invalid_argument);
    CHECK_THROWS_AS(IntervalModule(0, 2, 5), std::invalid_argument);
}

TEST_CASE("hom closed form") {
    // Hom(M_{cd}, M_{ab}) != 0 for a < c <= b < d
    CHECK(hom_dim(IntervalModule(2, 4, 4), IntervalModule(1, 3, 4)) == 1);
    CHECK(hom_dim(IntervalModule(1, 3, 4), IntervalModule(1, 3, 4)) == 1);
    // oracle-computed value
    IntervalModule s1(1, 1, 3), m23(2, 3, 3);
    CHECK(oracle::hom_dim_oracle(s1, m23) == 0);
    CHECK(hom_dim(s1, m23) == 0);
    CHECK_THROWS_AS(hom_dim(IntervalModule(1, 1, 2), IntervalModule(1, 1, 3)),
                    std::invalid_argument);
}

TEST_CASE("ext closed form") {
    CHECK(ext_dim(IntervalModule(1, 3, 4), IntervalModule(2, 4, 4)) == 1);
    // the extension 0 -> M23 -> M13 -> S1 -> 0, via the oracle
    IntervalModule s1(1, 1, 3), m23(2, 3, 3);
    CHECK(oracle::ext_dim_oracle(s1, m23) == 1);
    CHECK(ext_dim(s1, m23) == 1);
    CHECK(ext_dim(IntervalModule(2, 2, 3), IntervalModule(2, 2, 3)) == 0);
}

TEST_CASE("euler form") {
    IntervalModule m13(1, 3, 4), m24(2, 4, 4), s3(3, 3, 4), m22(2, 2, 4);
    CHECK(euler_form(m13.dim_vector(), m24.dim_vector()) == -1);
    CHECK(euler_form(m22.dim_vector(), m22.dim_vector()) == 1);
    CHECK(euler_form(s3.dim_vector(), m24.dim_vector()) == 0);
    CHECK_THROWS_AS(euler_form({1, 0}, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("tau star") {
    CHECK(tau_star(IntervalModule(1, 2, 3)) == IntervalModule(2, 3, 3));
    CHECK(tau_star(IntervalModule(3, 3, 3)) == IntervalModule(1, 3, 3));  // P_3 -> I_3
    CHECK(tau_star(IntervalModule(1, 3, 3)) == IntervalModule(1, 1, 3));  // P_1 -> I_1
}

TEST_CASE("all interval modules") {
    CHECK(all_interval_modules(1) == std::vector<IntervalModule>{IntervalModule(1, 1, 1)});
    CHECK(all_interval_modules(2) ==
          std::vector<IntervalModule>({{1, 1, 2}, {1, 2, 2}, {2, 2, 2}}));
    CHECK(all_interval_modules(4).size() == 10);
    CHECK_THROWS_AS(all_interval_modules(0), std::invalid_argument);
}

TEST_CASE("closed forms match the matrix oracle, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& x : all_interval_modules(n))
            for (const auto& y : all_interval_modules(n)) {
                CAPTURE(n);
                CAPTURE(x.a);
                CAPTURE(x.b);
                CAPTURE(y.a);
                CAPTURE(y.b);
                CHECK(hom_dim(x, y) == oracle::hom_dim_oracle(x, y));
                CHECK(ext_dim(x, y) == oracle::ext_dim_oracle(x, y));
            }
}

TEST_CASE("hom - ext equals the euler form, n <= 8") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& x : all_interval_modules(n))
            for (const auto& y : all_interval_modules(n))
                CHECK(hom_dim(x, y) - ext_dim(x, y) ==
                      euler_form(x.dim_vector(), y.dim_vector()));
}

TEST_CASE("tau star properties") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<IntervalModule> images;
        for (const auto& x : all_interval_modules(n)) {
            CHECK(hom_dim(x, x) == 1);
            CHECK(ext_dim(x, x) == 0);
            if (x.is_projective()) continue;
            const auto t = tau_star(x);
            CHECK(!t.is_injective());
            CHECK(t.length() == x.length());
            for (const auto& other : images) CHECK(!(other == t));
            images.push_back(t);
        }
    }
}
