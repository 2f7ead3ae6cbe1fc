#include <doctest.h>

#include <array>

#include "heffter/construct.hpp"
#include "heffter/errors.hpp"
#include "heffter/verify.hpp"
#include "support.hpp"

using namespace heffter;

TEST_CASE("covered cases") {
    CHECK(covered_case(5, 10, 8, 4) == 1);
    CHECK(covered_case(18, 15, 10, 12) == 2);
    CHECK(covered_case(15, 18, 12, 10) == 3);
    CHECK(covered_case(16, 16, 14, 14) == 4);
    CHECK(covered_case(9, 9, 6, 6) == 0);
    CHECK(covered_case(5, 5, 3, 3) == 0);
}

TEST_CASE("every fixture tuple is rebuilt") {
    const std::pair<const char*, HeffterParams> cases[] = {
        {"heffter_10_10_4_4_l16_t5", {10, 10, 4, 4, 16, 5}},
        {"heffter_16_16_14_14_l28_t4", {16, 16, 14, 14, 28, 4}},
        {"heffter_16_20_10_8_l8_t5", {16, 20, 10, 8, 8, 5}},
        {"heffter_18_15_10_12_l6_t20", {18, 15, 10, 12, 6, 20}},
        {"heffter_20_12_6_10_l10_t3", {20, 12, 6, 10, 10, 3}},
        {"heffter_5_10_8_4_l5_t4", {5, 10, 8, 4, 5, 4}},
        {"heffter_5_10_8_4_l8_t5", {5, 10, 8, 4, 8, 5}},
        {"heffter_9_9_8_8_l3_t3", {9, 9, 8, 8, 3, 3}},
    };
    for (const auto& [name, p] : cases) {
        CAPTURE(name);
        CHECK(construct_heffter(p) == testing::fixture(name));
    }
    Grid g = construct_heffter({6, 12, 8, 4, 1, 24});
    CHECK(testing::reference_heffter(g, 8, 4, 1, 24));
}

TEST_CASE("sma and mr for five by ten") {
    Grid sma = construct_sma(5, 10, 8, 4);
    CHECK(sma == testing::fixture("sma_5_10_8_4"));
    CHECK(testing::reference_sma(sma, 8, 4));
    Grid mr = construct_mr(5, 10, 8, 4);
    CHECK(mr == testing::fixture("mr_5_10_8_4"));
    CHECK(testing::reference_mr(mr, 8, 4));
    CHECK(testing::sums_equal(mr, 156, 78));
    CHECK(mr_from_sma(sma, 8, 4) == mr);
}

TEST_CASE("sma equals the lambda = 2, t = 1 array when s, k = 0 (mod 4)") {
    for (auto [m, n, s, k] : std::vector<std::array<int, 4>>{{5, 10, 8, 4}, {8, 8, 4, 4}, {12, 6, 4, 8}}) {
        if (k > m) continue;
        CHECK(construct_sma(m, n, s, k) == construct_heffter({m, n, s, k, 2, 1}));
    }
}

TEST_CASE("odd rows and columns with s, k = 2 (mod 4)") {
    Grid g = construct_sma(15, 9, 6, 10);
    CHECK(g.rows() == 15);
    CHECK(testing::reference_sma(g, 6, 10));
    CHECK(testing::entries_are(g, -45, 45, true));
    Grid t = construct_sma(9, 15, 10, 6);
    CHECK(testing::reference_sma(t, 10, 6));
    CHECK_THROWS_AS(construct_mr(9, 9, 6, 6), UnsupportedCase);
}

TEST_CASE("bad sma and mr requests") {
    CHECK_THROWS_AS(construct_sma(5, 10, 8, 5), ParamError);
    CHECK_THROWS_AS(construct_sma(5, 5, 5, 5), UnsupportedCase);
    CHECK_THROWS_AS(construct_sma(4, 4, 6, 6), ParamError);
    CHECK_THROWS_AS(construct_heffter({9, 9, 6, 6, 2, 1}), UnsupportedCase);
    CHECK_THROWS_AS(construct_heffter({4, 4, 4, 4, 3, 1}), ParamError);
    Grid not_sma = testing::fixture("mr_5_10_8_4");
    CHECK_THROWS_AS(mr_from_sma(not_sma, 8, 4), std::invalid_argument);
}

TEST_CASE("sma to mr map") {
    Grid sma = testing::fixture("sma_5_10_8_4");
    Grid mr = mr_from_sma(sma, 8, 4);
    for (int r = 1; r <= sma.rows(); ++r)
        for (int c = 1; c <= sma.cols(); ++c) {
            REQUIRE(sma.filled(r, c) == mr.filled(r, c));
            if (!sma.filled(r, c)) continue;
            const Entry x = *sma.at(r, c);
            CHECK(*mr.at(r, c) == (x < 0 ? x + 20 : x + 19));
            if (x == -20) CHECK(*mr.at(r, c) == 0);
            if (x == 20) CHECK(*mr.at(r, c) == 39);
        }
    Entry total = 0;
    for (Entry x : entry_list(mr)) total += x;
    CHECK(total == 40 * 39 / 2);
}

TEST_CASE("mr for s, k = 2 (mod 4) with even sides") {
    Grid mr = construct_mr(16, 16, 14, 14);
    CHECK(verify_mr(mr, 14, 14).ok);
    CHECK(testing::reference_mr(mr, 14, 14));
    CHECK_THROWS_AS(construct_mr(15, 9, 6, 10), UnsupportedCase);
}
