#include <doctest.h>

#include "heffter/errors.hpp"
#include "heffter/s0k0.hpp"
#include "heffter/verify.hpp"
#include "support.hpp"

using namespace heffter;

TEST_CASE("anchors walk the diagonal and hop by four after lcm(m,n) blocks") {
    CHECK(anchor(5, 10, 0) == std::pair{1, 1});
    CHECK(anchor(5, 10, 1) == std::pair{2, 2});
    CHECK(anchor(5, 10, 10) == std::pair{1, 5});
    CHECK(anchor(5, 10, 11) == std::pair{2, 6});
}

TEST_CASE("both five by ten arrays match the fixtures cell for cell") {
    CHECK(construct_s0k0({5, 10, 8, 4, 5, 4}) == testing::fixture("heffter_5_10_8_4_l5_t4"));
    CHECK(construct_s0k0({5, 10, 8, 4, 8, 5}) == testing::fixture("heffter_5_10_8_4_l8_t5"));
}

TEST_CASE("square fixtures with s = 0 (mod 4)") {
    CHECK(construct_s0k0({9, 9, 8, 8, 3, 3}) == testing::fixture("heffter_9_9_8_8_l3_t3"));
    CHECK(construct_s0k0({10, 10, 4, 4, 16, 5}) == testing::fixture("heffter_10_10_4_4_l16_t5"));
}

TEST_CASE("the six by twelve tuple is valid though not the stored array") {
    const HeffterParams p{6, 12, 8, 4, 1, 24};
    Grid g = construct_s0k0(p);
    CHECK(verify_integer_heffter(g, p).ok);
    CHECK(testing::reference_heffter(g, 8, 4, 1, 24));
    CHECK(testing::reference_shiftable(g));
}

TEST_CASE("plans cover the support with the right multiplicity") {
    auto plan = build_plan({12, 8, 8, 12, 4, 2});
    CHECK(plan.plan.offsets.size() == static_cast<std::size_t>(12 * 8 / 4));
    CHECK(plan.copies >= 1);
    CHECK_FALSE(plan.recipe.empty());
    CHECK_THROWS_AS(build_plan({6, 6, 6, 6, 2, 1}), ParamError);
}

TEST_CASE("overlapping placement is refused") {
    PlacementPlan plan{{0, 4}};
    CHECK_THROWS_AS(place_blocks(3, 3, b_ab(0, 0), plan), ConstructionError);
    CHECK_THROWS_AS(place_blocks(3, 3, make_block({{1, -1}, {-1, 1}}), plan), std::invalid_argument);
}

TEST_CASE("placements named by their offsets") {
    PlacementPlan six{{0, 1, 10, 11, 20, 21, 30, 31, 40, 41, 50, 51}};
    CHECK(place_blocks(6, 12, b_ab(2, 5), six) == testing::fixture("heffter_6_12_8_4_l1_t24"));

    PlacementPlan five;
    for (int i = 0; i < 5; ++i) five.offsets.insert(five.offsets.end(), {0, 2});
    CHECK(place_blocks(5, 10, b_ab(1, 5), five) == testing::fixture("heffter_5_10_8_4_l5_t4"));

    Grid one = place_blocks(4, 4, b_ab(0, 0), PlacementPlan{{0}});
    CHECK(one.filled_count() == 4);
    for (auto [r, c] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {3, 1}, {3, 2}}) CHECK(one.filled(r, c));
}

TEST_CASE("offset plans for the fixture arrays") {
    auto repeat_list = [](std::vector<Entry> xs, int n) {
        std::vector<Entry> out;
        for (int i = 0; i < n; ++i) out.insert(out.end(), xs.begin(), xs.end());
        return out;
    };
    CHECK(build_plan({5, 10, 8, 4, 8, 5}).plan.offsets == repeat_list({0, 1, 3, 4, 6}, 2));
    CHECK(build_plan({9, 9, 8, 8, 3, 3}).plan.offsets == repeat_list({0, 4, 8, 12, 17, 21}, 3));
    CHECK(build_plan({10, 10, 4, 4, 16, 5}).plan.offsets == std::vector<Entry>{0, 2, 0, 2, 0, 2, 0, 2, 4, 4});
    CHECK(build_plan({5, 10, 8, 4, 5, 4}).plan.offsets == repeat_list({0, 2}, 5));
}

TEST_CASE("lambda = 2, t = 1 on the four by four square is an sma") {
    Grid g = construct_s0k0({4, 4, 4, 4, 2, 1});
    CHECK(verify_sma(g, 4, 4).ok);
    CHECK(testing::reference_sma(g, 4, 4));
}
