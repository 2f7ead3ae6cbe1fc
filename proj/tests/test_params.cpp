#include <doctest.h>

#include <array>

#include "heffter/params.hpp"

using namespace heffter;

TEST_CASE("derived quantities for the 6x12 example") {
    auto p = HeffterParams::make(6, 12, 8, 4, 1, 24);
    CHECK(p.ms() == 48);
    CHECK(p.v() == 120);
    CHECK(p.ell() == 5);
    auto phi = phi_support(p);
    auto e = phi.elements();
    CHECK(e.size() == 48);
    CHECK(e.front() == 1);
    CHECK(e.back() == 59);
    for (Entry x = 5; x <= 60; x += 5) CHECK_FALSE(phi.contains(x));
    CHECK_FALSE(phi.half_element.has_value());
    CHECK(phi.cell_count() == p.ms());
}

TEST_CASE("half element when ell is even and t odd") {
    auto p = HeffterParams::make(4, 4, 4, 4, 32, 1);
    CHECK_FALSE(p.lambda_divides_ms());
    CHECK(p.ell() == 2);
    auto phi = phi_support(p);
    REQUIRE(phi.half_element.has_value());
    CHECK(*phi.half_element == 1);
    CHECK(phi.multiplicity(1) == 16);
    CHECK(phi.multiplicity(-1) == 16);
    CHECK(phi.cell_count() == 16);
}

TEST_CASE("invalid tuples name the broken condition") {
    CHECK(HeffterParams{4, 4, 5, 4, 1, 1}.problem().has_value());
    CHECK(HeffterParams{6, 4, 4, 5, 1, 1}.problem().has_value());  // ms != nk
    CHECK(HeffterParams{4, 8, 4, 8, 1, 1}.problem().has_value());  // k > m
    CHECK_FALSE(HeffterParams{6, 4, 4, 6, 1, 1}.problem().has_value());
    CHECK(HeffterParams{4, 4, 4, 4, 3, 1}.problem().has_value());  // 3 does not divide 32
    CHECK(HeffterParams{4, 4, 4, 4, 2, 3}.problem().has_value());  // 3 does not divide 16
    CHECK_THROWS_AS(HeffterParams::make(4, 4, 4, 4, 3, 1), ParamError);
    CHECK_FALSE(HeffterParams{4, 4, 4, 4, 2, 16}.problem().has_value());
}

TEST_CASE("transposed swaps the shape") {
    HeffterParams p{20, 16, 8, 10, 8, 5};
    CHECK(p.transposed() == HeffterParams{16, 20, 10, 8, 8, 5});
    CHECK(p.transposed().transposed() == p);
}

TEST_CASE("divisors") {
    CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<int>{1});
    CHECK(divisors(49) == std::vector<int>{1, 7, 49});
}

TEST_CASE("enumerate_params yields only valid tuples") {
    auto all = enumerate_params(8, 8);
    CHECK_FALSE(all.empty());
    for (const auto& p : all) CHECK_FALSE(p.problem().has_value());
    CHECK(enumerate_params(3, 3).empty());
    bool has_example = false;
    for (const auto& p : enumerate_params(6, 12))
        if (p == HeffterParams{6, 12, 8, 4, 1, 24}) has_example = true;
    CHECK(has_example);
}

TEST_CASE("support with a half element for the ten by ten array") {
    auto phi = phi_support(HeffterParams::make(10, 10, 4, 4, 16, 5));
    CHECK(HeffterParams{10, 10, 4, 4, 16, 5}.ell() == 2);
    CHECK(phi.elements() == std::vector<Entry>{1, 3, 5});
    REQUIRE(phi.half_element.has_value());
    CHECK(*phi.half_element == 5);
    CHECK(phi.multiplicity(5) == 8);
    CHECK(phi.multiplicity(3) == 16);
}

TEST_CASE("lambda = 2, t = 1 gives [1, ms/2] with nothing removed") {
    for (auto [m, n, s, k] : std::vector<std::array<int, 4>>{{4, 4, 4, 4}, {5, 10, 8, 4}, {9, 6, 6, 9}}) {
        auto phi = phi_support(HeffterParams::make(m, n, s, k, 2, 1));
        CHECK(phi.excluded.empty());
        CHECK(phi.elements().size() == static_cast<std::size_t>(m * s / 2));
        CHECK_FALSE(phi.half_element.has_value());
    }
}
