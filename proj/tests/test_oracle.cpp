#include <doctest.h>

#include "heffter/oracle.hpp"
#include "heffter/verify.hpp"
#include "support.hpp"

using namespace heffter;

TEST_CASE("sma search finds small squares") {
    for (int n : {3, 4}) {
        auto res = search_sma(n, n, n, n, {});
        REQUIRE(res.status == SearchStatus::Found);
        CHECK(verify_sma(*res.grid, n, n).ok);
        CHECK(testing::reference_sma(*res.grid, n, n));
        CHECK(res.nodes > 0);
    }
}

TEST_CASE("sma search proves the two by two case impossible") {
    auto res = search_sma(2, 2, 2, 2, {});
    CHECK(res.status == SearchStatus::NotFound);
    CHECK_FALSE(res.grid.has_value());
}

TEST_CASE("a one node budget runs out") {
    SearchBudget tiny;
    tiny.max_nodes = 1;
    CHECK(search_sma(6, 6, 6, 6, tiny).status == SearchStatus::Exhausted);
    CHECK(status_name(SearchStatus::Exhausted) == "exhausted");
}

TEST_CASE("heffter search") {
    for (int lambda : {1, 2}) {
        const HeffterParams p{4, 4, 4, 4, lambda, 1};
        auto res = search_heffter(p, {});
        REQUIRE(res.status == SearchStatus::Found);
        CHECK(verify_integer_heffter(*res.grid, p).ok);
        CHECK(testing::reference_heffter(*res.grid, 4, 4, lambda, 1));
    }
}

TEST_CASE("nice pair search") {
    auto res = search_nice_pair(2, 6, 1, {});
    REQUIRE(res.status == SearchStatus::Found);
    CHECK(res.pair->b1.size() == 1);
    CHECK(verify_nice_pair(*res.pair).ok);
    CHECK(support(res.pair->b1) == std::set<Entry>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    CHECK_THROWS_AS(search_nice_pair(2, 5, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(search_nice_pair(3, 6, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(search_nice_pair(2, 6, 5, {}), std::invalid_argument);
}

TEST_CASE("budget strings") {
    auto b = SearchBudget::parse("500");
    CHECK(b.max_nodes == 500);
    CHECK(b.time_cap == SearchBudget{}.time_cap);
    b = SearchBudget::parse("20:1.5");
    CHECK(b.max_nodes == 20);
    CHECK(b.time_cap == 1.5);
    CHECK_THROWS_AS(SearchBudget::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(SearchBudget::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(SearchBudget::parse("5:-1"), std::invalid_argument);
}

TEST_CASE("square closed form") {
    for (auto [n, s] : std::vector<std::pair<int, int>>{{5, 4}, {7, 6}, {9, 6}, {9, 8}, {11, 10}}) {
        CAPTURE(n);
        CAPTURE(s);
        CHECK(testing::reference_sma(square_sma(n, s), s, s));
    }
    CHECK_THROWS_AS(square_sma(5, 3), std::invalid_argument);
}
