#include <doctest.h>

#include <json.hpp>

#include "heffter/io.hpp"
#include "support.hpp"

using namespace heffter;

namespace {

Grid sample() {
    Grid g(2, 3);
    g.set(1, 1, -12);
    g.set(1, 3, 0);
    g.set(2, 2, 7);
    return g;
}

}  // namespace

TEST_CASE("json round trip keeps empty cells and zeros apart") {
    Grid g = sample();
    Grid back = grid_from_json(to_json(g));
    CHECK(back == g);
    CHECK_FALSE(back.filled(1, 2));
    CHECK(back.filled(1, 3));
    auto doc = nlohmann::json::parse(to_json(g));
    CHECK(doc["m"] == 2);
    CHECK(doc["cells"].size() == 3);
}

TEST_CASE("csv round trip") {
    Grid g = sample();
    std::string text = to_csv(g);
    CHECK(text.rfind("2,3\n", 0) == 0);
    CHECK(grid_from_csv(text) == g);
    CHECK(read_grid(text) == g);
    CHECK(read_grid("  \n" + to_json(g)) == g);
}

TEST_CASE("fixtures survive both formats") {
    Grid g = testing::fixture("heffter_16_20_10_8_l8_t5");
    CHECK(grid_from_csv(to_csv(g)) == g);
    CHECK(read_grid(write_grid(g, Format::Json)) == g);
}

TEST_CASE("pretty output aligns columns") {
    std::string text = to_pretty(sample());
    CHECK(text == "-12       0\n      7\n");
}

TEST_CASE("malformed input raises FormatError") {
    CHECK_THROWS_AS(parse_format("xml"), FormatError);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK_THROWS_AS(read_grid(""), FormatError);
    CHECK_THROWS_AS(grid_from_json("{\"m\":2}"), FormatError);
    CHECK_THROWS_AS(grid_from_json("{\"m\":1,\"n\":1,\"cells\":[{\"r\":2,\"c\":1,\"v\":1}]}"), FormatError);
    CHECK_THROWS_AS(grid_from_json("{\"m\":1,\"n\":1,\"cells\":[{\"r\":1,\"c\":1,\"v\":1},{\"r\":1,\"c\":1,\"v\":2}]}"),
                    FormatError);
    CHECK_THROWS_AS(grid_from_csv("2\n1\n"), FormatError);
    CHECK_THROWS_AS(grid_from_csv("2,1\n1\n"), FormatError);
    CHECK_THROWS_AS(grid_from_csv("1,2\n1,x\n"), FormatError);
    CHECK_THROWS_AS(grid_from_csv("1,2\n1\n"), FormatError);
    CHECK_THROWS_AS(read_grid_file("/nonexistent/grid.json"), FormatError);
}

TEST_CASE("certificate and block dumps are JSON") {
    Certificate c;
    c.fail("c:row-sum", "row 2 sums to 3", 2, 0);
    auto doc = nlohmann::json::parse(certificate_json(c));
    CHECK(doc["ok"] == false);
    CHECK(doc["violations"][0]["row"] == 2);
    CHECK_FALSE(doc["violations"][0].contains("col"));

    auto blocks = nlohmann::json::parse(blocks_json({b_ab(1, 2)}));
    CHECK(blocks[0]["rows"][1][0].is_null());
    CHECK(blocks[0]["column_sums"] == nlohmann::json::array({-2, 2}));
}
