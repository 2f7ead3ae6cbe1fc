#include <doctest.h>

#include "heffter/verify.hpp"
#include "support.hpp"

using namespace heffter;

namespace {

struct HeffterFixture {
    const char* name;
    HeffterParams p;
};

const HeffterFixture kHeffter[] = {
    {"heffter_10_10_4_4_l16_t5", {10, 10, 4, 4, 16, 5}},
    {"heffter_16_16_14_14_l28_t4", {16, 16, 14, 14, 28, 4}},
    {"heffter_16_20_10_8_l8_t5", {16, 20, 10, 8, 8, 5}},
    {"heffter_18_15_10_12_l6_t20", {18, 15, 10, 12, 6, 20}},
    {"heffter_20_12_6_10_l10_t3", {20, 12, 6, 10, 10, 3}},
    {"heffter_5_10_8_4_l5_t4", {5, 10, 8, 4, 5, 4}},
    {"heffter_5_10_8_4_l8_t5", {5, 10, 8, 4, 8, 5}},
    {"heffter_6_12_8_4_l1_t24", {6, 12, 8, 4, 1, 24}},
    {"heffter_9_9_8_8_l3_t3", {9, 9, 8, 8, 3, 3}},
};

// first filled cell
std::pair<int, int> first_cell(const Grid& g) {
    for (int r = 1; r <= g.rows(); ++r)
        for (int c = 1; c <= g.cols(); ++c)
            if (g.filled(r, c)) return {r, c};
    return {0, 0};
}

}  // namespace

TEST_CASE("fixtures pass the library and reference checks") {
    for (const auto& f : kHeffter) {
        CAPTURE(f.name);
        Grid g = testing::fixture(f.name);
        CHECK(verify_integer_heffter(g, f.p).ok);
        CHECK(testing::reference_heffter(g, f.p.s, f.p.k, f.p.lambda, f.p.t));
        CHECK(verify_cyclic_heffter(g, f.p).ok);
    }
    Grid sma = testing::fixture("sma_5_10_8_4");
    CHECK(verify_sma(sma, 8, 4).ok);
    CHECK(testing::reference_sma(sma, 8, 4));
    Grid mr = testing::fixture("mr_5_10_8_4");
    CHECK(verify_mr(mr, 8, 4).ok);
    CHECK(testing::reference_mr(mr, 8, 4));
}

TEST_CASE("tampering names the broken clause") {
    Grid sma = testing::fixture("sma_5_10_8_4");
    auto [r, c] = first_cell(sma);

    Grid dropped = sma;
    dropped.clear(r, c);
    auto cert = verify_sma(dropped, 8, 4);
    CHECK_FALSE(cert.ok);
    CHECK(cert.has("a:row-fill"));
    CHECK(cert.has("a:col-fill"));

    Grid bumped = sma;
    bumped.set(r, c, *sma.at(r, c) + 1);
    cert = verify_sma(bumped, 8, 4);
    CHECK(cert.has("c:row-sum"));
    CHECK(cert.has("b:entries"));
    CHECK(cert.violations.front().row >= 0);

    Grid negated = sma;
    negated.set(r, c, -*sma.at(r, c));
    CHECK(verify_sma(negated, 8, 4).has("b:entries"));

    const HeffterParams p{5, 10, 8, 4, 5, 4};
    Grid h = testing::fixture("heffter_5_10_8_4_l5_t4");
    CHECK(verify_integer_heffter(h, p).ok);
    Grid hb = h;
    hb.set(r, c, 0);
    auto hc = verify_integer_heffter(hb, p);
    CHECK_FALSE(hc.ok);
    CHECK(hc.has("b:entries"));
    CHECK(verify_integer_heffter(h, {5, 10, 8, 4, 5, 2}).has("b:entries"));
    CHECK(verify_integer_heffter(h, {5, 10, 8, 4, 3, 4}).has("params"));
    CHECK(verify_integer_heffter(transpose(h), p).has("shape"));
}

TEST_CASE("mr verifier rejects an sma") {
    Grid sma = testing::fixture("sma_5_10_8_4");
    auto cert = verify_mr(sma, 8, 4);
    CHECK_FALSE(cert.ok);
    CHECK(cert.first_clause() == "b:entries");
    CHECK(cert.total > Certificate::kCap);
}

TEST_CASE("certificate caps its violation list") {
    Certificate c;
    for (int i = 0; i < 40; ++i) c.fail("x", "y");
    CHECK(c.violations.size() == Certificate::kCap);
    CHECK(c.total == 40);
    CHECK(c.first_clause() == "x");
    CHECK_FALSE(c.ok);
}

TEST_CASE("block sequence conditions") {
    Block paired = make_block({{1, -1, 2, -2}, {-1, 1, -2, 2}});
    CHECK(verify_blocchi({paired}).ok);
    CHECK(verify_blocchiOLD({paired}).ok);
    Grid sparse(2, 2);
    sparse.set(1, 1, 1);
    sparse.set(1, 2, -1);
    CHECK(verify_blocchi2({Block(sparse)}).ok);
    CHECK(verify_blocchi({Block(sparse)}).has("fill"));

    Block odd = make_block({{1, -1, 2}, {-1, 1, -2}});
    CHECK(verify_blocchi({odd}).has("width"));

    Block unbalanced = make_block({{1, 2}, {-1, -2}});
    CHECK(verify_blocchi({unbalanced}).has("shiftable"));

    Block rows = make_block({{2, -1}, {-1, 1}});
    CHECK_FALSE(verify_blocchi({rows}).ok);

    NicePair pair{{paired}, {paired}, 1, 1, "t"};
    CHECK(verify_nice_pair(pair).ok);
    NicePair shortpair{{paired}, {}, 1, 1, "t"};
    CHECK(verify_nice_pair(shortpair).has("length"));
    NicePair mismatch{{paired}, {paired.shifted(1)}, 1, 1, "t"};
    CHECK(verify_nice_pair(mismatch).has("match"));
}

TEST_CASE("a repeated-entry array is not an sma") {
    Grid g = testing::fixture("heffter_16_16_14_14_l28_t4");
    auto cert = verify_sma(g, 14, 14);
    CHECK_FALSE(cert.ok);
    CHECK(cert.first_clause() == "b:entries");
}

TEST_CASE("the ten by ten array counts its half element eight times") {
    Grid g = testing::fixture("heffter_10_10_4_4_l16_t5");
    int fives = 0;
    for (Entry x : entry_list(g)) fives += (x == 5 || x == -5);
    CHECK(fives == 8);
    CHECK(verify_integer_heffter(g, {10, 10, 4, 4, 16, 5}).ok);
}

TEST_CASE("cyclic reading") {
    const HeffterParams p{5, 10, 8, 4, 8, 5};
    Grid g = testing::fixture("heffter_5_10_8_4_l8_t5");
    CHECK(verify_cyclic_heffter(g, p).ok);
    Grid bad = g;
    auto [r, c] = first_cell(g);
    bad.set(r, c, p.ell());
    CHECK(verify_cyclic_heffter(bad, p).has("b:in-J"));
}

TEST_CASE("magic rectangle edge cases") {
    Grid mr = testing::fixture("mr_5_10_8_4");
    // swap two entries in different rows but the same column
    int r2 = 0;
    auto [r1, c] = first_cell(mr);
    for (int r = 1; r <= mr.rows(); ++r)
        if (r != r1 && mr.filled(r, c) && *mr.at(r, c) != *mr.at(r1, c)) r2 = r;
    REQUIRE(r2 != 0);
    Grid swapped = mr;
    swapped.set(r1, c, *mr.at(r2, c));
    swapped.set(r2, c, *mr.at(r1, c));
    auto cert = verify_mr(swapped, 8, 4);
    CHECK(cert.first_clause() == "c:row-sum");
    CHECK_FALSE(cert.has("c:col-sum"));

    Grid zero(1, 1);
    zero.set(1, 1, 0);
    CHECK(verify_mr(zero, 1, 1).ok);
}

TEST_CASE("wide-family blocks against the block conditions") {
    for (Entry l : {2, 3, 4, 9}) {
        FamilyParams fp;
        fp.ell = l;
        auto blk = family_blocks(Family::TwoPrimeWide, fp);
        CHECK(verify_blocchi({blk.at("W4")}).ok);
        CHECK(verify_blocchiOLD({blk.at("W4")}).ok);
        CHECK(blk.at("W4").signature == std::vector<Entry>{0, 0, 0, 0});
        CHECK(verify_blocchi({blk.at("W6")}).ok);
    }
}
