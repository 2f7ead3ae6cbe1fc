#include "heffter/blocks.hpp"

#include <map>
#include <stdexcept>

namespace heffter {

Block::Block(Grid g) : grid(std::move(g)), signature(col_sums(grid)), mu(uniform_multiplicity(grid)) {}

int uniform_multiplicity(const Grid& g) {
    std::map<Entry, int> count;
    for (const auto& cell : g.cells()) ++count[cell.v < 0 ? -cell.v : cell.v];
    int mu = 0;
    for (const auto& [x, c] : count) {
        if (mu == 0) mu = c;
        else if (c != mu) return 0;
    }
    return mu;
}

Block make_block(const std::vector<std::vector<Entry>>& rows) {
    if (rows.empty()) return Block(Grid());
    const int h = static_cast<int>(rows.size());
    const int w = static_cast<int>(rows.front().size());
    Grid g(h, w);
    for (int r = 0; r < h; ++r) {
        if (static_cast<int>(rows[r].size()) != w) throw std::invalid_argument("ragged block literal");
        for (int c = 0; c < w; ++c) g.set(r + 1, c + 1, rows[r][c]);
    }
    return Block(std::move(g));
}

BlockSequence repeat(int n, const BlockSequence& seq) {
    BlockSequence out;
    out.reserve(seq.size() * std::max(n, 0));
    for (int i = 0; i < n; ++i) out.insert(out.end(), seq.begin(), seq.end());
    return out;
}

BlockSequence concat(const std::vector<BlockSequence>& parts) {
    BlockSequence out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

BlockSequence shifted(const BlockSequence& seq, Entry x) {
    BlockSequence out;
    out.reserve(seq.size());
    for (const auto& b : seq) out.push_back(b.shifted(x));
    return out;
}

std::vector<Entry> entry_list(const BlockSequence& seq) {
    std::vector<Entry> out;
    for (const auto& b : seq) {
        auto e = entry_list(b.grid);
        out.insert(out.end(), e.begin(), e.end());
    }
    return out;
}

std::set<Entry> support(const BlockSequence& seq) {
    std::set<Entry> out;
    for (const auto& b : seq) {
        auto s = support(b.grid);
        out.insert(s.begin(), s.end());
    }
    return out;
}

Block juxtapose(const std::vector<Block>& parts) {
    std::vector<Grid> grids;
    grids.reserve(parts.size());
    for (const auto& b : parts) grids.push_back(b.grid);
    return Block(juxtapose(grids));
}

Block juxtapose_copies(const Block& b, int copies) {
    return juxtapose(std::vector<Block>(copies, b));
}

Block columns(const Block& b, int first, int count) {
    if (first < 1 || count < 0 || first + count - 1 > b.cols())
        throw std::out_of_range("column slice outside block");
    Grid g(b.rows(), count);
    for (const auto& cell : b.grid.cells())
        if (cell.c >= first && cell.c < first + count) g.set(cell.r, cell.c - first + 1, cell.v);
    return Block(std::move(g));
}

Block permute_columns(const Block& b, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != b.cols()) throw std::invalid_argument("permutation width");
    Grid g(b.rows(), b.cols());
    for (int j = 1; j <= b.cols(); ++j)
        for (int r = 1; r <= b.rows(); ++r)
            if (auto v = b.grid.at(r, perm[j - 1])) g.set(r, j, *v);
    return Block(std::move(g));
}

Block b_ab(Entry a, Entry b) {
    if (a < 0 || b < 0) throw std::invalid_argument("B_{a,b} needs a,b >= 0");
    Grid g(3, 2);
    g.set(1, 1, 1);
    g.set(1, 2, -(a + 1));
    g.set(3, 1, -(b + 1));
    g.set(3, 2, a + b + 1);
    return Block(std::move(g));
}

BlockSequence h_seq(int b) {
    static const Block v7 = make_block({{1, -1, -4, -5, 3, 6}, {-2, 2, 5, 4, -3, -6}});
    BlockSequence out;
    for (int i = 0; i < b; ++i) out.push_back(v7.shifted(6 * i));
    return out;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Half: return "half";
        case Family::TwoModFour: return "two-mod-four";
        case Family::TwoOddEll: return "two-odd-ell";
        case Family::TwoPrimeWide: return "two-prime-wide";
        case Family::TwoPrimeNarrow: return "two-prime-narrow";
        case Family::Quad: return "quad";
    }
    return "?";
}

namespace {

std::map<std::string, Block> half_blocks(Entry l) {
    if (l < 2) throw std::invalid_argument("ell must be at least 2");
    std::map<std::string, Block> out;
    if (l % 2 == 1) {
        out["A"] = make_block({{1, -2, -3, 4}, {-1, 2, 3, -4}});
        out["F"] = make_block({{1, -2, -4, 5}, {-1, 2, 4, -5}});
        out["E"] = make_block({{1, -1, 3, -4, -3, 4}, {-2, 2, -1, 2, 3, -4}});
        out["G"] = make_block({{4, 2, -2, 2, -1, -5}, {-5, -1, 4, -4, 1, 5}});
        out["E'"] = make_block({{1, 3, -1, -4, -3, 4}, {-2, -1, 2, 2, 3, -4}});
        out["G'"] = make_block({{4, -2, 2, 2, -1, -5}, {-5, 4, -1, -4, 1, 5}});
    } else {
        out["H"] = make_block({{1, -(l + 1), -(2 * l + 1), 3 * l + 1},
                               {-1, l + 1, 2 * l + 1, -(3 * l + 1)}});
        out["L"] = make_block({{1, 3 * l + 1, -(l + 1), l + 1, -1, -(3 * l + 1)},
                               {-(l + 1), -(2 * l + 1), 2 * l + 1, -(2 * l + 1), 1, 3 * l + 1}});
    }
    return out;
}

std::map<std::string, Block> mod4_blocks(Entry l) {
    if (l < 2) throw std::invalid_argument("ell must be at least 2");
    std::map<std::string, Block> out;
    if (l % 2 == 1) {
        out["A"] = make_block({{1, -1, 2, -2}, {-1, 1, -2, 2}});
        out["E"] = make_block({{1, 2, -1, 1, -1, -2}, {-2, -1, 2, -2, 1, 2}});
    } else {
        out["F"] = make_block({{1, -1, l + 1, -(l + 1)}, {-1, 1, -(l + 1), l + 1}});
        out["G"] = make_block({{1, l + 1, -1, 1, -1, -(l + 1)},
                               {-(l + 1), -1, l + 1, -(l + 1), 1, l + 1}});
    }
    return out;
}

std::map<std::string, Block> two_odd_blocks() {
    return {
        {"U3", make_block({{1, -2, -4, 5}, {-1, 2, 4, -5}})},
        {"U5", make_block({{1, -2, -3, 4}, {-1, 2, 3, -4}})},
        {"V1", make_block({{2, -2, -5, -6, 4, 7}, {-3, 3, 6, 5, -4, -7}})},
        {"V3", make_block({{1, -1, -5, -6, 4, 7}, {-2, 2, 6, 5, -4, -7}})},
        {"V5", make_block({{6, -6, -2, -3, 1, 4}, {-7, 7, 3, 2, -1, -4}})},
        {"V7", make_block({{1, -1, -4, -5, 3, 6}, {-2, 2, 5, 4, -3, -6}})},
        {"Z", make_block({{1, -1, 4, -5, -7, 8}, {-2, 2, -4, 5, 7, -8}})},
        {"Z'", make_block({{1, 4, -1, -5, -7, 8}, {-2, -4, 2, 5, 7, -8}})},
    };
}

std::map<std::string, Block> wide_blocks(Entry l, int p) {
    if (l < 2) throw std::invalid_argument("ell must be at least 2");
    std::map<std::string, Block> out;
    out["W4"] = make_block({{1, -(l + 1), -(2 * l + 1), 3 * l + 1},
                            {-1, l + 1, 2 * l + 1, -(3 * l + 1)}});
    out["W6"] = make_block({{1, -1, -(3 * l + 1), -(4 * l + 1), 2 * l + 1, 5 * l + 1},
                            {-(l + 1), l + 1, 4 * l + 1, 3 * l + 1, -(2 * l + 1), -(5 * l + 1)}});
    if (p != 0) {
        if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
        std::vector<Block> parts{out["W6"]};
        for (Entry j = 6; j <= 2 * p - 4; j += 4) parts.push_back(out["W4"].shifted(j * l));
        out["V"] = juxtapose(parts);
    }
    return out;
}

std::map<std::string, Block> narrow_blocks(int p, Entry y) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    if (y < 1) throw std::invalid_argument("y must be positive");
    const Entry P = p;
    std::map<std::string, Block> out;
    out["W4"] = make_block({{y + 1, -(2 * y + 1), -((P + 1) * y + 2), (P + 2) * y + 2},
                            {-(y + 1), 2 * y + 1, (P + 1) * y + 2, -((P + 2) * y + 2)}});
    out["W6"] = make_block({{2 * y + 1, -(2 * y + 1), 1, -(y + 1), -((P + 1) * y + 2), (P + 2) * y + 2},
                            {-(P * y + 2), P * y + 2, -1, y + 1, (P + 1) * y + 2, -((P + 2) * y + 2)}});
    out["W6'"] = make_block({{2 * y + 1, 1, -(2 * y + 1), -(y + 1), -((P + 1) * y + 2), (P + 2) * y + 2},
                             {-(P * y + 2), -1, P * y + 2, y + 1, (P + 1) * y + 2, -((P + 2) * y + 2)}});
    std::vector<Block> parts{out["W6"]}, parts2{out["W6'"]};
    for (Entry j = 2; j <= P - 3; j += 2) {
        parts.push_back(out["W4"].shifted(j * y));
        parts2.push_back(out["W4"].shifted(j * y));
    }
    out["V"] = juxtapose(parts);
    out["V'"] = juxtapose(parts2);
    return out;
}

std::map<std::string, Block> quad_blocks(int lambda2) {
    Block base = make_block({{1, -1}, {-1, 1}});
    std::map<std::string, Block> out{{"Q2", base}};
    if (lambda2 != 0) {
        if (lambda2 < 0 || lambda2 % 4 != 0)
            throw std::invalid_argument("lambda2 must be a positive multiple of 4");
        out["Q"] = juxtapose_copies(base, lambda2 / 4);
    }
    return out;
}

}  // namespace

std::map<std::string, Block> family_blocks(Family family, const FamilyParams& fp) {
    switch (family) {
        case Family::Half: return half_blocks(fp.ell);
        case Family::TwoModFour: return mod4_blocks(fp.ell);
        case Family::TwoOddEll: return two_odd_blocks();
        case Family::TwoPrimeWide: return wide_blocks(fp.ell, fp.p);
        case Family::TwoPrimeNarrow: return narrow_blocks(fp.p, fp.y);
        case Family::Quad: return quad_blocks(fp.lambda2);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace heffter
