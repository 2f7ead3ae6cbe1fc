#include "heffter/assembly.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "heffter/errors.hpp"
#include "heffter/nice_pairs.hpp"

namespace heffter {

namespace {

std::string num(long long x) { return std::to_string(x); }

void place(Grid& g, int r, int c, Entry v) {
    if (g.filled(r, c)) throw ConstructionError("cell (" + num(r) + "," + num(c) + ") claimed twice");
    g.set(r, c, v);
}

void check_params(const HeffterParams& p) {
    if (auto why = p.problem()) throw ParamError(p.str() + ": " + *why);
}

}  // namespace

Grid assemble_P(const BlockSequence& blocks) {
    const int d = static_cast<int>(blocks.size());
    if (d == 0) throw std::invalid_argument("P needs at least one block");
    const int w = blocks.front().cols();
    if (w % 2 != 0 || w > d) throw std::invalid_argument("block width must be even and at most " + num(d));
    Grid P(2 * d, d);
    for (int i = 1; i <= d; ++i) {
        const Block& G = blocks[i - 1];
        if (G.rows() != 2 || G.cols() != w) throw std::invalid_argument("block " + num(i) + " has the wrong shape");
        for (int j = 1; j <= w; ++j) {
            const int col = wrap(i + j - 1, d);
            if (auto v = G.grid.at(1, j)) place(P, i, col, *v);
            if (auto v = G.grid.at(2, j)) place(P, d + i, col, *v);
        }
    }
    return P;
}

Grid tile_blocks(const BlockSequence& blocks, int m, int n, int s) {
    if (m <= 0 || m % 2 != 0 || static_cast<int>(blocks.size()) != m / 2)
        throw std::invalid_argument("need m/2 blocks for an array with " + num(m) + " rows");
    const int d = std::gcd(m / 2, n);
    if ((static_cast<long long>(s) * d) % n != 0) throw InternalError("slice width sd/n is not an integer");
    const int a = s * d / n;
    if (a % 2 != 0) throw InternalError("slice width " + num(a) + " is odd");
    const int mbar = m / (2 * d), nbar = n / d;
    Grid A(m, n);
    for (int i = 1; i <= mbar; ++i)
        for (int j = 1; j <= nbar; ++j) {
            BlockSequence slice;
            for (int r = 1; r <= d; ++r) slice.push_back(columns(blocks[(i - 1) * d + r - 1], a * (j - 1) + 1, a));
            const Grid P = assemble_P(slice);
            for (const auto& cell : P.cells()) place(A, 2 * d * (i - 1) + cell.r, d * (j - 1) + cell.c, cell.v);
        }
    return A;
}

NicePair full_pair(const HeffterParams& p, const SearchBudget& budget) {
    NicePair pair = nice_pair(p, budget);
    if (p.lambda_divides_ms()) {
        pair.b1 = repeat(pair.lambda1, pair.b1);
        pair.b2 = repeat(pair.lambda1, pair.b2);
    }
    return pair;
}

Grid construct_s2k0(const HeffterParams& p, const SearchBudget& budget) {
    check_params(p);
    if (p.s % 4 != 2 || p.k % 4 != 0) throw ParamError(p.str() + ": need s = 2 and k = 0 (mod 4)");
    return tile_blocks(full_pair(p, budget).b1, p.m, p.n, p.s);
}

Grid construct_k2s0(const HeffterParams& p, const SearchBudget& budget) {
    check_params(p);
    if (p.s % 4 != 0 || p.k % 4 != 2) throw ParamError(p.str() + ": need s = 0 and k = 2 (mod 4)");
    return transpose(construct_s2k0(p.transposed(), budget));
}

Grid construct_sk2_even(const HeffterParams& p, const SearchBudget& budget) {
    check_params(p);
    if (p.s % 4 != 2 || p.k % 4 != 2) throw ParamError(p.str() + ": need s = k = 2 (mod 4)");
    if (p.m % 2 != 0 || p.n % 2 != 0) throw ParamError(p.str() + ": need m and n even");
    if (p.m < p.n) return transpose(construct_sk2_even(p.transposed(), budget));

    const NicePair pair = full_pair(p, budget);
    const int m = p.m, n = p.n, s = p.s;
    Grid A1(n, n);
    for (int r = 1; r <= n / 2; ++r) {
        const Block& B = pair.b2[r - 1];
        for (int j = 1; j <= s; ++j) {
            const int col = wrap(2 * r - 1 + j - 1, n);
            place(A1, 2 * r - 1, col, *B.grid.at(1, j));
            place(A1, 2 * r, col, *B.grid.at(2, j));
        }
    }
    if (m == n) return A1;
    BlockSequence rest(pair.b1.begin() + n / 2, pair.b1.end());
    return stack(A1, tile_blocks(rest, m - n, n, s));
}

}  // namespace heffter
