#pragma once

#include "heffter/blocks.hpp"
#include "heffter/grid.hpp"
#include "heffter/oracle.hpp"
#include "heffter/params.hpp"

namespace heffter {

// 2d x d array from d blocks of size 2 x 2b (2b <= d): block r lands on
// row r (top) and row d+r (bottom), columns r, r+1, ... wrapped mod d.
// Throws std::invalid_argument on mismatched shapes.
Grid assemble_P(const BlockSequence& blocks);

// m x n array from m/2 blocks of width s, in tiles of P-arrays with
// d = gcd(m/2, n) blocks and column slices of width sd/n
Grid tile_blocks(const BlockSequence& blocks, int m, int n, int s);

// the block sequence of length m/2 that the s = 2 mod 4 assemblers consume:
// lambda1 copies of each nice-pair sequence, or the not-dividing pair
NicePair full_pair(const HeffterParams& p, const SearchBudget& budget = SearchBudget::from_env());

// s = 2, k = 0 (mod 4)
Grid construct_s2k0(const HeffterParams& p, const SearchBudget& budget = SearchBudget::from_env());
// s = 0, k = 2 (mod 4): transpose of the swapped build
Grid construct_k2s0(const HeffterParams& p, const SearchBudget& budget = SearchBudget::from_env());
// s, k = 2 (mod 4), m and n even
Grid construct_sk2_even(const HeffterParams& p, const SearchBudget& budget = SearchBudget::from_env());

}  // namespace heffter
