#pragma once

#include <map>
#include <string>
#include <vector>

#include "heffter/grid.hpp"

namespace heffter {

// Small rectangle plus its column sums. mu is the common number of times
// each support element shows up (0 when the counts are not uniform).
struct Block {
    Grid grid;
    std::vector<Entry> signature;
    int mu = 0;

    Block() = default;
    explicit Block(Grid g);

    int rows() const { return grid.rows(); }
    int cols() const { return grid.cols(); }

    // B±x
    Block shifted(Entry x) const { return Block(shift(grid, x)); }
    bool operator==(const Block& o) const { return grid == o.grid; }
};

// literal block from rows; all cells filled
Block make_block(const std::vector<std::vector<Entry>>& rows);

int uniform_multiplicity(const Grid& g);

using BlockSequence = std::vector<Block>;

// n*S
BlockSequence repeat(int n, const BlockSequence& seq);
BlockSequence concat(const std::vector<BlockSequence>& parts);
// S±x, blockwise
BlockSequence shifted(const BlockSequence& seq, Entry x);
// E(S) and supp(S)
std::vector<Entry> entry_list(const BlockSequence& seq);
std::set<Entry> support(const BlockSequence& seq);

// juxtapose blocks into a single wider block
Block juxtapose(const std::vector<Block>& parts);
Block juxtapose_copies(const Block& b, int copies);
// keep columns [first, first+count) (1-based)
Block columns(const Block& b, int first, int count);
// new column j = old column perm[j-1]
Block permute_columns(const Block& b, const std::vector<int>& perm);

// two equal-length sequences; b1 meets the paired-column condition, b2 the
// alternating-sum one
struct NicePair {
    BlockSequence b1;
    BlockSequence b2;
    int lambda1 = 1;
    int lambda2 = 1;
    std::string recipe;
};

// B_{a,b}: 3x2 with (1,1)=1, (1,2)=-(a+1), (3,1)=-(b+1), (3,2)=a+b+1
Block b_ab(Entry a, Entry b);

enum class Family { Half, TwoModFour, TwoOddEll, TwoPrimeWide, TwoPrimeNarrow, Quad };

struct FamilyParams {
    Entry ell = 0;
    int p = 0;
    Entry y = 0;
    int lambda2 = 0;
};

// named blocks of one construction family, instantiated for concrete ell/p/y.
// Throws std::invalid_argument when the parameters do not fit the family.
std::map<std::string, Block> family_blocks(Family family, const FamilyParams& fp);

// H(b) = (V7, V7±6, ..., V7±6(b-1))
BlockSequence h_seq(int b);

std::string family_name(Family f);

}  // namespace heffter
