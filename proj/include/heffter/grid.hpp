#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace heffter {

using Entry = std::int64_t;

struct Cell {
    int r;
    int c;
    Entry v;
    bool operator==(const Cell&) const = default;
};

// m x n partially filled array, 1-based indices. An empty cell is not the
// same as a stored 0; 0 only shows up in SMAs with ms odd.
class Grid {
public:
    Grid() = default;
    Grid(int rows, int cols);

    int rows() const { return m_; }
    int cols() const { return n_; }

    bool filled(int r, int c) const;
    std::optional<Entry> at(int r, int c) const;
    void set(int r, int c, Entry v);
    void clear(int r, int c);

    // filled cells, row-major
    std::vector<Cell> cells() const;
    std::size_t filled_count() const;
    int row_fill(int r) const;
    int col_fill(int c) const;

    bool operator==(const Grid&) const = default;

private:
    std::size_t index(int r, int c) const;

    int m_ = 0;
    int n_ = 0;
    std::vector<std::optional<Entry>> data_;
};

// residue of x modulo n in [1, n]
int wrap(long long x, int n);

Entry row_sum(const Grid& g, int i);
Entry col_sum(const Grid& g, int j);
std::vector<Entry> row_sums(const Grid& g);
std::vector<Entry> col_sums(const Grid& g);

bool is_shiftable(const Grid& g);

struct NotShiftable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A±x: positives grow by x, negatives shrink by x. Throws NotShiftable.
Grid shift(const Grid& g, Entry x);
Grid transpose(const Grid& g);

std::vector<Entry> entry_list(const Grid& g);
std::set<Entry> support(const Grid& g);

// horizontal concatenation of equal-height, fully filled grids
Grid juxtapose(const std::vector<Grid>& blocks);
// rows of `top` followed by rows of `bottom`; widths must agree
Grid stack(const Grid& top, const Grid& bottom);

// D_i of an m x n array: (r, i+r-1) for r in [1,m], columns wrapped into [1,n]
std::vector<std::pair<int, int>> diagonal_cells(int m, int n, int i);

}  // namespace heffter
