#include "heffter/grid.hpp"

#include <string>

namespace heffter {

Grid::Grid(int rows, int cols) : m_(rows), n_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative grid dimension");
    data_.assign(static_cast<std::size_t>(rows) * cols, std::nullopt);
}

std::size_t Grid::index(int r, int c) const {
    if (r < 1 || r > m_ || c < 1 || c > n_)
        throw std::out_of_range("cell (" + std::to_string(r) + "," + std::to_string(c) +
                                ") outside " + std::to_string(m_) + "x" + std::to_string(n_));
    return static_cast<std::size_t>(r - 1) * n_ + (c - 1);
}

bool Grid::filled(int r, int c) const { return data_[index(r, c)].has_value(); }

std::optional<Entry> Grid::at(int r, int c) const { return data_[index(r, c)]; }

void Grid::set(int r, int c, Entry v) { data_[index(r, c)] = v; }

void Grid::clear(int r, int c) { data_[index(r, c)].reset(); }

std::vector<Cell> Grid::cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= m_; ++r)
        for (int c = 1; c <= n_; ++c)
            if (auto v = data_[static_cast<std::size_t>(r - 1) * n_ + (c - 1)])
                out.push_back({r, c, *v});
    return out;
}

std::size_t Grid::filled_count() const {
    std::size_t k = 0;
    for (const auto& x : data_)
        if (x) ++k;
    return k;
}

int Grid::row_fill(int r) const {
    int k = 0;
    for (int c = 1; c <= n_; ++c)
        if (filled(r, c)) ++k;
    return k;
}

int Grid::col_fill(int c) const {
    int k = 0;
    for (int r = 1; r <= m_; ++r)
        if (filled(r, c)) ++k;
    return k;
}

int wrap(long long x, int n) {
    long long r = ((x - 1) % n + n) % n;
    return static_cast<int>(r + 1);
}

Entry row_sum(const Grid& g, int i) {
    if (i < 1 || i > g.rows()) throw std::out_of_range("row index");
    Entry s = 0;
    for (int c = 1; c <= g.cols(); ++c)
        if (auto v = g.at(i, c)) s += *v;
    return s;
}

Entry col_sum(const Grid& g, int j) {
    if (j < 1 || j > g.cols()) throw std::out_of_range("column index");
    Entry s = 0;
    for (int r = 1; r <= g.rows(); ++r)
        if (auto v = g.at(r, j)) s += *v;
    return s;
}

std::vector<Entry> row_sums(const Grid& g) {
    std::vector<Entry> out(g.rows(), 0);
    for (const auto& cell : g.cells()) out[cell.r - 1] += cell.v;
    return out;
}

std::vector<Entry> col_sums(const Grid& g) {
    std::vector<Entry> out(g.cols(), 0);
    for (const auto& cell : g.cells()) out[cell.c - 1] += cell.v;
    return out;
}

bool is_shiftable(const Grid& g) {
    std::vector<int> row(g.rows(), 0), col(g.cols(), 0);
    for (const auto& cell : g.cells()) {
        int d = cell.v > 0 ? 1 : (cell.v < 0 ? -1 : 0);
        row[cell.r - 1] += d;
        col[cell.c - 1] += d;
    }
    for (int x : row)
        if (x != 0) return false;
    for (int x : col)
        if (x != 0) return false;
    return true;
}

Grid shift(const Grid& g, Entry x) {
    if (x < 0) throw std::invalid_argument("shift amount must be nonnegative");
    if (!is_shiftable(g)) throw NotShiftable("shift of a non-shiftable array");
    Grid out(g.rows(), g.cols());
    for (const auto& cell : g.cells()) {
        Entry v = cell.v > 0 ? cell.v + x : (cell.v < 0 ? cell.v - x : 0);
        out.set(cell.r, cell.c, v);
    }
    return out;
}

Grid transpose(const Grid& g) {
    Grid out(g.cols(), g.rows());
    for (const auto& cell : g.cells()) out.set(cell.c, cell.r, cell.v);
    return out;
}

std::vector<Entry> entry_list(const Grid& g) {
    std::vector<Entry> out;
    out.reserve(g.filled_count());
    for (const auto& cell : g.cells()) out.push_back(cell.v);
    return out;
}

std::set<Entry> support(const Grid& g) {
    std::set<Entry> out;
    for (const auto& cell : g.cells()) out.insert(cell.v < 0 ? -cell.v : cell.v);
    return out;
}

Grid juxtapose(const std::vector<Grid>& blocks) {
    if (blocks.empty()) return Grid();
    int h = blocks.front().rows();
    int w = 0;
    for (const auto& b : blocks) {
        if (b.rows() != h) throw std::invalid_argument("juxtapose: height mismatch");
        if (b.filled_count() != static_cast<std::size_t>(b.rows()) * b.cols())
            throw std::invalid_argument("juxtapose: block not fully filled");
        w += b.cols();
    }
    Grid out(h, w);
    int off = 0;
    for (const auto& b : blocks) {
        for (const auto& cell : b.cells()) out.set(cell.r, cell.c + off, cell.v);
        off += b.cols();
    }
    return out;
}

Grid stack(const Grid& top, const Grid& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw std::invalid_argument("stack: width mismatch");
    Grid out(top.rows() + bottom.rows(), top.cols());
    for (const auto& cell : top.cells()) out.set(cell.r, cell.c, cell.v);
    for (const auto& cell : bottom.cells()) out.set(cell.r + top.rows(), cell.c, cell.v);
    return out;
}

std::vector<std::pair<int, int>> diagonal_cells(int m, int n, int i) {
    std::vector<std::pair<int, int>> out;
    out.reserve(m);
    for (int r = 1; r <= m; ++r) out.emplace_back(r, wrap(static_cast<long long>(i) + r - 1, n));
    return out;
}

}  // namespace heffter
