#include "heffter/verify.hpp"

#include <algorithm>
#include <map>

namespace heffter {

void Certificate::fail(std::string clause, std::string detail, int row, int col) {
    ok = false;
    ++total;
    if (violations.size() < kCap) violations.push_back({std::move(clause), std::move(detail), row, col});
}

bool Certificate::has(const std::string& clause) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.clause == clause; });
}

namespace {

std::string num(long long x) { return std::to_string(x); }

void check_fill(Certificate& cert, const Grid& g, int s, int k) {
    for (int r = 1; r <= g.rows(); ++r)
        if (int f = g.row_fill(r); f != s)
            cert.fail("a:row-fill", "row " + num(r) + " has " + num(f) + " cells, want " + num(s), r, 0);
    for (int c = 1; c <= g.cols(); ++c)
        if (int f = g.col_fill(c); f != k)
            cert.fail("a:col-fill", "column " + num(c) + " has " + num(f) + " cells, want " + num(k), 0, c);
}

void check_zero_sums(Certificate& cert, const Grid& g) {
    auto rs = row_sums(g);
    for (int r = 1; r <= g.rows(); ++r)
        if (rs[r - 1] != 0) cert.fail("c:row-sum", "row " + num(r) + " sums to " + num(rs[r - 1]), r, 0);
    auto cs = col_sums(g);
    for (int c = 1; c <= g.cols(); ++c)
        if (cs[c - 1] != 0) cert.fail("c:col-sum", "column " + num(c) + " sums to " + num(cs[c - 1]), 0, c);
}

Entry mod(Entry x, Entry v) { return ((x % v) + v) % v; }

}  // namespace

Certificate verify_sma(const Grid& g, int s, int k) {
    Certificate cert;
    check_fill(cert, g, s, k);
    const long long ms = static_cast<long long>(g.rows()) * s;
    std::map<Entry, int> count;
    for (const auto& cell : g.cells()) ++count[cell.v];
    std::map<Entry, int> want;
    if (ms % 2 == 1) {
        for (Entry x = -(ms - 1) / 2; x <= (ms - 1) / 2; ++x) want[x] = 1;
    } else {
        for (Entry x = 1; x <= ms / 2; ++x) want[x] = want[-x] = 1;
    }
    for (const auto& cell : g.cells()) {
        auto it = want.find(cell.v);
        if (it == want.end())
            cert.fail("b:entries", "entry " + num(cell.v) + " outside the value set", cell.r, cell.c);
        else if (count[cell.v] > 1 && it->second == 1) {
            cert.fail("b:entries", "entry " + num(cell.v) + " repeats " + num(count[cell.v]) + " times",
                      cell.r, cell.c);
            it->second = 0;  // report each value once
        }
    }
    for (const auto& [x, _] : want)
        if (!count.count(x)) cert.fail("b:entries", "value " + num(x) + " missing");
    check_zero_sums(cert, g);
    return cert;
}

Certificate verify_integer_heffter(const Grid& g, const HeffterParams& p) {
    Certificate cert;
    if (auto why = p.problem()) {
        cert.fail("params", *why);
        return cert;
    }
    if (g.rows() != p.m || g.cols() != p.n) {
        cert.fail("shape", "grid is " + num(g.rows()) + "x" + num(g.cols()) + ", want " + num(p.m) + "x" +
                               num(p.n));
        return cert;
    }
    check_fill(cert, g, p.s, p.k);
    const SupportSpec phi = phi_support(p);
    std::map<Entry, int> count;
    for (const auto& cell : g.cells()) {
        Entry a = cell.v < 0 ? -cell.v : cell.v;
        if (!phi.contains(a))
            cert.fail("b:entries", "entry " + num(cell.v) + " outside the support set", cell.r, cell.c);
        else
            ++count[a];
    }
    for (Entry x : phi.elements()) {
        int want = phi.multiplicity(x);
        int got = count.count(x) ? count[x] : 0;
        if (got != want)
            cert.fail("b:multiplicity", "±" + num(x) + " appears " + num(got) + " times, want " + num(want));
    }
    check_zero_sums(cert, g);
    return cert;
}

Certificate verify_cyclic_heffter(const Grid& g, const HeffterParams& p) {
    Certificate cert;
    if (auto why = p.problem()) {
        cert.fail("params", *why);
        return cert;
    }
    if (g.rows() != p.m || g.cols() != p.n) {
        cert.fail("shape", "grid is " + num(g.rows()) + "x" + num(g.cols()));
        return cert;
    }
    check_fill(cert, g, p.s, p.k);
    const Entry v = p.v(), l = p.ell();
    std::vector<int> hits(static_cast<std::size_t>(v), 0);
    for (const auto& cell : g.cells()) {
        Entry r = mod(cell.v, v);
        if (r % l == 0) {
            cert.fail("b:in-J", "entry " + num(cell.v) + " lies in the subgroup of order " + num(p.t), cell.r,
                      cell.c);
            continue;
        }
        ++hits[r];
        ++hits[mod(-r, v)];
    }
    for (Entry x = 1; x < v; ++x) {
        if (x % l == 0) continue;
        if (hits[x] != p.lambda)
            cert.fail("b:multiplicity", num(x) + " occurs " + num(hits[x]) + " times in E and -E, want " +
                                            num(p.lambda));
    }
    auto rs = row_sums(g);
    for (int r = 1; r <= g.rows(); ++r)
        if (mod(rs[r - 1], v) != 0) cert.fail("c:row-sum", "row " + num(r) + " is nonzero mod " + num(v), r, 0);
    auto cs = col_sums(g);
    for (int c = 1; c <= g.cols(); ++c)
        if (mod(cs[c - 1], v) != 0) cert.fail("c:col-sum", "column " + num(c) + " is nonzero mod " + num(v), 0, c);
    return cert;
}

Certificate verify_mr(const Grid& g, int s, int k) {
    Certificate cert;
    check_fill(cert, g, s, k);
    const long long ms = static_cast<long long>(g.rows()) * s;
    std::vector<int> seen(static_cast<std::size_t>(std::max<long long>(ms, 0)), 0);
    for (const auto& cell : g.cells()) {
        if (cell.v < 0 || cell.v >= ms)
            cert.fail("b:entries", "entry " + num(cell.v) + " outside [0,ms-1]", cell.r, cell.c);
        else if (++seen[cell.v] == 2)
            cert.fail("b:entries", "entry " + num(cell.v) + " repeats", cell.r, cell.c);
    }
    for (long long x = 0; x < ms; ++x)
        if (!seen[x]) cert.fail("b:entries", "value " + num(x) + " missing");
    // compare doubled sums so odd products are caught
    const long long c1x2 = s * (ms - 1), c2x2 = k * (ms - 1);
    auto rs = row_sums(g);
    for (int r = 1; r <= g.rows(); ++r)
        if (2 * rs[r - 1] != c1x2)
            cert.fail("c:row-sum", "row " + num(r) + " sums to " + num(rs[r - 1]), r, 0);
    auto cs = col_sums(g);
    for (int c = 1; c <= g.cols(); ++c)
        if (2 * cs[c - 1] != c2x2)
            cert.fail("c:col-sum", "column " + num(c) + " sums to " + num(cs[c - 1]), 0, c);
    return cert;
}

namespace {

// shared part of the paired/alternating conditions
bool check_blocks(Certificate& cert, const BlockSequence& seq, bool need_shiftable) {
    if (seq.empty()) return false;
    const int w = seq.front().cols();
    if (w % 2 != 0) {
        cert.fail("width", "odd block width " + num(w));
        return false;
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const Grid& g = seq[i].grid;
        const int idx = static_cast<int>(i) + 1;
        if (g.rows() != 2 || g.cols() != w) {
            cert.fail("width", "block " + num(idx) + " is " + num(g.rows()) + "x" + num(g.cols()), idx, 0);
            continue;
        }
        if (!need_shiftable) continue;
        if (g.filled_count() != static_cast<std::size_t>(2 * w))
            cert.fail("fill", "block " + num(idx) + " has empty cells", idx, 0);
        if (!is_shiftable(g)) cert.fail("shiftable", "block " + num(idx) + " is not shiftable", idx, 0);
        auto rs = row_sums(g);
        if (rs[0] != 0 || rs[1] != 0)
            cert.fail("row-sum", "block " + num(idx) + " rows sum to " + num(rs[0]) + "," + num(rs[1]), idx, 0);
    }
    return cert.ok;
}

void check_paired(Certificate& cert, const BlockSequence& seq) {
    const auto& sigma0 = seq.front().signature;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto& sig = seq[i].signature;
        const int idx = static_cast<int>(i) + 1;
        for (std::size_t j = 0; j + 1 < sig.size(); j += 2) {
            if (sig[j] != -sig[j + 1])
                cert.fail("col-pair", "block " + num(idx) + " columns " + num(j + 1) + "," + num(j + 2) +
                                          " sum to " + num(sig[j]) + "," + num(sig[j + 1]),
                          idx, static_cast<int>(j) + 1);
            else if (sig[j] != sigma0[j])
                cert.fail("common-sigma", "block " + num(idx) + " column " + num(j + 1) + " sums to " +
                                              num(sig[j]) + ", first block has " + num(sigma0[j]),
                          idx, static_cast<int>(j) + 1);
        }
    }
}

}  // namespace

Certificate verify_blocchi(const BlockSequence& seq) {
    Certificate cert;
    if (!check_blocks(cert, seq, true)) return cert;
    check_paired(cert, seq);
    return cert;
}

Certificate verify_blocchiOLD(const BlockSequence& seq) {
    Certificate cert;
    if (!check_blocks(cert, seq, true)) return cert;
    const auto& sigma0 = seq.front().signature;
    Entry odd = 0, even = 0;
    for (std::size_t j = 0; j < sigma0.size(); ++j) (j % 2 == 0 ? odd : even) += sigma0[j];
    if (odd != 0 || even != 0)
        cert.fail("alternating", "alternating column sums are " + num(odd) + "," + num(even));
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i].signature != sigma0)
            cert.fail("common-sigma", "block " + num(i + 1) + " has different column sums",
                      static_cast<int>(i) + 1, 0);
    return cert;
}

Certificate verify_blocchi2(const BlockSequence& seq) {
    Certificate cert;
    if (!check_blocks(cert, seq, false)) return cert;
    check_paired(cert, seq);
    return cert;
}

Certificate verify_nice_pair(const NicePair& pair) {
    Certificate cert;
    if (pair.b1.size() != pair.b2.size()) {
        cert.fail("length", "sequences have lengths " + num(pair.b1.size()) + " and " + num(pair.b2.size()));
        return cert;
    }
    if (pair.b1.empty()) {
        cert.fail("length", "empty sequences");
        return cert;
    }
    for (const auto& v : verify_blocchi(pair.b1).violations) cert.fail("first:" + v.clause, v.detail, v.row, v.col);
    for (const auto& v : verify_blocchiOLD(pair.b2).violations)
        cert.fail("second:" + v.clause, v.detail, v.row, v.col);
    for (std::size_t i = 0; i < pair.b1.size(); ++i) {
        auto e1 = entry_list(pair.b1[i].grid), e2 = entry_list(pair.b2[i].grid);
        std::sort(e1.begin(), e1.end());
        std::sort(e2.begin(), e2.end());
        if (e1 != e2)
            cert.fail("match", "block " + num(i + 1) + " entry lists differ", static_cast<int>(i) + 1, 0);
    }
    return cert;
}

}  // namespace heffter
