#pragma once

#include <map>
#include <string>

#include "heffter/grid.hpp"
#include "heffter/io.hpp"

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "tests/fixtures"
#endif

namespace testing {

inline heffter::Grid fixture(const std::string& name) {
    return heffter::read_grid_file(std::string(FIXTURE_DIR) + "/" + name + ".json");
}

// Reference checks written from the definitions alone, sharing no code with
// the library verifiers.
struct Lines {
    std::map<int, long long> row_sum, col_sum;
    std::map<int, int> row_fill, col_fill;
};

inline Lines lines(const heffter::Grid& g) {
    Lines l;
    for (int r = 1; r <= g.rows(); ++r)
        for (int c = 1; c <= g.cols(); ++c)
            if (auto v = g.at(r, c)) {
                l.row_sum[r] += *v;
                l.col_sum[c] += *v;
                ++l.row_fill[r];
                ++l.col_fill[c];
            }
    return l;
}

inline bool fills_ok(const heffter::Grid& g, int s, int k) {
    auto l = lines(g);
    for (int r = 1; r <= g.rows(); ++r)
        if (l.row_fill[r] != s) return false;
    for (int c = 1; c <= g.cols(); ++c)
        if (l.col_fill[c] != k) return false;
    return true;
}

inline bool sums_equal(const heffter::Grid& g, long long rs, long long cs) {
    auto l = lines(g);
    for (int r = 1; r <= g.rows(); ++r)
        if (l.row_sum[r] != rs) return false;
    for (int c = 1; c <= g.cols(); ++c)
        if (l.col_sum[c] != cs) return false;
    return true;
}

// every integer in [lo, hi] except 0 (when skip_zero) exactly once
inline bool entries_are(const heffter::Grid& g, long long lo, long long hi, bool skip_zero) {
    std::map<long long, int> seen;
    for (int r = 1; r <= g.rows(); ++r)
        for (int c = 1; c <= g.cols(); ++c)
            if (auto v = g.at(r, c)) ++seen[*v];
    for (long long x = lo; x <= hi; ++x) {
        if (skip_zero && x == 0) continue;
        if (seen[x] != 1) return false;
        seen.erase(x);
    }
    for (const auto& [x, c] : seen)
        if (c != 0) return false;
    return true;
}

// values 0, +-1, .., +-floor(ms/2); 0 only when ms is odd
inline bool reference_sma(const heffter::Grid& g, int s, int k) {
    const long long ms = static_cast<long long>(g.rows()) * s;
    return fills_ok(g, s, k) && sums_equal(g, 0, 0) && entries_are(g, -ms / 2, ms / 2, ms % 2 == 0);
}

inline bool reference_mr(const heffter::Grid& g, int s, int k) {
    const long long ms = static_cast<long long>(g.rows()) * s;
    return fills_ok(g, s, k) && sums_equal(g, s * (ms - 1) / 2, k * (ms - 1) / 2) && entries_are(g, 0, ms - 1, false);
}

// integer lambda-fold array: |x| in [1, t*ell/2] minus multiples of ell up to
// (t/2)*ell, lambda times each (lambda/2 for t*ell/2 when ell even, t odd)
inline bool reference_heffter(const heffter::Grid& g, int s, int k, int lambda, int t) {
    const long long m = g.rows(), ms = m * s;
    if (2 * ms % lambda || (2 * ms / lambda) % t) return false;
    const long long ell = 2 * ms / lambda / t + 1;
    if (!fills_ok(g, s, k) || !sums_equal(g, 0, 0)) return false;
    std::map<long long, int> count;
    for (int r = 1; r <= g.rows(); ++r)
        for (int c = 1; c <= g.cols(); ++c)
            if (auto v = g.at(r, c)) ++count[*v < 0 ? -*v : *v];
    const long long top = t * ell / 2;
    for (long long x = 1; x <= top; ++x) {
        const bool skipped = x % ell == 0 && x / ell <= t / 2;
        int want = skipped ? 0 : lambda;
        if (!skipped && ell % 2 == 0 && t % 2 == 1 && x == top) want = lambda / 2;
        if (count[x] != want) return false;
        count.erase(x);
    }
    for (const auto& [x, c] : count)
        if (c != 0) return false;
    return true;
}

inline bool reference_shiftable(const heffter::Grid& g) {
    std::map<int, int> rb, cb;
    for (int r = 1; r <= g.rows(); ++r)
        for (int c = 1; c <= g.cols(); ++c)
            if (auto v = g.at(r, c)) {
                rb[r] += *v > 0 ? 1 : -1;
                cb[c] += *v > 0 ? 1 : -1;
            }
    for (const auto& [_, b] : rb)
        if (b) return false;
    for (const auto& [_, b] : cb)
        if (b) return false;
    return true;
}

}  // namespace testing
