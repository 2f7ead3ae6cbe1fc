#include "heffter/construct.hpp"

#include <stdexcept>
#include <string>

#include "heffter/assembly.hpp"
#include "heffter/errors.hpp"
#include "heffter/s0k0.hpp"
#include "heffter/verify.hpp"

namespace heffter {

namespace {

std::string shape_str(int m, int n, int s, int k) {
    return "(" + std::to_string(m) + "," + std::to_string(n) + ";" + std::to_string(s) + "," + std::to_string(k) + ")";
}

void check_sma_shape(int m, int n, int s, int k) {
    const std::string at = shape_str(m, n, s, k);
    if (s < 4 || k < 4 || s > n || k > m) throw ParamError(at + ": need 4 <= s <= n and 4 <= k <= m");
    if (static_cast<long long>(m) * s != static_cast<long long>(n) * k) throw ParamError(at + ": need ms = nk");
    if (s % 2 != 0 || k % 2 != 0) throw UnsupportedCase(at + ": only even s and k are covered");
}

void expect(const Certificate& cert, const std::string& what) {
    if (!cert.ok)
        throw InternalError(what + " failed its verifier: " + cert.violations.front().clause + " (" +
                            cert.violations.front().detail + ")");
}

}  // namespace

int covered_case(int m, int n, int s, int k) {
    const int a = s % 4, b = k % 4;
    if (a == 0 && b == 0) return 1;
    if (a == 2 && b == 0) return 2;
    if (a == 0 && b == 2) return 3;
    if (a == 2 && b == 2 && m % 2 == 0 && n % 2 == 0) return 4;
    return 0;
}

Grid construct_heffter(const HeffterParams& p, const SearchBudget& budget) {
    if (auto why = p.problem()) throw ParamError(p.str() + ": " + *why);
    Grid g;
    switch (covered_case(p.m, p.n, p.s, p.k)) {
        case 1: g = construct_s0k0(p); break;
        case 2: g = construct_s2k0(p, budget); break;
        case 3: g = construct_k2s0(p, budget); break;
        case 4: g = construct_sk2_even(p, budget); break;
        default:
            if (p.s % 4 == 2 && p.k % 4 == 2)
                throw UnsupportedCase(p.str() + ": s,k = 2 (mod 4) with m,n odd is open");
            throw UnsupportedCase(p.str() + ": s or k is odd");
    }
    expect(verify_integer_heffter(g, p), p.str());
    if (!is_shiftable(g)) throw InternalError(p.str() + " is not shiftable");
    return g;
}

Grid construct_sma(int m, int n, int s, int k, const SearchBudget& budget) {
    check_sma_shape(m, n, s, k);
    Grid g;
    if (covered_case(m, n, s, k) != 0) {
        g = construct_heffter(HeffterParams::make(m, n, s, k, 2, 1), budget);
    } else if (m < n) {
        g = transpose(construct_sma(n, m, k, s, budget));
    } else {
        // square seed on top, the remaining k - s = 0 (mod 4) part below
        g = square_sma(n, s);
        if (m > n) {
            Grid lower = construct_heffter(HeffterParams::make(m - n, n, s, k - s, 2, 1), budget);
            g = stack(g, shift(lower, static_cast<Entry>(n) * s / 2));
        }
    }
    expect(verify_sma(g, s, k), "SMA" + shape_str(m, n, s, k));
    return g;
}

Grid mr_from_sma(const Grid& g, int s, int k) {
    if (!verify_sma(g, s, k).ok) throw std::invalid_argument("input is not an SMA with these fill counts");
    if (!is_shiftable(g)) throw std::invalid_argument("input SMA is not shiftable");
    const Entry half = static_cast<Entry>(g.rows()) * s / 2;
    Grid out(g.rows(), g.cols());
    for (const auto& cell : g.cells()) out.set(cell.r, cell.c, cell.v < 0 ? cell.v + half : cell.v + half - 1);
    return out;
}

Grid construct_mr(int m, int n, int s, int k, const SearchBudget& budget) {
    check_sma_shape(m, n, s, k);
    if (covered_case(m, n, s, k) == 0)
        throw UnsupportedCase("MR" + shape_str(m, n, s, k) + ": s,k = 2 (mod 4) needs m and n even");
    Grid g = mr_from_sma(construct_sma(m, n, s, k, budget), s, k);
    expect(verify_mr(g, s, k), "MR" + shape_str(m, n, s, k));
    return g;
}

}  // namespace heffter
