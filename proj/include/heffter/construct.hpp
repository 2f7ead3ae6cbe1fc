#pragma once

#include "heffter/grid.hpp"
#include "heffter/oracle.hpp"
#include "heffter/params.hpp"

namespace heffter {

// 1..4 for the covered residue cases, 0 otherwise:
// 1: s,k = 0; 2: s = 2, k = 0; 3: s = 0, k = 2; 4: s,k = 2 with m,n even
int covered_case(int m, int n, int s, int k);

// Verified, shiftable integer lambda-fold array. Throws ParamError for
// invalid tuples, UnsupportedCase outside the four cases, BudgetExhausted
// from searched pieces, InternalError if the result fails its verifier.
Grid construct_heffter(const HeffterParams& p, const SearchBudget& budget = SearchBudget::from_env());

// SMA(m,n;s,k) for even s,k >= 4. Shiftable unless s,k = 2 (mod 4) with m,n odd.
Grid construct_sma(int m, int n, int s, int k, const SearchBudget& budget = SearchBudget::from_env());

// negatives x -> x + ms/2, positives y -> y + ms/2 - 1.
// Throws std::invalid_argument unless g is a shiftable SMA(m,n;s,k).
Grid mr_from_sma(const Grid& g, int s, int k);

// MR(m,n;s,k) in the four covered cases; UnsupportedCase otherwise
Grid construct_mr(int m, int n, int s, int k, const SearchBudget& budget = SearchBudget::from_env());

}  // namespace heffter
