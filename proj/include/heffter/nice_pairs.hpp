#pragma once

#include <vector>

#include "heffter/blocks.hpp"
#include "heffter/oracle.hpp"
#include "heffter/params.hpp"

namespace heffter {

// lambda = lambda1 * lambda2 with lambda1 | m/2 and lambda2 | 2s
struct Factorization {
    int lambda1 = 1;
    int lambda2 = 1;
    bool operator==(const Factorization&) const = default;
};

// every valid factorization, best first: even lambda2 other than 2 (smallest
// first), then s/2, then 2, then the remaining odd ones (largest first)
std::vector<Factorization> factorizations(int lambda, int m, int s);
// first entry of factorizations(); throws ParamError when there is none
Factorization choose_factorization(int lambda, int m, int s);

// [1, ms/lambda + floor(t/2)] minus the multiples of ell, ascending
std::vector<Entry> phi_elements(int m, int s, int lambda, int t);

// All of these throw ParamError when the hypotheses do not hold and
// ConstructionError when the result fails its own check.
NicePair nice_pair_s_half(int m, int s, int lambda1, int t);
NicePair nice_pair_2mod4_ge6(int m, int s, int lambda1, int lambda2, int t);
NicePair nice_pair_lambda2(int m, int s, int lambda1, int t);
NicePair nice_pair_mod4(int m, int s, int lambda1, int lambda2, int t);
// mu = 1 pair from the oracle, each block repeated lambda2 times side by
// side. Throws BudgetExhausted.
NicePair nice_pair_odd(int m, int s, int lambda1, int lambda2, int t,
                       const SearchBudget& budget = SearchBudget::from_env());
// lambda does not divide ms; length m/2, half element at lambda/2
NicePair nice_pair_not_dividing(int m, int s, int lambda, int t);

// Pair for (m, s, lambda, t); tries the factorizations in order.
NicePair nice_pair(int m, int s, int lambda, int t,
                   const SearchBudget& budget = SearchBudget::from_env());
NicePair nice_pair(const HeffterParams& p, const SearchBudget& budget = SearchBudget::from_env());

}  // namespace heffter
