#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heffter/grid.hpp"

namespace heffter {

struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// (m,n,s,k,lambda,t) for an integer lambda-fold relative Heffter array.
struct HeffterParams {
    int m = 0, n = 0, s = 0, k = 0;
    int lambda = 1;
    int t = 1;

    // validated constructor; throws ParamError
    static HeffterParams make(int m, int n, int s, int k, int lambda, int t);
    // empty when valid, otherwise the first broken condition
    std::optional<std::string> problem() const;

    long long ms() const { return static_cast<long long>(m) * s; }
    long long v() const { return 2 * ms() / lambda + t; }
    long long ell() const { return v() / t; }
    bool lambda_divides_ms() const { return ms() % lambda == 0; }

    // the same array read column-wise: (n,m,k,s)
    HeffterParams transposed() const { return {n, m, k, s, lambda, t}; }

    std::string str() const;
    bool operator==(const HeffterParams&) const = default;
};

// Phi = [1, floor(t*ell/2)] minus the multiples of ell up to floor(t/2)*ell.
struct SupportSpec {
    Entry base_max = 0;
    std::vector<Entry> excluded;
    std::optional<Entry> half_element;
    int full_multiplicity = 0;
    int half_multiplicity = 0;

    std::vector<Entry> elements() const;
    bool contains(Entry x) const;
    // how often |x| must occur; 0 outside Phi
    int multiplicity(Entry x) const;
    // number of filled cells the support accounts for
    long long cell_count() const;
};

SupportSpec phi_support(const HeffterParams& p);

// every valid tuple with m,n in [1,max_m]x[1,max_n]; used by sweeps and tests
std::vector<HeffterParams> enumerate_params(int max_m, int max_n);

std::vector<int> divisors(long long x);

}  // namespace heffter
