#pragma once

#include <string>
#include <vector>

#include "heffter/blocks.hpp"
#include "heffter/grid.hpp"
#include "heffter/params.hpp"

namespace heffter {

// row/col are 0 when the violation is not tied to one
struct Violation {
    std::string clause;
    std::string detail;
    int row = 0;
    int col = 0;
};

struct Certificate {
    static constexpr std::size_t kCap = 16;

    bool ok = true;
    std::vector<Violation> violations;
    std::size_t total = 0;  // including the ones dropped past the cap

    void fail(std::string clause, std::string detail, int row = 0, int col = 0);
    // first violated clause, empty if ok
    std::string first_clause() const { return violations.empty() ? "" : violations.front().clause; }
    bool has(const std::string& clause) const;
};

// empty ring {0, ±1, ..}: every value once, s per row, k per column, zero sums
Certificate verify_sma(const Grid& g, int s, int k);
Certificate verify_integer_heffter(const Grid& g, const HeffterParams& p);
// entries read in Z_v
Certificate verify_cyclic_heffter(const Grid& g, const HeffterParams& p);
// entries 0..ms-1 once, constant row sum s(ms-1)/2, column sum k(ms-1)/2
Certificate verify_mr(const Grid& g, int s, int k);

Certificate verify_blocchi(const BlockSequence& seq);
Certificate verify_blocchiOLD(const BlockSequence& seq);
Certificate verify_blocchi2(const BlockSequence& seq);
Certificate verify_nice_pair(const NicePair& pair);

}  // namespace heffter
