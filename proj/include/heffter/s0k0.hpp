#pragma once

#include <string>
#include <vector>

#include "heffter/blocks.hpp"
#include "heffter/params.hpp"

namespace heffter {

// Block j (0-based) is B±offsets[j], its top-left entry landing on
// (j+1, 4q_j+j+1) with q_j = j / lcm(m,n), indices wrapped.
struct PlacementPlan {
    std::vector<Entry> offsets;
};

struct S0k0Plan {
    Block block;
    PlacementPlan plan;
    std::vector<Entry> base;  // the distinct offsets X before repetition
    int copies = 1;
    std::string recipe;
};

std::pair<int, int> anchor(int m, int n, long long j);

// throws ConstructionError on a cell collision
Grid place_blocks(int m, int n, const Block& block, const PlacementPlan& plan);

// throws ParamError unless s,k are multiples of 4; throws ConstructionError if
// the offsets do not cover the support set with the right multiplicities
S0k0Plan build_plan(const HeffterParams& p);

Grid construct_s0k0(const HeffterParams& p);

}  // namespace heffter
