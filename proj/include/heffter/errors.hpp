#pragma once

#include <stdexcept>

namespace heffter {

// parameters outside every case the constructions cover
struct UnsupportedCase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a search ran out of nodes or time before deciding
struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a construction step could not complete (e.g. two blocks claim one cell)
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a constructed object failed its own verifier: a bug
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace heffter
