#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "heffter/blocks.hpp"
#include "heffter/grid.hpp"
#include "heffter/params.hpp"

namespace heffter {

struct SearchBudget {
    long long max_nodes = 10'000'000;
    double time_cap = 30.0;  // seconds

    // HEFFTER_ORACLE_BUDGET = "N" or "N:S"; falls back to the defaults
    static SearchBudget from_env();
    static SearchBudget parse(const std::string& text);
};

enum class SearchStatus { Found, NotFound, Exhausted };

std::string status_name(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<Grid> grid;
    long long nodes = 0;
};

struct PairSearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<NicePair> pair;
    long long nodes = 0;
};

// node/time accounting shared by the searches
class Meter {
public:
    explicit Meter(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}
    // false once the budget is spent
    bool tick();
    bool spent() const { return spent_; }
    long long nodes() const { return nodes_; }

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    long long nodes_ = 0;
    bool spent_ = false;
};

// Backtracking over cells in row-major order. The first filled cell is kept
// positive (solutions come in negated pairs).
SearchResult search_sma(int m, int n, int s, int k, const SearchBudget& budget);
SearchResult search_heffter(const HeffterParams& p, const SearchBudget& budget);

// mu = 1 pair of a/2 blocks of width c over [1, ac+floor(u/2)] minus the
// multiples of 2ac/u+1 up to floor(u/2). Throws std::invalid_argument when
// c is odd or below 4, a is odd, or u does not divide 2ac.
PairSearchResult search_nice_pair(int a, int c, int u, const SearchBudget& budget);

// SMA(n,n;s,s) from paired wrapped diagonals; s even, s < n
Grid square_sma(int n, int s);

}  // namespace heffter
