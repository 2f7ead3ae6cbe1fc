#include "heffter/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <unordered_map>

#include "heffter/verify.hpp"

namespace heffter {

SearchBudget SearchBudget::parse(const std::string& text) {
    SearchBudget b;
    auto colon = text.find(':');
    try {
        long long nodes = std::stoll(text.substr(0, colon));
        if (nodes <= 0) throw std::invalid_argument("node budget must be positive");
        b.max_nodes = nodes;
        if (colon != std::string::npos) {
            double secs = std::stod(text.substr(colon + 1));
            if (secs <= 0) throw std::invalid_argument("time budget must be positive");
            b.time_cap = secs;
        }
    } catch (const std::logic_error&) {
        throw std::invalid_argument("budget must look like N or N:S, got '" + text + "'");
    }
    return b;
}

SearchBudget SearchBudget::from_env() {
    const char* env = std::getenv("HEFFTER_ORACLE_BUDGET");
    if (!env || !*env) return {};
    try {
        return parse(env);
    } catch (const std::invalid_argument&) {
        return {};
    }
}

std::string status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NotFound: return "not-found";
        case SearchStatus::Exhausted: return "exhausted";
    }
    return "?";
}

bool Meter::tick() {
    if (spent_) return false;
    ++nodes_;
    if (nodes_ > budget_.max_nodes) spent_ = true;
    if ((nodes_ & 4095) == 0) {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
        if (dt.count() > budget_.time_cap) spent_ = true;
    }
    return !spent_;
}

namespace {

// Shared cell-by-cell search. Values are tried by |v| then sign; each value
// key has a capacity (SMA: signed value once; Heffter: |v| mult times).
class CellSearch {
public:
    CellSearch(int m, int n, int s, int k, std::vector<Entry> values, std::map<Entry, int> cap, bool by_abs,
               const SearchBudget& budget)
        : m_(m), n_(n), s_(s), k_(k), values_(std::move(values)), by_abs_(by_abs), dense_(s == n && k == m),
          meter_(budget), g_(m, n) {
        for (const auto& [key, c] : cap) {
            key_index_[key] = static_cast<int>(left_.size());
            left_.push_back(c);
        }
        for (Entry v : values_) value_key_.push_back(key_index_.at(key(v)));
        row_fill_.assign(m + 1, 0);
        col_fill_.assign(n + 1, 0);
        row_sum_.assign(m + 1, 0);
        col_sum_.assign(n + 1, 0);
    }

    SearchResult run() {
        SearchResult res;
        if (s_ < 0 || k_ < 0 || s_ > n_ || k_ > m_ || static_cast<long long>(m_) * s_ != static_cast<long long>(n_) * k_) {
            res.status = SearchStatus::NotFound;
            return res;
        }
        long long cells = static_cast<long long>(m_) * s_, supply = 0;
        for (int c : left_) supply += c;
        if (supply != cells) {
            res.status = SearchStatus::NotFound;
            return res;
        }
        bool found = m_ == 0 || n_ == 0 ? true : go(1, 1);
        res.nodes = meter_.nodes();
        if (found) {
            res.status = SearchStatus::Found;
            res.grid = g_;
        } else {
            res.status = meter_.spent() ? SearchStatus::Exhausted : SearchStatus::NotFound;
        }
        return res;
    }

private:
    Entry key(Entry v) const { return by_abs_ && v < 0 ? -v : v; }

    // can a line with `need` more cells and current sum `sum` still reach 0,
    // using the largest free values of the opposite sign
    bool reachable(Entry sum, int need) const {
        if (need == 0) return sum == 0;
        if (sum == 0) return true;
        Entry room = 0;
        int taken = 0;
        for (std::size_t i = values_.size(); i-- > 0 && taken < need;) {
            const Entry v = values_[i];
            if ((v < 0) != (sum > 0) || v == 0 || left_[value_key_[i]] == 0) continue;
            const int copies = std::min(left_[value_key_[i]], need - taken);
            room += (v < 0 ? -v : v) * copies;
            taken += copies;
        }
        return (sum < 0 ? -sum : sum) <= room;
    }

    // in a full array rows and columns may be permuted freely: keep row 1
    // decreasing and column 1 decreasing below it
    bool ordered(int r, int c, Entry v) const {
        if (!dense_) return true;
        if (r == 1 && c > 1) return v < *g_.at(1, c - 1);
        if (c == 1 && r > 2) return v < *g_.at(r - 1, 1);
        return true;
    }

    bool go(int r, int c) {
        if (c > n_) {
            if (row_fill_[r] != s_ || row_sum_[r] != 0) return false;
            if (r == m_) return true;
            return go(r + 1, 1);
        }
        if (!meter_.tick()) return false;
        const int row_cells_left = n_ - c + 1;  // including this one
        const int col_cells_left = m_ - r + 1;
        const int row_need = s_ - row_fill_[r];
        const int col_need = k_ - col_fill_[c];
        const bool last_row = r == m_;

        const bool may_skip = row_need < row_cells_left && col_need < col_cells_left;
        const bool may_fill = row_need > 0 && col_need > 0;

        if (may_fill) {
            // a value that completes a line is forced
            std::optional<Entry> forced;
            bool clash = false;
            if (row_need == 1) forced = -row_sum_[r];
            if (col_need == 1) {
                Entry f = -col_sum_[c];
                clash = forced && *forced != f;
                forced = f;
            }
            for (std::size_t i = 0; i < values_.size() && !clash; ++i) {
                Entry v = values_[i];
                if (forced && v != *forced) continue;
                int kid = value_key_[i];
                if (left_[kid] == 0) continue;
                if (!first_placed_ && v < 0) continue;
                if (!ordered(r, c, v)) continue;
                place(r, c, v, kid);
                bool ok = reachable(row_sum_[r], s_ - row_fill_[r]) && reachable(col_sum_[c], k_ - col_fill_[c]);
                if (ok && last_row && col_fill_[c] == k_ && col_sum_[c] != 0) ok = false;
                if (ok && go(r, c + 1)) return true;
                unplace(r, c, v, kid);
                if (meter_.spent()) return false;
            }
        }
        if (may_skip) {
            if (last_row && (col_fill_[c] != k_ || col_sum_[c] != 0)) return false;
            return go(r, c + 1);
        }
        return false;
    }

    void place(int r, int c, Entry v, int kid) {
        g_.set(r, c, v);
        --left_[kid];
        ++row_fill_[r];
        ++col_fill_[c];
        row_sum_[r] += v;
        col_sum_[c] += v;
        if (!first_placed_) first_cell_ = {r, c}, first_placed_ = true;
    }

    void unplace(int r, int c, Entry v, int kid) {
        g_.clear(r, c);
        ++left_[kid];
        --row_fill_[r];
        --col_fill_[c];
        row_sum_[r] -= v;
        col_sum_[c] -= v;
        if (first_placed_ && first_cell_ == std::make_pair(r, c)) first_placed_ = false;
    }

    int m_, n_, s_, k_;
    std::vector<Entry> values_;
    bool by_abs_;
    bool dense_;
    Meter meter_;
    Grid g_;
    std::map<Entry, int> key_index_;
    std::vector<int> left_;
    std::vector<int> value_key_;
    std::vector<int> row_fill_, col_fill_;
    std::vector<Entry> row_sum_, col_sum_;
    bool first_placed_ = false;
    std::pair<int, int> first_cell_{0, 0};
};

std::vector<Entry> signed_values(Entry max_abs, bool zero) {
    std::vector<Entry> out;
    if (zero) out.push_back(0);
    for (Entry x = 1; x <= max_abs; ++x) {
        out.push_back(x);
        out.push_back(-x);
    }
    return out;
}

}  // namespace

namespace {

// Full arrays: anneal over value swaps, cost = sum of |line sums|. Seeded,
// so the result is reproducible.
std::optional<Grid> anneal_full(int m, int n, std::vector<Entry> values, Meter& meter) {
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int cells = m * n;
    std::vector<Entry> row(m), col(n);
    while (!meter.spent()) {
        std::shuffle(values.begin(), values.end(), rng);
        std::fill(row.begin(), row.end(), 0);
        std::fill(col.begin(), col.end(), 0);
        for (int i = 0; i < cells; ++i) {
            row[i / n] += values[i];
            col[i % n] += values[i];
        }
        Entry cost = 0;
        for (Entry x : row) cost += x < 0 ? -x : x;
        for (Entry x : col) cost += x < 0 ? -x : x;
        double temp = 2.0;
        for (long long step = 0; step < 200000 && cost > 0; ++step) {
            if (!meter.tick()) return std::nullopt;
            const int i = static_cast<int>(rng() % cells), j = static_cast<int>(rng() % cells);
            const Entry d = values[j] - values[i];
            if (d == 0) continue;
            const int ri = i / n, ci = i % n, rj = j / n, cj = j % n;
            auto line = [](Entry before, Entry after) { return (after < 0 ? -after : after) - (before < 0 ? -before : before); };
            Entry delta = 0;
            if (ri != rj) delta += line(row[ri], row[ri] + d) + line(row[rj], row[rj] - d);
            if (ci != cj) delta += line(col[ci], col[ci] + d) + line(col[cj], col[cj] - d);
            if (delta <= 0 || unit(rng) < std::exp(-static_cast<double>(delta) / temp)) {
                if (ri != rj) row[ri] += d, row[rj] -= d;
                if (ci != cj) col[ci] += d, col[cj] -= d;
                std::swap(values[i], values[j]);
                cost += delta;
            }
            temp = std::max(0.05, temp * 0.99995);
        }
        if (cost == 0) {
            Grid g(m, n);
            for (int i = 0; i < cells; ++i) g.set(i / n + 1, i % n + 1, values[i]);
            return g;
        }
    }
    return std::nullopt;
}

}  // namespace

SearchResult search_sma(int m, int n, int s, int k, const SearchBudget& budget) {
    const long long ms = static_cast<long long>(m) * s;
    const bool odd = ms % 2 == 1;
    const Entry top = odd ? (ms - 1) / 2 : ms / 2;
    auto values = signed_values(top, odd);
    std::map<Entry, int> cap;
    for (Entry v : values) cap[v] = 1;
    const bool full = s == n && k == m && m > 0 && n > 0;
    if (!full) {
        CellSearch search(m, n, s, k, values, cap, false, budget);
        return search.run();
    }
    // exact search first: it settles the tiny cases either way
    SearchBudget first = budget;
    first.max_nodes = std::min<long long>(budget.max_nodes, 200'000);
    CellSearch search(m, n, s, k, values, cap, false, first);
    SearchResult res = search.run();
    if (res.status != SearchStatus::Exhausted) return res;
    SearchBudget rest = budget;
    rest.max_nodes = std::max<long long>(budget.max_nodes - res.nodes, 0);
    Meter meter(rest);
    auto grid = anneal_full(m, n, values, meter);
    res.nodes += meter.nodes();
    if (grid) {
        res.status = SearchStatus::Found;
        res.grid = std::move(grid);
    }
    return res;
}

SearchResult search_heffter(const HeffterParams& p, const SearchBudget& budget) {
    const SupportSpec phi = phi_support(p);
    std::vector<Entry> values;
    std::map<Entry, int> cap;
    for (Entry x : phi.elements()) {
        values.push_back(x);
        values.push_back(-x);
        cap[x] = phi.multiplicity(x);
    }
    CellSearch search(p.m, p.n, p.s, p.k, values, cap, true, budget);
    return search.run();
}

// ---- mu = 1 nice pairs ----
//
// Each block is cut into units of width 4 (plus one of width 6 when c/2 is
// odd). Every unit shape is enumerated exhaustively: sign pattern, then the
// positive/negative matching and the top-row choice. A unit type gets one
// column-sum key shared by all its shapes, so the blocks agree on sums.

namespace {

using Columns = std::vector<std::pair<Entry, Entry>>;  // (top, bottom)

struct UnitKey {
    std::vector<Entry> paired;     // |sums| of the (d,-d) column pairs, sorted
    std::vector<Entry> odd, even;  // alternating layout: sums at odd / even columns
    auto operator<=>(const UnitKey&) const = default;
};

struct UnitLayout {
    Columns b1, b2;
};

using Catalog = std::map<UnitKey, UnitLayout>;

constexpr std::size_t kKeysPerPattern = 64;

std::vector<std::vector<int>> half_subsets(int w, bool with_first) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << w); ++mask) {
        if (std::popcount(mask) != w / 2) continue;
        if (with_first && !(mask & 1u)) continue;
        std::vector<int> s;
        for (int j = 0; j < w; ++j)
            if (mask & (1u << j)) s.push_back(j);
        out.push_back(s);
    }
    return out;
}

Catalog enumerate_unit(const std::vector<Entry>& elems, Meter& meter) {
    const int n = static_cast<int>(elems.size()), w = n / 2;
    const auto tops = half_subsets(w, false);
    const auto classes = half_subsets(w, true);
    Catalog out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != w) continue;
        std::vector<Entry> P, N;
        Entry sum = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                P.push_back(elems[i]);
                sum += elems[i];
            } else {
                N.push_back(elems[i]);
                sum -= elems[i];
            }
        }
        if (sum != 0) continue;
        std::map<std::vector<Entry>, Columns> firsts;
        std::map<std::pair<std::vector<Entry>, std::vector<Entry>>, Columns> seconds;
        std::vector<int> perm(w);
        for (int j = 0; j < w; ++j) perm[j] = j;
        do {
            if (!meter.tick()) return out;
            std::vector<Entry> d(w);
            for (int j = 0; j < w; ++j) d[j] = P[j] - N[perm[j]];
            const std::vector<int>* top = nullptr;
            for (const auto& s : tops) {
                Entry t = 0;
                std::vector<bool> up(w, false);
                for (int j : s) up[j] = true;
                for (int j = 0; j < w; ++j) t += up[j] ? P[j] : -N[perm[j]];
                if (t == 0) {
                    top = &s;
                    break;
                }
            }
            if (!top) continue;
            std::vector<bool> up(w, false);
            for (int j : *top) up[j] = true;
            auto column = [&](int j) {
                return up[j] ? std::make_pair(P[j], -N[perm[j]]) : std::make_pair(-N[perm[j]], P[j]);
            };
            // paired layout: each +d column next to a -d column
            {
                std::vector<int> pos, neg;
                for (int j = 0; j < w; ++j) (d[j] > 0 ? pos : neg).push_back(j);
                std::sort(pos.begin(), pos.end(), [&](int x, int y) { return d[x] < d[y]; });
                std::sort(neg.begin(), neg.end(), [&](int x, int y) { return d[x] > d[y]; });
                bool ok = pos.size() == neg.size();
                for (std::size_t i = 0; ok && i < pos.size(); ++i) ok = d[pos[i]] == -d[neg[i]];
                if (ok) {
                    std::vector<Entry> key;
                    for (int j : pos) key.push_back(d[j]);
                    if (!firsts.count(key)) {
                        Columns cols;
                        for (std::size_t i = 0; i < pos.size(); ++i) {
                            cols.push_back(column(pos[i]));
                            cols.push_back(column(neg[i]));
                        }
                        firsts.emplace(std::move(key), std::move(cols));
                    }
                }
            }
            // alternating layout: two zero-sum halves on odd and even columns
            for (const auto& cls : classes) {
                std::vector<bool> inA(w, false);
                for (int j : cls) inA[j] = true;
                Entry sa = 0;
                for (int j : cls) sa += d[j];
                if (sa != 0) continue;
                std::vector<int> A(cls), B;
                for (int j = 0; j < w; ++j)
                    if (!inA[j]) B.push_back(j);
                auto by_d = [&](int x, int y) { return d[x] < d[y]; };
                std::sort(A.begin(), A.end(), by_d);
                std::sort(B.begin(), B.end(), by_d);
                std::vector<Entry> ka, kb;
                for (int j : A) ka.push_back(d[j]);
                for (int j : B) kb.push_back(d[j]);
                if (kb < ka) {
                    std::swap(ka, kb);
                    std::swap(A, B);
                }
                auto key = std::make_pair(ka, kb);
                if (seconds.count(key)) continue;
                Columns cols;
                for (std::size_t i = 0; i < A.size(); ++i) {
                    cols.push_back(column(A[i]));
                    cols.push_back(column(B[i]));
                }
                seconds.emplace(std::move(key), std::move(cols));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::size_t i1 = 0;
        for (const auto& [k1, c1] : firsts) {
            if (i1++ == kKeysPerPattern) break;
            std::size_t i2 = 0;
            for (const auto& [k2, c2] : seconds) {
                if (i2++ == kKeysPerPattern) break;
                out.emplace(UnitKey{k1, k2.first, k2.second}, UnitLayout{c1, c2});
            }
        }
    }
    return out;
}

// Cut the sorted support into consecutive pieces of the given sizes, each
// with an even sum; an odd piece trades an element with a later one of the
// other parity.
std::optional<std::vector<std::vector<Entry>>> even_pieces(std::vector<Entry> elems,
                                                           const std::vector<std::size_t>& sizes) {
    std::vector<std::vector<Entry>> out;
    std::size_t start = 0;
    for (std::size_t w : sizes) {
        if (start + w > elems.size()) return std::nullopt;
        Entry sum = 0;
        for (std::size_t i = start; i < start + w; ++i) sum += elems[i];
        if (sum % 2 != 0) {
            bool fixed = false;
            for (std::size_t i = start + w; i-- > start && !fixed;)
                for (std::size_t j = start + w; j < elems.size(); ++j)
                    if ((elems[i] - elems[j]) % 2 != 0) {
                        std::swap(elems[i], elems[j]);
                        fixed = true;
                        break;
                    }
            if (!fixed) return std::nullopt;
            auto first = elems.begin() + static_cast<long>(start);
            std::sort(first, first + static_cast<long>(w));
            std::sort(first + static_cast<long>(w), elems.end());
        }
        out.emplace_back(elems.begin() + static_cast<long>(start), elems.begin() + static_cast<long>(start + w));
        start += w;
    }
    if (start != elems.size()) return std::nullopt;
    return out;
}

Block unit_block(const Columns& cols, Entry shift_by) {
    Grid g(2, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        g.set(1, static_cast<int>(j) + 1, cols[j].first);
        g.set(2, static_cast<int>(j) + 1, cols[j].second);
    }
    return Block(g).shifted(shift_by);
}

}  // namespace

namespace {

// catalogs depend only on the shape; complete ones are kept for the process
class UnitCache {
public:
    explicit UnitCache(Meter& meter) : meter_(meter) {}
    const Catalog& get(const std::vector<Entry>& shape) {
        {
            std::lock_guard lock(mutex());
            auto it = shared().find(shape);
            if (it != shared().end()) return it->second;
        }
        auto local = local_.find(shape);
        if (local != local_.end()) return local->second;
        Catalog cat = enumerate_unit(shape, meter_);
        if (meter_.spent()) return local_.emplace(shape, std::move(cat)).first->second;
        std::lock_guard lock(mutex());
        return shared().emplace(shape, std::move(cat)).first->second;
    }
    Meter& meter() { return meter_; }

private:
    static std::map<std::vector<Entry>, Catalog>& shared() {
        static std::map<std::vector<Entry>, Catalog> cache;
        return cache;
    }
    static std::mutex& mutex() {
        static std::mutex m;
        return m;
    }
    Meter& meter_;
    std::map<std::vector<Entry>, Catalog> local_;
};

std::vector<Entry> normalized(const std::vector<Entry>& piece) {
    std::vector<Entry> shape;
    for (Entry e : piece) shape.push_back(e - piece.front() + 1);
    return shape;
}

// keys of the run [1, size] ordered by how many once-gapped runs also take them
std::vector<UnitKey> ranked_keys(UnitCache& cache, std::size_t size) {
    std::vector<Entry> run;
    for (Entry x = 1; x <= static_cast<Entry>(size); ++x) run.push_back(x);
    const Catalog& base = cache.get(run);
    std::vector<const Catalog*> gapped;
    for (Entry g = 2; g <= static_cast<Entry>(size); ++g) {
        std::vector<Entry> shape;
        for (Entry x = 1; x <= static_cast<Entry>(size) + 1; ++x)
            if (x != g) shape.push_back(x);
        gapped.push_back(&cache.get(shape));
    }
    std::vector<std::pair<int, UnitKey>> scored;
    for (const auto& [key, _] : base) {
        int score = 0;
        for (const Catalog* cat : gapped) score += static_cast<int>(cat->count(key));
        scored.push_back({-score, key});
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<UnitKey> out;
    for (auto& [_, key] : scored) out.push_back(std::move(key));
    return out;
}

// Partition the support into pieces of the given sizes. A piece takes the
// smallest free element and may skip up to `slack` of the following free
// ones; `accept` picks a key for it or rejects it.
using Acceptor = std::function<std::optional<UnitKey>(std::size_t, const Catalog&)>;

class Partitioner {
public:
    Partitioner(const std::vector<Entry>& elems, const std::vector<std::size_t>& sizes, Acceptor accept,
                UnitCache& cache)
        : elems_(elems), sizes_(sizes), accept_(std::move(accept)), cache_(cache), used_(elems.size(), false) {}

    bool run() { return go(0, 0); }
    const std::vector<std::vector<Entry>>& pieces() const { return pieces_; }
    const std::vector<UnitKey>& keys() const { return keys_; }

private:
    bool go(std::size_t piece, std::size_t first_free) {
        if (piece == sizes_.size()) return true;
        if (!cache_.meter().tick()) return false;
        while (first_free < elems_.size() && used_[first_free]) ++first_free;
        if (first_free == elems_.size()) return false;
        const std::size_t w = sizes_[piece];
        const std::size_t slack = w <= 8 ? 2 : 1;
        std::vector<std::size_t> window;
        for (std::size_t i = first_free + 1; i < elems_.size() && window.size() < w - 1 + slack; ++i)
            if (!used_[i]) window.push_back(i);
        if (window.size() < w - 1) return false;
        // choose which window slots to drop, fewest and latest first
        std::vector<std::vector<std::size_t>> drops{{}};
        const std::size_t extra = window.size() - (w - 1);
        if (extra >= 1)
            for (std::size_t i = window.size(); i-- > 0;) drops.push_back({i});
        if (extra >= 2)
            for (std::size_t i = window.size(); i-- > 0;)
                for (std::size_t j = i; j-- > 0;) drops.push_back({i, j});
        for (const auto& drop : drops) {
            if (drop.size() != extra) continue;
            std::vector<std::size_t> take{first_free};
            for (std::size_t i = 0; i < window.size(); ++i)
                if (std::find(drop.begin(), drop.end(), i) == drop.end()) take.push_back(window[i]);
            std::vector<Entry> chunk;
            for (std::size_t i : take) chunk.push_back(elems_[i]);
            std::sort(chunk.begin(), chunk.end());
            auto key = accept_(w, cache_.get(normalized(chunk)));
            if (cache_.meter().spent()) return false;
            if (!key) continue;
            for (std::size_t i : take) used_[i] = true;
            pieces_.push_back(chunk);
            keys_.push_back(*key);
            if (go(piece + 1, first_free + 1)) return true;
            pieces_.pop_back();
            keys_.pop_back();
            for (std::size_t i : take) used_[i] = false;
            if (cache_.meter().spent()) return false;
        }
        return false;
    }

    const std::vector<Entry>& elems_;
    const std::vector<std::size_t>& sizes_;
    Acceptor accept_;
    UnitCache& cache_;
    std::vector<bool> used_;
    std::vector<std::vector<Entry>> pieces_;
    std::vector<UnitKey> keys_;
};

NicePair assemble_pair(const std::vector<std::vector<Entry>>& pieces, std::size_t per_block,
                       const std::vector<UnitKey>& key_at, UnitCache& cache) {
    NicePair pair;
    for (std::size_t start = 0; start < pieces.size(); start += per_block) {
        std::vector<Block> first, second;
        for (std::size_t i = 0; i < per_block; ++i) {
            const auto& piece = pieces[start + i];
            const UnitLayout& lay = cache.get(normalized(piece)).at(key_at[i]);
            first.push_back(unit_block(lay.b1, piece.front() - 1));
            second.push_back(unit_block(lay.b2, piece.front() - 1));
        }
        pair.b1.push_back(juxtapose(first));
        pair.b2.push_back(juxtapose(second));
    }
    pair.recipe = "searched";
    return pair;
}

// consecutive pieces, one key per unit position
std::optional<NicePair> sequential_attempt(const std::vector<Entry>& elems, const std::vector<std::size_t>& sizes,
                                           std::size_t per_block, UnitCache& cache) {
    auto pieces = even_pieces(elems, sizes);
    if (!pieces) return std::nullopt;
    std::vector<UnitKey> chosen;
    for (std::size_t pos = 0; pos < per_block; ++pos) {
        std::set<std::vector<Entry>> shapes;
        for (std::size_t i = pos; i < pieces->size(); i += per_block) shapes.insert(normalized((*pieces)[i]));
        const Catalog* base = nullptr;
        for (const auto& shape : shapes) {
            const Catalog& cat = cache.get(shape);
            if (cache.meter().spent()) return std::nullopt;
            if (!base || cat.size() < base->size()) base = &cat;
        }
        std::optional<UnitKey> pick;
        for (const auto& [key, _] : *base) {
            bool everywhere = true;
            for (const auto& shape : shapes)
                if (!cache.get(shape).count(key)) {
                    everywhere = false;
                    break;
                }
            if (everywhere) {
                pick = key;
                break;
            }
        }
        if (!pick) return std::nullopt;
        chosen.push_back(*pick);
    }
    return assemble_pair(*pieces, per_block, chosen, cache);
}

// fixed key per unit width, free partition
std::optional<NicePair> keyed_attempt(const std::vector<Entry>& elems, const std::vector<std::size_t>& sizes,
                                      std::size_t per_block, UnitCache& cache) {
    constexpr std::size_t kTries = 8;
    std::set<std::size_t> widths(sizes.begin(), sizes.begin() + static_cast<long>(per_block));
    std::map<std::size_t, std::vector<UnitKey>> ranked;
    for (std::size_t w : widths) {
        ranked[w] = ranked_keys(cache, w);
        if (ranked[w].size() > kTries) ranked[w].resize(kTries);
        if (cache.meter().spent()) return std::nullopt;
    }
    const std::size_t n8 = ranked.count(8) ? ranked[8].size() : 1;
    const std::size_t n12 = ranked.count(12) ? ranked[12].size() : 1;
    for (std::size_t i12 = 0; i12 < n12; ++i12)
        for (std::size_t i8 = 0; i8 < n8; ++i8) {
            std::map<std::size_t, UnitKey> keys;
            if (ranked.count(8)) keys[8] = ranked[8][i8];
            if (ranked.count(12)) keys[12] = ranked[12][i12];
            Partitioner part(
                elems, sizes,
                [&](std::size_t w, const Catalog& cat) -> std::optional<UnitKey> {
                    if (cat.count(keys.at(w))) return keys.at(w);
                    return std::nullopt;
                },
                cache);
            const bool found = part.run();
            if (cache.meter().spent()) return std::nullopt;
            if (!found) continue;
            std::vector<UnitKey> key_at;
            for (std::size_t i = 0; i < per_block; ++i) key_at.push_back(keys.at(sizes[i]));
            return assemble_pair(part.pieces(), per_block, key_at, cache);
        }
    return std::nullopt;
}


// u even: the support is a g x L grid of runs (row r holds r*rho + [1, L]).
// Cut it into a/2 translates of one h x w box; one block on the box, moved
// to every translate, gives sequences whose blocks share all column sums.
std::optional<NicePair> tiled_attempt(int a, int c, int u, const std::vector<std::size_t>& unit,
                                      UnitCache& cache) {
    const long long g = u / 2, L = 2LL * a * c / u, rho = L + 1, copies = a / 2;
    for (long long d1 : divisors(copies)) {
        const long long d2 = copies / d1;
        if (g % d1 != 0 || L % d2 != 0) continue;
        const long long h = g / d1, w = L / d2;
        std::vector<std::vector<Entry>> orders(2);
        for (long long r = 0; r < h; ++r)
            for (long long o = 1; o <= w; ++o) orders[0].push_back(r * rho + o);
        for (long long o = 1; o <= w; ++o)
            for (long long r = 0; r < h; ++r) orders[1].push_back(r * rho + o);
        for (const auto& box : orders) {
            Partitioner part(
                box, unit,
                [](std::size_t, const Catalog& cat) -> std::optional<UnitKey> {
                    if (cat.empty()) return std::nullopt;
                    return cat.begin()->first;
                },
                cache);
            const bool found = part.run();
            if (cache.meter().spent()) return std::nullopt;
            if (!found) continue;
            std::vector<Block> first, second;
            for (std::size_t i = 0; i < unit.size(); ++i) {
                const auto& piece = part.pieces()[i];
                const UnitLayout& lay = cache.get(normalized(piece)).at(part.keys()[i]);
                first.push_back(unit_block(lay.b1, piece.front() - 1));
                second.push_back(unit_block(lay.b2, piece.front() - 1));
            }
            const Block b1 = juxtapose(first), b2 = juxtapose(second);
            NicePair pair;
            for (long long i = 0; i < d1; ++i)
                for (long long j = 0; j < d2; ++j) {
                    const Entry by = i * h * rho + j * w;
                    pair.b1.push_back(b1.shifted(by));
                    pair.b2.push_back(b2.shifted(by));
                }
            pair.recipe = "searched, tiled " + std::to_string(h) + "x" + std::to_string(w);
            return pair;
        }
    }
    return std::nullopt;
}

}  // namespace

PairSearchResult search_nice_pair(int a, int c, int u, const SearchBudget& budget) {
    if (c < 4 || c % 2 != 0) throw std::invalid_argument("block width must be even and at least 4");
    if (a < 2 || a % 2 != 0) throw std::invalid_argument("a must be even and at least 2");
    const long long two_ac = 2LL * a * c;
    if (u <= 0 || two_ac % u != 0) throw std::invalid_argument("u must divide 2ac");
    const Entry rho = two_ac / u + 1;
    std::vector<Entry> elems;
    for (Entry x = 1; x <= static_cast<Entry>(a) * c + u / 2; ++x)
        if (!(x % rho == 0 && x / rho <= u / 2)) elems.push_back(x);

    // unit sizes (2 x width) inside one block: one width-6 unit when c/2 is odd, else width 4
    std::vector<std::size_t> unit;
    if ((c / 2) % 2 == 1) unit.push_back(12);
    while (static_cast<int>(unit.size()) * 4 < c - (unit.empty() ? 0 : 2)) unit.push_back(8);
    std::vector<std::size_t> sizes;
    for (int blk = 0; blk < a / 2; ++blk) sizes.insert(sizes.end(), unit.begin(), unit.end());

    PairSearchResult res;
    Meter meter(budget);
    UnitCache cache(meter);
    auto pair = sequential_attempt(elems, sizes, unit.size(), cache);
    if (!pair && !meter.spent() && u % 2 == 0) pair = tiled_attempt(a, c, u, unit, cache);
    if (!pair && !meter.spent()) pair = keyed_attempt(elems, sizes, unit.size(), cache);
    res.nodes = meter.nodes();
    if (pair) {
        res.status = SearchStatus::Found;
        res.pair = std::move(pair);
    } else {
        res.status = meter.spent() ? SearchStatus::Exhausted : SearchStatus::NotFound;
    }
    return res;
}

Grid square_sma(int n, int s) {
    if (s < 2 || s % 2 != 0) throw std::invalid_argument("square SMA needs even s");
    const int h = s / 2;
    struct Pair {
        int delta, delta_neg, alpha;
    };
    std::vector<Pair> pairs;
    int x = 0;
    if (h % 2 == 1) {
        if (h < 3) throw std::invalid_argument("square SMA needs s >= 6 when s/2 is odd");
        pairs = {{1, 0, 1}, {3, 2, 4}, {4, 6, 6}};
        x = 7;
    }
    while (static_cast<int>(pairs.size()) < h) {
        pairs.push_back({x + 1, x, x + 1});
        pairs.push_back({x + 2, x + 3, x + 3});
        x += 4;
    }
    int top_diag = 0;
    for (const auto& p : pairs) top_diag = std::max({top_diag, p.delta, p.delta_neg});
    if (top_diag >= n) throw std::invalid_argument("square SMA needs more columns than the diagonals used");
    Grid g(n, n);
    for (int level = 0; level < h; ++level) {
        const Pair& p = pairs[level];
        for (int r = 1; r <= n; ++r) {
            Entry v = static_cast<Entry>(n) * level + wrap(static_cast<long long>(r) + p.alpha, n);
            g.set(r, wrap(static_cast<long long>(r) + p.delta, n), v);
            g.set(r, wrap(static_cast<long long>(r) + p.delta_neg, n), -v);
        }
    }
    return g;
}

}  // namespace heffter
