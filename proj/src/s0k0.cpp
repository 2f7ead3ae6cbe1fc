#include "heffter/s0k0.hpp"

#include <map>
#include <numeric>

#include "heffter/errors.hpp"
#include "heffter/verify.hpp"

namespace heffter {

std::pair<int, int> anchor(int m, int n, long long j) {
    const long long L = std::lcm(static_cast<long long>(m), static_cast<long long>(n));
    const long long q = j / L;
    return {wrap(j + 1, m), wrap(4 * q + j + 1, n)};
}

Grid place_blocks(int m, int n, const Block& block, const PlacementPlan& plan) {
    if (block.rows() != 3 || block.cols() != 2) throw std::invalid_argument("placement needs a 3x2 block");
    Grid g(m, n);
    std::map<std::pair<int, int>, std::size_t> owner;
    for (std::size_t j = 0; j < plan.offsets.size(); ++j) {
        const Grid b = shift(block.grid, plan.offsets[j]);
        auto [r, c] = anchor(m, n, static_cast<long long>(j));
        for (const auto& cell : b.cells()) {
            int rr = wrap(static_cast<long long>(r) + cell.r - 1, m);
            int cc = wrap(static_cast<long long>(c) + cell.c - 1, n);
            auto [it, fresh] = owner.emplace(std::make_pair(rr, cc), j);
            if (!fresh)
                throw ConstructionError("blocks " + std::to_string(it->second) + " and " + std::to_string(j) +
                                        " both claim cell (" + std::to_string(rr) + "," +
                                        std::to_string(cc) + ")");
            g.set(rr, cc, cell.v);
        }
    }
    return g;
}

namespace {

void step_range(std::vector<Entry>& out, Entry from, Entry to, Entry step) {
    for (Entry x = from; x <= to; x += step) out.push_back(x);
}

std::vector<Entry> repeat_list(const std::vector<Entry>& x, long long n) {
    std::vector<Entry> out;
    out.reserve(x.size() * n);
    for (long long i = 0; i < n; ++i) out.insert(out.end(), x.begin(), x.end());
    return out;
}

// blocks B±y over the whole plan must hit every support element with its multiplicity
void check_tiling(const HeffterParams& p, const S0k0Plan& plan) {
    std::map<Entry, long long> count;
    for (const auto& cell : plan.block.grid.cells())
        for (Entry y : plan.plan.offsets) {
            Entry v = cell.v > 0 ? cell.v + y : cell.v - y;
            ++count[v < 0 ? -v : v];
        }
    const SupportSpec phi = phi_support(p);
    for (Entry x : phi.elements()) {
        auto it = count.find(x);
        long long got = it == count.end() ? 0 : it->second;
        if (got != phi.multiplicity(x))
            throw ConstructionError(plan.recipe + ": offsets give ±" + std::to_string(x) + " " +
                                    std::to_string(got) + " times for " + p.str());
        if (it != count.end()) count.erase(it);
    }
    if (!count.empty())
        throw ConstructionError(plan.recipe + ": offsets reach " + std::to_string(count.begin()->first) +
                                " outside the support set for " + p.str());
}

}  // namespace

S0k0Plan build_plan(const HeffterParams& p) {
    if (auto why = p.problem()) throw ParamError(p.str() + ": " + *why);
    if (p.s % 4 != 0 || p.k % 4 != 0) throw ParamError("row and column fill must be multiples of 4");
    const Entry l = p.ell();
    const long long t = p.t, lambda = p.lambda;
    S0k0Plan out;
    std::vector<Entry>& X = out.base;

    if (!p.lambda_divides_ms()) {
        out.block = b_ab(0, 0);
        const SupportSpec phi = phi_support(p);
        if (!phi.half_element) {
            out.recipe = "B00 quarter copies";
            for (Entry i : phi.elements()) X.push_back(i - 1);
            out.copies = static_cast<int>(lambda / 4);
            out.plan.offsets = repeat_list(X, lambda / 4);
        } else {
            out.recipe = "B00 quarter copies with half element";
            for (Entry i : phi.elements())
                if (i != *phi.half_element) X.push_back(i - 1);
            out.copies = static_cast<int>(lambda / 4);
            out.plan.offsets = repeat_list(X, lambda / 4);
            for (long long i = 0; i < lambda / 8; ++i) out.plan.offsets.push_back(*phi.half_element - 1);
        }
    } else if (lambda % 4 == 0) {
        out.recipe = "B00";
        out.block = b_ab(0, 0);
        for (Entry i : phi_support(p).elements()) X.push_back(i - 1);
        out.copies = static_cast<int>(lambda / 4);
    } else if (lambda % 4 == 2) {
        out.copies = static_cast<int>(lambda / 2);
        if (l % 2 == 1) {
            out.recipe = "B10";
            out.block = b_ab(1, 0);
            const long long runs = t % 2 == 0 ? t / 2 : (t - 1) / 2;
            for (long long i = 0; i < runs; ++i) step_range(X, i * l, (i + 1) * l - 3, 2);
            if (t % 2 == 1) step_range(X, ((t - 1) / 2) * l, ((t - 1) / 2) * l + 2 * ((l - 5) / 4), 2);
        } else {
            out.recipe = "B(ell,0)";
            out.block = b_ab(l, 0);
            for (long long i = 0; i < t / 4; ++i) step_range(X, 2 * i * l, (2 * i + 1) * l - 2, 1);
        }
    } else {
        out.copies = static_cast<int>(lambda);
        if (t % 8 == 0) {
            out.recipe = "B(ell,2ell)";
            out.block = b_ab(l, 2 * l);
            for (long long i = 0; i < t / 8; ++i) step_range(X, 4 * i * l, (4 * i + 1) * l - 2, 1);
        } else if (t % 4 == 0) {
            out.recipe = "B(1,ell)";
            out.block = b_ab(1, l);
            for (long long i = 0; i < t / 4; ++i) step_range(X, 2 * i * l, (2 * i + 1) * l - 3, 2);
        } else {
            out.recipe = "B12";
            out.block = b_ab(1, 2);
            const long long runs = t % 2 == 0 ? t / 2 : (t - 1) / 2;
            for (long long i = 0; i < runs; ++i) step_range(X, i * l, (i + 1) * l - 5, 4);
            if (t % 2 == 1) step_range(X, ((t - 1) / 2) * l, ((t - 1) / 2) * l + 4 * ((l - 9) / 8), 4);
        }
    }
    if (out.plan.offsets.empty()) out.plan.offsets = repeat_list(X, out.copies);
    if (static_cast<long long>(out.plan.offsets.size()) * 4 != p.ms())
        throw ConstructionError(out.recipe + ": plan has " + std::to_string(out.plan.offsets.size()) +
                                " blocks, want ms/4 for " + p.str());
    check_tiling(p, out);
    return out;
}

Grid construct_s0k0(const HeffterParams& p) {
    S0k0Plan plan = build_plan(p);
    Grid g = place_blocks(p.m, p.n, plan.block, plan.plan);
    auto cert = verify_integer_heffter(g, p);
    if (!cert.ok) throw InternalError(plan.recipe + " output fails " + cert.first_clause() + " for " + p.str());
    return g;
}

}  // namespace heffter
