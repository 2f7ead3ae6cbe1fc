#include "heffter/nice_pairs.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "heffter/errors.hpp"
#include "heffter/verify.hpp"

namespace heffter {

namespace {

std::string num(long long x) { return std::to_string(x); }

void require(bool ok, const std::string& what) {
    if (!ok) throw ParamError(what);
}

struct Shape {
    long long m, s, l1, l2, t;
    Entry ell;
    long long len() const { return m / (2 * l1); }
    long long ms() const { return m * s; }
};

// any_even_s: the searched path only needs s/lambda2 even, so s = 0 (mod 4) is fine there
Shape shape(int m, int s, int l1, int l2, int t, bool any_even_s = false) {
    require(m > 0 && m % 2 == 0, "m must be even");
    if (any_even_s)
        require(s >= 4 && s % 2 == 0, "s must be even and at least 4");
    else
        require(s >= 6 && s % 4 == 2, "s must be 2 mod 4 and at least 6");
    require(l1 > 0 && (m / 2) % l1 == 0, "lambda1 must divide m/2");
    require(l2 > 0 && (2 * s) % l2 == 0, "lambda2 must divide 2s");
    const long long lambda = static_cast<long long>(l1) * l2;
    const long long two_ms = 2LL * m * s;
    require(two_ms % lambda == 0, "lambda must divide 2ms");
    require(t > 0 && (two_ms / lambda) % t == 0, "t must divide 2ms/lambda");
    return {m, s, l1, l2, t, two_ms / lambda / t + 1};
}

int smallest_odd_prime(long long x) {
    while (x % 2 == 0) x /= 2;
    for (int p = 3; static_cast<long long>(p) * p <= x; p += 2)
        if (x % p == 0) return p;
    return static_cast<int>(x);
}

BlockSequence translates(const Block& b, Entry step, long long count, Entry base = 0) {
    BlockSequence out;
    for (long long i = 0; i < count; ++i) out.push_back(b.shifted(base + step * i));
    return out;
}

// head followed by `copies` copies of tail
Block widen(const Block& head, const Block& tail, long long copies) {
    std::vector<Block> parts{head};
    for (long long i = 0; i < copies; ++i) parts.push_back(tail);
    return juxtapose(parts);
}

// consecutive groups of `per` blocks, each group juxtaposed
BlockSequence regroup(const BlockSequence& seq, std::size_t per) {
    BlockSequence out;
    for (std::size_t i = 0; i + per <= seq.size(); i += per)
        out.push_back(juxtapose(std::vector<Block>(seq.begin() + i, seq.begin() + i + per)));
    return out;
}

// blocks base±x for x in xs, grouped `per` at a time
BlockSequence from_offsets(const Block& base, const std::vector<Entry>& xs, std::size_t per) {
    BlockSequence parts;
    for (Entry x : xs) parts.push_back(base.shifted(x));
    return regroup(parts, per);
}

// length, width, support and multiplicities, then the pair conditions
void check(const NicePair& pair, long long len, long long width, const std::vector<Entry>& phi,
           const std::map<Entry, int>& mult) {
    auto fail = [&](const std::string& why) {
        throw ConstructionError("nice pair (" + pair.recipe + "): " + why);
    };
    if (static_cast<long long>(pair.b1.size()) != len) fail("length " + num(pair.b1.size()) + ", want " + num(len));
    for (const auto* seq : {&pair.b1, &pair.b2})
        for (const auto& b : *seq)
            if (b.rows() != 2 || b.cols() != width) fail("block is not 2x" + num(width));
    std::map<Entry, int> count;
    for (Entry x : entry_list(pair.b1)) ++count[x < 0 ? -x : x];
    if (count.size() != phi.size()) fail("support has " + num(count.size()) + " elements, want " + num(phi.size()));
    for (Entry x : phi) {
        auto it = count.find(x);
        if (it == count.end()) fail(num(x) + " missing from the support");
        if (it->second != mult.at(x)) fail(num(x) + " appears " + num(it->second) + " times");
    }
    auto cert = verify_nice_pair(pair);
    if (!cert.ok) fail(cert.violations.front().clause + ": " + cert.violations.front().detail);
}

void check_uniform(const NicePair& pair, const Shape& sh) {
    auto phi = phi_elements(static_cast<int>(sh.m), static_cast<int>(sh.s), static_cast<int>(sh.l1 * sh.l2),
                            static_cast<int>(sh.t));
    std::map<Entry, int> mult;
    for (Entry x : phi) mult[x] = static_cast<int>(sh.l2);
    check(pair, sh.len(), sh.s, phi, mult);
}

NicePair finish(BlockSequence b1, BlockSequence b2, const Shape& sh, std::string recipe) {
    NicePair pair{std::move(b1), std::move(b2), static_cast<int>(sh.l1), static_cast<int>(sh.l2), std::move(recipe)};
    check_uniform(pair, sh);
    return pair;
}

// ---- lambda2 = s/2

BlockSequence half_sequence(const Shape& sh, bool second) {
    const Entry l = sh.ell;
    const long long t = sh.t;
    const long long extra = (sh.s - 6) / 4;
    auto blk = family_blocks(Family::Half, {l});
    if (l % 2 == 0) {
        require(t % 8 == 0, "even ell needs t = 0 mod 8");
        Block K = widen(blk.at("L"), blk.at("H"), extra);
        BlockSequence S = translates(K, 1, l - 1);
        BlockSequence out;
        for (long long j = 0; j <= (t - 8) / 8; ++j) out = concat({out, shifted(S, 4 * j * l)});
        return out;
    }
    Block B = widen(blk.at(second ? "E'" : "E"), blk.at("A"), extra);
    Block C = widen(blk.at(second ? "G'" : "G"), blk.at("F"), extra);
    BlockSequence out;
    if (l % 4 == 1) {
        BlockSequence S = translates(B, 4, (l - 1) / 4);
        if (t % 2 == 0) {
            for (long long j = 0; j <= (t - 2) / 2; ++j) out = concat({out, shifted(S, j * l)});
        } else {
            require((l - 1) % 8 == 0, "odd t needs ell = 1 mod 8");
            for (long long j = 0; j <= (t - 3) / 2; ++j) out = concat({out, shifted(S, j * l)});
            out = concat({out, translates(B, 4, (l - 1) / 8, (t - 1) / 2 * l)});
        }
        return out;
    }
    require(t % 4 == 0, "ell = 3 mod 4 needs t = 0 mod 4");
    BlockSequence S = translates(B, 4, (l - 3) / 4);
    S.push_back(C.shifted(l - 3));
    for (Entry x = l + 2; x <= 2 * l - 5; x += 4) S.push_back(B.shifted(x));
    for (long long j = 0; j <= (t - 4) / 4; ++j) out = concat({out, shifted(S, 2 * j * l)});
    return out;
}

// ---- lambda2 = 2 mod 4, at least 6

BlockSequence mod4_sequence(const Shape& sh) {
    const Entry l = sh.ell;
    const long long t = sh.t;
    const long long extra = (sh.l2 - 6) / 4;
    auto blk = family_blocks(Family::TwoModFour, {l});
    BlockSequence out;
    if (l % 2 == 1) {
        Block C = widen(blk.at("E"), blk.at("A"), extra);
        BlockSequence S = translates(C, 2, (l - 1) / 2);
        if (t % 2 == 0) {
            for (long long j = 0; j <= (t - 2) / 2; ++j) out = concat({out, shifted(S, j * l)});
        } else {
            require((l - 1) % 4 == 0, "odd t needs ell = 1 mod 4");
            for (long long j = 0; j <= (t - 3) / 2; ++j) out = concat({out, shifted(S, j * l)});
            out = concat({out, translates(C, 2, (l - 1) / 4, (t - 1) / 2 * l)});
        }
    } else {
        require(t % 4 == 0, "even ell needs t = 0 mod 4");
        Block H = widen(blk.at("G"), blk.at("F"), extra);
        BlockSequence S = translates(H, 1, l - 1);
        for (long long j = 0; j <= (t - 4) / 4; ++j) out = concat({out, shifted(S, 2 * j * l)});
    }
    return regroup(out, static_cast<std::size_t>(sh.s / sh.l2));
}

// ---- lambda2 = 2, t | ms/(2 lambda1)

NicePair two_odd_pair(const Shape& sh) {
    const Entry l = sh.ell;
    const long long t = sh.t, len = sh.len();
    const long long q = (sh.s - 6) / 4;
    require(l % 2 == 1, "ell must be odd");
    auto blk = family_blocks(Family::TwoOddEll, {});

    // 2x4 part over [1, N]
    const long long n_narrow = sh.m * q / (2 * sh.l1);
    BlockSequence tilde;
    if (n_narrow > 0) {
        BlockSequence S;
        Entry period;
        if (l % 4 == 1) {
            S = translates(blk.at("U5"), 4, (l - 1) / 4);
            period = l;
        } else {
            const Entry x = (l - 3) / 4;
            S = translates(blk.at("U5"), 4, x);
            S.push_back(blk.at("U3").shifted(4 * x));
            for (Entry y = 4 * x + 5; y <= 8 * x + 1; y += 4) S.push_back(blk.at("U5").shifted(y));
            period = 2 * l;
        }
        for (long long c = 0; static_cast<long long>(tilde.size()) < n_narrow; ++c)
            for (const auto& b : S)
                if (static_cast<long long>(tilde.size()) < n_narrow) tilde.push_back(b.shifted(period * c));
    }
    const Entry eta = 2 * q * t / sh.s;
    const Entry N = 2 * sh.m * q / sh.l1 + eta;

    // 2x6 part over the rest of Phi
    BlockSequence wide1, wide2;
    auto push = [&](const Block& b1, const Block& b2) {
        wide1.push_back(b1);
        wide2.push_back(b2);
    };
    auto push_same = [&](const Block& b) { push(b, b); };
    if (l == 3) {
        for (long long c = 0; c < len; ++c) push(blk.at("Z").shifted(N + 9 * c), blk.at("Z'").shifted(N + 9 * c));
    } else if (l == 5) {
        const long long pairs = len % 2 == 0 ? len / 2 : (len - 1) / 2;
        for (long long c = 0; c < pairs; ++c) {
            push_same(blk.at("V5").shifted(N + 15 * c));
            push_same(blk.at("V3").shifted(N + 15 * c + 7));
        }
        if (len % 2 == 1) push_same(blk.at("V5").shifted(sh.ms() / (2 * sh.l1) + (t - 15) / 2));
    } else {
        auto V = [&](Entry r) { return blk.at("V" + num(r)); };
        const Entry first = (eta + 1) * l - N;
        require(first > 0, "first skipped multiple precedes N");
        Entry h = first / 6, r = first % 6;
        Entry base = 0;  // 7j + 6 * (h_0 + ... + h_{j-1})
        for (long long j = 0; static_cast<long long>(wide1.size()) < len; ++j) {
            if (j > 0) {
                const Entry rest = l - 7 + r;
                h = rest / 6;
                r = rest % 6;
            }
            for (const auto& b : h_seq(static_cast<int>(h))) push_same(b.shifted(N + base));
            push_same(V(r).shifted(N + base + 6 * h));
            base += 6 * h + 7;
            if (j > t) throw ConstructionError("wide sequence did not close");
        }
        wide1.resize(len);
        wide2.resize(len);
    }
    if (static_cast<long long>(wide1.size()) != len) throw ConstructionError("wide sequence has the wrong length");

    BlockSequence b1, b2;
    for (long long i = 0; i < len; ++i) {
        std::vector<Block> narrow(tilde.begin() + i * q, tilde.begin() + (i + 1) * q);
        auto parts1 = narrow, parts2 = narrow;
        parts1.push_back(wide1[i]);
        parts2.push_back(wide2[i]);
        b1.push_back(juxtapose(parts1));
        b2.push_back(juxtapose(parts2));
    }
    return finish(std::move(b1), std::move(b2), sh, family_name(Family::TwoOddEll));
}

// ---- lambda2 = 2, t = 0 mod 4p

NicePair two_prime_wide_pair(const Shape& sh, int p) {
    const Entry l = sh.ell;
    require(sh.t % (4 * p) == 0, "t must be 0 mod 4p");
    FamilyParams fp;
    fp.ell = l;
    fp.p = p;
    Block V = family_blocks(Family::TwoPrimeWide, fp).at("V");
    std::vector<Entry> xs;
    for (Entry i = 0; i < sh.t / (4 * p); ++i)
        for (Entry x = 2 * p * i * l; x <= (2 * p * i + 1) * l - 2; ++x) xs.push_back(x);
    auto seq = from_offsets(V, xs, static_cast<std::size_t>(sh.s / (2 * p)));
    return finish(seq, seq, sh, family_name(Family::TwoPrimeWide) + " p=" + num(p));
}

// ---- lambda2 = 2, t | ms/(lambda1 p), t = 0 mod 4

NicePair two_prime_narrow_pair(const Shape& sh, int p) {
    const Entry l = sh.ell;
    require(sh.t % 4 == 0, "t must be 0 mod 4");
    require((l - 1) % p == 0, "ell - 1 must be a multiple of p");
    FamilyParams fp;
    fp.p = p;
    fp.y = (l - 1) / p;
    auto blk = family_blocks(Family::TwoPrimeNarrow, fp);
    std::vector<Entry> xs;
    for (Entry i = 0; i < sh.t / 4; ++i)
        for (Entry x = 2 * i * l; x <= 2 * i * l + fp.y - 1; ++x) xs.push_back(x);
    const auto per = static_cast<std::size_t>(sh.s / (2 * p));
    return finish(from_offsets(blk.at("V"), xs, per), from_offsets(blk.at("V'"), xs, per), sh,
                  family_name(Family::TwoPrimeNarrow) + " p=" + num(p));
}

NicePair dispatch(int m, int s, const Factorization& f, int t, const SearchBudget& budget) {
    if (f.lambda2 == s / 2) return nice_pair_s_half(m, s, f.lambda1, t);
    if (f.lambda2 % 2 == 1) return nice_pair_odd(m, s, f.lambda1, f.lambda2, t, budget);
    if (f.lambda2 % 4 == 0) return nice_pair_mod4(m, s, f.lambda1, f.lambda2, t);
    if (f.lambda2 >= 6) return nice_pair_2mod4_ge6(m, s, f.lambda1, f.lambda2, t);
    return nice_pair_lambda2(m, s, f.lambda1, t);
}

}  // namespace

std::vector<Factorization> factorizations(int lambda, int m, int s) {
    std::vector<Factorization> out;
    if (lambda <= 0 || m <= 0 || m % 2 != 0 || s <= 0) return out;
    auto rank = [&](int l2) {
        if (l2 % 2 == 0 && l2 != 2) return 0;
        if (l2 == s / 2) return 1;
        if (l2 == 2) return 2;
        return 3;
    };
    for (int l2 : divisors(2LL * s)) {
        if (lambda % l2 != 0) continue;
        const int l1 = lambda / l2;
        if ((m / 2) % l1 == 0) out.push_back({l1, l2});
    }
    std::stable_sort(out.begin(), out.end(), [&](const Factorization& a, const Factorization& b) {
        if (rank(a.lambda2) != rank(b.lambda2)) return rank(a.lambda2) < rank(b.lambda2);
        return rank(a.lambda2) == 0 ? a.lambda2 < b.lambda2 : a.lambda2 > b.lambda2;
    });
    return out;
}

Factorization choose_factorization(int lambda, int m, int s) {
    auto all = factorizations(lambda, m, s);
    if (all.empty())
        throw ParamError("no factorization of lambda=" + num(lambda) + " with lambda1 | " + num(m / 2) +
                         " and lambda2 | " + num(2LL * s));
    return all.front();
}

std::vector<Entry> phi_elements(int m, int s, int lambda, int t) {
    const long long two_ms = 2LL * m * s;
    require(lambda > 0 && two_ms % lambda == 0, "lambda must divide 2ms");
    require(t > 0 && (two_ms / lambda) % t == 0, "t must divide 2ms/lambda");
    const Entry l = two_ms / lambda / t + 1;
    const Entry top = static_cast<Entry>(t) * l / 2;
    std::vector<Entry> out;
    for (Entry x = 1; x <= top; ++x)
        if (!(x % l == 0 && x / l <= t / 2)) out.push_back(x);
    return out;
}

NicePair nice_pair_s_half(int m, int s, int lambda1, int t) {
    const Shape sh = shape(m, s, lambda1, s / 2, t);
    auto b1 = half_sequence(sh, false);
    auto b2 = sh.ell % 2 == 0 ? b1 : half_sequence(sh, true);
    return finish(std::move(b1), std::move(b2), sh, family_name(Family::Half));
}

NicePair nice_pair_2mod4_ge6(int m, int s, int lambda1, int lambda2, int t) {
    require(lambda2 % 4 == 2 && lambda2 >= 6, "lambda2 must be 2 mod 4 and at least 6");
    const Shape sh = shape(m, s, lambda1, lambda2, t);
    auto seq = mod4_sequence(sh);
    return finish(seq, seq, sh, family_name(Family::TwoModFour));
}

NicePair nice_pair_lambda2(int m, int s, int lambda1, int t) {
    const Shape sh = shape(m, s, lambda1, 2, t);
    const int p = smallest_odd_prime(s);
    if ((sh.ms() / (2 * sh.l1)) % t == 0) return two_odd_pair(sh);
    require(t % 4 == 0, "t must be 0 mod 4 when it does not divide ms/(2 lambda1)");
    if ((sh.ms() / (sh.l1 * p)) % t == 0) return two_prime_narrow_pair(sh, p);
    return two_prime_wide_pair(sh, p);
}

NicePair nice_pair_mod4(int m, int s, int lambda1, int lambda2, int t) {
    require(lambda2 % 4 == 0, "lambda2 must be 0 mod 4");
    const Shape sh = shape(m, s, lambda1, lambda2, t);
    FamilyParams fp;
    fp.lambda2 = lambda2;
    Block Q = family_blocks(Family::Quad, fp).at("Q");
    auto phi = phi_elements(m, s, lambda1 * lambda2, t);
    const auto per = static_cast<std::size_t>(2 * s / lambda2);
    if (phi.size() != per * static_cast<std::size_t>(sh.len()))
        throw InternalError("support size does not split into " + num(sh.len()) + " parts");
    std::vector<Entry> xs;
    for (Entry x : phi) xs.push_back(x - 1);
    auto seq = from_offsets(Q, xs, per);
    return finish(seq, seq, sh, family_name(Family::Quad));
}

NicePair nice_pair_odd(int m, int s, int lambda1, int lambda2, int t, const SearchBudget& budget) {
    require(lambda2 % 2 == 1 && lambda2 != s / 2, "lambda2 must be odd and differ from s/2");
    const Shape sh = shape(m, s, lambda1, lambda2, t, true);
    require((s / lambda2) % 2 == 0 && s / lambda2 >= 4, "s/lambda2 must be even and at least 4");
    auto res = search_nice_pair(m / lambda1, s / lambda2, t, budget);
    if (res.status == SearchStatus::Exhausted)
        throw BudgetExhausted("mu=1 pair search for a=" + num(m / lambda1) + " c=" + num(s / lambda2) +
                              " u=" + num(t) + " ran out after " + num(res.nodes) + " nodes");
    if (!res.pair) throw ConstructionError("no mu=1 pair for a=" + num(m / lambda1) + " c=" + num(s / lambda2));
    BlockSequence b1, b2;
    for (const auto& b : res.pair->b1) b1.push_back(juxtapose_copies(b, lambda2));
    for (const auto& b : res.pair->b2) b2.push_back(juxtapose_copies(b, lambda2));
    return finish(std::move(b1), std::move(b2), sh, "odd x" + num(lambda2) + " (" + res.pair->recipe + ")");
}

NicePair nice_pair_not_dividing(int m, int s, int lambda, int t) {
    require(m > 0 && m % 2 == 0, "m must be even");
    require(s >= 6 && s % 4 == 2, "s must be 2 mod 4 and at least 6");
    const long long ms = 1LL * m * s;
    require(lambda > 0 && ms % lambda != 0 && (2 * ms) % lambda == 0, "lambda must divide 2ms but not ms");
    require(lambda % 8 == 0, "lambda must be 0 mod 8");
    require((2 * ms / lambda) % t == 0, "t must divide 2ms/lambda");
    const Entry l = 2 * ms / lambda / t + 1;
    auto phi = phi_elements(m, s, lambda, t);

    std::vector<Entry> ys, xs;
    std::map<Entry, int> mult;
    const bool split = l % 2 == 0 && t % 2 == 1;
    const Entry half = split ? static_cast<Entry>(t) * l / 2 : 0;
    for (Entry x : phi) {
        mult[x] = x == half ? lambda / 2 : lambda;
        if (x != half) xs.push_back(x - 1);
    }
    for (int c = 0; c < lambda / 4; ++c) ys.insert(ys.end(), xs.begin(), xs.end());
    if (split)
        for (int c = 0; c < lambda / 8; ++c) ys.push_back(half - 1);

    if (static_cast<long long>(ys.size()) * 4 != ms)
        throw InternalError("offset list has " + num(ys.size()) + " entries, want ms/4");
    Block Q = family_blocks(Family::Quad, {}).at("Q2");
    auto seq = from_offsets(Q, ys, static_cast<std::size_t>(s / 2));
    NicePair pair{seq, seq, 1, lambda, "quad, lambda not dividing ms"};
    check(pair, m / 2, s, phi, mult);
    return pair;
}

NicePair nice_pair(int m, int s, int lambda, int t, const SearchBudget& budget) {
    require(m > 0 && m % 2 == 0, "m must be even");
    require(s >= 6 && s % 4 == 2, "s must be 2 mod 4 and at least 6");
    if ((1LL * m * s) % lambda != 0) return nice_pair_not_dividing(m, s, lambda, t);
    auto all = factorizations(lambda, m, s);
    if (all.empty()) choose_factorization(lambda, m, s);
    std::string errors;
    std::optional<BudgetExhausted> exhausted;
    for (const auto& f : all) {
        try {
            return dispatch(m, s, f, t, budget);
        } catch (const BudgetExhausted& e) {
            exhausted = e;
        } catch (const ConstructionError& e) {
            errors += std::string(errors.empty() ? "" : "; ") + e.what();
        } catch (const ParamError& e) {
            errors += std::string(errors.empty() ? "" : "; ") + e.what();
        }
    }
    if (exhausted) throw *exhausted;
    throw ConstructionError("every factorization failed: " + errors);
}

NicePair nice_pair(const HeffterParams& p, const SearchBudget& budget) {
    return nice_pair(p.m, p.s, p.lambda, p.t, budget);
}

}  // namespace heffter
