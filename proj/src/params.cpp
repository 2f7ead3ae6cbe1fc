#include "heffter/params.hpp"

#include <algorithm>

namespace heffter {

HeffterParams HeffterParams::make(int m, int n, int s, int k, int lambda, int t) {
    HeffterParams p{m, n, s, k, lambda, t};
    if (auto why = p.problem()) throw ParamError(p.str() + ": " + *why);
    return p;
}

std::optional<std::string> HeffterParams::problem() const {
    if (m <= 0 || n <= 0 || s <= 0 || k <= 0 || lambda <= 0 || t <= 0)
        return "all parameters must be positive";
    if (s < 4 || s > n) return "need 4 <= s <= n";
    if (k < 4 || k > m) return "need 4 <= k <= m";
    if (static_cast<long long>(m) * s != static_cast<long long>(n) * k) return "need ms = nk";
    if ((2 * ms()) % lambda != 0) return "lambda must divide 2ms";
    if ((2 * ms() / lambda) % t != 0) return "t must divide 2ms/lambda";
    return std::nullopt;
}

std::string HeffterParams::str() const {
    return "(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",s=" + std::to_string(s) +
           ",k=" + std::to_string(k) + ",lambda=" + std::to_string(lambda) +
           ",t=" + std::to_string(t) + ")";
}

std::vector<Entry> SupportSpec::elements() const {
    std::vector<Entry> out;
    std::size_t e = 0;
    for (Entry x = 1; x <= base_max; ++x) {
        while (e < excluded.size() && excluded[e] < x) ++e;
        if (e < excluded.size() && excluded[e] == x) continue;
        out.push_back(x);
    }
    return out;
}

bool SupportSpec::contains(Entry x) const {
    if (x < 1 || x > base_max) return false;
    return !std::binary_search(excluded.begin(), excluded.end(), x);
}

int SupportSpec::multiplicity(Entry x) const {
    if (x < 0) x = -x;
    if (!contains(x)) return 0;
    if (half_element && *half_element == x) return half_multiplicity;
    return full_multiplicity;
}

long long SupportSpec::cell_count() const {
    long long size = static_cast<long long>(elements().size());
    return size * full_multiplicity - (half_element ? full_multiplicity - half_multiplicity : 0);
}

SupportSpec phi_support(const HeffterParams& p) {
    if (auto why = p.problem()) throw ParamError(p.str() + ": " + *why);
    const long long ell = p.ell();
    SupportSpec sup;
    sup.base_max = (static_cast<long long>(p.t) * ell) / 2;
    for (long long j = 1; j <= p.t / 2; ++j) sup.excluded.push_back(j * ell);
    sup.full_multiplicity = p.lambda;
    if (ell % 2 == 0 && p.t % 2 == 1) {
        sup.half_element = p.t * ell / 2;
        sup.half_multiplicity = p.lambda / 2;
    } else {
        sup.half_multiplicity = p.lambda;
    }
    return sup;
}

std::vector<int> divisors(long long x) {
    std::vector<int> out;
    for (long long d = 1; d * d <= x; ++d) {
        if (x % d) continue;
        out.push_back(static_cast<int>(d));
        if (d * d != x) out.push_back(static_cast<int>(x / d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HeffterParams> enumerate_params(int max_m, int max_n) {
    std::vector<HeffterParams> out;
    for (int m = 4; m <= max_m; ++m)
        for (int n = 4; n <= max_n; ++n)
            for (int s = 4; s <= n; ++s) {
                long long ms = static_cast<long long>(m) * s;
                if (ms % n) continue;
                int k = static_cast<int>(ms / n);
                if (k < 4 || k > m) continue;
                for (int lambda : divisors(2 * ms))
                    for (int t : divisors(2 * ms / lambda)) out.push_back({m, n, s, k, lambda, t});
            }
    return out;
}

}  // namespace heffter
