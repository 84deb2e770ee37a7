#pragma once

// Test-only reference implementations. None of these call into the library;
// they exist so library results can be checked against a second route.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using Int = std::int64_t;

/// Does some k >= 0 solve sum gens[q] * k_q == t? Depth-first over the larger
/// generators, divisibility check on the smallest one. Branches whose remainder
/// is not a multiple of the gcd of the generators still to be placed are cut.
inline bool representable(std::vector<Int> gens, Int t) {
    if (t < 0) return false;
    if (t == 0) return true;
    std::sort(gens.begin(), gens.end(), std::greater<>());
    std::vector<Int> suffix_gcd(gens.size() + 1, 0);
    for (std::size_t q = gens.size(); q-- > 0;) suffix_gcd[q] = std::gcd(suffix_gcd[q + 1], gens[q]);
    std::function<bool(std::size_t, Int)> search = [&](std::size_t q, Int rest) -> bool {
        if (rest % suffix_gcd[q] != 0) return false;
        if (q + 1 == gens.size()) return true;
        for (Int k = rest / gens[q]; k >= 0; --k) {
            if (search(q + 1, rest - k * gens[q])) return true;
        }
        return false;
    };
    return search(0, t);
}

/// Literal definition: every k in the box k_q <= M*sum / m_q, no pruning.
/// Only for small prefixes.
inline std::vector<Int> nested_loop_iset(const std::vector<Int>& m, Int window) {
    Int sum = 0;
    for (Int v : m) sum += v;
    const Int lower = (window - 1) * sum, upper = window * sum;
    std::set<Int> found;
    std::vector<Int> k(m.size(), 0);
    std::function<void(std::size_t)> loop = [&](std::size_t q) {
        if (q == m.size()) {
            if (std::all_of(k.begin(), k.end(), [](Int v) { return v == 0; })) return;
            Int combo = 0;
            for (std::size_t r = 0; r < m.size(); ++r) combo += m[r] * k[r];
            for (Int mi : m) {
                const Int r = mi + combo;
                if (lower < r && r < upper) found.insert(r);
            }
            return;
        }
        for (k[q] = 0; k[q] <= upper / m[q]; ++k[q]) loop(q + 1);
        k[q] = 0;
    };
    loop(0);
    return {found.begin(), found.end()};
}

/// Membership-side route: t is in I iff t - m_i is a positive representable value.
inline std::vector<Int> pointwise_iset(const std::vector<Int>& m, Int window) {
    Int sum = 0;
    for (Int v : m) sum += v;
    std::vector<Int> out;
    for (Int t = (window - 1) * sum + 1; t < window * sum; ++t) {
        for (Int mi : m) {
            if (t - mi > 0 && representable(m, t - mi)) {
                out.push_back(t);
                break;
            }
        }
    }
    return out;
}

/// (i, j, k) with 1-based i < j, all k in the box k_r <= (m_j - m_i) / m_r.
using Resonance = std::tuple<std::size_t, std::size_t, std::vector<Int>>;

inline std::vector<Resonance> resonances(const std::vector<Int>& m) {
    std::vector<Resonance> out;
    for (std::size_t j = 2; j <= m.size(); ++j) {
        for (std::size_t i = 1; i < j; ++i) {
            const Int gap = m[j - 1] - m[i - 1];
            std::vector<Int> k(j - 1, 0);
            std::function<void(std::size_t)> loop = [&](std::size_t r) {
                if (r == k.size()) {
                    Int total = m[i - 1];
                    for (std::size_t q = 0; q < k.size(); ++q) total += m[q] * k[q];
                    if (total == m[j - 1]) out.emplace_back(i, j, k);
                    return;
                }
                for (k[r] = 0; k[r] <= gap / m[r]; ++k[r]) loop(r + 1);
                k[r] = 0;
            };
            loop(0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Int> primes_between(Int lo, Int hi) {
    std::vector<Int> out;
    for (Int p = std::max<Int>(lo, 2); p <= hi; ++p) {
        bool prime = true;
        for (Int d = 2; d * d <= p; ++d) {
            if (p % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) out.push_back(p);
    }
    return out;
}

/// Sorted distinct values drawn uniformly from [lo, hi].
inline std::vector<Int> random_increasing(std::mt19937_64& rng, std::size_t count, Int lo, Int hi) {
    std::uniform_int_distribution<Int> pick(lo, hi);
    std::set<Int> values;
    while (values.size() < count) values.insert(pick(rng));
    return {values.begin(), values.end()};
}

}  // namespace oracle
