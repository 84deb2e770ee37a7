#include "qcw/resonance.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace qcw {

namespace {

// Solves sum_{r < length} values[r] * k_r == target over k >= 0 and hands each
// solution to `emit`.
void solve_exact(std::span<const Int> values, Int target, const std::function<void(const std::vector<Int>&)>& emit) {
    std::vector<Int> k(values.size(), 0);
    std::function<void(std::size_t, Int)> walk = [&](std::size_t r, Int remaining) {
        if (r + 1 == values.size()) {
            if (remaining % values[r] == 0) {
                k[r] = remaining / values[r];
                emit(k);
                k[r] = 0;
            }
            return;
        }
        for (Int kr = 0; kr * values[r] <= remaining; ++kr) {
            k[r] = kr;
            walk(r + 1, remaining - kr * values[r]);
        }
        k[r] = 0;
    };
    walk(0, target);
}

template <class Visit>
void for_each_resonance(const WeightTuple& weight, Visit visit) {
    const auto m = weight.values();
    for (std::size_t i = 1; i <= m.size(); ++i) {
        for (std::size_t j = i + 1; j <= m.size(); ++j) {
            solve_exact(m.first(j - 1), m[j - 1] - m[i - 1], [&](const std::vector<Int>& k) { visit(i, j, k); });
        }
    }
}

void for_each_bounded_index(std::size_t length, Int degree_bound, const std::function<void(const MultiIndex&)>& visit) {
    MultiIndex k(length);
    std::function<void(std::size_t, Int)> walk = [&](std::size_t r, Int budget) {
        if (r == length) {
            visit(k);
            return;
        }
        for (Int kr = 0; kr <= budget; ++kr) {
            k.set(r, kr);
            walk(r + 1, budget - kr);
        }
        k.set(r, 0);
    };
    walk(0, degree_bound);
}

}  // namespace

Int c_exponent(const WeightTuple& weight, std::size_t i, std::size_t j, const MultiIndex& k) {
    if (i == j) {
        throw std::out_of_range("c_exponent needs i != j, got i = j = " + std::to_string(i));
    }
    if (k.size() != weight.size()) {
        throw std::out_of_range("multi-index length " + std::to_string(k.size()) + " does not match weight length " +
                                std::to_string(weight.size()));
    }
    Int c = checked_sub(weight.at(i), weight.at(j));
    for (std::size_t r = 0; r < weight.size(); ++r) {
        c = checked_add(c, checked_mul(weight[r], k[r]));
    }
    return c;
}

std::vector<ResonanceWitness> resonances(const WeightTuple& weight) {
    std::vector<ResonanceWitness> out;
    for_each_resonance(weight, [&](std::size_t i, std::size_t j, const std::vector<Int>& k) {
        out.push_back(ResonanceWitness{i, j, MultiIndex::from(k)});
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_resonances(const WeightTuple& weight) {
    std::size_t count = 0;
    for_each_resonance(weight, [&](std::size_t, std::size_t, const std::vector<Int>&) { ++count; });
    return count;
}

bool zero_set_equivalence_check(const WeightTuple& weight, Int degree_bound) {
    if (degree_bound < 0) {
        throw ValidationError("degree bound must be >= 0, got " + std::to_string(degree_bound));
    }
    const std::size_t n = weight.size();

    std::vector<ResonanceWitness> zeros;
    for_each_bounded_index(n, degree_bound, [&](const MultiIndex& k) {
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = i + 1; j <= n; ++j) {
                if (c_exponent(weight, i, j, k) == 0) zeros.push_back(ResonanceWitness{i, j, k});
            }
        }
    });
    std::sort(zeros.begin(), zeros.end());

    std::vector<ResonanceWitness> embedded;
    for (const auto& witness : resonances(weight)) {
        if (witness.k.degree() <= degree_bound) {
            embedded.push_back(ResonanceWitness{witness.i, witness.j, witness.k.padded(n)});
        }
    }
    std::sort(embedded.begin(), embedded.end());
    return zeros == embedded;
}

}  // namespace qcw
