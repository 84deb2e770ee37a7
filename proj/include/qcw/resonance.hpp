#pragma once

#include <compare>
#include <vector>

#include "qcw/weights.hpp"

namespace qcw {

/// (m_i - m_j) + sum_{r=1}^{n} m_r k_r for 1-based positions i != j and |k| = n.
Int c_exponent(const WeightTuple& weight, std::size_t i, std::size_t j, const MultiIndex& k);

/// A solution of m_i + sum_{r<j} m_r k_r = m_j with i < j; k has length j - 1.
struct ResonanceWitness {
    std::size_t i = 1;
    std::size_t j = 2;
    MultiIndex k;

    friend bool operator==(const ResonanceWitness&, const ResonanceWitness&) = default;
    friend auto operator<=>(const ResonanceWitness&, const ResonanceWitness&) = default;
};

/// Every resonance of the weight, sorted by (i, j, k). Each k_r is bounded by
/// (m_j - m_i) / m_r, so the search is finite and exhaustive.
std::vector<ResonanceWitness> resonances(const WeightTuple& weight);

/// Same search, counting without materialising witnesses.
std::size_t count_resonances(const WeightTuple& weight);

/// Compares the zero set of c_exponent over all (i < j, |k| <= degree_bound)
/// with the resonance list restricted to the same degree, zero-padded to length n.
bool zero_set_equivalence_check(const WeightTuple& weight, Int degree_bound);

}  // namespace qcw
