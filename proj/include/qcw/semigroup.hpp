#pragma once

#include <concepts>
#include <optional>
#include <span>
#include <vector>

#include "qcw/obstruction.hpp"

namespace qcw {

/// flags[t] is set iff t is a nonnegative integer combination of the generators, 0 <= t <= bound.
class RepresentabilityTable {
public:
    const std::vector<Int>& generators() const { return generators_; }
    Int bound() const { return bound_; }

    /// Negative t is never representable. Throws std::out_of_range above the bound.
    bool representable(Int t) const;

private:
    friend RepresentabilityTable build_sieve(std::span<const Int> generators, Int bound);
    std::vector<Int> generators_;
    Int bound_ = 0;
    std::vector<bool> flags_;
};

/// Least representable integer in each residue class modulo the smallest generator.
class AperyTable {
public:
    const std::vector<Int>& generators() const { return generators_; }
    Int modulus() const { return modulus_; }
    /// Empty entries mark residue classes containing no representable integer
    /// (only possible when the generators share a common factor).
    const std::vector<std::optional<Int>>& least() const { return least_; }

    bool representable(Int t) const;

private:
    friend AperyTable build_apery(std::span<const Int> generators);
    std::vector<Int> generators_;
    Int modulus_ = 1;
    std::vector<std::optional<Int>> least_;
};

template <class Table>
concept RepresentabilityOracle = requires(const Table& table, Int t) {
    { table.representable(t) } -> std::same_as<bool>;
    { table.generators() } -> std::convertible_to<const std::vector<Int>&>;
};

/// Forward dynamic programming, O(bound * |generators|).
RepresentabilityTable build_sieve(std::span<const Int> generators, Int bound);

/// Label-correcting relaxation over residues modulo the smallest generator.
AperyTable build_apery(std::span<const Int> generators);

/// True iff t > 0 and t is representable; equivalently t = sum g_q k_q with k != 0.
bool is_representable_nonzero(const RepresentabilityTable& table, Int t);
bool is_representable_nonzero(const AperyTable& table, Int t);

/// Table generators must equal the prefix entries; the sieve bound must reach M * sum.
ObstructionSet obstruction_set_fast(const WeightPrefix& prefix, Int window_index, const RepresentabilityTable& table);
ObstructionSet obstruction_set_fast(const WeightPrefix& prefix, Int window_index, const AperyTable& table);

/// Point query: t lies in the window and t - m_i is a nonzero combination for some i.
template <RepresentabilityOracle Table>
bool obstructs(const WeightPrefix& prefix, const Window& window, Int t, const Table& table) {
    if (!window.contains(t)) return false;
    for (Int m : prefix.values()) {
        if (t - m > 0 && table.representable(t - m)) return true;
    }
    return false;
}

}  // namespace qcw
