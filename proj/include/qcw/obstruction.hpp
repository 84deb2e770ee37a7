#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qcw/weights.hpp"

namespace qcw {

/// r = m_i + sum_q m_q k_q for a prefix of length l, 1 <= i <= l, |k| = l.
Int r_value(const WeightPrefix& prefix, std::size_t i, const MultiIndex& k);

/// The open interval ((M-1) * block, M * block) for window index M.
struct Window {
    Int index = 1;
    Int lower = 0;  // exclusive
    Int upper = 0;  // exclusive

    bool contains(Int t) const { return lower < t && t < upper; }
    /// Count of integers strictly inside.
    Int size() const { return upper - lower - 1; }

    friend bool operator==(const Window&, const Window&) = default;
};

Window make_window(Int block, Int index);

/// The unique window index M with (M-1)*block < value < M*block, or nothing
/// when block divides value (the strict inequalities cannot both hold).
std::optional<Int> window_index_for(Int value, Int block);

/// Integers in the window representable as m_i + (nonzero combination of the prefix).
struct ObstructionSet {
    WeightPrefix prefix;
    Window window;
    std::vector<Int> elements;  // sorted ascending

    bool contains(Int t) const;
    std::size_t size() const { return elements.size(); }
    /// Window integers that are not elements, ascending.
    std::vector<Int> complement() const;

    friend bool operator==(const ObstructionSet&, const ObstructionSet&) = default;
};

enum class Backend { brute, sieve, apery };

std::string_view to_string(Backend backend);
/// Throws ValidationError on unknown names.
Backend parse_backend(std::string_view name);

/// Computes the obstruction set for prefix length >= 2 and M >= 1.
/// Every backend yields the same set; brute enumerates exponent vectors directly.
ObstructionSet obstruction_set(const WeightPrefix& prefix, Int window_index, Backend backend = Backend::apery);

}  // namespace qcw
