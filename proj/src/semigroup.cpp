#include "qcw/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace qcw {

namespace {

void check_generators(std::span<const Int> generators) {
    if (generators.empty()) {
        throw ValidationError("generator list is empty");
    }
    for (Int g : generators) {
        if (g < 1) {
            throw ValidationError("generator " + std::to_string(g) + " is not positive");
        }
    }
}

void check_matches_prefix(const WeightPrefix& prefix, const std::vector<Int>& generators) {
    std::vector<Int> sorted = generators;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), prefix.values().begin(), prefix.values().end())) {
        throw ValidationError("table generators do not match prefix " + prefix.to_string());
    }
}

template <RepresentabilityOracle Table>
ObstructionSet collect(const WeightPrefix& prefix, Int window_index, const Table& table) {
    if (prefix.size() < 2) {
        throw ValidationError("obstruction set needs a prefix of length >= 2");
    }
    ObstructionSet out{prefix, make_window(prefix.sum(), window_index), {}};
    for (Int t = out.window.lower + 1; t < out.window.upper; ++t) {
        if (obstructs(prefix, out.window, t, table)) {
            out.elements.push_back(t);
        }
    }
    return out;
}

}  // namespace

bool RepresentabilityTable::representable(Int t) const {
    if (t < 0) return false;
    if (t > bound_) {
        throw std::out_of_range("query " + std::to_string(t) + " exceeds sieve bound " + std::to_string(bound_));
    }
    return flags_[static_cast<std::size_t>(t)];
}

bool AperyTable::representable(Int t) const {
    if (t < 0) return false;
    const auto& least = least_[static_cast<std::size_t>(t % modulus_)];
    return least.has_value() && t >= *least;
}

RepresentabilityTable build_sieve(std::span<const Int> generators, Int bound) {
    check_generators(generators);
    if (bound < 0) {
        throw ValidationError("sieve bound " + std::to_string(bound) + " is negative");
    }
    RepresentabilityTable table;
    table.generators_.assign(generators.begin(), generators.end());
    table.bound_ = bound;
    table.flags_.assign(static_cast<std::size_t>(bound) + 1, false);
    table.flags_[0] = true;
    for (Int t = 0; t <= bound; ++t) {
        if (!table.flags_[static_cast<std::size_t>(t)]) continue;
        for (Int g : generators) {
            if (g <= bound - t) {
                table.flags_[static_cast<std::size_t>(t + g)] = true;
            }
        }
    }
    return table;
}

AperyTable build_apery(std::span<const Int> generators) {
    check_generators(generators);
    AperyTable table;
    table.generators_.assign(generators.begin(), generators.end());
    table.modulus_ = *std::min_element(generators.begin(), generators.end());
    const auto modulus = static_cast<std::size_t>(table.modulus_);
    table.least_.assign(modulus, std::nullopt);
    table.least_[0] = 0;

    std::deque<std::size_t> pending{0};
    std::vector<bool> queued(modulus, false);
    queued[0] = true;
    while (!pending.empty()) {
        const std::size_t residue = pending.front();
        pending.pop_front();
        queued[residue] = false;
        const Int base = *table.least_[residue];
        for (Int g : generators) {
            const Int candidate = checked_add(base, g);
            const auto next = static_cast<std::size_t>(candidate % table.modulus_);
            auto& slot = table.least_[next];
            if (!slot || candidate < *slot) {
                slot = candidate;
                if (!queued[next]) {
                    queued[next] = true;
                    pending.push_back(next);
                }
            }
        }
    }
    return table;
}

bool is_representable_nonzero(const RepresentabilityTable& table, Int t) { return t > 0 && table.representable(t); }

bool is_representable_nonzero(const AperyTable& table, Int t) { return t > 0 && table.representable(t); }

ObstructionSet obstruction_set_fast(const WeightPrefix& prefix, Int window_index, const RepresentabilityTable& table) {
    check_matches_prefix(prefix, table.generators());
    if (window_index < 1) {
        throw ValidationError("window index M must be >= 1, got " + std::to_string(window_index));
    }
    const Int needed = checked_mul(window_index, prefix.sum());
    if (table.bound() < needed) {
        throw ValidationError("sieve bound " + std::to_string(table.bound()) + " is below M*sum = " +
                              std::to_string(needed));
    }
    return collect(prefix, window_index, table);
}

ObstructionSet obstruction_set_fast(const WeightPrefix& prefix, Int window_index, const AperyTable& table) {
    check_matches_prefix(prefix, table.generators());
    return collect(prefix, window_index, table);
}

}  // namespace qcw
