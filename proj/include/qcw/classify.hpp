#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qcw/obstruction.hpp"
#include "qcw/weights.hpp"

namespace qcw {

enum class FailureKind {
    base_case_m1,            // m_1 < 2
    base_case_divisibility,  // m_1 divides m_2
    no_window_exists,        // m_1 + ... + m_{j-1} divides m_j
    obstruction_set_hit,     // m_j lies in its window's obstruction set
};

std::string_view to_string(FailureKind kind);

struct Failure {
    FailureKind kind;
    std::size_t level = 2;      // the j whose condition failed (2 for the base case)
    std::optional<Int> window;  // set for obstruction_set_hit

    friend bool operator==(const Failure&, const Failure&) = default;
};

struct MembershipVerdict {
    WeightPrefix weight;
    bool in_class = false;
    /// Window indices M_3, ..., M_j of the levels that passed.
    std::vector<Int> witnesses;
    std::optional<Failure> failure;
};

/// Class membership for a strictly increasing run of length >= 2; no gcd requirement.
/// Levels are checked bottom-up and the first failure is reported.
MembershipVerdict classify_prefix(const WeightPrefix& weight);

inline MembershipVerdict is_in_class(const WeightTuple& weight) { return classify_prefix(weight.entries()); }

/// Every s in the M-th window of `prefix` avoiding the obstruction set, with
/// s > last prefix entry and gcd(prefix, s) = 1. Throws ValidationError when
/// the prefix itself is not in the class, OracleMismatch if a produced value
/// fails the class check.
std::vector<Int> enumerate_admissible(const WeightPrefix& prefix, Int window_index, Backend backend = Backend::apery);

enum class Criterion {
    basic_criterion,  // 3 <= m1, m1 divides neither m2 nor m3, m1 + m2 > m3
    prime_pair,       // m2 < m3 odd primes >= 5, m3 - m2 < m1 < m2
    twin_prime,       // (m2, m3) twin primes other than (3, 5), 3 <= m1 < m2
    doubling_bound,   // 3 <= m1 < m2 < m3 < 2 m1
};

std::string_view to_string(Criterion criterion);

/// Sufficient conditions for three-entry weights, in enum order. Throws
/// ValidationError for other arities and OracleMismatch if a satisfied
/// criterion is not confirmed by is_in_class.
std::vector<Criterion> check_n3_criteria(const WeightTuple& weight);

}  // namespace qcw
