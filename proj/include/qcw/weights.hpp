#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qcw/integer.hpp"

namespace qcw {

/// A strictly increasing run of positive integers (m_1 < ... < m_l).
///
/// This is what the obstruction-set and class-membership machinery operates on.
/// Unlike WeightTuple it carries no gcd requirement: a prefix of a valid weight,
/// such as (4, 6) inside (4, 6, 7), need not be coprime.
class WeightPrefix {
public:
    WeightPrefix() = default;

    /// Throws ValidationError naming the violated invariant.
    static WeightPrefix from(std::span<const Int> values);
    static WeightPrefix from(std::initializer_list<Int> values) {
        return from(std::span<const Int>(values.begin(), values.size()));
    }

    std::span<const Int> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    /// 1-based access, matching the m_1, ..., m_l convention used in reports.
    Int at(std::size_t position) const;
    Int operator[](std::size_t index) const { return values_[index]; }
    Int back() const { return values_.back(); }

    /// m_1 + ... + m_l with overflow checking.
    Int sum() const { return checked_sum(values_); }

    /// The first `length` entries.
    WeightPrefix head(std::size_t length) const;

    /// Appends a value, re-checking strict increase.
    WeightPrefix extended(Int next) const;

    std::string to_string() const;

    friend bool operator==(const WeightPrefix&, const WeightPrefix&) = default;
    friend auto operator<=>(const WeightPrefix&, const WeightPrefix&) = default;

private:
    std::vector<Int> values_;
};

/// A validated weight (m_1, ..., m_n): n >= 2, positive, strictly increasing, gcd 1.
class WeightTuple {
public:
    static WeightTuple validate(std::span<const Int> raw);
    static WeightTuple validate(std::initializer_list<Int> raw) {
        return validate(std::span<const Int>(raw.begin(), raw.size()));
    }

    const WeightPrefix& entries() const { return entries_; }
    std::span<const Int> values() const { return entries_.values(); }
    std::size_t size() const { return entries_.size(); }
    Int at(std::size_t position) const { return entries_.at(position); }
    Int operator[](std::size_t index) const { return entries_[index]; }
    std::string to_string() const { return entries_.to_string(); }

    friend bool operator==(const WeightTuple&, const WeightTuple&) = default;
    friend auto operator<=>(const WeightTuple&, const WeightTuple&) = default;

private:
    explicit WeightTuple(WeightPrefix entries) : entries_(std::move(entries)) {}
    WeightPrefix entries_;
};

/// Free-function spelling of WeightTuple::validate.
inline WeightTuple validate_weight(std::span<const Int> raw) { return WeightTuple::validate(raw); }

/// Nonnegative exponent vector (k_1, ..., k_l).
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t length) : k_(length, 0) {}

    static MultiIndex from(std::span<const Int> values);
    static MultiIndex from(std::initializer_list<Int> values) {
        return from(std::span<const Int>(values.begin(), values.size()));
    }

    std::span<const Int> values() const { return k_; }
    std::size_t size() const { return k_.size(); }
    Int operator[](std::size_t index) const { return k_[index]; }
    void set(std::size_t index, Int value);

    bool is_zero() const;
    /// k_1 + ... + k_l.
    Int degree() const { return checked_sum(k_); }

    /// Copy padded with trailing zeros up to `length`.
    MultiIndex padded(std::size_t length) const;

    std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<Int> k_;
};

}  // namespace qcw
