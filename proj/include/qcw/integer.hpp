#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

namespace qcw {

using Int = std::int64_t;

/// Thrown when an input violates a documented invariant or precondition.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal cross-check between two independent routes fails.
class OracleMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline Int checked_add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in addition: " + std::to_string(a) + " + " + std::to_string(b));
    }
    return out;
}

inline Int checked_sub(Int a, Int b) {
    Int out;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in subtraction: " + std::to_string(a) + " - " + std::to_string(b));
    }
    return out;
}

inline Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in multiplication: " + std::to_string(a) + " * " + std::to_string(b));
    }
    return out;
}

inline Int checked_sum(std::span<const Int> values) {
    Int total = 0;
    for (Int v : values) {
        total = checked_add(total, v);
    }
    return total;
}

inline Int gcd_of(std::span<const Int> values) {
    Int g = 0;
    for (Int v : values) {
        g = std::gcd(g, v);
    }
    return g;
}

/// Floor division for positive divisor.
constexpr Int floor_div(Int a, Int b) {
    Int q = a / b;
    return (a % b != 0 && a < 0) ? q - 1 : q;
}

/// Ceiling division for positive divisor.
constexpr Int ceil_div(Int a, Int b) {
    Int q = a / b;
    return (a % b != 0 && a > 0) ? q + 1 : q;
}

/// Deterministic trial division.
constexpr bool is_prime(Int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (Int d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

}  // namespace qcw
