#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcw/obstruction.hpp"

namespace qcw {

/// The four pieces of the second-window obstruction set of (m1, m2), built
/// from their closed descriptions rather than from enumeration:
///   S1 = { r m1 : r >= 2 }, S2 = { r m1 + m2 : r >= 2 }, S3 = { m1 + 2 m2 },
///   S4 = { r m2 : r in {2, 3} }, each cut to the window (m1+m2, 2(m1+m2)).
struct SPartition {
    Int m1 = 0;
    Int m2 = 0;
    std::vector<Int> s1, s2, s3, s4;
    std::vector<Int> overlap;  // s1 ∩ s4

    /// Sorted union of the four pieces.
    std::vector<Int> combined() const;
    bool pairwise_disjoint() const;
};

/// Requires 2 <= m1 < m2.
SPartition s_partition(Int m1, Int m2);

enum class CountFormula {
    none,     // hypotheses unmet; enumeration only
    d,        // primes 5 <= m1 < m2, 2 m1 < m2:  m1 + m2 - 5 - floor(2 m2 / m1)
    d_prime,  // primes 5 <= m1 < m2, 2 m1 > m2:  m1 + m2 - 6 - floor(2 m2 / m1)
    f,        // m1 = 3, m2 prime >= 5:           m2 - 2 - floor(2 m2 / 3)
};

std::string_view to_string(CountFormula formula);

struct CountReport {
    Int m1 = 0;
    Int m2 = 0;
    Int window_size = 0;          // integers strictly inside (m1+m2, 2(m1+m2))
    Int i_set_size = 0;           // |I| in the second window
    std::vector<Int> gap_set;     // window integers outside I
    CountFormula formula = CountFormula::none;
    std::optional<Int> closed_form;
    std::optional<bool> matches;  // closed_form == |gap_set|, when a closed form applies
    std::optional<std::string> note;
};

/// Selects the closed form whose hypotheses hold and compares it against the
/// enumerated gap set. Requires 2 <= m1 < m2.
CountReport closed_form_count(Int m1, Int m2, Backend backend = Backend::apery);

struct DTableRow {
    Int m2 = 0;
    std::optional<Int> d;
    std::vector<Int> gap_set;
};

struct FTableRow {
    Int m2 = 0;
    Int f = 0;
};

std::vector<DTableRow> table_d(Int m1, std::span<const Int> m2_values);
/// Throws ValidationError on entries that are not primes >= 5.
std::vector<FTableRow> table_f(std::span<const Int> m2_values);

}  // namespace qcw
