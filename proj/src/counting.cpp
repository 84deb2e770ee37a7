#include "qcw/counting.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace qcw {

namespace {

std::vector<Int> intersect(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void check_ordered(Int m1, Int m2) {
    if (m1 < 2 || m2 <= m1) {
        throw ValidationError("expected 2 <= m1 < m2, got (" + std::to_string(m1) + ", " + std::to_string(m2) + ")");
    }
}

}  // namespace

std::vector<Int> SPartition::combined() const {
    std::vector<Int> out;
    for (const auto* piece : {&s1, &s2, &s3, &s4}) {
        out.insert(out.end(), piece->begin(), piece->end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool SPartition::pairwise_disjoint() const {
    const std::vector<Int>* pieces[] = {&s1, &s2, &s3, &s4};
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) {
            if (!intersect(*pieces[a], *pieces[b]).empty()) return false;
        }
    }
    return true;
}

SPartition s_partition(Int m1, Int m2) {
    check_ordered(m1, m2);
    const Window window = make_window(checked_add(m1, m2), 2);
    SPartition out{m1, m2, {}, {}, {}, {}, {}};
    for (Int r = 2; r * m1 < window.upper; ++r) {
        if (window.contains(r * m1)) out.s1.push_back(r * m1);
        if (window.contains(r * m1 + m2)) out.s2.push_back(r * m1 + m2);
    }
    out.s3.push_back(m1 + 2 * m2);
    for (Int r = 2; r <= 3; ++r) {
        if (window.contains(r * m2)) out.s4.push_back(r * m2);
    }
    out.overlap = intersect(out.s1, out.s4);
    return out;
}

std::string_view to_string(CountFormula formula) {
    switch (formula) {
        case CountFormula::none: return "none";
        case CountFormula::d: return "d";
        case CountFormula::d_prime: return "d'";
        case CountFormula::f: return "f";
    }
    return "unknown";
}

CountReport closed_form_count(Int m1, Int m2, Backend backend) {
    check_ordered(m1, m2);
    const ObstructionSet blocked = obstruction_set(WeightPrefix::from({m1, m2}), 2, backend);

    CountReport report;
    report.m1 = m1;
    report.m2 = m2;
    report.window_size = blocked.window.size();
    report.i_set_size = static_cast<Int>(blocked.size());
    report.gap_set = blocked.complement();

    const Int ratio = floor_div(2 * m2, m1);
    if (m1 == 3 && is_prime(m2) && m2 >= 5) {
        report.formula = CountFormula::f;
        report.closed_form = m2 - 2 - ratio;
    } else if (m1 >= 5 && is_prime(m1) && is_prime(m2)) {
        if (2 * m1 < m2) {
            report.formula = CountFormula::d;
            report.closed_form = m1 + m2 - 5 - ratio;
        } else if (2 * m1 > m2) {
            report.formula = CountFormula::d_prime;
            report.closed_form = m1 + m2 - 6 - ratio;
        } else {
            report.note = "hypothesis violation: 2*m1 == m2";
        }
    } else {
        report.note = "hypotheses unmet (need primes 5 <= m1 < m2, or m1 = 3 with prime m2 >= 5); enumeration only";
    }
    if (report.closed_form) {
        report.matches = *report.closed_form == static_cast<Int>(report.gap_set.size());
    }
    return report;
}

std::vector<DTableRow> table_d(Int m1, std::span<const Int> m2_values) {
    std::vector<DTableRow> rows;
    rows.reserve(m2_values.size());
    for (Int m2 : m2_values) {
        CountReport report = closed_form_count(m1, m2);
        rows.push_back(DTableRow{m2, report.closed_form, std::move(report.gap_set)});
    }
    return rows;
}

std::vector<FTableRow> table_f(std::span<const Int> m2_values) {
    std::vector<FTableRow> rows;
    rows.reserve(m2_values.size());
    for (Int m2 : m2_values) {
        if (m2 < 5 || !is_prime(m2)) {
            throw ValidationError("f-table entries must be primes >= 5, got " + std::to_string(m2));
        }
        rows.push_back(FTableRow{m2, m2 - 2 - floor_div(2 * m2, 3)});
    }
    return rows;
}

}  // namespace qcw
