#include "qcw/classify.hpp"

#include <numeric>
#include <string>

#include "qcw/semigroup.hpp"

namespace qcw {

std::string_view to_string(FailureKind kind) {
    switch (kind) {
        case FailureKind::base_case_m1: return "base-case-m1";
        case FailureKind::base_case_divisibility: return "base-case-divisibility";
        case FailureKind::no_window_exists: return "no-window-exists";
        case FailureKind::obstruction_set_hit: return "obstruction-set-hit";
    }
    return "unknown";
}

std::string_view to_string(Criterion criterion) {
    switch (criterion) {
        case Criterion::basic_criterion: return "basic-criterion";
        case Criterion::prime_pair: return "prime-pair";
        case Criterion::twin_prime: return "twin-prime";
        case Criterion::doubling_bound: return "doubling-bound";
    }
    return "unknown";
}

MembershipVerdict classify_prefix(const WeightPrefix& weight) {
    if (weight.size() < 2) {
        throw ValidationError("class membership needs at least 2 entries, got " + weight.to_string());
    }
    MembershipVerdict verdict{weight, false, {}, std::nullopt};

    if (weight[0] < 2) {
        verdict.failure = Failure{FailureKind::base_case_m1, 2, std::nullopt};
        return verdict;
    }
    if (weight[1] % weight[0] == 0) {
        verdict.failure = Failure{FailureKind::base_case_divisibility, 2, std::nullopt};
        return verdict;
    }

    for (std::size_t level = 3; level <= weight.size(); ++level) {
        const WeightPrefix below = weight.head(level - 1);
        const Int block = below.sum();
        const Int value = weight[level - 1];
        const auto index = window_index_for(value, block);
        if (!index) {
            verdict.failure = Failure{FailureKind::no_window_exists, level, std::nullopt};
            return verdict;
        }
        const AperyTable table = build_apery(below.values());
        if (obstructs(below, make_window(block, *index), value, table)) {
            verdict.failure = Failure{FailureKind::obstruction_set_hit, level, *index};
            return verdict;
        }
        verdict.witnesses.push_back(*index);
    }
    verdict.in_class = true;
    return verdict;
}

std::vector<Int> enumerate_admissible(const WeightPrefix& prefix, Int window_index, Backend backend) {
    if (prefix.size() < 2) {
        throw ValidationError("admissible enumeration needs a prefix of length >= 2");
    }
    if (const auto verdict = classify_prefix(prefix); !verdict.in_class) {
        throw ValidationError("prefix " + prefix.to_string() + " is not in the class (" +
                              std::string(to_string(verdict.failure->kind)) + " at level " +
                              std::to_string(verdict.failure->level) + ")");
    }
    const ObstructionSet blocked = obstruction_set(prefix, window_index, backend);
    const Int prefix_gcd = gcd_of(prefix.values());

    std::vector<Int> out;
    for (Int s : blocked.complement()) {
        if (s <= prefix.back() || std::gcd(prefix_gcd, s) != 1) continue;
        const auto check = classify_prefix(prefix.extended(s));
        if (!check.in_class || check.witnesses.back() != window_index) {
            throw OracleMismatch("admissible value " + std::to_string(s) + " for " + prefix.to_string() +
                                 " failed the class check");
        }
        out.push_back(s);
    }
    return out;
}

std::vector<Criterion> check_n3_criteria(const WeightTuple& weight) {
    if (weight.size() != 3) {
        throw ValidationError("criteria apply to 3-entry weights, got " + weight.to_string());
    }
    const Int m1 = weight[0], m2 = weight[1], m3 = weight[2];
    std::vector<Criterion> out;

    if (m1 >= 3 && m2 % m1 != 0 && m3 % m1 != 0 && m1 + m2 > m3) {
        out.push_back(Criterion::basic_criterion);
    }
    const bool odd_primes = is_prime(m2) && is_prime(m3) && m2 % 2 == 1 && m3 % 2 == 1;
    if (odd_primes && m2 >= 5 && m3 - m2 < m1 && m1 < m2) {
        out.push_back(Criterion::prime_pair);
    }
    if (is_prime(m2) && m3 == m2 + 2 && is_prime(m3) && !(m2 == 3 && m3 == 5) && m1 >= 3 && m1 < m2) {
        out.push_back(Criterion::twin_prime);
    }
    if (m1 >= 3 && m3 < 2 * m1) {
        out.push_back(Criterion::doubling_bound);
    }

    if (!out.empty() && !is_in_class(weight).in_class) {
        throw OracleMismatch("weight " + weight.to_string() + " meets a sufficient criterion but is not in the class");
    }
    return out;
}

}  // namespace qcw
