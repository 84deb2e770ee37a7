#include "qcw/scan.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "qcw/obstruction.hpp"
#include "qcw/resonance.hpp"

namespace qcw {

namespace {

// Advances `values` (strictly increasing, entries in 1..max) to the next
// combination in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<Int>& values, Int max_weight) {
    const std::size_t n = values.size();
    std::size_t pos = n;
    while (pos > 0) {
        --pos;
        if (values[pos] < max_weight - static_cast<Int>(n - 1 - pos)) {
            ++values[pos];
            for (std::size_t q = pos + 1; q < n; ++q) values[q] = values[q - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::string_view to_string(ScanFilter filter) {
    switch (filter) {
        case ScanFilter::all: return "all";
        case ScanFilter::in_class: return "in-class";
        case ScanFilter::resonance_free: return "resonance-free";
        case ScanFilter::both: return "both";
        case ScanFilter::disagree: return "disagree";
    }
    return "unknown";
}

ScanFilter parse_scan_filter(std::string_view name) {
    if (name == "all") return ScanFilter::all;
    if (name == "in-class") return ScanFilter::in_class;
    if (name == "resonance-free") return ScanFilter::resonance_free;
    if (name == "both") return ScanFilter::both;
    if (name == "disagree") return ScanFilter::disagree;
    throw ValidationError("unknown scan filter '" + std::string(name) +
                          "' (expected all, in-class, resonance-free, both or disagree)");
}

ScanRow evaluate_scan_row(const WeightTuple& weight) {
    MembershipVerdict verdict = is_in_class(weight);
    ScanRow row{weight, verdict.in_class, std::move(verdict.witnesses), verdict.failure, count_resonances(weight), {}};
    for (std::size_t level = 3; level <= weight.size(); ++level) {
        const WeightPrefix below = weight.entries().head(level - 1);
        const auto index = window_index_for(weight[level - 1], below.sum());
        if (index) {
            row.iset_sizes.emplace_back(static_cast<Int>(obstruction_set(below, *index, Backend::apery).size()));
        } else {
            row.iset_sizes.emplace_back(std::nullopt);
        }
    }
    return row;
}

bool passes(const ScanRow& row, ScanFilter filter) {
    const bool free = row.resonance_count == 0;
    switch (filter) {
        case ScanFilter::all: return true;
        case ScanFilter::in_class: return row.in_class;
        case ScanFilter::resonance_free: return free;
        case ScanFilter::both: return row.in_class && free;
        case ScanFilter::disagree: return row.in_class && !free;
    }
    return false;
}

ScanSummary scan(const ScanOptions& options, const std::function<void(const ScanRow&)>& sink) {
    if (options.n < 2) {
        throw ValidationError("scan needs n >= 2, got " + std::to_string(options.n));
    }
    if (options.max_weight < static_cast<Int>(options.n)) {
        throw ValidationError("scan needs max weight >= n, got " + std::to_string(options.max_weight));
    }
    const unsigned threads = std::max(1u, options.threads);
    const std::size_t batch_size = std::max<std::size_t>(1, options.batch_size);

    ScanSummary summary;
    std::vector<Int> current(options.n);
    for (std::size_t q = 0; q < options.n; ++q) current[q] = static_cast<Int>(q) + 1;
    bool more = true;

    std::vector<WeightTuple> batch;
    std::vector<std::optional<ScanRow>> results;
    while (more) {
        batch.clear();
        while (more && batch.size() < batch_size) {
            if (gcd_of(current) == 1) batch.push_back(WeightTuple::validate(current));
            more = next_combination(current, options.max_weight);
        }

        results.assign(batch.size(), std::nullopt);
        std::atomic<std::size_t> cursor{0};
        std::mutex error_lock;
        std::exception_ptr error;
        auto work = [&] {
            try {
                for (std::size_t idx = cursor++; idx < batch.size(); idx = cursor++) {
                    ScanRow row = evaluate_scan_row(batch[idx]);
                    if (passes(row, options.filter)) results[idx] = std::move(row);
                }
            } catch (...) {
                std::lock_guard lock(error_lock);
                if (!error) error = std::current_exception();
            }
        };
        if (threads == 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
        }
        if (error) std::rethrow_exception(error);

        summary.visited += batch.size();
        for (const auto& row : results) {
            if (row) {
                sink(*row);
                ++summary.emitted;
            }
        }
    }
    return summary;
}

}  // namespace qcw
