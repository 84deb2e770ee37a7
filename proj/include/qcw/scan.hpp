#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "qcw/classify.hpp"
#include "qcw/weights.hpp"

namespace qcw {

enum class ScanFilter { all, in_class, resonance_free, both, disagree };

std::string_view to_string(ScanFilter filter);
ScanFilter parse_scan_filter(std::string_view name);

struct ScanRow {
    WeightTuple weight;
    bool in_class = false;
    std::vector<Int> witnesses;
    std::optional<Failure> failure;
    std::size_t resonance_count = 0;
    /// |I| at levels 3..n for the window containing m_j; empty where no window exists.
    std::vector<std::optional<Int>> iset_sizes;
};

ScanRow evaluate_scan_row(const WeightTuple& weight);
bool passes(const ScanRow& row, ScanFilter filter);

struct ScanOptions {
    std::size_t n = 3;
    Int max_weight = 12;
    ScanFilter filter = ScanFilter::all;
    unsigned threads = 1;
    std::size_t batch_size = 4096;
};

struct ScanSummary {
    std::size_t visited = 0;  // valid weights examined
    std::size_t emitted = 0;  // rows passing the filter
};

/// Visits every valid weight with entries <= max_weight in lexicographic order.
/// Rows are evaluated in parallel batches but delivered to `sink` in order,
/// so output does not depend on the thread count.
ScanSummary scan(const ScanOptions& options, const std::function<void(const ScanRow&)>& sink);

}  // namespace qcw
