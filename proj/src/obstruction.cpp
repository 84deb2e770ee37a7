#include "qcw/obstruction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qcw/semigroup.hpp"

namespace qcw {

namespace {

// Walks every exponent vector k with m_1 + sum m_q k_q below the window's
// upper end and marks each r_{k,m,i} landing inside the window.
class BruteEnumerator {
public:
    BruteEnumerator(const WeightPrefix& prefix, const Window& window)
        : prefix_(prefix), window_(window), marks_(static_cast<std::size_t>(std::max<Int>(window.size(), 0)), false) {}

    std::vector<Int> run() {
        walk(0, 0, false);
        std::vector<Int> out;
        for (std::size_t offset = 0; offset < marks_.size(); ++offset) {
            if (marks_[offset]) out.push_back(window_.lower + 1 + static_cast<Int>(offset));
        }
        return out;
    }

private:
    void walk(std::size_t q, Int partial, bool nonzero) {
        if (q == prefix_.size()) {
            if (!nonzero) return;
            for (Int m : prefix_.values()) {
                const Int r = m + partial;
                if (window_.contains(r)) marks_[static_cast<std::size_t>(r - window_.lower - 1)] = true;
            }
            return;
        }
        const Int step = prefix_[q];
        // prefix_[0] is the smallest m_i, so r >= prefix_[0] + partial.
        for (Int kq = 0; prefix_[0] + partial + step * kq < window_.upper; ++kq) {
            walk(q + 1, partial + step * kq, nonzero || kq > 0);
        }
    }

    const WeightPrefix& prefix_;
    Window window_;
    std::vector<bool> marks_;
};

}  // namespace

Int r_value(const WeightPrefix& prefix, std::size_t i, const MultiIndex& k) {
    if (k.size() != prefix.size()) {
        throw std::out_of_range("multi-index length " + std::to_string(k.size()) + " does not match prefix length " +
                                std::to_string(prefix.size()));
    }
    Int r = prefix.at(i);
    for (std::size_t q = 0; q < prefix.size(); ++q) {
        r = checked_add(r, checked_mul(prefix[q], k[q]));
    }
    return r;
}

Window make_window(Int block, Int index) {
    if (index < 1) {
        throw ValidationError("window index M must be >= 1, got " + std::to_string(index));
    }
    if (block < 1) {
        throw ValidationError("window block must be positive, got " + std::to_string(block));
    }
    return Window{index, checked_mul(index - 1, block), checked_mul(index, block)};
}

std::optional<Int> window_index_for(Int value, Int block) {
    if (block < 1 || value < 1) {
        throw ValidationError("window lookup needs positive value and block");
    }
    if (value % block == 0) return std::nullopt;
    return value / block + 1;
}

bool ObstructionSet::contains(Int t) const { return std::binary_search(elements.begin(), elements.end(), t); }

std::vector<Int> ObstructionSet::complement() const {
    std::vector<Int> out;
    for (Int t = window.lower + 1; t < window.upper; ++t) {
        if (!contains(t)) out.push_back(t);
    }
    return out;
}

std::string_view to_string(Backend backend) {
    switch (backend) {
        case Backend::brute: return "brute";
        case Backend::sieve: return "sieve";
        case Backend::apery: return "apery";
    }
    return "unknown";
}

Backend parse_backend(std::string_view name) {
    if (name == "brute") return Backend::brute;
    if (name == "sieve") return Backend::sieve;
    if (name == "apery") return Backend::apery;
    throw ValidationError("unknown backend '" + std::string(name) + "' (expected brute, sieve or apery)");
}

ObstructionSet obstruction_set(const WeightPrefix& prefix, Int window_index, Backend backend) {
    if (prefix.size() < 2) {
        throw ValidationError("obstruction set needs a prefix of length >= 2, got " + prefix.to_string());
    }
    const Window window = make_window(prefix.sum(), window_index);
    switch (backend) {
        case Backend::brute:
            return ObstructionSet{prefix, window, BruteEnumerator(prefix, window).run()};
        case Backend::sieve:
            return obstruction_set_fast(prefix, window_index, build_sieve(prefix.values(), window.upper));
        case Backend::apery:
            return obstruction_set_fast(prefix, window_index, build_apery(prefix.values()));
    }
    throw ValidationError("unknown backend");
}

}  // namespace qcw
