#include "qcw/weights.hpp"

#include <sstream>
#include <stdexcept>

namespace qcw {

namespace {

std::string join(std::span<const Int> values) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ", ";
        out << values[i];
    }
    out << ')';
    return out.str();
}

}  // namespace

WeightPrefix WeightPrefix::from(std::span<const Int> values) {
    if (values.empty()) {
        throw ValidationError("weight prefix must be nonempty");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 1) {
            throw ValidationError("non-positive entry " + std::to_string(values[i]) + " in " + join(values));
        }
        if (i > 0 && values[i] <= values[i - 1]) {
            throw ValidationError("not strictly increasing: " + join(values));
        }
    }
    WeightPrefix out;
    out.values_.assign(values.begin(), values.end());
    return out;
}

Int WeightPrefix::at(std::size_t position) const {
    if (position < 1 || position > values_.size()) {
        throw std::out_of_range("position " + std::to_string(position) + " outside 1.." + std::to_string(values_.size()));
    }
    return values_[position - 1];
}

WeightPrefix WeightPrefix::head(std::size_t length) const {
    if (length == 0 || length > values_.size()) {
        throw std::out_of_range("prefix length " + std::to_string(length) + " outside 1.." + std::to_string(values_.size()));
    }
    WeightPrefix out;
    out.values_.assign(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(length));
    return out;
}

WeightPrefix WeightPrefix::extended(Int next) const {
    std::vector<Int> values = values_;
    values.push_back(next);
    return from(values);
}

std::string WeightPrefix::to_string() const { return join(values_); }

WeightTuple WeightTuple::validate(std::span<const Int> raw) {
    if (raw.size() < 2) {
        throw ValidationError("weight needs at least 2 entries, got " + std::to_string(raw.size()));
    }
    WeightPrefix entries = WeightPrefix::from(raw);
    if (Int g = gcd_of(raw); g != 1) {
        throw ValidationError("gcd of " + join(raw) + " is " + std::to_string(g) + ", expected 1");
    }
    return WeightTuple(std::move(entries));
}

MultiIndex MultiIndex::from(std::span<const Int> values) {
    MultiIndex out;
    for (Int v : values) {
        if (v < 0) {
            throw ValidationError("negative multi-index entry " + std::to_string(v));
        }
    }
    out.k_.assign(values.begin(), values.end());
    return out;
}

void MultiIndex::set(std::size_t index, Int value) {
    if (value < 0) {
        throw ValidationError("negative multi-index entry " + std::to_string(value));
    }
    k_.at(index) = value;
}

bool MultiIndex::is_zero() const {
    for (Int v : k_) {
        if (v != 0) return false;
    }
    return true;
}

MultiIndex MultiIndex::padded(std::size_t length) const {
    if (length < k_.size()) {
        throw std::out_of_range("cannot pad multi-index of length " + std::to_string(k_.size()) + " down to " +
                                std::to_string(length));
    }
    MultiIndex out = *this;
    out.k_.resize(length, 0);
    return out;
}

std::string MultiIndex::to_string() const { return join(k_); }

}  // namespace qcw
