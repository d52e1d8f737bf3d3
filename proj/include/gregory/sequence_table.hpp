#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gregory {

// Immutable table of x_0..x_M. Negative indices read as zero; indices past
// M throw std::out_of_range. Tag keeps different sequences apart.
template <typename T, typename Tag>
class SequenceTable {
public:
    explicit SequenceTable(std::vector<T> values) : values_(std::move(values)) {
        if (values_.empty()) {
            throw std::invalid_argument("sequence table needs at least one entry");
        }
    }

    long max_index() const { return static_cast<long>(values_.size()) - 1; }
    bool covers(long n) const { return n <= max_index(); }

    const T& at(long n) const {
        static const T zero(0);
        if (n < 0) {
            return zero;
        }
        if (n > max_index()) {
            throw std::out_of_range("index " + std::to_string(n) + " past table end " + std::to_string(max_index()));
        }
        return values_[static_cast<std::size_t>(n)];
    }

    const std::vector<T>& values() const { return values_; }

    friend bool operator==(const SequenceTable&, const SequenceTable&) = default;

private:
    std::vector<T> values_;
};

}  // namespace gregory
