#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace gregory {

// Inclusive index interval [first, last].
struct IndexRange {
    long first = 0;
    long last = 0;

    bool empty() const { return last < first; }
    long size() const { return empty() ? 0 : last - first + 1; }
};

struct Counterexample {
    std::vector<long> params;  // ordered as VerificationReport::param_names
    std::string lhs;
    std::string rhs;
};

// Outcome of checking one identity over a grid of parameter tuples.
// passed() holds exactly when no counterexample was recorded; when several
// cells fail, first_failure is the lexicographically smallest tuple.
struct VerificationReport {
    std::string identity;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::vector<std::string> param_names;
    std::uint64_t instances_checked = 0;
    std::optional<Counterexample> first_failure;
    std::int64_t elapsed_ms = 0;

    bool passed() const { return !first_failure.has_value(); }
};

nlohmann::ordered_json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::ordered_json& j);

// Result of one cell: nullopt when the identity holds, otherwise the two
// sides as printable values.
struct Mismatch {
    std::string lhs;
    std::string rhs;
};
using CellCheck = std::function<std::optional<Mismatch>(std::span<const long>)>;

// Runs `check` over every cell using up to `jobs` threads. Exceptions from a
// cell are recorded as a mismatch carrying the error text.
VerificationReport run_grid(std::string identity, nlohmann::ordered_json parameters,
                            std::vector<std::string> param_names, const std::vector<std::vector<long>>& cells,
                            const CellCheck& check, unsigned jobs = 1);

// Convenience for cells whose sides are exact values with a str() form.
template <typename T>
std::optional<Mismatch> compare_sides(const T& lhs, const T& rhs) {
    if (lhs == rhs) {
        return std::nullopt;
    }
    return Mismatch{lhs.str(), rhs.str()};
}

}  // namespace gregory
