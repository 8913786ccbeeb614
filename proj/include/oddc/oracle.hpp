#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "oddc/model.hpp"

namespace oddc {

/// Exhaustive-enumeration ground truth. Margins follow the conventions
/// alpha = +inf when no positive instance exists and beta = -inf when no
/// negative one does; per-value margins restrict to instances containing
/// that value.
struct Margins {
    double alpha = 0.0; // min log-odds over positive instances
    double beta = 0.0;  // max log-odds over negative instances
    std::vector<std::vector<double>> alpha_by_value; // [attribute][value]
    std::vector<std::vector<double>> beta_by_value;
};

struct OracleReport {
    struct Row {
        Instance instance;
        double log_odds;
        int label;
    };

    Margins margins;
    std::uint64_t positive_count = 0;
    std::uint64_t negative_count = 0;
    std::vector<Row> table; // populated only when requested

    std::uint64_t instance_count() const { return positive_count + negative_count; }
};

/// Enumeration refuses instance spaces larger than this.
inline constexpr std::uint64_t kOracleGuard = std::uint64_t{1} << 24;

/// Enumerate every instance of the model: margins and counts always,
/// the full table only when with_table is set (margins-only runs stream
/// in O(1) memory). Throws GuardError above kOracleGuard.
OracleReport enumerate(const NaiveBayesModel& model, Threshold rho, bool with_table = false);

/// True iff the two models classify every instance identically.
/// Requires identical attribute specs; same guard as enumerate.
bool oracle_equivalent(const NaiveBayesModel& a, const NaiveBayesModel& b, Threshold rho);

/// Stream the full table as CSV: one line per instance, `v1,...,vn,log_odds,label`.
void write_table_csv(const NaiveBayesModel& model, Threshold rho, std::ostream& out);

/// Advance a value-index tuple in lexicographic order (last index fastest).
/// Returns false after the last instance.
bool next_instance(Instance& e, const std::vector<std::uint32_t>& cardinalities);

} // namespace oddc
