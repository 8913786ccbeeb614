#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddc/compile.hpp"
#include "oddc/interval.hpp"
#include "oddc/model.hpp"

namespace oddc {

/// Classifier counts can dwarf 64 bits (they scale with the instance
/// space), so they are exact big integers.
using BigCount = boost::multiprecision::cpp_int;

/// The prior log-odds equivalence interval is I[root] of the compiled ODD.
Interval prior_interval_from_odd(const CompilationResult& result);

/// Map a log-odds interval to the probability scale through the logistic
/// function; infinite endpoints land on 0/1 (open there).
std::pair<double, double> prior_prob_interval(const Interval& interval);

/// Per-value allowable new weights for one attribute, extracted by
/// recompiling with that attribute first: the interval of the root's
/// value-child, shifted down by the prior log-odds.
std::vector<Interval> weight_intervals_for(const NaiveBayesModel& model, Threshold rho,
                                           std::size_t attribute);

/// Distinct classifiers reachable by changing the prior: ||E|| + 1.
BigCount count_prior_classifiers(const std::vector<std::uint32_t>& cardinalities);

/// Distinct classifiers reachable by changing all weights of one
/// attribute: (k+1)^b - floor(k/2)^b - ceil(k/2)^b, with k the number of
/// instantiations of the other attributes and b the attribute's
/// cardinality.
BigCount count_weight_classifiers(const BigCount& k, std::uint32_t b);

/// Enumeration-based count of distinct classifiers realizable by sweeping
/// either the prior over the reals or one attribute's weight box
/// (unrestricted; no CPT sign rule). Guarded: refuses instance spaces
/// beyond 2^16 (GuardError).
BigCount sweep_distinct_classifiers(const NaiveBayesModel& model, Threshold rho,
                                    std::optional<std::size_t> attribute = std::nullopt);

struct SensitivityReport {
    struct AttributeReport {
        std::string name;
        std::vector<std::string> values;
        std::vector<double> current_weights;
        std::vector<Interval> intervals;
        /// The per-value box admits corners that no single CPT change can
        /// realize (all-new-weights positive or all negative).
        bool box_exceeds_sign_rule = false;
    };

    double rho = 0.0;
    double prior_log_odds = 0.0;
    Interval prior_interval;
    std::pair<double, double> prob_interval{0.0, 1.0};
    std::vector<AttributeReport> attributes;
};

/// Full report: prior interval (both scales) plus every attribute's weight
/// box, one recompilation per attribute.
SensitivityReport analyze(const NaiveBayesModel& model, Threshold rho);

/// Plain-text rendering: current value, allowed interval, slack per bound.
std::string format_report(const SensitivityReport& report);

} // namespace oddc
