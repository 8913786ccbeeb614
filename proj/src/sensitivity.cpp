#include "oddc/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "oddc/errors.hpp"
#include "oddc/oracle.hpp"

namespace oddc {

Interval prior_interval_from_odd(const CompilationResult& result) {
    return result.root_interval;
}

std::pair<double, double> prior_prob_interval(const Interval& interval) {
    return {log_odds_to_prob(interval.lo), log_odds_to_prob(interval.hi)};
}

std::vector<Interval> weight_intervals_for(const NaiveBayesModel& model, Threshold rho,
                                           std::size_t attribute) {
    if (attribute >= model.attribute_count())
        throw std::invalid_argument("weight_intervals_for: attribute index out of range");

    // The chosen attribute must come first; the rest keep their index order.
    std::vector<std::size_t> order;
    order.reserve(model.attribute_count());
    order.push_back(attribute);
    for (std::size_t i = 0; i < model.attribute_count(); ++i)
        if (i != attribute) order.push_back(i);

    CompilationResult result = compile(model, rho, order);

    // A path through value e carries log O(c) + w'_e, so the allowable new
    // weight is the child's interval shifted down by the prior.
    std::vector<Interval> intervals;
    intervals.reserve(result.root_child_intervals.size());
    for (const auto& child : result.root_child_intervals)
        intervals.push_back(offset(child, -model.prior_log_odds));
    return intervals;
}

BigCount count_prior_classifiers(const std::vector<std::uint32_t>& cardinalities) {
    BigCount instances = 1;
    for (std::uint32_t c : cardinalities) instances *= c;
    return instances + 1;
}

BigCount count_weight_classifiers(const BigCount& k, std::uint32_t b) {
    if (k < 0) throw std::invalid_argument("count_weight_classifiers: k must be >= 0");
    if (b < 1) throw std::invalid_argument("count_weight_classifiers: b must be >= 1");
    using boost::multiprecision::pow;
    BigCount lo = k / 2;       // floor(k/2)
    BigCount hi = k - lo;      // ceil(k/2)
    return pow(BigCount(k + 1), b) - pow(lo, b) - pow(hi, b);
}

namespace {

constexpr std::uint64_t kSweepGuard = std::uint64_t{1} << 16;

void check_sweep_guard(std::uint64_t count) {
    if (count > kSweepGuard)
        throw GuardError("sweep over " + std::to_string(count) +
                         " instantiations exceeds the guard of " + std::to_string(kSweepGuard));
}

// Distinct weight sums over all instantiations of the given attributes.
std::size_t distinct_weight_sums(const NaiveBayesModel& model,
                                 const std::vector<std::size_t>& attrs) {
    std::vector<std::uint32_t> cards;
    cards.reserve(attrs.size());
    for (std::size_t a : attrs) cards.push_back(model.attributes[a].cardinality());
    check_sweep_guard(instance_space_size(cards));

    std::set<double> sums;
    Instance e(attrs.size(), 0);
    do {
        double s = 0.0;
        for (std::size_t i = 0; i < attrs.size(); ++i) s += model.weights[attrs[i]][e[i]];
        sums.insert(s);
    } while (next_instance(e, cards));
    return sums.size();
}

} // namespace

BigCount sweep_distinct_classifiers(const NaiveBayesModel& model, Threshold rho,
                                    std::optional<std::size_t> attribute) {
    (void)rho; // breakpoints shift with rho, their multiplicity does not
    std::vector<std::size_t> attrs(model.attribute_count());
    std::iota(attrs.begin(), attrs.end(), 0);

    if (!attribute) {
        // Sweeping the prior: one classifier per region between distinct
        // breakpoints rho - sum(w), plus one.
        return BigCount(distinct_weight_sums(model, attrs)) + 1;
    }

    // Sweeping one attribute's weights: each value independently selects
    // a region among the breakpoints induced by the other attributes, so
    // the unrestricted box yields (regions)^cardinality classifiers.
    std::size_t target = *attribute;
    if (target >= model.attribute_count())
        throw std::invalid_argument("sweep_distinct_classifiers: attribute index out of range");
    attrs.erase(attrs.begin() + static_cast<std::ptrdiff_t>(target));
    BigCount regions = BigCount(distinct_weight_sums(model, attrs)) + 1;
    return boost::multiprecision::pow(regions, model.attributes[target].cardinality());
}

SensitivityReport analyze(const NaiveBayesModel& model, Threshold rho) {
    SensitivityReport report;
    report.rho = rho.rho;
    report.prior_log_odds = model.prior_log_odds;

    CompilationResult compiled = compile(model, rho);
    report.prior_interval = compiled.root_interval;
    report.prob_interval = prior_prob_interval(compiled.root_interval);

    for (std::size_t i = 0; i < model.attribute_count(); ++i) {
        SensitivityReport::AttributeReport attr;
        attr.name = model.attributes[i].name;
        attr.values = model.attributes[i].values;
        attr.current_weights = model.weights[i];
        attr.intervals = weight_intervals_for(model, rho, i);

        bool all_can_be_positive = true;
        bool all_can_be_negative = true;
        for (const auto& iv : attr.intervals) {
            all_can_be_positive = all_can_be_positive && iv.hi > 0.0;
            all_can_be_negative = all_can_be_negative && iv.lo < 0.0;
        }
        attr.box_exceeds_sign_rule = all_can_be_positive || all_can_be_negative;
        report.attributes.push_back(std::move(attr));
    }
    return report;
}

namespace {

std::string prob_interval_string(const std::pair<double, double>& p, const Interval& iv) {
    std::ostringstream out;
    out.precision(6);
    out << (std::isinf(iv.lo) ? '(' : '[') << p.first << ", " << p.second
        << (std::isinf(iv.hi) ? ')' : ')');
    return out.str();
}

void append_slack(std::ostringstream& out, double value, const Interval& iv) {
    out.precision(6);
    out << "slack ";
    if (std::isinf(iv.lo))
        out << "inf";
    else
        out << value - iv.lo;
    out << " / ";
    if (std::isinf(iv.hi))
        out << "inf";
    else
        out << iv.hi - value;
}

} // namespace

std::string format_report(const SensitivityReport& report) {
    std::ostringstream out;
    out.precision(6);
    out << "threshold rho = " << report.rho << "\n";
    out << "prior log-odds = " << report.prior_log_odds << "\n";
    out << "  allowed (log-odds):    " << to_string(report.prior_interval) << "\n";
    out << "  allowed (probability): "
        << prob_interval_string(report.prob_interval, report.prior_interval) << "\n";
    out << "  ";
    append_slack(out, report.prior_log_odds, report.prior_interval);
    out << "\n";

    for (const auto& attr : report.attributes) {
        out << "attribute " << attr.name << "\n";
        for (std::size_t v = 0; v < attr.values.size(); ++v) {
            out << "  w[" << attr.values[v] << "] = " << attr.current_weights[v]
                << "  allowed " << to_string(attr.intervals[v]) << "  ";
            append_slack(out, attr.current_weights[v], attr.intervals[v]);
            out << "\n";
        }
        if (attr.box_exceeds_sign_rule)
            out << "  note: intervals are per-value; a joint CPT change must keep at "
                   "least one weight positive and one negative (unless all zero)\n";
    }
    return out.str();
}

} // namespace oddc
