#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oddc {

/// How zero CPT entries are treated when converting probabilities to
/// log space. `clamp` (the default) clamps probabilities to
/// [kProbEpsilon, 1] before taking logs, so every weight stays finite.
/// `strict` keeps +-inf weights; models mixing the two infinity signs
/// across attributes are rejected at compile time.
enum class ZeroPolicy { clamp, strict };

inline constexpr double kProbEpsilon = 1e-9;

struct AttributeSpec {
    std::string name;
    std::vector<std::string> values; // cardinality >= 1, names unique

    std::uint32_t cardinality() const { return static_cast<std::uint32_t>(values.size()); }
    friend bool operator==(const AttributeSpec&, const AttributeSpec&) = default;
};

/// Log-odds classification threshold.
struct Threshold {
    double rho = 0.0;

    static Threshold from_log_odds(double rho);
    /// rho = log(p / (1 - p)); p must lie in (0, 1).
    static Threshold from_probability(double p);
};

/// A naive Bayes network in log-odds form: a binary class variable with
/// prior log-odds, and per attribute value a weight of evidence
/// w = log(Pr(value|c) / Pr(value|cbar)).
struct NaiveBayesModel {
    std::string class_name;
    std::array<std::string, 2> class_values; // {c, cbar}
    double prior_log_odds = 0.0;
    std::vector<AttributeSpec> attributes;
    std::vector<std::vector<double>> weights; // [attribute][value]

    std::size_t attribute_count() const { return attributes.size(); }
    std::optional<std::size_t> attribute_index(std::string_view name) const;
    std::vector<std::uint32_t> cardinalities() const;
};

/// A complete assignment: one value index per attribute, in attribute order.
using Instance = std::vector<std::uint32_t>;

/// log(p / (1 - p)); domain error outside (0, 1).
double prob_to_log_odds(double p);

/// Logistic map 1 / (1 + exp(-x)); sends -inf/+inf to 0/1.
double log_odds_to_prob(double x);

/// Weight of evidence log(p_given_c / p_given_cbar). Under the clamp
/// policy both probabilities are clamped to [kProbEpsilon, 1] first.
double weight_of_evidence(double p_given_c, double p_given_cbar,
                          ZeroPolicy policy = ZeroPolicy::clamp);

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> issues;

    explicit operator bool() const { return ok; }
};

/// Structural validation of a log-odds model. Under the clamp policy all
/// weights and the prior must additionally be finite. NaN anywhere is
/// always rejected.
ValidationResult validate_model(const NaiveBayesModel& model,
                                ZeroPolicy policy = ZeroPolicy::clamp);

/// Number of instances, saturating at uint64 max.
std::uint64_t instance_space_size(const std::vector<std::uint32_t>& cardinalities);
std::uint64_t instance_space_size(const NaiveBayesModel& model);

/// prior + sum of the instance's weights, summed in attribute-index order
/// so the floating-point result is reproducible.
double log_odds_of_instance(const NaiveBayesModel& model, const Instance& e);

/// 1 iff log_odds_of_instance(model, e) >= rho; the boundary is positive.
int classify(const NaiveBayesModel& model, Threshold rho, const Instance& e);

/// Random model: the prior and every CPT column are drawn from the uniform
/// probability space (binary columns: one uniform per class; wider columns:
/// uniform on the simplex) and converted to log-odds. Deterministic per seed.
NaiveBayesModel generate_random_model(std::size_t n,
                                      const std::vector<std::uint32_t>& cardinalities,
                                      std::uint64_t seed);

/// All-binary convenience wrapper.
NaiveBayesModel generate_random_model(std::size_t n, std::uint64_t seed);

} // namespace oddc
