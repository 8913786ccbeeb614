#include "oddc/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace oddc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

Threshold Threshold::from_log_odds(double rho) {
    if (!std::isfinite(rho)) throw std::invalid_argument("threshold must be finite");
    return Threshold{rho};
}

Threshold Threshold::from_probability(double p) {
    return Threshold{prob_to_log_odds(p)};
}

std::optional<std::size_t> NaiveBayesModel::attribute_index(std::string_view name) const {
    for (std::size_t i = 0; i < attributes.size(); ++i)
        if (attributes[i].name == name) return i;
    return std::nullopt;
}

std::vector<std::uint32_t> NaiveBayesModel::cardinalities() const {
    std::vector<std::uint32_t> cards;
    cards.reserve(attributes.size());
    for (const auto& a : attributes) cards.push_back(a.cardinality());
    return cards;
}

double prob_to_log_odds(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("prob_to_log_odds: p must lie in (0, 1)");
    return std::log(p / (1.0 - p));
}

double log_odds_to_prob(double x) {
    if (std::isnan(x)) throw std::domain_error("log_odds_to_prob: NaN");
    if (x == kInf) return 1.0;
    if (x == -kInf) return 0.0;
    return 1.0 / (1.0 + std::exp(-x));
}

double weight_of_evidence(double p_given_c, double p_given_cbar, ZeroPolicy policy) {
    if (!(p_given_c >= 0.0 && p_given_c <= 1.0) || !(p_given_cbar >= 0.0 && p_given_cbar <= 1.0))
        throw std::domain_error("weight_of_evidence: probabilities must lie in [0, 1]");
    if (p_given_c == 0.0 && p_given_cbar == 0.0)
        throw std::domain_error("weight_of_evidence: both probabilities are zero");
    if (policy == ZeroPolicy::clamp) {
        p_given_c = std::max(p_given_c, kProbEpsilon);
        p_given_cbar = std::max(p_given_cbar, kProbEpsilon);
    }
    return std::log(p_given_c / p_given_cbar);
}

ValidationResult validate_model(const NaiveBayesModel& model, ZeroPolicy policy) {
    ValidationResult r;
    auto issue = [&r](std::string msg) {
        r.ok = false;
        r.issues.push_back(std::move(msg));
    };

    if (model.class_values[0].empty() || model.class_values[1].empty())
        issue("class values must be non-empty");
    if (model.class_values[0] == model.class_values[1])
        issue("class values must be distinct (binary class variable)");
    if (std::isnan(model.prior_log_odds))
        issue("prior log-odds is NaN");
    else if (policy == ZeroPolicy::clamp && !std::isfinite(model.prior_log_odds))
        issue("prior log-odds is infinite");

    if (model.weights.size() != model.attributes.size())
        issue("weight table has " + std::to_string(model.weights.size()) + " rows for " +
              std::to_string(model.attributes.size()) + " attributes");

    std::set<std::string> attr_names;
    for (std::size_t i = 0; i < model.attributes.size(); ++i) {
        const auto& attr = model.attributes[i];
        if (!attr_names.insert(attr.name).second)
            issue("duplicate attribute name '" + attr.name + "'");
        if (attr.values.empty())
            issue("attribute '" + attr.name + "' has no values");
        std::set<std::string> value_names(attr.values.begin(), attr.values.end());
        if (value_names.size() != attr.values.size())
            issue("attribute '" + attr.name + "' has duplicate value names");

        if (i >= model.weights.size()) continue;
        const auto& row = model.weights[i];
        if (row.size() != attr.values.size()) {
            issue("attribute '" + attr.name + "': " + std::to_string(row.size()) +
                  " weights for " + std::to_string(attr.values.size()) + " values");
            continue;
        }
        for (std::size_t v = 0; v < row.size(); ++v) {
            if (std::isnan(row[v]))
                issue("attribute '" + attr.name + "', value '" + attr.values[v] +
                      "': weight is NaN");
            else if (policy == ZeroPolicy::clamp && !std::isfinite(row[v]))
                issue("attribute '" + attr.name + "', value '" + attr.values[v] +
                      "': weight is infinite");
        }
    }
    return r;
}

std::uint64_t instance_space_size(const std::vector<std::uint32_t>& cardinalities) {
    std::uint64_t n = 1;
    for (std::uint32_t c : cardinalities) {
        if (c != 0 && n > std::numeric_limits<std::uint64_t>::max() / c)
            return std::numeric_limits<std::uint64_t>::max();
        n *= c;
    }
    return n;
}

std::uint64_t instance_space_size(const NaiveBayesModel& model) {
    return instance_space_size(model.cardinalities());
}

double log_odds_of_instance(const NaiveBayesModel& model, const Instance& e) {
    if (e.size() != model.attributes.size())
        throw std::invalid_argument("instance has " + std::to_string(e.size()) +
                                    " values for " + std::to_string(model.attributes.size()) +
                                    " attributes");
    double v = model.prior_log_odds;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] >= model.attributes[i].cardinality())
            throw std::invalid_argument("instance value index out of range for attribute '" +
                                        model.attributes[i].name + "'");
        v += model.weights[i][e[i]];
    }
    return v;
}

int classify(const NaiveBayesModel& model, Threshold rho, const Instance& e) {
    return log_odds_of_instance(model, e) >= rho.rho ? 1 : 0;
}

namespace {

// One CPT column in the uniform probability space.
std::vector<double> random_column(std::uint32_t cardinality, std::mt19937_64& rng) {
    std::vector<double> col(cardinality);
    if (cardinality == 1) {
        col[0] = 1.0;
    } else if (cardinality == 2) {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double p = unif(rng);
        col[0] = p;
        col[1] = 1.0 - p;
    } else {
        std::exponential_distribution<double> expo(1.0);
        double total = 0.0;
        for (auto& x : col) total += (x = expo(rng));
        for (auto& x : col) x /= total;
    }
    return col;
}

} // namespace

NaiveBayesModel generate_random_model(std::size_t n,
                                      const std::vector<std::uint32_t>& cardinalities,
                                      std::uint64_t seed) {
    if (cardinalities.size() != n)
        throw std::invalid_argument("generate_random_model: cardinality list length != n");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    NaiveBayesModel m;
    m.class_name = "C";
    m.class_values = {"c", "cbar"};
    double prior_p = std::clamp(unif(rng), kProbEpsilon, 1.0 - kProbEpsilon);
    m.prior_log_odds = std::log(prior_p / (1.0 - prior_p));

    m.attributes.reserve(n);
    m.weights.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        AttributeSpec attr;
        attr.name = "E" + std::to_string(i + 1);
        for (std::uint32_t v = 0; v < cardinalities[i]; ++v)
            attr.values.push_back("v" + std::to_string(v));

        auto col_c = random_column(cardinalities[i], rng);
        auto col_cbar = random_column(cardinalities[i], rng);
        std::vector<double> row(cardinalities[i]);
        for (std::uint32_t v = 0; v < cardinalities[i]; ++v)
            row[v] = weight_of_evidence(col_c[v], col_cbar[v], ZeroPolicy::clamp);

        m.attributes.push_back(std::move(attr));
        m.weights.push_back(std::move(row));
    }
    return m;
}

NaiveBayesModel generate_random_model(std::size_t n, std::uint64_t seed) {
    return generate_random_model(n, std::vector<std::uint32_t>(n, 2), seed);
}

} // namespace oddc
