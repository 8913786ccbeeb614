#include "oddc/oracle.hpp"

#include <limits>
#include <ostream>
#include <string>

#include "oddc/errors.hpp"

namespace oddc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_guard(const NaiveBayesModel& model) {
    std::uint64_t count = instance_space_size(model);
    if (count > kOracleGuard)
        throw GuardError("instance space has " + std::to_string(count) +
                         " instances, above the enumeration guard of " +
                         std::to_string(kOracleGuard));
}

} // namespace

bool next_instance(Instance& e, const std::vector<std::uint32_t>& cardinalities) {
    for (std::size_t i = e.size(); i-- > 0;) {
        if (++e[i] < cardinalities[i]) return true;
        e[i] = 0;
    }
    return false;
}

OracleReport enumerate(const NaiveBayesModel& model, Threshold rho, bool with_table) {
    check_guard(model);

    OracleReport report;
    auto& m = report.margins;
    m.alpha = kInf;
    m.beta = -kInf;
    const std::size_t n = model.attribute_count();
    m.alpha_by_value.resize(n);
    m.beta_by_value.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.alpha_by_value[i].assign(model.attributes[i].cardinality(), kInf);
        m.beta_by_value[i].assign(model.attributes[i].cardinality(), -kInf);
    }

    auto cards = model.cardinalities();
    Instance e(n, 0);
    do {
        double v = log_odds_of_instance(model, e);
        int label = v >= rho.rho ? 1 : 0;
        if (label == 1) {
            ++report.positive_count;
            m.alpha = std::min(m.alpha, v);
            for (std::size_t i = 0; i < n; ++i)
                m.alpha_by_value[i][e[i]] = std::min(m.alpha_by_value[i][e[i]], v);
        } else {
            ++report.negative_count;
            m.beta = std::max(m.beta, v);
            for (std::size_t i = 0; i < n; ++i)
                m.beta_by_value[i][e[i]] = std::max(m.beta_by_value[i][e[i]], v);
        }
        if (with_table) report.table.push_back({e, v, label});
    } while (next_instance(e, cards));

    return report;
}

bool oracle_equivalent(const NaiveBayesModel& a, const NaiveBayesModel& b, Threshold rho) {
    if (a.attributes != b.attributes)
        throw IncompatibilityError("oracle_equivalent: attribute specs differ");
    check_guard(a);

    auto cards = a.cardinalities();
    Instance e(a.attribute_count(), 0);
    do {
        if (classify(a, rho, e) != classify(b, rho, e)) return false;
    } while (next_instance(e, cards));
    return true;
}

void write_table_csv(const NaiveBayesModel& model, Threshold rho, std::ostream& out) {
    check_guard(model);

    for (const auto& attr : model.attributes) out << attr.name << ',';
    out << "log_odds,label\n";

    auto cards = model.cardinalities();
    Instance e(model.attribute_count(), 0);
    do {
        for (std::size_t i = 0; i < e.size(); ++i)
            out << model.attributes[i].values[e[i]] << ',';
        double v = log_odds_of_instance(model, e);
        out << v << ',' << (v >= rho.rho ? 1 : 0) << '\n';
    } while (next_instance(e, cards));
}

} // namespace oddc
