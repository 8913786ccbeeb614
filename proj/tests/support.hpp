#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "oddc/compile.hpp"
#include "oddc/model.hpp"
#include "oddc/model_io.hpp"
#include "oddc/odd.hpp"
#include "oddc/oracle.hpp"

namespace testing {

// Three-test medical screening network used as the worked example
// throughout the suites: class P in {yes, no} with Pr(yes) = .87 and
// tests U, B, S of varying reliability. At threshold rho = log(.9/.1)
// its margins and sensitivity intervals have known values.
inline oddc::ModelDocument pregnancy_document() {
    oddc::ModelDocument doc;
    doc.class_name = "P";
    doc.class_values = {"yes", "no"};
    doc.prior = 0.87;
    doc.attributes = {
        {"U", {"+ve", "-ve"}, {0.73, 0.27}, {0.107, 0.893}},
        {"B", {"+ve", "-ve"}, {0.64, 0.36}, {0.106, 0.894}},
        {"S", {"+ve", "-ve"}, {0.90, 0.10}, {0.01, 0.99}},
    };
    return doc;
}

inline oddc::NaiveBayesModel pregnancy_model() {
    return oddc::to_model(pregnancy_document());
}

inline oddc::Threshold pregnancy_threshold() {
    return oddc::Threshold::from_probability(0.9); // rho = 2.197...
}

// Random model with mixed cardinalities in [2, 4], instance space capped
// so exhaustive checks stay fast.
inline oddc::NaiveBayesModel random_mixed_model(std::uint64_t seed, std::size_t max_n = 12,
                                                std::uint64_t max_space = 1u << 16) {
    std::mt19937_64 rng(seed ^ 0xabcdef12345ull);
    std::uniform_int_distribution<std::size_t> n_dist(1, max_n);
    std::uniform_int_distribution<std::uint32_t> card_dist(2, 4);
    std::size_t n = n_dist(rng);
    std::vector<std::uint32_t> cards;
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t c = card_dist(rng);
        if (space * c > max_space) break;
        space *= c;
        cards.push_back(c);
    }
    if (cards.empty()) cards.push_back(2);
    return oddc::generate_random_model(cards.size(), cards, seed);
}

inline std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    return order;
}

inline std::vector<std::size_t> random_order(std::size_t n, std::uint64_t seed) {
    auto order = identity_order(n);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

// Model-indexed instance -> diagram-order-indexed instance.
inline oddc::Instance permute_instance(const oddc::Instance& e,
                                       const std::vector<std::size_t>& order) {
    oddc::Instance out(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) out[k] = e[order[k]];
    return out;
}

// Exhaustive check that the diagram computes classify() everywhere.
inline bool agrees_everywhere(const oddc::NaiveBayesModel& model, oddc::Threshold rho,
                              const std::vector<std::size_t>& order, const oddc::Odd& odd) {
    auto cards = model.cardinalities();
    oddc::Instance e(model.attribute_count(), 0);
    do {
        if (oddc::classify(model, rho, e) != oddc::evaluate(odd, permute_instance(e, order)))
            return false;
    } while (oddc::next_instance(e, cards));
    return true;
}

} // namespace testing
