#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "oddc/model.hpp"

namespace oddc {

/// Attribute-order selection for compilation.
struct OrderingHeuristic {
    enum class Kind { random, descending_impact, ascending_impact, explicit_order };

    Kind kind = Kind::ascending_impact;
    std::uint64_t seed = 0;                // random
    std::vector<std::size_t> permutation;  // explicit_order

    static OrderingHeuristic random(std::uint64_t seed) {
        return {Kind::random, seed, {}};
    }
    static OrderingHeuristic descending() { return {Kind::descending_impact, 0, {}}; }
    static OrderingHeuristic ascending() { return {Kind::ascending_impact, 0, {}}; }
    static OrderingHeuristic explicit_order(std::vector<std::size_t> permutation) {
        return {Kind::explicit_order, 0, std::move(permutation)};
    }

    /// Parse a CLI flag value: `random:<seed> | desc | asc | explicit:<comma-list>`.
    static OrderingHeuristic parse(std::string_view text);
};

/// Spread of an attribute's weights: max over values minus min over values.
/// For binary attributes this is |w_value - w_other|. Always >= 0.
double evidential_impact(const NaiveBayesModel& model, std::size_t attribute);

/// Permutation of attribute indices (position -> attribute). Impact sorts
/// are stable with ties broken by original index; random orders are
/// deterministic per seed.
std::vector<std::size_t> make_order(const NaiveBayesModel& model,
                                    const OrderingHeuristic& heuristic);

} // namespace oddc
