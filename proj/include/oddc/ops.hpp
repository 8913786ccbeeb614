#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oddc/odd.hpp"

namespace oddc {

/// Conjunction or disjunction of (attribute, value) features, by name.
struct FeatureCondition {
    enum class Connective { conjunction, disjunction };

    Connective connective = Connective::conjunction;
    std::vector<std::pair<std::string, std::string>> literals;
};

enum class BoolOp { op_and, op_or, op_xor };
enum class Polarity { positive, negative };

/// Do two diagrams over the same order compute the same function?
/// Simultaneous descent with memoization on node pairs, after reduction.
/// Mismatched orders raise IncompatibilityError: recompile, never reorder
/// silently.
bool equivalent(const Odd& a, const Odd& b);

struct ModelCount {
    std::uint64_t positive = 0;
    std::uint64_t negative = 0;
};

/// Exact positive/negative instance counts in one bottom-up pass; edges
/// that skip attributes weigh in the product of the skipped cardinalities.
/// Throws std::overflow_error past uint64 range.
ModelCount model_count(const Odd& odd);

/// Pointwise boolean combination of two same-order diagrams, memoized on
/// node pairs and reduced before returning.
Odd apply(const Odd& a, const Odd& b, BoolOp op);

struct Disagreement {
    std::uint64_t count = 0;
    std::vector<Instance> witnesses;
};

/// Instances the two diagrams label differently: exact count plus up to
/// `limit` witnesses in lexicographic order (attribute position, then
/// value index).
Disagreement disagreement(const Odd& a, const Odd& b, std::size_t limit);

/// Does every instance the diagram maps to the chosen polarity satisfy the
/// condition? One traversal testing whether the matching sink is reachable
/// under the condition's negation.
bool all_instances_satisfy(const Odd& odd, Polarity polarity, const FeatureCondition& cond);

/// Witness rendering: `attr=value,...` in order position order.
std::string format_instance(const Odd& odd, const Instance& e);

} // namespace oddc
