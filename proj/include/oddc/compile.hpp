#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "oddc/interval.hpp"
#include "oddc/model.hpp"
#include "oddc/odd.hpp"

namespace oddc {

/// One interval-keyed node cache per depth 0..n. Within a cache the
/// intervals are pairwise disjoint (they are distinct equivalence classes
/// of prior log-odds), kept sorted by lower endpoint for binary-search
/// lookup. Cache n holds exactly the two sink intervals [rho, inf) and
/// (-inf, rho).
class DepthCaches {
public:
    explicit DepthCaches(std::size_t attribute_count)
        : layers_(attribute_count + 1) {}

    /// The unique cached node whose interval contains x, if any.
    /// Detecting two overlapping intervals during lookup is an internal
    /// invariant violation and throws std::logic_error.
    std::optional<NodeId> find(std::size_t depth, double x) const;

    /// Insert a node keyed by its interval; throws std::logic_error if the
    /// interval overlaps an existing entry or is empty.
    void insert(std::size_t depth, const Interval& interval, NodeId node);

    std::size_t size(std::size_t depth) const { return layers_[depth].size(); }
    std::size_t depth_count() const { return layers_.size(); }

private:
    struct Entry {
        double hi;
        NodeId node;
    };
    std::vector<std::map<double, Entry>> layers_; // lo -> (hi, node)
};

struct CompilationResult {
    Odd odd;
    /// I[root]: the prior log-odds equivalence interval of the classifier.
    Interval root_interval;
    /// I[child] for each value of the first attribute in the order
    /// (empty when the model has no attributes).
    std::vector<Interval> root_child_intervals;
    /// Cache sizes per depth 0..n after compilation.
    std::vector<std::size_t> cache_sizes;
    double wall_seconds = 0.0;
};

/// Build the ODD representing the model's classifier at threshold rho with
/// respect to the given attribute order (a permutation of 0..n-1 naming
/// model attribute indices, position by position).
///
/// The ODD evaluates exactly like classify() on every instance; nodes are
/// shared whenever two partial instantiations land in the same prior
/// equivalence interval of the remaining sub-classifier. Under the strict
/// zero policy a model carrying +inf and -inf weights in different
/// sources (prior or distinct attributes) is rejected here.
CompilationResult compile(const NaiveBayesModel& model, Threshold rho,
                          const std::vector<std::size_t>& order);

/// Convenience overload: ascending evidential impact order.
CompilationResult compile(const NaiveBayesModel& model, Threshold rho);

/// Upper bound on node count: sum over k = 0..n of
/// min(prod cards[0..k), prod cards[k..n) + 1), products saturating.
std::uint64_t size_bound(const std::vector<std::uint32_t>& cardinalities);

/// Bound for a model's cardinalities permuted by the given order.
std::uint64_t size_bound(const std::vector<std::uint32_t>& cardinalities,
                         const std::vector<std::size_t>& order);

} // namespace oddc
