#include "oddc/compile.hpp"

#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "oddc/errors.hpp"
#include "oddc/ordering.hpp"

namespace oddc {

std::optional<NodeId> DepthCaches::find(std::size_t depth, double x) const {
    if (std::isnan(x)) throw std::invalid_argument("DepthCaches::find: NaN query");
    const auto& layer = layers_.at(depth);
    auto it = layer.upper_bound(x); // first entry with lo > x
    if (it == layer.begin()) return std::nullopt;
    --it;
    if (!Interval{it->first, it->second.hi}.contains(x)) return std::nullopt;
    auto next = std::next(it);
    if (next != layer.end() && Interval{next->first, next->second.hi}.contains(x))
        throw std::logic_error("depth cache " + std::to_string(depth) +
                               ": overlapping intervals both contain " + std::to_string(x));
    return it->second.node;
}

void DepthCaches::insert(std::size_t depth, const Interval& interval, NodeId node) {
    if (interval.is_empty())
        throw std::logic_error("depth cache " + std::to_string(depth) +
                               ": refusing to insert an empty interval");
    auto& layer = layers_.at(depth);
    auto [it, inserted] = layer.emplace(interval.lo, Entry{interval.hi, node});
    if (!inserted)
        throw std::logic_error("depth cache " + std::to_string(depth) +
                               ": duplicate lower endpoint " + std::to_string(interval.lo));
    bool ok = true;
    if (it != layer.begin()) ok = std::prev(it)->second.hi <= interval.lo;
    if (ok) {
        auto next = std::next(it);
        if (next != layer.end()) ok = interval.hi <= next->first;
    }
    if (!ok) {
        layer.erase(it);
        throw std::logic_error("depth cache " + std::to_string(depth) +
                               ": interval " + to_string(interval) + " overlaps a neighbour");
    }
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// {x : x + w in iv}. For finite w this is iv shifted by -w. An infinite
/// weight forces the sum to the same infinity for every prior, so the
/// preimage is everything or nothing; mixed-sign sums are rejected before
/// compilation starts, so NaN cannot arise on a path.
Interval preimage_under_weight(const Interval& iv, double w) {
    if (std::isfinite(w)) return offset(iv, -w);
    if (w > 0) return iv.hi == kInf ? Interval::full() : Interval::empty();
    return iv.lo == -kInf ? Interval::full() : Interval::empty();
}

void reject_mixed_infinities(const NaiveBayesModel& model) {
    // Source index per attribute; the prior counts as its own source.
    constexpr std::size_t kPriorSource = static_cast<std::size_t>(-1);
    std::set<std::size_t> pos, neg;
    auto note = [&](std::size_t source, double w) {
        if (std::isnan(w)) throw ValidationError("model carries a NaN parameter");
        if (w == kInf) pos.insert(source);
        if (w == -kInf) neg.insert(source);
    };
    note(kPriorSource, model.prior_log_odds);
    for (std::size_t i = 0; i < model.weights.size(); ++i)
        for (double w : model.weights[i]) note(i, w);
    if (pos.empty() || neg.empty()) return;
    std::set<std::size_t> all(pos.begin(), pos.end());
    all.insert(neg.begin(), neg.end());
    if (all.size() > 1)
        throw ValidationError(
            "strict-zero model mixes +inf and -inf weights across different attributes; "
            "some instance would sum to NaN");
}

struct Compiler {
    const NaiveBayesModel& model;
    const std::vector<std::size_t>& order;
    double rho;
    DepthCaches caches;
    std::vector<Odd::Node> arena;
    std::vector<Interval> intervals;

    Compiler(const NaiveBayesModel& m, const std::vector<std::size_t>& ord, double r)
        : model(m), order(ord), rho(r), caches(ord.size()) {}

    // Algorithm’s recursive step; the caller has already missed cache k at v.
    NodeId build_sub_odd(std::size_t k, double v) {
        const auto& weights = model.weights[order[k]];
        Odd::Node node;
        node.level = static_cast<std::uint32_t>(k);
        node.children.reserve(weights.size());
        Interval interval = Interval::full();
        for (double w : weights) {
            double v_child = v + w;
            auto hit = caches.find(k + 1, v_child);
            NodeId child = hit ? *hit : build_sub_odd(k + 1, v_child);
            node.children.push_back(child);
            interval = intersect(interval, preimage_under_weight(intervals[child], w));
        }
        NodeId id = static_cast<NodeId>(arena.size());
        arena.push_back(std::move(node));
        intervals.push_back(interval);
        caches.insert(k, interval, id);
        assert(interval.contains(v) && "creating prior must lie in the node's interval");
        return id;
    }
};

} // namespace

CompilationResult compile(const NaiveBayesModel& model, Threshold rho,
                          const std::vector<std::size_t>& order) {
    const std::size_t n = model.attribute_count();
    if (order.size() != n)
        throw std::invalid_argument("compile: order length does not match the model");
    std::vector<bool> seen(n, false);
    for (std::size_t idx : order) {
        if (idx >= n || seen[idx])
            throw std::invalid_argument("compile: order is not a permutation of the attributes");
        seen[idx] = true;
    }
    if (!std::isfinite(rho.rho)) throw std::invalid_argument("compile: threshold must be finite");
    reject_mixed_infinities(model);

    auto t0 = std::chrono::steady_clock::now();

    Compiler c(model, order, rho.rho);
    // Sinks, with their end-condition intervals.
    c.arena.push_back({static_cast<std::uint32_t>(n), 0, {}});
    c.intervals.push_back(Interval::below(rho.rho));
    c.caches.insert(n, c.intervals[0], 0);
    c.arena.push_back({static_cast<std::uint32_t>(n), 1, {}});
    c.intervals.push_back(Interval::at_least(rho.rho));
    c.caches.insert(n, c.intervals[1], 1);

    auto hit = c.caches.find(0, model.prior_log_odds);
    NodeId root = hit ? *hit : c.build_sub_odd(0, model.prior_log_odds);

    CompilationResult result{
        .odd = [&] {
            std::vector<AttributeSpec> specs;
            specs.reserve(n);
            for (std::size_t idx : order) specs.push_back(model.attributes[idx]);
            return Odd::from_arena(std::move(specs), c.arena, root);
        }(),
        .root_interval = c.intervals[root],
        .root_child_intervals = {},
        .cache_sizes = {},
        .wall_seconds = 0.0,
    };
    if (!c.arena[root].is_sink())
        for (NodeId child : c.arena[root].children)
            result.root_child_intervals.push_back(c.intervals[child]);
    for (std::size_t k = 0; k <= n; ++k) result.cache_sizes.push_back(c.caches.size(k));

    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

CompilationResult compile(const NaiveBayesModel& model, Threshold rho) {
    return compile(model, rho, make_order(model, OrderingHeuristic::ascending()));
}

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        return std::numeric_limits<std::uint64_t>::max();
    return a + b;
}

} // namespace

std::uint64_t size_bound(const std::vector<std::uint32_t>& cardinalities) {
    const std::size_t n = cardinalities.size();
    // prefix[k] = ||E_1..E_k||, suffix[k] = ||E_{k+1}..E_n||, empty products = 1.
    std::vector<std::uint64_t> suffix(n + 1, 1);
    for (std::size_t k = n; k-- > 0;)
        suffix[k] = sat_mul(suffix[k + 1], cardinalities[k]);
    std::uint64_t total = 0;
    std::uint64_t prefix = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        total = sat_add(total, std::min(prefix, sat_add(suffix[k], 1)));
        if (k < n) prefix = sat_mul(prefix, cardinalities[k]);
    }
    return total;
}

std::uint64_t size_bound(const std::vector<std::uint32_t>& cardinalities,
                         const std::vector<std::size_t>& order) {
    if (order.size() != cardinalities.size())
        throw std::invalid_argument("size_bound: order length does not match");
    std::vector<std::uint32_t> permuted;
    permuted.reserve(cardinalities.size());
    for (std::size_t idx : order) permuted.push_back(cardinalities.at(idx));
    return size_bound(permuted);
}

} // namespace oddc
