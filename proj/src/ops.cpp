#include "oddc/ops.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "oddc/errors.hpp"

namespace oddc {

namespace {

std::uint64_t pair_key(NodeId a, NodeId b) {
    return (std::uint64_t(a) << 32) | b;
}

void require_same_order(const Odd& a, const Odd& b, const char* op) {
    if (a.order() != b.order())
        throw IncompatibilityError(std::string(op) +
                                   ": diagrams have different attribute orders; recompile "
                                   "against a shared order");
}

} // namespace

bool equivalent(const Odd& a, const Odd& b) {
    require_same_order(a, b, "equivalent");
    Odd ra = reduce(a);
    Odd rb = reduce(b);

    std::unordered_map<std::uint64_t, bool> memo;
    auto descend = [&](auto&& self, NodeId u, NodeId v) -> bool {
        auto it = memo.find(pair_key(u, v));
        if (it != memo.end()) return it->second;
        const auto& nu = ra.node(u);
        const auto& nv = rb.node(v);
        bool result;
        if (nu.is_sink() && nv.is_sink()) {
            result = nu.sink_label == nv.sink_label;
        } else {
            std::uint32_t level = std::min(nu.level, nv.level);
            result = true;
            for (std::uint32_t e = 0; e < ra.order()[level].cardinality(); ++e) {
                NodeId cu = nu.level == level ? nu.children[e] : u;
                NodeId cv = nv.level == level ? nv.children[e] : v;
                if (!self(self, cu, cv)) {
                    result = false;
                    break;
                }
            }
        }
        memo.emplace(pair_key(u, v), result);
        return result;
    };
    return descend(descend, ra.root(), rb.root());
}

namespace {

using U128 = unsigned __int128;

std::uint64_t check_u64(U128 value, const char* what) {
    if (value > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error(std::string(what) + " exceeds 64-bit range");
    return static_cast<std::uint64_t>(value);
}

// Product of cardinalities of order positions [from, to).
U128 level_product(const Odd& odd, std::uint32_t from, std::uint32_t to) {
    U128 p = 1;
    for (std::uint32_t l = from; l < to; ++l) {
        p *= odd.order()[l].cardinality();
        if (p > (U128(1) << 100)) throw std::overflow_error("model count exceeds 64-bit range");
    }
    return p;
}

} // namespace

ModelCount model_count(const Odd& odd) {
    const auto n = odd.sink_level();
    // Bounding the whole instance space to uint64 keeps every partial
    // count (all of which it dominates) clear of __int128 overflow.
    check_u64(level_product(odd, 0, n), "instance count");
    std::vector<U128> pos(odd.nodes().size()), neg(odd.nodes().size());
    for (NodeId id = 0; id < odd.nodes().size(); ++id) {
        const auto& node = odd.node(id);
        if (node.is_sink()) {
            pos[id] = node.sink_label == 1;
            neg[id] = node.sink_label == 0;
            continue;
        }
        for (std::size_t e = 0; e < node.children.size(); ++e) {
            NodeId child = node.children[e];
            U128 skipped = level_product(odd, node.level + 1, odd.node(child).level);
            pos[id] += pos[child] * skipped;
            neg[id] += neg[child] * skipped;
        }
    }
    U128 above_root = level_product(odd, 0, odd.node(odd.root()).level);
    return ModelCount{check_u64(pos[odd.root()] * above_root, "positive count"),
                      check_u64(neg[odd.root()] * above_root, "negative count")};
}

namespace {

int apply_op(BoolOp op, int x, int y) {
    switch (op) {
    case BoolOp::op_and: return x & y;
    case BoolOp::op_or: return x | y;
    case BoolOp::op_xor: return x ^ y;
    }
    throw std::logic_error("apply: unknown operator");
}

} // namespace

Odd apply(const Odd& a, const Odd& b, BoolOp op) {
    require_same_order(a, b, "apply");
    const auto n = a.sink_level();

    std::vector<Odd::Node> arena;
    arena.push_back({n, 0, {}});
    arena.push_back({n, 1, {}});

    std::unordered_map<std::uint64_t, NodeId> memo;
    auto rec = [&](auto&& self, NodeId u, NodeId v) -> NodeId {
        auto it = memo.find(pair_key(u, v));
        if (it != memo.end()) return it->second;
        const auto& nu = a.node(u);
        const auto& nv = b.node(v);
        NodeId result;
        if (nu.is_sink() && nv.is_sink()) {
            result = static_cast<NodeId>(apply_op(op, nu.sink_label, nv.sink_label));
        } else {
            std::uint32_t level = std::min(nu.level, nv.level);
            std::vector<NodeId> children;
            children.reserve(a.order()[level].cardinality());
            for (std::uint32_t e = 0; e < a.order()[level].cardinality(); ++e) {
                NodeId cu = nu.level == level ? nu.children[e] : u;
                NodeId cv = nv.level == level ? nv.children[e] : v;
                children.push_back(self(self, cu, cv));
            }
            bool all_same = std::all_of(children.begin(), children.end(),
                                        [&](NodeId c) { return c == children[0]; });
            if (all_same) {
                result = children[0]; // reduced on the fly
            } else {
                result = static_cast<NodeId>(arena.size());
                arena.push_back({level, 0, std::move(children)});
            }
        }
        memo.emplace(pair_key(u, v), result);
        return result;
    };

    NodeId root = rec(rec, a.root(), b.root());
    return Odd::from_arena(a.order(), std::move(arena), root);
}

Disagreement disagreement(const Odd& a, const Odd& b, std::size_t limit) {
    Odd diff = apply(a, b, BoolOp::op_xor);
    Disagreement out;
    out.count = model_count(diff).positive;

    // Lexicographic DFS; skipped attributes take every value in turn.
    // apply() collapses constant subfunctions to sinks, so any decision
    // node below still reaches the 1-sink: pruning only at the 0-sink.
    const auto n = diff.sink_level();
    Instance path(n, 0);
    auto walk = [&](auto&& self, std::uint32_t level, NodeId id) -> bool {
        if (out.witnesses.size() >= limit) return false;
        const auto& node = diff.node(id);
        if (node.is_sink() && node.sink_label == 0) return true;
        if (level == n) {
            out.witnesses.push_back(path);
            return out.witnesses.size() < limit;
        }
        for (std::uint32_t e = 0; e < diff.order()[level].cardinality(); ++e) {
            path[level] = e;
            NodeId next = node.level == level ? node.children[e] : id;
            if (!self(self, level + 1, next)) return false;
        }
        return true;
    };
    if (limit > 0) walk(walk, 0, diff.root());
    return out;
}

namespace {

// Per-position value sets a violating instance may use.
using AllowedSets = std::vector<std::vector<bool>>;

// Is there an instance within `allowed` that the diagram maps to `target`?
bool sink_reachable(const Odd& odd, int target, const AllowedSets& allowed) {
    for (const auto& set : allowed)
        if (std::none_of(set.begin(), set.end(), [](bool b) { return b; }))
            return false; // some attribute has no admissible value at all

    enum : char { unknown, yes, no };
    std::vector<char> memo(odd.nodes().size(), unknown);
    auto reach = [&](auto&& self, NodeId id) -> bool {
        if (memo[id] != unknown) return memo[id] == yes;
        const auto& node = odd.node(id);
        bool ok = false;
        if (node.is_sink()) {
            ok = node.sink_label == target;
        } else {
            for (std::uint32_t e = 0; e < node.children.size() && !ok; ++e)
                ok = allowed[node.level][e] && self(self, node.children[e]);
        }
        memo[id] = ok ? yes : no;
        return ok;
    };
    return reach(reach, odd.root());
}

std::pair<std::size_t, std::uint32_t> resolve_literal(const Odd& odd,
                                                      const std::pair<std::string, std::string>& lit) {
    for (std::size_t i = 0; i < odd.order().size(); ++i) {
        const auto& spec = odd.order()[i];
        if (spec.name != lit.first) continue;
        auto it = std::find(spec.values.begin(), spec.values.end(), lit.second);
        if (it == spec.values.end())
            throw std::invalid_argument("attribute '" + lit.first + "' has no value '" +
                                        lit.second + "'");
        return {i, static_cast<std::uint32_t>(it - spec.values.begin())};
    }
    throw std::invalid_argument("unknown attribute '" + lit.first + "'");
}

} // namespace

bool all_instances_satisfy(const Odd& odd, Polarity polarity, const FeatureCondition& cond) {
    const int target = polarity == Polarity::positive ? 1 : 0;
    AllowedSets all_values;
    for (const auto& spec : odd.order())
        all_values.emplace_back(spec.cardinality(), true);

    if (cond.connective == FeatureCondition::Connective::conjunction) {
        // A violator falsifies some literal; the other attributes are free.
        for (const auto& lit : cond.literals) {
            auto [attr, value] = resolve_literal(odd, lit);
            AllowedSets allowed = all_values;
            allowed[attr][value] = false;
            if (sink_reachable(odd, target, allowed)) return false;
        }
        return true;
    }
    // Disjunction: a violator falsifies every literal simultaneously.
    AllowedSets allowed = all_values;
    for (const auto& lit : cond.literals) {
        auto [attr, value] = resolve_literal(odd, lit);
        allowed[attr][value] = false;
    }
    return !sink_reachable(odd, target, allowed);
}

std::string format_instance(const Odd& odd, const Instance& e) {
    std::ostringstream out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out << ',';
        out << odd.order()[i].name << '=' << odd.order()[i].values[e[i]];
    }
    return out.str();
}

} // namespace oddc
