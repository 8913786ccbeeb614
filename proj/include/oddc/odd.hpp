#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddc/model.hpp"

namespace oddc {

using NodeId = std::uint32_t;

/// An Ordered Decision Diagram: a rooted DAG over an attribute order with
/// a 1-SINK and a 0-SINK. Decision nodes are labelled by their position in
/// the order and have one child per value; every edge goes strictly
/// downward in the order. Immutable after construction; nodes live in an
/// append-only arena in which children precede their parents, and every
/// node is reachable from the root.
class Odd {
public:
    struct Node {
        std::uint32_t level = 0;  // position in the order; order size for sinks
        std::uint8_t sink_label = 0;
        std::vector<NodeId> children; // empty for sinks, one per value otherwise

        bool is_sink() const { return children.empty(); }
        friend bool operator==(const Node&, const Node&) = default;
    };

    /// Validates the arena: child arities, the ordering condition
    /// (child level > node level), child-before-parent ids, sink
    /// uniqueness per label, and reachability of every node from the
    /// root. Throws std::invalid_argument on violation.
    Odd(std::vector<AttributeSpec> order, std::vector<Node> nodes, NodeId root);

    /// Same checks, but first drops unreachable nodes (remapping ids).
    /// Producers that may leave an orphaned sink use this.
    static Odd from_arena(std::vector<AttributeSpec> order, std::vector<Node> nodes, NodeId root);

    const std::vector<AttributeSpec>& order() const { return order_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(NodeId id) const { return nodes_[id]; }
    NodeId root() const { return root_; }
    std::uint32_t sink_level() const { return static_cast<std::uint32_t>(order_.size()); }

private:
    std::vector<AttributeSpec> order_;
    std::vector<Node> nodes_;
    NodeId root_ = 0;
};

/// Follow the instance's edge labels from the root; attributes skipped by
/// long edges are ignored. The instance is indexed by order position.
int evaluate(const Odd& odd, const Instance& e);

/// Eliminate every decision node whose outgoing edges all point to the
/// same child, in one bottom-up pass. Never grows the diagram; idempotent.
Odd reduce(const Odd& odd);

/// Reachable nodes including sinks (the arena holds exactly those).
std::size_t node_count(const Odd& odd);

/// Graphviz DOT text: circles for decision nodes, boxes for sinks,
/// value-labelled edges. Stable across runs.
std::string export_dot(const Odd& odd);

/// Line-oriented text form:
///   order: <name>...
///   attr <name> <value>...
///   sink <id> <0|1>
///   node <id> <attr-name> <value>:<child-id>...
///   root <id>
/// Nodes must be declared before they are referenced; root comes last.
std::string serialize(const Odd& odd);

/// Parse the text form; ParseError (with line number) on malformed input,
/// undeclared children, or ordering-condition violations.
Odd deserialize(const std::string& text);

/// Structural equality: same order and an identical arena (node-for-node).
bool same_structure(const Odd& a, const Odd& b);

} // namespace oddc
