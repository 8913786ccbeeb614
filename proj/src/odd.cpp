#include "oddc/odd.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "oddc/errors.hpp"

namespace oddc {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("Odd: " + msg);
}

} // namespace

Odd::Odd(std::vector<AttributeSpec> order, std::vector<Node> nodes, NodeId root)
    : order_(std::move(order)), nodes_(std::move(nodes)), root_(root) {
    require(!nodes_.empty(), "empty node store");
    require(root_ < nodes_.size(), "root id out of range");

    const auto n = static_cast<std::uint32_t>(order_.size());
    bool seen_sink[2] = {false, false};
    for (NodeId id = 0; id < nodes_.size(); ++id) {
        const Node& node = nodes_[id];
        if (node.is_sink()) {
            require(node.level == n, "sink level must equal the order length");
            require(node.sink_label <= 1, "sink label must be 0 or 1");
            require(!seen_sink[node.sink_label], "duplicate sink");
            seen_sink[node.sink_label] = true;
            continue;
        }
        require(node.level < n, "decision node level out of range");
        require(node.children.size() == order_[node.level].values.size(),
                "node at '" + order_[node.level].name + "' must have one child per value");
        for (NodeId child : node.children) {
            require(child < id, "children must precede their parents in the arena");
            require(nodes_[child].level > node.level,
                    "ordering condition violated at '" + order_[node.level].name + "'");
        }
    }

    // Reachability sweep; the arena may contain nothing else.
    std::vector<bool> reached(nodes_.size(), false);
    std::vector<NodeId> stack{root_};
    reached[root_] = true;
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        for (NodeId child : nodes_[id].children)
            if (!reached[child]) {
                reached[child] = true;
                stack.push_back(child);
            }
    }
    require(std::all_of(reached.begin(), reached.end(), [](bool b) { return b; }),
            "arena contains nodes unreachable from the root");
}

Odd Odd::from_arena(std::vector<AttributeSpec> order, std::vector<Node> nodes, NodeId root) {
    if (root >= nodes.size())
        return Odd(std::move(order), std::move(nodes), root); // constructor reports it

    std::vector<bool> reached(nodes.size(), false);
    std::vector<NodeId> stack{root};
    reached[root] = true;
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        for (NodeId child : nodes[id].children)
            if (!reached[child]) {
                reached[child] = true;
                stack.push_back(child);
            }
    }

    std::vector<NodeId> remap(nodes.size(), 0);
    std::vector<Node> kept;
    for (NodeId id = 0; id < nodes.size(); ++id) {
        if (!reached[id]) continue;
        remap[id] = static_cast<NodeId>(kept.size());
        Node node = std::move(nodes[id]);
        for (NodeId& child : node.children) child = remap[child];
        kept.push_back(std::move(node));
    }
    return Odd(std::move(order), std::move(kept), root < nodes.size() ? remap[root] : root);
}

int evaluate(const Odd& odd, const Instance& e) {
    if (e.size() != odd.order().size())
        throw std::invalid_argument("evaluate: instance length does not match the order");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] >= odd.order()[i].cardinality())
            throw std::invalid_argument("evaluate: value index out of range for attribute '" +
                                        odd.order()[i].name + "'");

    NodeId cur = odd.root();
    while (!odd.node(cur).is_sink())
        cur = odd.node(cur).children[e[odd.node(cur).level]];
    return odd.node(cur).sink_label;
}

Odd reduce(const Odd& odd) {
    // Children precede parents, so one ascending pass sees every child's
    // replacement before its parents.
    std::vector<NodeId> remap(odd.nodes().size(), 0);
    std::vector<Odd::Node> out;
    for (NodeId id = 0; id < odd.nodes().size(); ++id) {
        Odd::Node node = odd.node(id);
        if (!node.is_sink()) {
            for (NodeId& child : node.children) child = remap[child];
            bool all_same = std::all_of(node.children.begin(), node.children.end(),
                                        [&](NodeId c) { return c == node.children[0]; });
            if (all_same) {
                remap[id] = node.children[0];
                continue;
            }
        }
        remap[id] = static_cast<NodeId>(out.size());
        out.push_back(std::move(node));
    }
    return Odd::from_arena(odd.order(), std::move(out), remap[odd.root()]);
}

std::size_t node_count(const Odd& odd) {
    return odd.nodes().size();
}

namespace {

void check_token(const std::string& name, const char* what) {
    if (name.empty() || name.find_first_of(" \t\n:") != std::string::npos)
        throw std::invalid_argument(std::string("serialize: ") + what + " '" + name +
                                    "' must be non-empty and free of whitespace and ':'");
}

} // namespace

std::string export_dot(const Odd& odd) {
    std::ostringstream out;
    out << "digraph odd {\n";
    for (NodeId id = 0; id < odd.nodes().size(); ++id) {
        const auto& node = odd.node(id);
        if (node.is_sink())
            out << "  n" << id << " [shape=box, label=\"" << int(node.sink_label) << "\"];\n";
        else
            out << "  n" << id << " [shape=ellipse, label=\"" << odd.order()[node.level].name
                << "\"];\n";
    }
    for (NodeId id = 0; id < odd.nodes().size(); ++id) {
        const auto& node = odd.node(id);
        for (std::size_t v = 0; v < node.children.size(); ++v)
            out << "  n" << id << " -> n" << node.children[v] << " [label=\""
                << odd.order()[node.level].values[v] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string serialize(const Odd& odd) {
    std::ostringstream out;
    out << "order:";
    for (const auto& attr : odd.order()) {
        check_token(attr.name, "attribute name");
        out << ' ' << attr.name;
    }
    out << '\n';
    for (const auto& attr : odd.order()) {
        out << "attr " << attr.name;
        for (const auto& value : attr.values) {
            check_token(value, "value name");
            out << ' ' << value;
        }
        out << '\n';
    }
    for (NodeId id = 0; id < odd.nodes().size(); ++id) {
        const auto& node = odd.node(id);
        if (node.is_sink()) {
            out << "sink " << id << ' ' << int(node.sink_label) << '\n';
        } else {
            const auto& attr = odd.order()[node.level];
            out << "node " << id << ' ' << attr.name;
            for (std::size_t v = 0; v < node.children.size(); ++v)
                out << ' ' << attr.values[v] << ':' << node.children[v];
            out << '\n';
        }
    }
    out << "root " << odd.root() << '\n';
    return out.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

std::uint64_t parse_id(const std::string& tok, std::size_t line) {
    try {
        std::size_t pos = 0;
        unsigned long long id = std::stoull(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return id;
    } catch (const std::exception&) {
        throw ParseError("malformed node id '" + tok + "'", line);
    }
}

} // namespace

Odd deserialize(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    auto next_line = [&](std::vector<std::string>& tokens) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            tokens = split_ws(line);
            if (!tokens.empty()) return true;
        }
        return false;
    };

    std::vector<std::string> tokens;
    if (!next_line(tokens) || tokens[0] != "order:")
        throw ParseError("expected 'order:' header", lineno ? lineno : 1);

    std::vector<AttributeSpec> order;
    std::unordered_map<std::string, std::uint32_t> level_of;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!level_of.emplace(tokens[i], static_cast<std::uint32_t>(order.size())).second)
            throw ParseError("duplicate attribute '" + tokens[i] + "' in order", lineno);
        order.push_back({tokens[i], {}});
    }

    std::unordered_map<std::uint64_t, NodeId> id_map; // file id -> arena id
    std::vector<Odd::Node> nodes;
    bool have_root = false;
    NodeId root = 0;

    auto declare = [&](std::uint64_t file_id, Odd::Node node) {
        if (!id_map.emplace(file_id, static_cast<NodeId>(nodes.size())).second)
            throw ParseError("node id " + std::to_string(file_id) + " declared twice", lineno);
        nodes.push_back(std::move(node));
    };

    while (next_line(tokens)) {
        const std::string& kind = tokens[0];
        if (kind == "attr") {
            if (tokens.size() < 3)
                throw ParseError("attr line needs a name and at least one value", lineno);
            auto it = level_of.find(tokens[1]);
            if (it == level_of.end())
                throw ParseError("attr '" + tokens[1] + "' is not in the order", lineno);
            auto& spec = order[it->second];
            if (!spec.values.empty())
                throw ParseError("attr '" + tokens[1] + "' declared twice", lineno);
            spec.values.assign(tokens.begin() + 2, tokens.end());
        } else if (kind == "sink") {
            if (tokens.size() != 3 || (tokens[2] != "0" && tokens[2] != "1"))
                throw ParseError("expected 'sink <id> <0|1>'", lineno);
            Odd::Node node;
            node.level = static_cast<std::uint32_t>(order.size());
            node.sink_label = tokens[2] == "1" ? 1 : 0;
            declare(parse_id(tokens[1], lineno), std::move(node));
        } else if (kind == "node") {
            if (tokens.size() < 4)
                throw ParseError("expected 'node <id> <attr> <value>:<child>...'", lineno);
            auto it = level_of.find(tokens[2]);
            if (it == level_of.end())
                throw ParseError("unknown attribute '" + tokens[2] + "'", lineno);
            const auto& spec = order[it->second];
            if (spec.values.empty())
                throw ParseError("attribute '" + spec.name + "' used before its attr line",
                                 lineno);

            Odd::Node node;
            node.level = it->second;
            node.children.assign(spec.values.size(), 0);
            std::vector<bool> seen(spec.values.size(), false);
            for (std::size_t t = 3; t < tokens.size(); ++t) {
                auto colon = tokens[t].rfind(':');
                if (colon == std::string::npos || colon == 0 || colon + 1 == tokens[t].size())
                    throw ParseError("malformed edge '" + tokens[t] + "'", lineno);
                std::string value = tokens[t].substr(0, colon);
                auto vit = std::find(spec.values.begin(), spec.values.end(), value);
                if (vit == spec.values.end())
                    throw ParseError("attribute '" + spec.name + "' has no value '" + value +
                                     "'", lineno);
                std::size_t v = static_cast<std::size_t>(vit - spec.values.begin());
                if (seen[v])
                    throw ParseError("duplicate edge for value '" + value + "'", lineno);
                seen[v] = true;
                auto cit = id_map.find(parse_id(tokens[t].substr(colon + 1), lineno));
                if (cit == id_map.end())
                    throw ParseError("edge to undeclared node '" +
                                     tokens[t].substr(colon + 1) + "'", lineno);
                if (nodes[cit->second].level <= node.level)
                    throw ParseError("ordering condition violated: child must branch on a "
                                     "later attribute than '" + spec.name + "'", lineno);
                node.children[v] = cit->second;
            }
            if (std::find(seen.begin(), seen.end(), false) != seen.end())
                throw ParseError("node at '" + spec.name + "' needs one edge per value",
                                 lineno);
            declare(parse_id(tokens[1], lineno), std::move(node));
        } else if (kind == "root") {
            if (tokens.size() != 2) throw ParseError("expected 'root <id>'", lineno);
            auto rit = id_map.find(parse_id(tokens[1], lineno));
            if (rit == id_map.end()) throw ParseError("root refers to an undeclared node", lineno);
            root = rit->second;
            have_root = true;
            std::vector<std::string> rest;
            if (next_line(rest)) throw ParseError("unexpected content after 'root'", lineno);
        } else {
            throw ParseError("unknown line kind '" + kind + "'", lineno);
        }
    }
    if (!have_root) throw ParseError("missing 'root' line", lineno ? lineno : 1);
    for (const auto& spec : order)
        if (spec.values.empty())
            throw ParseError("attribute '" + spec.name + "' has no attr line", lineno);

    try {
        return Odd(std::move(order), std::move(nodes), root);
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), lineno);
    }
}

bool same_structure(const Odd& a, const Odd& b) {
    return a.order() == b.order() && a.root() == b.root() && a.nodes() == b.nodes();
}

} // namespace oddc
