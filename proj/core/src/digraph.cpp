#include "cbn/digraph.hpp"

#include "cbn/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace cbn {

Digraph::Digraph(std::size_t node_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : edges_(std::move(edges)), out_(node_count), in_(node_count), labels_(std::move(labels)) {
    if (node_count == 0) {
        throw specification_error("digraph needs at least one node");
    }
    if (!labels_.empty()) {
        if (labels_.size() != node_count) {
            throw specification_error("label count " + std::to_string(labels_.size()) + " does not match " +
                                      std::to_string(node_count) + " nodes");
        }
        std::unordered_set<std::string> seen;
        for (const auto& l : labels_) {
            if (!seen.insert(l).second) {
                throw specification_error("duplicate node label '" + l + "'");
            }
        }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.src >= node_count || e.dst >= node_count) {
            throw specification_error("edge (" + std::to_string(e.src) + ", " + std::to_string(e.dst) +
                                      ") references a node outside 0.." + std::to_string(node_count - 1));
        }
        if (i > 0 && edges_[i - 1] == e) {
            throw specification_error("duplicate edge (" + std::to_string(e.src) + ", " + std::to_string(e.dst) +
                                      ")");
        }
        out_[e.src].push_back(e.dst);
        in_[e.dst].push_back(e.src);
    }
    // out_ is sorted by construction; in_ needs it explicitly.
    for (auto& preds : in_) {
        std::sort(preds.begin(), preds.end());
    }
}

bool Digraph::has_edge(NodeId src, NodeId dst) const {
    const auto& succ = out_.at(src);
    return std::binary_search(succ.begin(), succ.end(), dst);
}

std::string Digraph::label(NodeId v) const {
    if (v >= node_count()) {
        throw specification_error("node " + std::to_string(v) + " out of range");
    }
    if (labels_.empty()) {
        return "v" + std::to_string(v);
    }
    return labels_[v];
}

std::optional<NodeId> Digraph::find(std::string_view name) const {
    for (NodeId v = 0; v < node_count(); ++v) {
        if (label(v) == name) {
            return v;
        }
    }
    return std::nullopt;
}

std::string format_nodes(const Digraph& net, std::span<const NodeId> nodes) {
    std::string out = "{";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += net.label(nodes[i]);
    }
    out += "}";
    return out;
}

} // namespace cbn
