#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cbn {

using NodeId = std::uint32_t;

/// Sorted, duplicate-free list of node indices.
using NodeSet = std::vector<NodeId>;

struct Edge {
    NodeId src = 0;
    NodeId dst = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Dependency graph of a conjunctive network. Nodes are dense 0..n-1; an edge
/// src -> dst means dst's update reads src. Self-loops are allowed, parallel
/// edges are not. Immutable once built.
class Digraph {
public:
    Digraph() = default;

    /// Throws specification_error on n == 0, out-of-range endpoints,
    /// duplicate edges, or a label list of the wrong length / with repeats.
    explicit Digraph(std::size_t node_count, std::vector<Edge> edges = {},
                     std::vector<std::string> labels = {});

    [[nodiscard]] std::size_t node_count() const noexcept { return out_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }

    /// All edges in (src, dst) lexicographic order.
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

    [[nodiscard]] std::span<const NodeId> out_neighbors(NodeId v) const { return out_.at(v); }
    [[nodiscard]] std::span<const NodeId> in_neighbors(NodeId v) const { return in_.at(v); }

    [[nodiscard]] bool has_edge(NodeId src, NodeId dst) const;

    [[nodiscard]] bool has_labels() const noexcept { return !labels_.empty(); }

    /// Display name; falls back to "v<index>" when no labels were supplied.
    [[nodiscard]] std::string label(NodeId v) const;
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
    [[nodiscard]] std::optional<NodeId> find(std::string_view label) const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.node_count() == b.node_count() && a.edges_ == b.edges_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<NodeId>> out_;
    std::vector<std::vector<NodeId>> in_;
    std::vector<std::string> labels_;
};

/// Format a node set using the graph's labels, e.g. "{v4, v8}".
[[nodiscard]] std::string format_nodes(const Digraph& net, std::span<const NodeId> nodes);

} // namespace cbn
