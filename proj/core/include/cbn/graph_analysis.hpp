#pragma once

#include "cbn/digraph.hpp"
#include "cbn/dynamics.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cbn {

/// D with the in-edges of every control node removed.
struct DerivedGraph {
    Digraph graph;
    std::vector<Edge> removed_edges;
    NodeSet source_nodes;  // in-degree 0 in `graph`
};

/// Classes U_0..U_{p*-1} of the walk-length-mod-p* relation and the
/// irreducible component G_k on each class. Node j of components[k] is
/// classes[k][j] in the original graph.
struct Partition {
    std::size_t loop_number = 0;
    std::vector<std::size_t> class_of;
    std::vector<NodeSet> classes;
    std::vector<Digraph> components;
};

inline constexpr std::size_t default_cycle_cap = 1'000'000;

[[nodiscard]] bool is_strongly_connected(const Digraph& net);

/// BFS distance from `root` along out-edges; -1 for unreachable nodes.
[[nodiscard]] std::vector<long> bfs_levels(const Digraph& net, NodeId root);

/// gcd of all cycle lengths, computed as the gcd of level(u)+1-level(v) over
/// all edges of a BFS layering. Throws structure_error unless the graph is
/// strongly connected and has at least one cycle.
[[nodiscard]] std::size_t loop_number(const Digraph& net);

[[nodiscard]] DerivedGraph derived_graph(const Digraph& net, const ControlSpec& spec);

/// Kahn's algorithm, always emitting the smallest ready node; nullopt if the
/// graph has a cycle.
[[nodiscard]] std::optional<std::vector<NodeId>> topological_order(const Digraph& net);

[[nodiscard]] bool is_acyclic(const Digraph& net);

/// N_out^k(v): N_out^0(v) = {v}, N_out^k = union of out-neighbours of N_out^{k-1}.
[[nodiscard]] NodeSet out_neighbors_k(const Digraph& net, NodeId v, std::size_t k);
[[nodiscard]] NodeSet in_neighbors_k(const Digraph& net, NodeId v, std::size_t k);

/// Set versions of the above.
[[nodiscard]] NodeSet out_neighbors_k(const Digraph& net, std::span<const NodeId> from, std::size_t k);
[[nodiscard]] NodeSet in_neighbors_k(const Digraph& net, std::span<const NodeId> from, std::size_t k);

/// Number of edges on a longest path. Throws structure_error on a cycle.
[[nodiscard]] std::size_t longest_path_length(const Digraph& dag);

/// Longest path ending at each node (in edges). Throws structure_error on a cycle.
[[nodiscard]] std::vector<std::size_t> longest_path_into(const Digraph& dag);

/// All simple directed cycles (Johnson's algorithm). Each cycle is listed once,
/// starting at its smallest node. Throws budget_error once more than `cap`
/// cycles have been found.
[[nodiscard]] std::vector<std::vector<NodeId>> enumerate_cycles(const Digraph& net,
                                                                std::size_t cap = default_cycle_cap);

/// Decomposition into irreducible components. U_0 holds node 0 and class k
/// holds the nodes whose BFS level from node 0 is k mod p*. Throws
/// structure_error unless the graph is strongly connected with a cycle.
[[nodiscard]] Partition irreducible_components(const Digraph& net);

/// x restricted to `nodes`, in the order given.
[[nodiscard]] CbnState restrict_state(const CbnState& x, std::span<const NodeId> nodes);

} // namespace cbn
