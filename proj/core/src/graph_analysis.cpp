#include "cbn/graph_analysis.hpp"

#include "cbn/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>

namespace cbn {

namespace {

std::vector<char> reach(const Digraph& net, NodeId root, bool forward) {
    std::vector<char> seen(net.node_count(), 0);
    std::vector<NodeId> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (NodeId w : forward ? net.out_neighbors(v) : net.in_neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

void require_strongly_connected(const Digraph& net, const char* what) {
    if (!is_strongly_connected(net)) {
        throw structure_error(std::string(what) + " requires a strongly connected graph");
    }
}

NodeSet step_set(const Digraph& net, const NodeSet& current, bool forward) {
    std::vector<char> mark(net.node_count(), 0);
    for (NodeId v : current) {
        for (NodeId w : forward ? net.out_neighbors(v) : net.in_neighbors(v)) {
            mark[w] = 1;
        }
    }
    NodeSet next;
    for (NodeId v = 0; v < net.node_count(); ++v) {
        if (mark[v]) {
            next.push_back(v);
        }
    }
    return next;
}

NodeSet iterate_neighbors(const Digraph& net, std::span<const NodeId> from, std::size_t k, bool forward) {
    for (NodeId v : from) {
        if (v >= net.node_count()) {
            throw specification_error("node " + std::to_string(v) + " out of range");
        }
    }
    NodeSet current(from.begin(), from.end());
    std::sort(current.begin(), current.end());
    current.erase(std::unique(current.begin(), current.end()), current.end());
    for (std::size_t i = 0; i < k && !current.empty(); ++i) {
        current = step_set(net, current, forward);
    }
    return current;
}

// Rows are dynamic bitsets over the column index.
class BoolMatrix {
public:
    BoolMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

    void set(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
    [[nodiscard]] bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1U;
    }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    [[nodiscard]] BoolMatrix multiply(const BoolMatrix& rhs) const {
        BoolMatrix out(rows_, rhs.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t k = 0; k < cols_; ++k) {
                if (!get(r, k)) {
                    continue;
                }
                for (std::size_t w = 0; w < rhs.words_; ++w) {
                    out.data_[r * out.words_ + w] |= rhs.data_[k * rhs.words_ + w];
                }
            }
        }
        return out;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_;
    std::vector<std::uint64_t> data_;
};

} // namespace

bool is_strongly_connected(const Digraph& net) {
    const auto fwd = reach(net, 0, true);
    const auto bwd = reach(net, 0, false);
    return std::all_of(fwd.begin(), fwd.end(), [](char c) { return c != 0; }) &&
           std::all_of(bwd.begin(), bwd.end(), [](char c) { return c != 0; });
}

std::vector<long> bfs_levels(const Digraph& net, NodeId root) {
    std::vector<long> level(net.node_count(), -1);
    std::deque<NodeId> queue{root};
    level.at(root) = 0;
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        for (NodeId w : net.out_neighbors(v)) {
            if (level[w] < 0) {
                level[w] = level[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return level;
}

std::size_t loop_number(const Digraph& net) {
    require_strongly_connected(net, "loop number");
    const auto level = bfs_levels(net, 0);
    long g = 0;
    for (const Edge& e : net.edges()) {
        g = std::gcd(g, std::labs(level[e.src] + 1 - level[e.dst]));
    }
    if (g == 0) {
        throw structure_error("graph has no cycle, loop number undefined");
    }
    return static_cast<std::size_t>(g);
}

DerivedGraph derived_graph(const Digraph& net, const ControlSpec& spec) {
    spec.validate(net);
    DerivedGraph out;
    std::vector<Edge> kept;
    for (const Edge& e : net.edges()) {
        if (spec.contains(e.dst)) {
            out.removed_edges.push_back(e);
        } else {
            kept.push_back(e);
        }
    }
    out.graph = Digraph(net.node_count(), std::move(kept), net.labels());
    for (NodeId v = 0; v < net.node_count(); ++v) {
        if (out.graph.in_neighbors(v).empty()) {
            out.source_nodes.push_back(v);
        }
    }
    return out;
}

std::optional<std::vector<NodeId>> topological_order(const Digraph& net) {
    std::vector<std::size_t> indegree(net.node_count());
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (NodeId v = 0; v < net.node_count(); ++v) {
        indegree[v] = net.in_neighbors(v).size();
        if (indegree[v] == 0) {
            ready.push(v);
        }
    }
    std::vector<NodeId> order;
    order.reserve(net.node_count());
    while (!ready.empty()) {
        const NodeId v = ready.top();
        ready.pop();
        order.push_back(v);
        for (NodeId w : net.out_neighbors(v)) {
            if (--indegree[w] == 0) {
                ready.push(w);
            }
        }
    }
    if (order.size() != net.node_count()) {
        return std::nullopt;
    }
    return order;
}

bool is_acyclic(const Digraph& net) { return topological_order(net).has_value(); }

NodeSet out_neighbors_k(const Digraph& net, NodeId v, std::size_t k) {
    const NodeId from[] = {v};
    return iterate_neighbors(net, from, k, true);
}

NodeSet in_neighbors_k(const Digraph& net, NodeId v, std::size_t k) {
    const NodeId from[] = {v};
    return iterate_neighbors(net, from, k, false);
}

NodeSet out_neighbors_k(const Digraph& net, std::span<const NodeId> from, std::size_t k) {
    return iterate_neighbors(net, from, k, true);
}

NodeSet in_neighbors_k(const Digraph& net, std::span<const NodeId> from, std::size_t k) {
    return iterate_neighbors(net, from, k, false);
}

std::vector<std::size_t> longest_path_into(const Digraph& dag) {
    const auto order = topological_order(dag);
    if (!order) {
        throw structure_error("longest path requires an acyclic graph");
    }
    std::vector<std::size_t> dist(dag.node_count(), 0);
    for (NodeId v : *order) {
        for (NodeId w : dag.out_neighbors(v)) {
            dist[w] = std::max(dist[w], dist[v] + 1);
        }
    }
    return dist;
}

std::size_t longest_path_length(const Digraph& dag) {
    const auto dist = longest_path_into(dag);
    return *std::max_element(dist.begin(), dist.end());
}

namespace {

// Johnson (1975): for each start s, search circuits through s inside the
// strongly connected component of s in the subgraph induced by nodes >= s.
class CycleEnumerator {
public:
    CycleEnumerator(const Digraph& net, std::size_t cap)
        : net_(net), cap_(cap), blocked_(net.node_count(), 0), blocked_by_(net.node_count()),
          in_component_(net.node_count(), 0) {}

    std::vector<std::vector<NodeId>> run() {
        const auto n = static_cast<NodeId>(net_.node_count());
        for (start_ = 0; start_ < n; ++start_) {
            mark_component();
            if (!in_component_[start_]) {
                continue;
            }
            for (NodeId v = start_; v < n; ++v) {
                blocked_[v] = 0;
                blocked_by_[v].clear();
            }
            circuit(start_);
        }
        return std::move(cycles_);
    }

private:
    // Nodes >= start_ that reach start_ and are reachable from it without
    // passing through nodes < start_.
    void mark_component() {
        const auto n = net_.node_count();
        std::fill(in_component_.begin(), in_component_.end(), 0);
        std::vector<char> fwd(n, 0);
        std::vector<char> bwd(n, 0);
        auto sweep = [&](std::vector<char>& seen, bool forward) {
            std::vector<NodeId> stack{start_};
            seen[start_] = 1;
            while (!stack.empty()) {
                const NodeId v = stack.back();
                stack.pop_back();
                for (NodeId w : forward ? net_.out_neighbors(v) : net_.in_neighbors(v)) {
                    if (w >= start_ && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
        };
        sweep(fwd, true);
        sweep(bwd, false);
        bool has_cycle = net_.has_edge(start_, start_);
        for (NodeId v = start_; v < n; ++v) {
            in_component_[v] = fwd[v] && bwd[v];
            if (v != start_ && in_component_[v]) {
                has_cycle = true;
            }
        }
        if (!has_cycle) {
            in_component_[start_] = 0;
        }
    }

    void unblock(NodeId u) {
        blocked_[u] = 0;
        auto pending = std::move(blocked_by_[u]);
        blocked_by_[u].clear();
        for (NodeId w : pending) {
            if (blocked_[w]) {
                unblock(w);
            }
        }
    }

    bool circuit(NodeId v) {
        bool found = false;
        path_.push_back(v);
        blocked_[v] = 1;
        for (NodeId w : net_.out_neighbors(v)) {
            if (!in_component_[w]) {
                continue;
            }
            if (w == start_) {
                if (cycles_.size() >= cap_) {
                    throw budget_error("more than " + std::to_string(cap_) + " simple cycles");
                }
                cycles_.push_back(path_);
                found = true;
            } else if (!blocked_[w] && circuit(w)) {
                found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (NodeId w : net_.out_neighbors(v)) {
                if (!in_component_[w]) {
                    continue;
                }
                auto& list = blocked_by_[w];
                if (std::find(list.begin(), list.end(), v) == list.end()) {
                    list.push_back(v);
                }
            }
        }
        path_.pop_back();
        return found;
    }

    const Digraph& net_;
    std::size_t cap_;
    NodeId start_ = 0;
    std::vector<char> blocked_;
    std::vector<std::vector<NodeId>> blocked_by_;
    std::vector<char> in_component_;
    std::vector<NodeId> path_;
    std::vector<std::vector<NodeId>> cycles_;
};

} // namespace

std::vector<std::vector<NodeId>> enumerate_cycles(const Digraph& net, std::size_t cap) {
    return CycleEnumerator(net, cap).run();
}

Partition irreducible_components(const Digraph& net) {
    const std::size_t p = loop_number(net);
    const auto level = bfs_levels(net, 0);

    Partition part;
    part.loop_number = p;
    part.class_of.resize(net.node_count());
    part.classes.resize(p);
    std::vector<std::size_t> local(net.node_count());
    for (NodeId v = 0; v < net.node_count(); ++v) {
        const auto k = static_cast<std::size_t>(level[v]) % p;
        part.class_of[v] = k;
        local[v] = part.classes[k].size();
        part.classes[k].push_back(v);
    }

    // Class-to-class adjacency: shift[k] maps U_k to U_{k+1 mod p}.
    std::vector<BoolMatrix> shift;
    shift.reserve(p);
    for (std::size_t k = 0; k < p; ++k) {
        const auto& from = part.classes[k];
        const auto& to = part.classes[(k + 1) % p];
        BoolMatrix m(from.size(), to.size());
        for (std::size_t i = 0; i < from.size(); ++i) {
            for (NodeId w : net.out_neighbors(from[i])) {
                if (part.class_of[w] != (k + 1) % p) {
                    throw consistency_error("edge breaks the class shift; loop number is wrong");
                }
                m.set(i, local[w]);
            }
        }
        shift.push_back(std::move(m));
    }

    for (std::size_t k = 0; k < p; ++k) {
        BoolMatrix walk = shift[k];
        for (std::size_t j = 1; j < p; ++j) {
            walk = walk.multiply(shift[(k + j) % p]);
        }
        const auto& members = part.classes[k];
        std::vector<Edge> edges;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < members.size(); ++i) {
            labels.push_back(net.label(members[i]));
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (walk.get(i, j)) {
                    edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
                }
            }
        }
        part.components.emplace_back(members.size(), std::move(edges), std::move(labels));
    }
    return part;
}

CbnState restrict_state(const CbnState& x, std::span<const NodeId> nodes) {
    CbnState out(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        out.set(i, x.test(nodes[i]));
    }
    return out;
}

} // namespace cbn
