#include "cbn/generators.hpp"

#include "cbn/errors.hpp"
#include "cbn/graph_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cbn {

Digraph random_digraph(std::size_t n, double edge_probability, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(edge_probability);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = 0; v < n; ++v) {
            if (coin(rng)) {
                edges.push_back({u, v});
            }
        }
    }
    return Digraph(n, std::move(edges));
}

Digraph random_strongly_connected(std::size_t n, double edge_probability, std::mt19937_64& rng) {
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::set<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.insert({order[i], order[(i + 1) % n]});
    }
    std::bernoulli_distribution coin(edge_probability);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = 0; v < n; ++v) {
            if (coin(rng)) {
                edges.insert({u, v});
            }
        }
    }
    return Digraph(n, {edges.begin(), edges.end()});
}

Digraph random_periodic(std::size_t n, std::size_t period, double edge_probability, std::mt19937_64& rng) {
    if (period == 0 || n < period) {
        throw specification_error("random_periodic needs 1 <= period <= n");
    }
    // Every class gets at least one node.
    std::vector<std::size_t> cls(n);
    for (std::size_t i = 0; i < n; ++i) {
        cls[i] = i < period ? i : std::uniform_int_distribution<std::size_t>(0, period - 1)(rng);
    }
    std::shuffle(cls.begin(), cls.end(), rng);

    std::bernoulli_distribution coin(edge_probability);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::set<Edge> edges;
        // Each node gets one random successor and one random predecessor in
        // the neighbouring classes, plus extra edges by coin flip.
        std::vector<std::vector<NodeId>> members(period);
        for (NodeId v = 0; v < n; ++v) {
            members[cls[v]].push_back(v);
        }
        auto pick = [&](const std::vector<NodeId>& pool) {
            return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        };
        for (NodeId v = 0; v < n; ++v) {
            edges.insert({v, pick(members[(cls[v] + 1) % period])});
            edges.insert({pick(members[(cls[v] + period - 1) % period]), v});
            for (NodeId w : members[(cls[v] + 1) % period]) {
                if (coin(rng)) {
                    edges.insert({v, w});
                }
            }
        }
        Digraph g(n, {edges.begin(), edges.end()});
        if (is_strongly_connected(g)) {
            return g;
        }
    }
    throw budget_error("could not draw a strongly connected periodic graph");
}

} // namespace cbn
