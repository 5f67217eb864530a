#pragma once

// Shared graphs and independent reference computations for the test suites.

#include <cbn/cbn.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace cbn::testing {

// v1..v8 at indices 0..7: a 6-cycle and a 4-cycle sharing v1 and v2.
inline Digraph eight_node() {
    std::vector<std::string> labels;
    for (int i = 1; i <= 8; ++i) {
        labels.push_back("v" + std::to_string(i));
    }
    return Digraph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 6}, {6, 7}, {7, 0}}, labels);
}

inline NodeId node(const Digraph& g, const char* label) { return *g.find(label); }

inline ControlSpec controls(const Digraph& g, std::initializer_list<const char*> labels) {
    std::vector<NodeId> nodes;
    for (const char* l : labels) {
        nodes.push_back(node(g, l));
    }
    return ControlSpec(nodes);
}

// Cycles of length 4, 8 and 12 through node 0; loop number 4.
inline Digraph period_four() {
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
                            {7, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 0}};
    return Digraph(12, edges);
}

inline Digraph directed_cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId v = 0; v < n; ++v) {
        edges.push_back({v, static_cast<NodeId>((v + 1) % n)});
    }
    return Digraph(n, edges);
}

inline std::vector<std::uint8_t> bits_of(const std::string& s) {
    std::vector<std::uint8_t> out;
    for (char c : s) {
        out.push_back(c == '1' ? 1 : 0);
    }
    return out;
}

// Reference loop number: gcd of every k <= n with a closed walk of length k.
// Every simple cycle has length <= n, and closed walks are sums of cycles.
inline std::size_t loop_number_by_traces(const Digraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<std::uint8_t>> reach(n, std::vector<std::uint8_t>(n, 0));
    for (const Edge& e : g.edges()) {
        reach[e.src][e.dst] = 1;
    }
    auto power = reach;
    std::size_t d = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (power[i][i]) {
                d = std::gcd(d, k);
                break;
            }
        }
        std::vector<std::vector<std::uint8_t>> next(n, std::vector<std::uint8_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t m = 0; m < n; ++m) {
                if (!power[i][m]) {
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    next[i][j] |= reach[m][j];
                }
            }
        }
        power = std::move(next);
    }
    return d;
}

// O(p^2) lexicographically least rotation.
inline std::vector<std::uint8_t> min_rotation_naive(const std::vector<std::uint8_t>& bits) {
    std::vector<std::uint8_t> best = bits;
    for (std::size_t r = 1; r < bits.size(); ++r) {
        std::vector<std::uint8_t> rot(bits.begin() + static_cast<long>(r), bits.end());
        rot.insert(rot.end(), bits.begin(), bits.begin() + static_cast<long>(r));
        best = std::min(best, rot);
    }
    return best;
}

inline std::uint64_t necklace_count_naive(std::size_t p) {
    std::vector<std::vector<std::uint8_t>> seen;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << p); ++code) {
        std::vector<std::uint8_t> w(p);
        for (std::size_t i = 0; i < p; ++i) {
            w[i] = (code >> i) & 1U;
        }
        seen.push_back(min_rotation_naive(w));
    }
    std::sort(seen.begin(), seen.end());
    return static_cast<std::uint64_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

// Expected state p-1 steps after the all-ones moment when `driver` plays w
// and every other control replays its natural update: nodes j steps
// downstream of the driver carry w[p-1-j], the rest stay 1.
inline CbnState expected_after_replay(const Digraph& g, NodeId driver, const Necklace& w) {
    const std::size_t p = w.length();
    CbnState x(g.node_count(), true);
    for (std::size_t j = 0; j < p; ++j) {
        for (NodeId v : out_neighbors_k(g, driver, j)) {
            x.set(v, w[p - 1 - j]);
        }
    }
    return x;
}

inline std::vector<ControlSpec> all_subsets(std::size_t n) {
    std::vector<ControlSpec> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<NodeId> nodes;
        for (NodeId v = 0; v < n; ++v) {
            if ((mask >> v) & 1U) {
                nodes.push_back(v);
            }
        }
        out.emplace_back(nodes);
    }
    return out;
}

} // namespace cbn::testing
