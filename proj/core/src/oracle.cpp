#include "cbn/oracle.hpp"

#include "cbn/control.hpp"
#include "cbn/errors.hpp"
#include "cbn/graph_analysis.hpp"

#include <algorithm>
#include <functional>

namespace cbn {

namespace {

using Code = std::uint64_t;

void check_bits(std::size_t bits, std::size_t limit, const char* what) {
    if (bits > limit || bits > 62) {
        throw budget_error(std::string(what) + " needs " + std::to_string(bits) + " bits, budget allows " +
                           std::to_string(limit));
    }
}

// All 2^m ways of writing the control bits, as masks over the full state.
std::vector<Code> input_patterns(const ControlSpec& spec) {
    const std::size_t m = spec.size();
    std::vector<Code> out(std::size_t{1} << m, 0);
    for (std::size_t u = 0; u < out.size(); ++u) {
        for (std::size_t j = 0; j < m; ++j) {
            if ((u >> j) & 1U) {
                out[u] |= Code{1} << spec.nodes()[j];
            }
        }
    }
    return out;
}

struct ReachSearch {
    const PackedNetwork& packed;
    Code control_mask;
    const std::vector<Code>& patterns;
    std::vector<char> seen;
    std::vector<Code> frontier;
    std::size_t transitions = 0;
    std::size_t count = 0;

    ReachSearch(const PackedNetwork& p, Code mask, const std::vector<Code>& pats)
        : packed(p), control_mask(mask), patterns(pats), seen(std::size_t{1} << p.node_count(), 0) {}

    void visit(Code x) {
        if (!seen[x]) {
            seen[x] = 1;
            ++count;
            frontier.push_back(x);
        }
    }

    void run(Code x0) {
        std::fill(seen.begin(), seen.end(), 0);
        frontier.clear();
        transitions = 0;
        count = 0;
        for (Code u : patterns) {
            visit((x0 & ~control_mask) | u);
        }
        while (!frontier.empty()) {
            const Code x = frontier.back();
            frontier.pop_back();
            const Code base = packed.step(x) & ~control_mask;
            for (Code u : patterns) {
                ++transitions;
                visit(base | u);
            }
        }
    }
};

std::vector<std::vector<Code>> orbit_codes(const Digraph& net, const OracleBudget& budget) {
    check_bits(net.node_count(), budget.max_state_bits, "orbit enumeration");
    const PackedNetwork packed(net);
    const std::size_t total = std::size_t{1} << net.node_count();
    std::vector<std::uint32_t> stamp(total, 0);
    std::vector<std::vector<Code>> orbits;
    std::uint32_t walk = 0;
    for (Code start = 0; start < total; ++start) {
        if (stamp[start] != 0) {
            continue;
        }
        ++walk;
        Code x = start;
        while (stamp[x] == 0) {
            stamp[x] = walk;
            x = packed.step(x);
        }
        if (stamp[x] != walk) {
            continue;  // ran into a previously explored basin
        }
        std::vector<Code> cycle{x};
        for (Code y = packed.step(x); y != x; y = packed.step(y)) {
            cycle.push_back(y);
        }
        orbits.push_back(std::move(cycle));
    }
    return orbits;
}

template <typename Accept>
NodeSet smallest_subset(const Digraph& net, const OracleBudget& budget, Accept accept) {
    const std::size_t n = net.node_count();
    check_bits(n, budget.max_subset_nodes, "control set search");
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<NodeId> pick(k);
        for (std::size_t i = 0; i < k; ++i) {
            pick[i] = static_cast<NodeId>(i);
        }
        while (true) {
            if (accept(ControlSpec(pick))) {
                return pick;
            }
            // Next combination in lexicographic order.
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    throw consistency_error("no control set passed, not even the full node set");
}

} // namespace

std::vector<std::vector<CbnState>> brute_enumerate_orbits(const Digraph& net, const OracleBudget& budget) {
    std::vector<std::vector<CbnState>> out;
    for (const auto& codes : orbit_codes(net, budget)) {
        std::vector<CbnState> orbit;
        for (Code c : codes) {
            orbit.push_back(CbnState::from_code(net.node_count(), c));
        }
        const auto first = std::min_element(orbit.begin(), orbit.end());
        std::rotate(orbit.begin(), first, orbit.end());
        out.push_back(std::move(orbit));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ReachabilityResult controlled_reachability(const Digraph& net, const ControlSpec& spec, const CbnState& x0,
                                           const OracleBudget& budget) {
    spec.validate(net);
    if (x0.size() != net.node_count()) {
        throw dimension_error("initial state does not match the network");
    }
    check_bits(net.node_count() + spec.size(), budget.max_reach_bits, "controlled reachability");
    const PackedNetwork packed(net);
    const auto patterns = input_patterns(spec);
    ReachSearch search(packed, node_mask(spec.nodes()), patterns);
    search.run(x0.code());

    ReachabilityResult result;
    result.from = x0;
    result.transition_count = search.transitions;
    for (Code c = 0; c < search.seen.size(); ++c) {
        if (search.seen[c]) {
            result.reachable.push_back(CbnState::from_code(net.node_count(), c));
        }
    }
    std::sort(result.reachable.begin(), result.reachable.end());
    return result;
}

bool brute_state_controllable(const Digraph& net, const ControlSpec& spec, const OracleBudget& budget) {
    spec.validate(net);
    check_bits(net.node_count() + spec.size(), budget.max_reach_bits, "controlled reachability");
    const PackedNetwork packed(net);
    const auto patterns = input_patterns(spec);
    const Code mask = node_mask(spec.nodes());
    ReachSearch search(packed, mask, patterns);
    const std::size_t total = std::size_t{1} << net.node_count();
    for (Code x0 = 0; x0 < total; ++x0) {
        if ((x0 & mask) != 0) {
            continue;  // same start set as x0 with its control bits cleared
        }
        search.run(x0);
        if (search.count != total) {
            return false;
        }
    }
    return true;
}

bool brute_orbit_controllable(const Digraph& net, const ControlSpec& spec, const OracleBudget& budget) {
    spec.validate(net);
    if (!is_strongly_connected(net)) {
        throw structure_error("orbit controllability is defined for strongly connected graphs only");
    }
    check_bits(net.node_count() + spec.size(), budget.max_reach_bits, "controlled reachability");
    const auto orbits = orbit_codes(net, budget);
    const PackedNetwork packed(net);
    const auto patterns = input_patterns(spec);
    const Code mask = node_mask(spec.nodes());
    ReachSearch search(packed, mask, patterns);
    const std::size_t total = std::size_t{1} << net.node_count();
    for (Code x0 = 0; x0 < total; ++x0) {
        if ((x0 & mask) != 0) {
            continue;
        }
        search.run(x0);
        for (const auto& orbit : orbits) {
            if (std::none_of(orbit.begin(), orbit.end(), [&](Code c) { return search.seen[c] != 0; })) {
                return false;
            }
        }
    }
    return true;
}

NodeSet min_orbit_controlling_set(const Digraph& net, const OracleBudget& budget) {
    if (!is_strongly_connected(net)) {
        throw structure_error("orbit-controlling sets are defined for strongly connected graphs only");
    }
    return smallest_subset(net, budget,
                           [&](const ControlSpec& spec) { return is_acyclic(derived_graph(net, spec).graph); });
}

NodeSet min_state_controlling_set(const Digraph& net, const OracleBudget& budget) {
    return smallest_subset(net, budget,
                           [&](const ControlSpec& spec) { return is_state_controlling(net, spec).controlling; });
}

} // namespace cbn
