#pragma once

#include "cbn/digraph.hpp"
#include "cbn/dynamics.hpp"
#include "cbn/state.hpp"

#include <cstddef>
#include <vector>

namespace cbn {

/// Hard limits for the exhaustive searches. Exceeding one throws budget_error.
struct OracleBudget {
    std::size_t max_state_bits = 20;  // n for orbit enumeration
    std::size_t max_reach_bits = 24;  // n + |V*| for controlled reachability
    std::size_t max_subset_nodes = 20;
};

struct ReachabilityResult {
    CbnState from;
    std::vector<CbnState> reachable;  // sorted
    std::size_t transition_count = 0;
};

/// Every periodic orbit, found by simulating from all 2^n states. Each orbit
/// starts at its smallest state; the list is sorted.
[[nodiscard]] std::vector<std::vector<CbnState>> brute_enumerate_orbits(const Digraph& net,
                                                                       const OracleBudget& budget = {});

/// Closure of x0 under all input choices. Time 0 already applies the inputs,
/// so the start set is x0 with its control bits set every possible way.
[[nodiscard]] ReachabilityResult controlled_reachability(const Digraph& net, const ControlSpec& spec,
                                                         const CbnState& x0, const OracleBudget& budget = {});

/// Every state reachable from every initial state.
[[nodiscard]] bool brute_state_controllable(const Digraph& net, const ControlSpec& spec,
                                            const OracleBudget& budget = {});

/// From every initial state, every periodic orbit is hit. Throws
/// structure_error unless the graph is strongly connected.
[[nodiscard]] bool brute_orbit_controllable(const Digraph& net, const ControlSpec& spec,
                                            const OracleBudget& budget = {});

/// Smallest control set with acyclic derived graph (a minimum feedback vertex
/// set), first in lexicographic order among those of that size.
[[nodiscard]] NodeSet min_orbit_controlling_set(const Digraph& net, const OracleBudget& budget = {});

/// Smallest control set passing is_state_controlling, lexicographic tie-break.
[[nodiscard]] NodeSet min_state_controlling_set(const Digraph& net, const OracleBudget& budget = {});

} // namespace cbn
