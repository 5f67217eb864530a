#pragma once

#include "cbn/digraph.hpp"
#include "cbn/graph_analysis.hpp"
#include "cbn/necklace.hpp"
#include "cbn/state.hpp"

#include <span>
#include <vector>

namespace cbn {

struct OrbitEntry {
    Necklace necklace;
    std::vector<CbnState> states;  // one full period in time order
};

/// True iff x is constant on every class of the partition, i.e. x lies on a
/// periodic orbit of a strongly connected network.
[[nodiscard]] bool is_class_constant(const Partition& partition, const CbnState& x);

/// Periodic orbit matching `s`. The first state gives U_k the value
/// s[(-k) mod p*], so node 0 shows s[0], s[1], ... on successive steps.
/// Throws specification_error on a length mismatch and consistency_error if
/// the constructed state fails to recur within p* steps.
[[nodiscard]] std::vector<CbnState> orbit_from_necklace(const Digraph& net, const Partition& partition,
                                                        const Necklace& s);

/// Necklace read off node 0 over p* consecutive steps. Throws
/// validation_error if the states are not one full period of an orbit.
[[nodiscard]] Necklace necklace_from_orbit(const Digraph& net, const Partition& partition,
                                           std::span<const CbnState> orbit_states);

/// One entry per necklace of length p*, in necklace order.
[[nodiscard]] std::vector<OrbitEntry> enumerate_orbits(const Digraph& net);

} // namespace cbn
