#include "cbn/orbits.hpp"

#include "cbn/dynamics.hpp"
#include "cbn/errors.hpp"

namespace cbn {

bool is_class_constant(const Partition& partition, const CbnState& x) {
    for (const auto& cls : partition.classes) {
        for (NodeId v : cls) {
            if (x.test(v) != x.test(cls.front())) {
                return false;
            }
        }
    }
    return true;
}

std::vector<CbnState> orbit_from_necklace(const Digraph& net, const Partition& partition, const Necklace& s) {
    const std::size_t p = partition.loop_number;
    if (s.length() != p) {
        throw specification_error("necklace " + s.to_string() + " has length " + std::to_string(s.length()) +
                                  ", loop number is " + std::to_string(p));
    }
    if (partition.class_of.size() != net.node_count()) {
        throw specification_error("partition does not belong to this network");
    }
    // Values shift U_k -> U_{k+1} each step, so node 0 shows at time t what
    // U_{(-t) mod p} holds at time 0.
    CbnState x(net.node_count());
    for (NodeId v = 0; v < net.node_count(); ++v) {
        x.set(v, s[(p - partition.class_of[v]) % p]);
    }
    std::vector<CbnState> orbit{x};
    CbnState next = step(net, x);
    while (next != x) {
        if (orbit.size() >= p) {
            throw consistency_error("state built from necklace " + s.to_string() + " does not recur within " +
                                    std::to_string(p) + " steps");
        }
        orbit.push_back(next);
        next = step(net, next);
    }
    return orbit;
}

Necklace necklace_from_orbit(const Digraph& net, const Partition& partition, std::span<const CbnState> orbit_states) {
    const std::size_t p = partition.loop_number;
    const std::size_t len = orbit_states.size();
    if (len == 0) {
        throw validation_error("empty orbit");
    }
    for (std::size_t i = 0; i < len; ++i) {
        if (orbit_states[i].size() != net.node_count()) {
            throw dimension_error("orbit state has the wrong number of bits");
        }
        if (step(net, orbit_states[i]) != orbit_states[(i + 1) % len]) {
            throw validation_error("states do not form a periodic orbit (breaks at position " + std::to_string(i) +
                                   ")");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (orbit_states[j] == orbit_states[i]) {
                throw validation_error("orbit lists a state twice");
            }
        }
    }
    if (p % len != 0) {
        throw validation_error("orbit period " + std::to_string(len) + " does not divide loop number " +
                               std::to_string(p));
    }
    const NodeId base = partition.classes.front().front();
    std::vector<std::uint8_t> bits(p);
    for (std::size_t t = 0; t < p; ++t) {
        bits[t] = orbit_states[t % len].test(base) ? 1 : 0;
    }
    return Necklace(bits);
}

std::vector<OrbitEntry> enumerate_orbits(const Digraph& net) {
    const Partition partition = irreducible_components(net);
    std::vector<OrbitEntry> out;
    for (auto& s : enumerate_necklaces(partition.loop_number)) {
        auto states = orbit_from_necklace(net, partition, s);
        out.push_back({std::move(s), std::move(states)});
    }
    return out;
}

} // namespace cbn
