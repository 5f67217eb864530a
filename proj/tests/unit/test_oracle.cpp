#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace cbn;
using namespace cbn::testing;

TEST(Oracle, OrbitsOfEightNode) {
    const auto orbits = brute_enumerate_orbits(eight_node());
    ASSERT_EQ(orbits.size(), 3U);
    EXPECT_EQ(orbits[0], std::vector<CbnState>{CbnState(8)});
    EXPECT_EQ(orbits[1].size(), 2U);
    EXPECT_EQ(orbits[1][0].to_string(), "01010101");
    EXPECT_EQ(orbits[2], std::vector<CbnState>{CbnState(8, true)});
}

TEST(Oracle, OrbitsOfNonStronglyConnectedGraph) {
    // Two disjoint 2-cycles: 4 fixed points, 4 mixed 2-orbits, 2 orbits on the swapped pairs.
    const Digraph g(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
    const auto orbits = brute_enumerate_orbits(g);
    std::size_t states = 0;
    for (const auto& o : orbits) {
        states += o.size();
    }
    EXPECT_EQ(states, 16U);
    EXPECT_EQ(orbits.size(), 10U);
}

TEST(Oracle, BudgetIsEnforced) {
    const Digraph big = directed_cycle(30);
    EXPECT_THROW(static_cast<void>(brute_enumerate_orbits(big)), budget_error);
    OracleBudget small;
    small.max_reach_bits = 4;
    EXPECT_THROW(static_cast<void>(brute_state_controllable(directed_cycle(5), ControlSpec({0}), small)),
                 budget_error);
}

TEST(Oracle, ReachabilityOnCycle) {
    // Controlling one node of a 3-cycle reaches every state.
    const Digraph g = directed_cycle(3);
    const ReachabilityResult r = controlled_reachability(g, ControlSpec({0}), CbnState(3));
    EXPECT_EQ(r.reachable.size(), 8U);
    const ReachabilityResult none = controlled_reachability(g, ControlSpec{}, CbnState(3));
    EXPECT_EQ(none.reachable, std::vector<CbnState>{CbnState(3)});
}

TEST(Oracle, ControllabilityOfEightNode) {
    const Digraph g = eight_node();
    EXPECT_TRUE(brute_state_controllable(g, controls(g, {"v4", "v7"})));
    EXPECT_FALSE(brute_state_controllable(g, controls(g, {"v2"})));
    EXPECT_TRUE(brute_orbit_controllable(g, controls(g, {"v2"})));
    EXPECT_FALSE(brute_orbit_controllable(g, controls(g, {"v4"})));
}

TEST(Oracle, MinimalSets) {
    const Digraph g = eight_node();
    EXPECT_EQ(min_orbit_controlling_set(g).size(), 1U);
    EXPECT_EQ(min_state_controlling_set(g).size(), 2U);
    EXPECT_EQ(min_orbit_controlling_set(directed_cycle(4)), NodeSet{0});
    // Edgeless nodes are pinned to 1, so each one must be driven.
    EXPECT_EQ(min_state_controlling_set(Digraph(3)), (NodeSet{0, 1, 2}));
    EXPECT_THROW(static_cast<void>(min_orbit_controlling_set(Digraph(2, {{0, 1}}))), structure_error);
    const Digraph loop(1, {{0, 0}});
    EXPECT_EQ(min_orbit_controlling_set(loop), NodeSet{0});
    EXPECT_EQ(min_state_controlling_set(loop), NodeSet{0});
}

TEST(Oracle, SpecExamplesOnEightNode) {
    const Digraph g = eight_node();
    EXPECT_FALSE(brute_orbit_controllable(g, ControlSpec{}));
    EXPECT_FALSE(brute_orbit_controllable(g, controls(g, {"v3"})));
    const ReachabilityResult r = controlled_reachability(g, controls(g, {"v4", "v7"}), CbnState(8));
    EXPECT_EQ(r.reachable.size(), 256U);
    EXPECT_TRUE(std::binary_search(r.reachable.begin(), r.reachable.end(), r.from));
}
