// Small worked cases per operation.

#include "network_document.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace cbn;
using namespace cbn::testing;

namespace {

CbnState bits(const char* s) { return CbnState::from_string(s); }

ControlSpec everything(const Digraph& g) { return ControlSpec::all(g.node_count()); }

} // namespace

TEST(Examples, Step) {
    const Digraph g = eight_node();
    EXPECT_TRUE(step(g, CbnState(8, true)).all());
    EXPECT_TRUE(step(g, CbnState(8)).none());
    EXPECT_EQ(step(directed_cycle(3), bits("101")), bits("110"));
}

TEST(Examples, ControlledStep) {
    const Digraph g = eight_node();
    const std::vector<std::uint8_t> y{1, 0, 1, 1, 0, 0, 1, 0};
    EXPECT_EQ(controlled_step(g, everything(g), bits("00000000"), y), bits("10110010"));
    const CbnState x = bits("11010110");
    EXPECT_EQ(controlled_step(g, ControlSpec{}, x, {}), step(g, x));
    const std::vector<std::uint8_t> in{0, 1};
    EXPECT_EQ(controlled_step(g, controls(g, {"v4", "v7"}), CbnState(8, true), in), bits("11101111"));
    EXPECT_THROW(static_cast<void>(controlled_step(g, controls(g, {"v4"}), x, in)), specification_error);
}

TEST(Examples, SimulateAndFindOrbit) {
    const Digraph c3 = directed_cycle(3);
    EXPECT_EQ(simulate(c3, bits("101"), 0).states, std::vector<CbnState>{bits("101")});
    EXPECT_EQ(simulate(c3, bits("101"), 3).back(), bits("101"));
    for (const auto& x : simulate(eight_node(), CbnState(8, true), 5).states) {
        EXPECT_TRUE(x.all());
    }
    const OrbitInfo ones = find_orbit(c3, CbnState(3, true));
    EXPECT_EQ(ones.transient_length, 0U);
    EXPECT_EQ(ones.period, 1U);
    const OrbitInfo rot = find_orbit(c3, bits("100"));
    EXPECT_EQ(rot.transient_length, 0U);
    EXPECT_EQ(rot.period, 3U);
    EXPECT_EQ(find_orbit(directed_cycle(2), bits("10")).period, 2U);
    const OrbitInfo tail = find_orbit(Digraph(3, {{0, 1}, {1, 2}, {2, 2}}), bits("000"));
    EXPECT_EQ(tail.transient_length, 2U);
    EXPECT_EQ(tail.orbit_states, std::vector<CbnState>{bits("110")});
}

TEST(Examples, RunSchedule) {
    const Digraph g = eight_node();
    const ControlSpec spec = controls(g, {"v4", "v7"});
    ControlSchedule zero(spec, 0, false);
    EXPECT_EQ(run_schedule(g, spec, CbnState(8, true), zero).states, std::vector<CbnState>{bits("11101101")});

    ControlSchedule table(spec, 5);
    table.set_row(0, "011100");
    table.set_row(1, "101110");
    EXPECT_EQ(run_schedule(g, spec, bits("01100110"), table).back(), bits("11000101"));

    const ControlSpec left = controls(g, {"v2"});
    for (std::uint64_t code = 0; code < 256; ++code) {
        EXPECT_TRUE(run_schedule(g, left, CbnState::from_code(8, code), ControlSchedule(left, 7)).back().all());
    }
}

TEST(Examples, StrongConnectivity) {
    EXPECT_TRUE(is_strongly_connected(eight_node()));
    EXPECT_FALSE(is_strongly_connected(Digraph(2)));
    EXPECT_TRUE(is_strongly_connected(Digraph(1, {{0, 0}})));
}

TEST(Examples, DerivedGraphExtremes) {
    const Digraph g = eight_node();
    EXPECT_EQ(derived_graph(g, ControlSpec{}).graph, g);
    EXPECT_EQ(derived_graph(g, everything(g)).graph.edge_count(), 0U);
    const DerivedGraph left = derived_graph(g, controls(g, {"v2"}));
    EXPECT_EQ(left.source_nodes, NodeSet{1});
    EXPECT_TRUE(is_acyclic(left.graph));
    EXPECT_TRUE(is_acyclic(Digraph(4)));
    EXPECT_FALSE(is_acyclic(directed_cycle(3)));
}

TEST(Examples, Neighbourhoods) {
    const Digraph g = eight_node();
    const Digraph right = derived_graph(g, controls(g, {"v4", "v7"})).graph;
    EXPECT_EQ(out_neighbors_k(right, node(g, "v7"), 2), NodeSet{0});
    EXPECT_EQ(out_neighbors_k(right, node(g, "v4"), 3), NodeSet{0});
    EXPECT_EQ(in_neighbors_k(g, 4, 0), NodeSet{4});
    EXPECT_EQ(in_neighbors_k(directed_cycle(3), 0, 1), NodeSet{2});
}

TEST(Examples, LongestPath) {
    EXPECT_EQ(longest_path_length(Digraph(3)), 0U);
    EXPECT_EQ(longest_path_length(Digraph(4, {{0, 1}, {1, 2}, {2, 3}})), 3U);
    EXPECT_EQ(longest_path_into(Digraph(3, {{0, 2}, {0, 1}, {1, 2}})), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Examples, CycleEnumeration) {
    const Digraph g = eight_node();
    auto cycles = enumerate_cycles(g);
    for (auto& c : cycles) {
        std::sort(c.begin(), c.end());
    }
    std::sort(cycles.begin(), cycles.end());
    EXPECT_EQ(cycles, (std::vector<std::vector<NodeId>>{{0, 1, 2, 3, 4, 5}, {0, 1, 6, 7}}));
    EXPECT_TRUE(enumerate_cycles(Digraph(3, {{0, 1}, {1, 2}})).empty());
    EXPECT_EQ(enumerate_cycles(Digraph(1, {{0, 0}})), (std::vector<std::vector<NodeId>>{{0}}));
}

TEST(Examples, PartitionShapes) {
    const Partition ring = irreducible_components(directed_cycle(5));
    ASSERT_EQ(ring.loop_number, 5U);
    for (std::size_t k = 0; k < 5; ++k) {
        EXPECT_EQ(ring.classes[k], NodeSet{static_cast<NodeId>(k)});
        EXPECT_EQ(ring.components[k], Digraph(1, {{0, 0}}));
    }
    const Digraph g = period_four();
    const Partition four = irreducible_components(g);
    ASSERT_EQ(four.loop_number, 4U);
    EXPECT_EQ(four.classes[0], (NodeSet{0, 4, 8}));
    EXPECT_EQ(four.classes[1], (NodeSet{1, 5, 9}));
    EXPECT_EQ(four.classes[3], (NodeSet{3, 7, 11}));
    for (const Edge& e : g.edges()) {
        EXPECT_EQ(four.class_of[e.dst], (four.class_of[e.src] + 1) % 4);
    }
}

TEST(Examples, Necklaces) {
    EXPECT_EQ(necklace_canonical("1111").to_string(), "1111");
    EXPECT_EQ(enumerate_necklaces(1), (std::vector<Necklace>{Necklace::parse("0"), Necklace::parse("1")}));
    std::vector<std::string> three;
    for (const auto& s : enumerate_necklaces(3)) {
        three.push_back(s.to_string());
    }
    EXPECT_EQ(three, (std::vector<std::string>{"000", "001", "011", "111"}));
}

TEST(Examples, OrbitsFromNecklaces) {
    const Digraph g = eight_node();
    const Partition part = irreducible_components(g);
    EXPECT_EQ(orbit_from_necklace(g, part, Necklace::parse("11")), std::vector<CbnState>{CbnState(8, true)});
    EXPECT_EQ(orbit_from_necklace(g, part, Necklace::parse("00")), std::vector<CbnState>{CbnState(8)});
    const std::vector<CbnState> ones{CbnState(8, true)};
    EXPECT_EQ(necklace_from_orbit(g, part, ones).to_string(), "11");
    const std::vector<CbnState> zeros{CbnState(8)};
    EXPECT_EQ(necklace_from_orbit(g, part, zeros).to_string(), "00");
    EXPECT_EQ(enumerate_orbits(directed_cycle(3)).size(), 4U);
    EXPECT_EQ(enumerate_orbits(Digraph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 0}})).size(), 2U);
}

TEST(Examples, ControllabilityChecks) {
    const Digraph g = eight_node();
    EXPECT_FALSE(cycle_intersection_check(g, controls(g, {"v3"})));
    EXPECT_TRUE(cycle_intersection_check(g, controls(g, {"v2"})));
    const StateControlVerdict all = is_state_controlling(g, everything(g));
    EXPECT_TRUE(all.controlling);
    for (NodeId v = 0; v < 8; ++v) {
        EXPECT_EQ(*all.witnesses[v], (Witness{v, 0}));
    }
}

TEST(Examples, SynthesisCorners) {
    const Digraph g = eight_node();
    const auto ones = synthesize_orbit_control(g, controls(g, {"v2"}), Necklace::parse("11"), CbnState(8));
    EXPECT_TRUE(run_schedule(g, controls(g, {"v2"}), CbnState(8), ones.schedule).back().all());
    EXPECT_EQ(ones.schedule.row_string(0), "11111111");

    const auto top = synthesize_state_control(g, controls(g, {"v4", "v7"}), CbnState(8, true));
    EXPECT_EQ(top.schedule.row_string(0), "111111");
    EXPECT_EQ(top.schedule.row_string(1), "111111");
}

TEST(Examples, Expressions) {
    const Digraph g = eight_node();
    const ControlSpec spec = controls(g, {"v4", "v7"});
    const NodeId v4 = node(g, "v4");
    const NodeId v7 = node(g, "v7");
    EXPECT_EQ(control_expression(g, spec, node(g, "v2"), 5).factors,
              (std::vector<ExpressionFactor>{{v4, 4}, {v7, 3}}));
    EXPECT_EQ(control_expression(g, spec, v4, 5).factors, (std::vector<ExpressionFactor>{{v4, 0}}));
}

TEST(Examples, OracleCorners) {
    EXPECT_EQ(brute_enumerate_orbits(Digraph(2)), (std::vector<std::vector<CbnState>>{{CbnState(2, true)}}));
    EXPECT_EQ(brute_enumerate_orbits(directed_cycle(3)).size(), 4U);
    const Digraph g = eight_node();
    EXPECT_EQ(controlled_reachability(g, everything(g), bits("01100110")).reachable.size(), 256U);
    const ReachabilityResult free_run = controlled_reachability(g, ControlSpec{}, bits("11011111"));
    const Trajectory traj = simulate(g, bits("11011111"), 20);
    std::vector<CbnState> closure(traj.states.begin(), traj.states.end());
    std::sort(closure.begin(), closure.end());
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    EXPECT_EQ(free_run.reachable, closure);
    EXPECT_TRUE(brute_state_controllable(g, everything(g)));

    const Digraph two = directed_cycle(2);
    EXPECT_EQ(min_orbit_controlling_set(two).size(), 1U);
    // v1 copies v0, so driving v0 alone sets both.
    EXPECT_EQ(min_state_controlling_set(two), NodeSet{0});
    EXPECT_TRUE(brute_state_controllable(two, ControlSpec({0})));
}

TEST(Examples, DocumentErrorsNameTheLabel) {
    try {
        static_cast<void>(cli::parse_network(R"({"nodes": ["a"], "edges": [["a", "ghost"]]})"));
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_NE(std::string(e.what()).find("ghost"), std::string::npos);
    }
}
