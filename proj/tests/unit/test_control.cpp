#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace cbn;
using namespace cbn::testing;

TEST(OrbitControl, EightNodeSets) {
    const Digraph g = eight_node();
    EXPECT_TRUE(is_orbit_controlling(g, controls(g, {"v2"})));
    EXPECT_TRUE(is_orbit_controlling(g, controls(g, {"v1"})));
    EXPECT_TRUE(is_orbit_controlling(g, controls(g, {"v4", "v7"})));
    EXPECT_FALSE(is_orbit_controlling(g, controls(g, {"v4"})));
    EXPECT_FALSE(is_orbit_controlling(g, ControlSpec{}));
    EXPECT_TRUE(cycle_intersection_check(g, controls(g, {"v3", "v8"})));
    EXPECT_FALSE(cycle_intersection_check(g, controls(g, {"v3", "v4"})));
}

TEST(OrbitControl, NeedsStrongConnectivity) {
    const Digraph g(3, {{0, 1}, {1, 2}});
    EXPECT_THROW(static_cast<void>(is_orbit_controlling(g, ControlSpec({0}))), structure_error);
}

TEST(StateControl, WitnessesForRightConfiguration) {
    const Digraph g = eight_node();
    const StateControlVerdict v = is_state_controlling(g, controls(g, {"v4", "v7"}));
    ASSERT_TRUE(v.controlling);
    const NodeId v4 = node(g, "v4");
    const NodeId v7 = node(g, "v7");
    const std::vector<Witness> expected{{v7, 2}, {v7, 3}, {v7, 4}, {v4, 0}, {v4, 1}, {v4, 2}, {v7, 0}, {v7, 1}};
    for (NodeId i = 0; i < 8; ++i) {
        ASSERT_TRUE(v.witnesses[i].has_value()) << g.label(i);
        EXPECT_EQ(*v.witnesses[i], expected[i]) << g.label(i);
    }
}

TEST(StateControl, LeftConfigurationFailsAtV4) {
    const Digraph g = eight_node();
    const StateControlVerdict v = is_state_controlling(g, controls(g, {"v2"}));
    EXPECT_FALSE(v.controlling);
    EXPECT_TRUE(v.derived_acyclic);
    EXPECT_NE(std::find(v.unwitnessed.begin(), v.unwitnessed.end(), node(g, "v4")), v.unwitnessed.end());
    EXPECT_THROW(static_cast<void>(synthesize_state_control(g, controls(g, {"v2"}), CbnState(8))),
                 not_controllable_error);
}

TEST(StateControl, CyclicDerivedGraph) {
    const Digraph g = eight_node();
    const StateControlVerdict v = is_state_controlling(g, controls(g, {"v4"}));
    EXPECT_FALSE(v.controlling);
    EXPECT_FALSE(v.derived_acyclic);
}

TEST(StateSynthesis, GoldenSchedule) {
    const Digraph g = eight_node();
    const ControlSpec spec = controls(g, {"v4", "v7"});
    const CbnState target = CbnState::from_string("11000101");
    const SynthesisReport r = synthesize_state_control(g, spec, target);
    EXPECT_EQ(r.schedule.horizon(), 5U);
    EXPECT_EQ(r.entry_time, 5U);
    EXPECT_EQ(r.schedule.row_string(0), "011100");
    EXPECT_EQ(r.schedule.row_string(1), "101110");
    for (std::uint64_t code = 0; code < 256; ++code) {
        EXPECT_EQ(run_schedule(g, spec, CbnState::from_code(8, code), r.schedule).back(), target);
    }
}

TEST(StateSynthesis, RandomTargetsFromAllStarts) {
    std::mt19937_64 rng(31);
    int checked = 0;
    while (checked < 40) {
        const std::size_t n = 3 + rng() % 5;
        const Digraph g = random_digraph(n, 0.25, rng);
        ControlSpec spec = all_subsets(n)[rng() % (std::size_t{1} << n)];
        if (!is_state_controlling(g, spec).controlling) {
            continue;
        }
        ++checked;
        const CbnState target = CbnState::from_code(n, rng() & ((1U << n) - 1));
        const SynthesisReport r = synthesize_state_control(g, spec, target);
        for (std::uint64_t code = 0; code < (1U << n); ++code) {
            EXPECT_EQ(run_schedule(g, spec, CbnState::from_code(n, code), r.schedule).back(), target);
        }
    }
}

TEST(Expressions, ProductOverPaths) {
    const Digraph g = eight_node();
    const ControlSpec spec = controls(g, {"v4", "v7"});
    // v1 at time 5 reads v4 three steps back through v6 and v7 two steps back through v8.
    const ControlExpression e = control_expression(g, spec, node(g, "v1"), 5);
    EXPECT_EQ(e.factors, (std::vector<ExpressionFactor>{{3, 3}, {6, 2}}));
    EXPECT_THROW(static_cast<void>(control_expression(g, spec, node(g, "v3"), 2)), specification_error);
    ControlSchedule sched(spec, 5);
    EXPECT_TRUE(evaluate_expression(e, sched));
    sched.set(2, 0, false);
    EXPECT_FALSE(evaluate_expression(e, sched));
}

TEST(OrbitSynthesis, LeftGolden) {
    const Digraph g = eight_node();
    const SynthesisReport r = synthesize_orbit_control(g, controls(g, {"v2"}), Necklace::parse("01"), CbnState(8));
    EXPECT_EQ(r.schedule.row_string(0), "11111101");
    EXPECT_EQ(r.tau, 6U);
    EXPECT_EQ(r.entry_time, 13U);
}

TEST(OrbitSynthesis, RightGoldenWithV7Driver) {
    const Digraph g = eight_node();
    const SynthesisReport r = synthesize_orbit_control(g, controls(g, {"v4", "v7"}), Necklace::parse("01"),
                                                       CbnState(8), {node(g, "v7")});
    EXPECT_EQ(r.schedule.row_string(0), "11111111");
    EXPECT_EQ(r.schedule.row_string(1), "11111101");
    EXPECT_EQ(r.tau, 6U);
}

TEST(OrbitSynthesis, RejectsBadRequests) {
    const Digraph g = eight_node();
    EXPECT_THROW(static_cast<void>(synthesize_orbit_control(g, controls(g, {"v4"}), Necklace::parse("01"),
                                                            CbnState(8))),
                 not_controllable_error);
    EXPECT_THROW(static_cast<void>(synthesize_orbit_control(g, controls(g, {"v2"}), Necklace::parse("011"),
                                                            CbnState(8))),
                 specification_error);
    EXPECT_THROW(static_cast<void>(synthesize_orbit_control(g, controls(g, {"v2"}), Necklace::parse("01"),
                                                            CbnState(8), {node(g, "v3")})),
                 specification_error);
}

TEST(OrbitSynthesis, EveryNecklaceFromRandomStarts) {
    std::mt19937_64 rng(41);
    int checked = 0;
    while (checked < 60) {
        const std::size_t period = 1 + rng() % 4;
        const Digraph g = random_periodic(period + rng() % 6, period, 0.3, rng);
        const std::size_t n = g.node_count();
        const ControlSpec spec = all_subsets(n)[rng() % (std::size_t{1} << n)];
        if (!is_orbit_controlling(g, spec)) {
            continue;
        }
        ++checked;
        const Partition part = irreducible_components(g);
        const std::size_t p = part.loop_number;
        for (const auto& s : enumerate_necklaces(p)) {
            const CbnState x0 = CbnState::from_code(n, rng() & ((1U << n) - 1));
            const SynthesisReport r = synthesize_orbit_control(g, spec, s, x0);
            EXPECT_LE(r.schedule.horizon(), n + p - 1);
            const Trajectory traj = run_schedule(g, spec, x0, r.schedule);
            EXPECT_EQ(traj.back(), expected_after_replay(g, *r.driver, s));
            const OrbitInfo tail = find_orbit(g, traj.back());
            EXPECT_EQ(necklace_from_orbit(g, part, tail.orbit_states), s);
        }
    }
}
