#pragma once

#include "cbn/digraph.hpp"
#include "cbn/dynamics.hpp"
#include "cbn/graph_analysis.hpp"
#include "cbn/necklace.hpp"
#include "cbn/state.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cbn {

/// N_out^steps(control; D') == {node}.
struct Witness {
    NodeId control = 0;
    std::size_t steps = 0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct StateControlVerdict {
    bool controlling = false;
    bool derived_acyclic = false;
    std::vector<std::optional<Witness>> witnesses;  // indexed by node; empty if D' is cyclic
    NodeSet unwitnessed;
};

/// One factor x_control(t - delay) of a control expression.
struct ExpressionFactor {
    NodeId control = 0;
    std::size_t delay = 0;

    friend auto operator<=>(const ExpressionFactor&, const ExpressionFactor&) = default;
};

/// x_target(time) as a product of delayed control inputs, one factor per path
/// of D' from a source to the target. An empty product evaluates to 1.
struct ControlExpression {
    NodeId target = 0;
    std::size_t time = 0;
    std::vector<ExpressionFactor> factors;  // sorted; repeats kept, one per path
};

struct SynthesisReport {
    ControlSchedule schedule;
    std::optional<std::size_t> tau;   // orbit synthesis only
    std::optional<NodeId> driver;     // orbit synthesis only
    std::size_t entry_time = 0;       // target state reached / orbit entered for good
};

struct OrbitSynthesisOptions {
    /// Control node that replays the necklace; lowest-indexed control if unset.
    std::optional<NodeId> driver;
};

/// D' acyclic. Throws structure_error unless the graph is strongly connected.
[[nodiscard]] bool is_orbit_controlling(const Digraph& net, const ControlSpec& spec);

/// Every simple cycle of D contains a control node. Uses enumerate_cycles.
[[nodiscard]] bool cycle_intersection_check(const Digraph& net, const ControlSpec& spec,
                                            std::size_t cycle_cap = default_cycle_cap);

/// D' acyclic and every node v has a witness (u, k) with N_out^k(u; D') = {v}.
/// Witnesses are searched with k ascending, then u ascending; k is bounded by
/// the longest path of D'.
[[nodiscard]] StateControlVerdict is_state_controlling(const Digraph& net, const ControlSpec& spec);

/// Two-phase orbit steering from x0. Phase 1 writes 1 to every control until
/// the uncontrolled update of the current state is all ones (time tau). Phase 2
/// writes s[t'] to the driver at tau+t' for t' < p*; the other controls
/// replay the value their update rule would give. The schedule ends at
/// tau+p*-1 and entry_time is measured on the free run that follows.
/// Throws not_controllable_error if D' is cyclic, structure_error if the graph
/// is not strongly connected, specification_error on bad arguments.
[[nodiscard]] SynthesisReport synthesize_orbit_control(const Digraph& net, const ControlSpec& spec,
                                                       const Necklace& s, const CbnState& x0,
                                                       const OrbitSynthesisOptions& options = {});

/// Open-loop schedule over t = 0..T, T the longest path of D': u_i(t) = 0 iff
/// N_out^{T-t}(v_i; D') is a single node whose target bit is 0. Reaches x_star
/// at t = T from every initial state. Throws not_controllable_error if the
/// control set is not state-controlling.
[[nodiscard]] SynthesisReport synthesize_state_control(const Digraph& net, const ControlSpec& spec,
                                                       const CbnState& x_star);

/// Throws structure_error if D' is cyclic and specification_error if `time`
/// is smaller than the longest path into v.
[[nodiscard]] ControlExpression control_expression(const Digraph& net, const ControlSpec& spec, NodeId v,
                                                   std::size_t time);

/// Evaluates the expression against a schedule.
[[nodiscard]] bool evaluate_expression(const ControlExpression& expr, const ControlSchedule& schedule);

} // namespace cbn
