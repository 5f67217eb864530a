#include "cbn/control.hpp"

#include "cbn/errors.hpp"
#include "cbn/orbits.hpp"

#include <algorithm>
#include <unordered_set>

namespace cbn {

namespace {

void check_state(const Digraph& net, const CbnState& x, const char* what) {
    if (x.size() != net.node_count()) {
        throw dimension_error(std::string(what) + " has " + std::to_string(x.size()) + " bits, network has " +
                              std::to_string(net.node_count()) + " nodes");
    }
}

constexpr std::size_t max_expression_paths = 1'000'000;

} // namespace

bool is_orbit_controlling(const Digraph& net, const ControlSpec& spec) {
    spec.validate(net);
    if (!is_strongly_connected(net)) {
        throw structure_error("orbit controllability is defined for strongly connected graphs only");
    }
    return is_acyclic(derived_graph(net, spec).graph);
}

bool cycle_intersection_check(const Digraph& net, const ControlSpec& spec, std::size_t cycle_cap) {
    spec.validate(net);
    const auto cycles = enumerate_cycles(net, cycle_cap);
    return std::all_of(cycles.begin(), cycles.end(), [&](const std::vector<NodeId>& cycle) {
        return std::any_of(cycle.begin(), cycle.end(), [&](NodeId v) { return spec.contains(v); });
    });
}

StateControlVerdict is_state_controlling(const Digraph& net, const ControlSpec& spec) {
    spec.validate(net);
    const DerivedGraph derived = derived_graph(net, spec);
    StateControlVerdict verdict;
    verdict.derived_acyclic = is_acyclic(derived.graph);
    if (!verdict.derived_acyclic) {
        return verdict;
    }
    const std::size_t depth = longest_path_length(derived.graph);

    // reach[j][k] = N_out^k(control j; D')
    std::vector<std::vector<NodeSet>> reach(spec.size());
    for (std::size_t j = 0; j < spec.size(); ++j) {
        NodeSet layer{spec.nodes()[j]};
        for (std::size_t k = 0; k <= depth; ++k) {
            reach[j].push_back(layer);
            layer = out_neighbors_k(derived.graph, layer, 1);
        }
    }

    verdict.witnesses.assign(net.node_count(), std::nullopt);
    for (std::size_t k = 0; k <= depth; ++k) {
        for (std::size_t j = 0; j < spec.size(); ++j) {
            const NodeSet& layer = reach[j][k];
            if (layer.size() == 1 && !verdict.witnesses[layer.front()]) {
                verdict.witnesses[layer.front()] = Witness{spec.nodes()[j], k};
            }
        }
    }
    for (NodeId v = 0; v < net.node_count(); ++v) {
        if (!verdict.witnesses[v]) {
            verdict.unwitnessed.push_back(v);
        }
    }
    verdict.controlling = verdict.unwitnessed.empty();
    return verdict;
}

SynthesisReport synthesize_orbit_control(const Digraph& net, const ControlSpec& spec, const Necklace& s,
                                         const CbnState& x0, const OrbitSynthesisOptions& options) {
    spec.validate(net);
    check_state(net, x0, "initial state");
    if (!is_orbit_controlling(net, spec)) {
        throw not_controllable_error("derived graph has a cycle; control set is not orbit-controlling");
    }
    if (spec.empty()) {
        throw not_controllable_error("empty control set");
    }
    const Partition partition = irreducible_components(net);
    const std::size_t p = partition.loop_number;
    if (s.length() != p) {
        throw specification_error("necklace " + s.to_string() + " has length " + std::to_string(s.length()) +
                                  ", loop number is " + std::to_string(p));
    }
    const NodeId driver = options.driver.value_or(spec.nodes().front());
    const auto driver_pos = spec.position(driver);
    if (!driver_pos) {
        throw specification_error("driver " + net.label(driver) + " is not a control node");
    }

    std::vector<std::vector<std::uint8_t>> inputs;
    std::vector<CbnState> states;
    CbnState natural = x0;  // value before the controls of this step are written

    const std::vector<std::uint8_t> ones(spec.size(), 1);
    while (!natural.all()) {
        if (states.size() > net.node_count()) {
            throw consistency_error("phase 1 did not reach the all-ones state within n steps");
        }
        inputs.push_back(ones);
        states.push_back(apply_controls(spec, natural, ones));
        natural = step(net, states.back());
    }
    const std::size_t tau = states.size();

    for (std::size_t offset = 0; offset < p; ++offset) {
        std::vector<std::uint8_t> u(spec.size());
        for (std::size_t j = 0; j < spec.size(); ++j) {
            u[j] = natural[spec.nodes()[j]] ? 1 : 0;
        }
        u[*driver_pos] = s[offset] ? 1 : 0;
        states.push_back(apply_controls(spec, natural, u));
        inputs.push_back(std::move(u));
        natural = step(net, states.back());
    }

    SynthesisReport report;
    report.tau = tau;
    report.driver = driver;
    const std::size_t horizon = tau + p - 1;
    report.schedule = ControlSchedule(spec, horizon);
    for (std::size_t t = 0; t <= horizon; ++t) {
        for (std::size_t j = 0; j < spec.size(); ++j) {
            report.schedule.set(t, j, inputs[t][j] != 0);
        }
    }

    const OrbitInfo tail = find_orbit(net, states.back());
    if (necklace_from_orbit(net, partition, tail.orbit_states) != s) {
        throw consistency_error("free run after the schedule settles on the wrong orbit");
    }
    std::unordered_set<CbnState, CbnStateHash> members(tail.orbit_states.begin(), tail.orbit_states.end());
    std::size_t entry = horizon + tail.transient_length;
    if (tail.transient_length == 0) {
        while (entry > tau && members.contains(states[entry - 1])) {
            --entry;
        }
    }
    report.entry_time = entry;
    return report;
}

SynthesisReport synthesize_state_control(const Digraph& net, const ControlSpec& spec, const CbnState& x_star) {
    spec.validate(net);
    check_state(net, x_star, "target state");
    const StateControlVerdict verdict = is_state_controlling(net, spec);
    if (!verdict.controlling) {
        if (!verdict.derived_acyclic) {
            throw not_controllable_error("derived graph has a cycle; control set is not state-controlling");
        }
        throw not_controllable_error("no singleton reach set for " + format_nodes(net, verdict.unwitnessed) +
                                     "; control set is not state-controlling");
    }
    const DerivedGraph derived = derived_graph(net, spec);
    const std::size_t horizon = longest_path_length(derived.graph);

    SynthesisReport report;
    report.schedule = ControlSchedule(spec, horizon);
    for (std::size_t t = 0; t <= horizon; ++t) {
        for (std::size_t j = 0; j < spec.size(); ++j) {
            const NodeSet reach = out_neighbors_k(derived.graph, spec.nodes()[j], horizon - t);
            const bool zero = reach.size() == 1 && !x_star[reach.front()];
            report.schedule.set(t, j, !zero);
        }
    }
    report.entry_time = horizon;
    return report;
}

ControlExpression control_expression(const Digraph& net, const ControlSpec& spec, NodeId v, std::size_t time) {
    spec.validate(net);
    if (v >= net.node_count()) {
        throw specification_error("node " + std::to_string(v) + " out of range");
    }
    const DerivedGraph derived = derived_graph(net, spec);
    if (!is_acyclic(derived.graph)) {
        throw structure_error("control expressions need an acyclic derived graph");
    }
    const auto into = longest_path_into(derived.graph);
    if (time < into[v]) {
        throw specification_error("time " + std::to_string(time) + " is earlier than the longest path (" +
                                  std::to_string(into[v]) + ") into " + net.label(v));
    }

    ControlExpression expr;
    expr.target = v;
    expr.time = time;

    // Walk every path backwards from v until it hits a source of D'.
    struct Frame {
        NodeId node;
        std::size_t length;
    };
    std::vector<Frame> stack{{v, 0}};
    std::size_t paths = 0;
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        const auto preds = derived.graph.in_neighbors(f.node);
        if (preds.empty()) {
            if (++paths > max_expression_paths) {
                throw budget_error("control expression has more than " + std::to_string(max_expression_paths) +
                                   " paths");
            }
            if (spec.contains(f.node)) {
                expr.factors.push_back({f.node, f.length});
            } else if (f.length == time) {
                // Pinned node, but at time 0 it still holds its initial value.
                throw specification_error("value of " + net.label(v) + " at time " + std::to_string(time) +
                                          " depends on the initial state of " + net.label(f.node));
            }
            continue;
        }
        for (NodeId u : preds) {
            stack.push_back({u, f.length + 1});
        }
    }
    std::sort(expr.factors.begin(), expr.factors.end());
    return expr;
}

bool evaluate_expression(const ControlExpression& expr, const ControlSchedule& schedule) {
    return std::all_of(expr.factors.begin(), expr.factors.end(), [&](const ExpressionFactor& f) {
        return schedule.input_of(f.control, expr.time - f.delay);
    });
}

} // namespace cbn
