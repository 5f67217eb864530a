#include "cbn/dynamics.hpp"

#include "cbn/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace cbn {

ControlSpec::ControlSpec(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end());
    const auto dup = std::adjacent_find(nodes_.begin(), nodes_.end());
    if (dup != nodes_.end()) {
        throw specification_error("control node " + std::to_string(*dup) + " listed twice");
    }
}

ControlSpec ControlSpec::all(std::size_t node_count) {
    std::vector<NodeId> nodes(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
        nodes[i] = static_cast<NodeId>(i);
    }
    return ControlSpec(std::move(nodes));
}

void ControlSpec::validate(const Digraph& net) const {
    if (!nodes_.empty() && nodes_.back() >= net.node_count()) {
        throw specification_error("control node " + std::to_string(nodes_.back()) + " outside a network of " +
                                  std::to_string(net.node_count()) + " nodes");
    }
}

bool ControlSpec::contains(NodeId v) const { return std::binary_search(nodes_.begin(), nodes_.end(), v); }

std::optional<std::size_t> ControlSpec::position(NodeId v) const {
    const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
    if (it == nodes_.end() || *it != v) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - nodes_.begin());
}

ControlSchedule::ControlSchedule(ControlSpec spec, std::size_t horizon, bool fill)
    : spec_(std::move(spec)), horizon_(horizon),
      rows_(spec_.size(), std::vector<std::uint8_t>(horizon + 1, fill ? 1 : 0)) {}

bool ControlSchedule::bit(std::size_t t, std::size_t position) const {
    if (position >= rows_.size() || t > horizon_) {
        throw specification_error("schedule access (t=" + std::to_string(t) + ", control " +
                                  std::to_string(position) + ") out of range");
    }
    return rows_[position][t] != 0;
}

void ControlSchedule::set(std::size_t t, std::size_t position, bool value) {
    if (position >= rows_.size() || t > horizon_) {
        throw specification_error("schedule access (t=" + std::to_string(t) + ", control " +
                                  std::to_string(position) + ") out of range");
    }
    rows_[position][t] = value ? 1 : 0;
}

bool ControlSchedule::input_of(NodeId v, std::size_t t) const {
    const auto pos = spec_.position(v);
    if (!pos) {
        throw specification_error("node " + std::to_string(v) + " is not a control node of this schedule");
    }
    return bit(t, *pos);
}

std::vector<std::uint8_t> ControlSchedule::inputs_at(std::size_t t) const {
    if (t > horizon_) {
        throw specification_error("time " + std::to_string(t) + " beyond schedule horizon " +
                                  std::to_string(horizon_));
    }
    std::vector<std::uint8_t> out(rows_.size());
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        out[j] = rows_[j][t];
    }
    return out;
}

std::string ControlSchedule::row_string(std::size_t position) const {
    std::string out;
    for (auto b : rows_.at(position)) {
        out += b != 0 ? '1' : '0';
    }
    return out;
}

void ControlSchedule::set_row(std::size_t position, std::string_view bits) {
    if (position >= rows_.size()) {
        throw specification_error("schedule row " + std::to_string(position) + " out of range");
    }
    if (bits.size() != horizon_ + 1) {
        throw specification_error("schedule row \"" + std::string(bits) + "\" should have " +
                                  std::to_string(horizon_ + 1) + " entries");
    }
    for (std::size_t t = 0; t < bits.size(); ++t) {
        if (bits[t] != '0' && bits[t] != '1') {
            throw specification_error("invalid character in schedule row \"" + std::string(bits) + "\"");
        }
        rows_[position][t] = bits[t] == '1' ? 1 : 0;
    }
}

namespace {

void check_size(const Digraph& net, const CbnState& x) {
    if (x.size() != net.node_count()) {
        throw dimension_error("state has " + std::to_string(x.size()) + " bits, network has " +
                              std::to_string(net.node_count()) + " nodes");
    }
}

void check_inputs(const ControlSpec& spec, std::span<const std::uint8_t> inputs) {
    if (inputs.size() != spec.size()) {
        throw specification_error("expected " + std::to_string(spec.size()) + " control inputs, got " +
                                  std::to_string(inputs.size()));
    }
}

} // namespace

CbnState step(const Digraph& net, const CbnState& x) {
    check_size(net, x);
    CbnState next(net.node_count());
    for (NodeId i = 0; i < net.node_count(); ++i) {
        bool value = true;
        for (NodeId j : net.in_neighbors(i)) {
            if (!x[j]) {
                value = false;
                break;
            }
        }
        next.set(i, value);
    }
    return next;
}

CbnState apply_controls(const ControlSpec& spec, CbnState x, std::span<const std::uint8_t> inputs) {
    check_inputs(spec, inputs);
    for (std::size_t j = 0; j < spec.size(); ++j) {
        x.set(spec.nodes()[j], inputs[j] != 0);
    }
    return x;
}

CbnState controlled_step(const Digraph& net, const ControlSpec& spec, const CbnState& x,
                         std::span<const std::uint8_t> inputs) {
    spec.validate(net);
    check_inputs(spec, inputs);
    return apply_controls(spec, step(net, x), inputs);
}

Trajectory simulate(const Digraph& net, const CbnState& x0, std::size_t steps) {
    check_size(net, x0);
    Trajectory traj;
    traj.states.reserve(steps + 1);
    traj.states.push_back(x0);
    for (std::size_t t = 0; t < steps; ++t) {
        traj.states.push_back(step(net, traj.states.back()));
    }
    return traj;
}

OrbitInfo find_orbit(const Digraph& net, const CbnState& x0) {
    check_size(net, x0);
    std::unordered_map<CbnState, std::size_t, CbnStateHash> first_seen;
    std::vector<CbnState> history;
    CbnState x = x0;
    for (std::size_t t = 0;; ++t) {
        const auto [it, inserted] = first_seen.emplace(x, t);
        if (!inserted) {
            OrbitInfo info;
            info.transient_length = it->second;
            info.period = t - it->second;
            info.orbit_states.assign(history.begin() + static_cast<std::ptrdiff_t>(it->second), history.end());
            return info;
        }
        history.push_back(x);
        x = step(net, x);
    }
}

Trajectory run_schedule(const Digraph& net, const ControlSpec& spec, const CbnState& x0,
                        const ControlSchedule& schedule) {
    check_size(net, x0);
    spec.validate(net);
    if (schedule.spec() != spec) {
        throw specification_error("schedule was built for a different control set");
    }
    Trajectory traj;
    traj.states.reserve(schedule.horizon() + 1);
    traj.states.push_back(apply_controls(spec, x0, schedule.inputs_at(0)));
    for (std::size_t t = 1; t <= schedule.horizon(); ++t) {
        traj.states.push_back(controlled_step(net, spec, traj.states.back(), schedule.inputs_at(t)));
    }
    return traj;
}

NodeSet constant_nodes(const Digraph& net, const ControlSpec& spec) {
    NodeSet out;
    for (NodeId v = 0; v < net.node_count(); ++v) {
        if (net.in_neighbors(v).empty() && !spec.contains(v)) {
            out.push_back(v);
        }
    }
    return out;
}

PackedNetwork::PackedNetwork(const Digraph& net) : in_masks_(net.node_count(), 0) {
    if (net.node_count() > 64) {
        throw budget_error("packed dynamics support at most 64 nodes, network has " +
                           std::to_string(net.node_count()));
    }
    for (NodeId i = 0; i < net.node_count(); ++i) {
        for (NodeId j : net.in_neighbors(i)) {
            in_masks_[i] |= std::uint64_t{1} << j;
        }
    }
    full_ = net.node_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << net.node_count()) - 1;
}

std::uint64_t node_mask(std::span<const NodeId> nodes) {
    std::uint64_t m = 0;
    for (NodeId v : nodes) {
        if (v >= 64) {
            throw budget_error("node mask supports indices below 64");
        }
        m |= std::uint64_t{1} << v;
    }
    return m;
}

} // namespace cbn
