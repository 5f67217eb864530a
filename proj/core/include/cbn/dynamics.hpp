#pragma once

#include "cbn/digraph.hpp"
#include "cbn/state.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cbn {

/// The set V* of externally driven nodes, kept in ascending index order.
class ControlSpec {
public:
    ControlSpec() = default;

    /// Throws specification_error on duplicates. Order of `nodes` is not kept.
    explicit ControlSpec(std::vector<NodeId> nodes);

    static ControlSpec all(std::size_t node_count);

    /// Throws specification_error if any node is outside 0..n-1.
    void validate(const Digraph& net) const;

    [[nodiscard]] const NodeSet& nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] bool empty() const noexcept { return nodes_.empty(); }
    [[nodiscard]] bool contains(NodeId v) const;

    /// Position of v within nodes(), if it is a control node.
    [[nodiscard]] std::optional<std::size_t> position(NodeId v) const;

    friend bool operator==(const ControlSpec&, const ControlSpec&) = default;

private:
    NodeSet nodes_;
};

/// Input bits u_i(t), one row per control node (in ControlSpec order) and one
/// column per time step 0..horizon.
class ControlSchedule {
public:
    ControlSchedule() = default;
    ControlSchedule(ControlSpec spec, std::size_t horizon, bool fill = true);

    [[nodiscard]] const ControlSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] std::size_t horizon() const noexcept { return horizon_; }

    [[nodiscard]] bool bit(std::size_t t, std::size_t position) const;
    void set(std::size_t t, std::size_t position, bool value);

    /// Bit for control node v at time t; throws specification_error if v is
    /// not a control node.
    [[nodiscard]] bool input_of(NodeId v, std::size_t t) const;

    [[nodiscard]] std::vector<std::uint8_t> inputs_at(std::size_t t) const;

    /// Row for the control node at `position`, e.g. "011100".
    [[nodiscard]] std::string row_string(std::size_t position) const;

    /// Replace a row from a bit string of length horizon+1.
    void set_row(std::size_t position, std::string_view bits);

    friend bool operator==(const ControlSchedule&, const ControlSchedule&) = default;

private:
    ControlSpec spec_;
    std::size_t horizon_ = 0;
    std::vector<std::vector<std::uint8_t>> rows_;
};

struct Trajectory {
    std::vector<CbnState> states;

    [[nodiscard]] std::size_t size() const noexcept { return states.size(); }
    [[nodiscard]] const CbnState& at(std::size_t t) const { return states.at(t); }
    [[nodiscard]] const CbnState& back() const { return states.back(); }
};

struct OrbitInfo {
    std::size_t transient_length = 0;
    std::size_t period = 0;
    std::vector<CbnState> orbit_states;
};

/// x_i(t+1) = AND of x_j(t) over in-neighbours j. A node without in-neighbours
/// evaluates the empty product and is constant 1.
[[nodiscard]] CbnState step(const Digraph& net, const CbnState& x);

/// Control nodes take their input bit; every other node follows step().
/// `inputs` is one 0/1 byte per control node in spec order.
[[nodiscard]] CbnState controlled_step(const Digraph& net, const ControlSpec& spec, const CbnState& x,
                                       std::span<const std::uint8_t> inputs);

/// Overwrite the control-node bits of x with `inputs`.
[[nodiscard]] CbnState apply_controls(const ControlSpec& spec, CbnState x, std::span<const std::uint8_t> inputs);

[[nodiscard]] Trajectory simulate(const Digraph& net, const CbnState& x0, std::size_t steps);

/// Transient and cycle of the uncontrolled trajectory from x0, found with a
/// visited-state map.
[[nodiscard]] OrbitInfo find_orbit(const Digraph& net, const CbnState& x0);

/// Replays a schedule: x(0) is x0 with the control bits overwritten by
/// schedule[0]; x(t) = controlled_step(x(t-1), schedule[t]) for t <= horizon.
[[nodiscard]] Trajectory run_schedule(const Digraph& net, const ControlSpec& spec, const CbnState& x0,
                                      const ControlSchedule& schedule);

/// Non-control nodes with no in-neighbours. They are pinned to 1 from t=1 on
/// and are usually a modelling mistake worth reporting.
[[nodiscard]] NodeSet constant_nodes(const Digraph& net, const ControlSpec& spec = {});

/// Word-packed dynamics for networks of at most 64 nodes. Same update rule as
/// step(), used by the exhaustive searches.
class PackedNetwork {
public:
    explicit PackedNetwork(const Digraph& net);

    [[nodiscard]] std::size_t node_count() const noexcept { return in_masks_.size(); }
    [[nodiscard]] std::uint64_t full_mask() const noexcept { return full_; }

    [[nodiscard]] std::uint64_t step(std::uint64_t x) const noexcept {
        std::uint64_t next = 0;
        for (std::size_t i = 0; i < in_masks_.size(); ++i) {
            if ((x & in_masks_[i]) == in_masks_[i]) {
                next |= std::uint64_t{1} << i;
            }
        }
        return next;
    }

    /// Bits in `control_mask` are replaced by the matching bits of `inputs`.
    [[nodiscard]] std::uint64_t controlled_step(std::uint64_t x, std::uint64_t control_mask,
                                                std::uint64_t inputs) const noexcept {
        return (step(x) & ~control_mask) | (inputs & control_mask);
    }

private:
    std::vector<std::uint64_t> in_masks_;
    std::uint64_t full_ = 0;
};

/// Bit mask of a node set, for networks of at most 64 nodes.
[[nodiscard]] std::uint64_t node_mask(std::span<const NodeId> nodes);

} // namespace cbn
