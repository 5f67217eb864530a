#pragma once

#include <cbn/digraph.hpp>
#include <cbn/dynamics.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cbn::cli {

/// On-disk network description:
///
///   {
///     "nodes": ["v1", "v2", ...],
///     "edges": [["v1", "v2"], ...],
///     "controls": ["v4", "v7"]        (optional)
///   }
///
/// Node indices follow declaration order.
struct NetworkDocument {
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    std::optional<std::vector<std::string>> controls;

    friend bool operator==(const NetworkDocument&, const NetworkDocument&) = default;
};

struct ParsedNetwork {
    Digraph graph;
    ControlSpec controls;
    bool has_controls = false;
};

/// Throws cbn::parse_error with the line/column of the problem.
[[nodiscard]] NetworkDocument parse_document(std::string_view text);

[[nodiscard]] ParsedNetwork parse_network(std::string_view text);

[[nodiscard]] std::string serialize_document(const NetworkDocument& doc);

[[nodiscard]] NetworkDocument make_document(const Digraph& graph, const ControlSpec* controls = nullptr);

/// Graphviz export; control nodes are drawn filled. With `derived` the
/// in-edges of control nodes are left out.
[[nodiscard]] std::string to_dot(const Digraph& graph, const ControlSpec& controls, bool derived);

/// "v4,v7" -> control set. Throws specification_error on unknown labels.
[[nodiscard]] ControlSpec resolve_controls(const Digraph& graph, std::string_view list);
[[nodiscard]] ControlSpec resolve_controls(const Digraph& graph, const std::vector<std::string>& labels);

} // namespace cbn::cli
