#include "network_document.hpp"

#include <cbn/errors.hpp>

#include <json.hpp>

#include <map>
#include <sstream>

namespace cbn::cli {

namespace {

using nlohmann::json;

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
    Position pos;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
    }
    return pos;
}

// Offset of the n-th (0-based) occurrence of the quoted token after `key`.
std::size_t locate(std::string_view text, std::string_view key, const std::string& token, std::size_t nth = 0) {
    std::size_t from = text.find("\"" + std::string(key) + "\"");
    if (from == std::string_view::npos) {
        return 0;
    }
    const std::string quoted = "\"" + token + "\"";
    std::size_t at = from;
    for (std::size_t i = 0; i <= nth; ++i) {
        at = text.find(quoted, i == 0 ? at : at + 1);
        if (at == std::string_view::npos) {
            return from;
        }
    }
    return at;
}

[[noreturn]] void fail(std::string_view text, std::size_t offset, const std::string& what) {
    const Position pos = position_of(text, offset);
    throw parse_error(what, pos.line, pos.column);
}

std::string quote(const std::string& s) { return json(s).dump(); }

} // namespace

NetworkDocument parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        fail(text, e.byte > 0 ? e.byte - 1 : 0, "malformed network document: " + std::string(e.what()));
    }
    if (!root.is_object()) {
        fail(text, 0, "network document must be a JSON object");
    }
    for (const auto& [key, value] : root.items()) {
        if (key != "nodes" && key != "edges" && key != "controls") {
            fail(text, locate(text, key, key), "unknown field \"" + key + "\"");
        }
    }

    NetworkDocument doc;
    if (!root.contains("nodes") || !root["nodes"].is_array()) {
        fail(text, 0, "field \"nodes\" must be an array of labels");
    }
    std::map<std::string, std::size_t> declared;
    for (const auto& node : root["nodes"]) {
        if (!node.is_string()) {
            fail(text, locate(text, "nodes", "nodes"), "node labels must be strings");
        }
        const auto label = node.get<std::string>();
        if (label.empty()) {
            fail(text, locate(text, "nodes", "nodes"), "node labels must be non-empty");
        }
        if (declared.contains(label)) {
            fail(text, locate(text, "nodes", label, 1), "duplicate node \"" + label + "\"");
        }
        declared.emplace(label, doc.nodes.size());
        doc.nodes.push_back(label);
    }
    if (doc.nodes.empty()) {
        fail(text, locate(text, "nodes", "nodes"), "network must declare at least one node");
    }

    if (root.contains("edges")) {
        if (!root["edges"].is_array()) {
            fail(text, locate(text, "edges", "edges"), "field \"edges\" must be an array");
        }
        std::size_t index = 0;
        for (const auto& edge : root["edges"]) {
            if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() || !edge[1].is_string()) {
                fail(text, locate(text, "edges", "edges"),
                     "edge " + std::to_string(index) + " must be a [source, target] pair of labels");
            }
            for (const auto& end : edge) {
                const auto label = end.get<std::string>();
                if (!declared.contains(label)) {
                    fail(text, locate(text, "edges", label),
                         "edge " + std::to_string(index) + " references undeclared node \"" + label + "\"");
                }
            }
            doc.edges.emplace_back(edge[0].get<std::string>(), edge[1].get<std::string>());
            ++index;
        }
    }

    if (root.contains("controls")) {
        if (!root["controls"].is_array()) {
            fail(text, locate(text, "controls", "controls"), "field \"controls\" must be an array");
        }
        std::vector<std::string> controls;
        for (const auto& c : root["controls"]) {
            if (!c.is_string() || !declared.contains(c.get<std::string>())) {
                fail(text, locate(text, "controls", c.is_string() ? c.get<std::string>() : "controls"),
                     "control " + c.dump() + " is not a declared node");
            }
            controls.push_back(c.get<std::string>());
        }
        doc.controls = std::move(controls);
    }
    return doc;
}

ParsedNetwork parse_network(std::string_view text) {
    const NetworkDocument doc = parse_document(text);
    std::map<std::string, NodeId> index;
    for (std::size_t i = 0; i < doc.nodes.size(); ++i) {
        index.emplace(doc.nodes[i], static_cast<NodeId>(i));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < doc.edges.size(); ++i) {
        const auto& [src, dst] = doc.edges[i];
        edges.push_back({index.at(src), index.at(dst)});
        for (std::size_t j = 0; j < i; ++j) {
            if (doc.edges[j] == doc.edges[i]) {
                fail(text, locate(text, "edges", dst), "duplicate edge [" + src + ", " + dst + "]");
            }
        }
    }
    ParsedNetwork out;
    out.graph = Digraph(doc.nodes.size(), std::move(edges), doc.nodes);
    if (doc.controls) {
        std::vector<NodeId> nodes;
        for (const auto& c : *doc.controls) {
            nodes.push_back(index.at(c));
        }
        try {
            out.controls = ControlSpec(std::move(nodes));
        } catch (const specification_error& e) {
            fail(text, locate(text, "controls", "controls"), e.what());
        }
        out.has_controls = true;
    }
    return out;
}

std::string serialize_document(const NetworkDocument& doc) {
    std::ostringstream out;
    out << "{\n  \"nodes\": [";
    for (std::size_t i = 0; i < doc.nodes.size(); ++i) {
        out << (i ? ", " : "") << quote(doc.nodes[i]);
    }
    out << "],\n  \"edges\": [";
    for (std::size_t i = 0; i < doc.edges.size(); ++i) {
        out << (i ? "," : "") << "\n    [" << quote(doc.edges[i].first) << ", " << quote(doc.edges[i].second) << "]";
    }
    out << (doc.edges.empty() ? "]" : "\n  ]");
    if (doc.controls) {
        out << ",\n  \"controls\": [";
        for (std::size_t i = 0; i < doc.controls->size(); ++i) {
            out << (i ? ", " : "") << quote((*doc.controls)[i]);
        }
        out << "]";
    }
    out << "\n}\n";
    return out.str();
}

NetworkDocument make_document(const Digraph& graph, const ControlSpec* controls) {
    NetworkDocument doc;
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        doc.nodes.push_back(graph.label(v));
    }
    for (const Edge& e : graph.edges()) {
        doc.edges.emplace_back(graph.label(e.src), graph.label(e.dst));
    }
    if (controls != nullptr) {
        std::vector<std::string> labels;
        for (NodeId v : controls->nodes()) {
            labels.push_back(graph.label(v));
        }
        doc.controls = std::move(labels);
    }
    return doc;
}

std::string to_dot(const Digraph& graph, const ControlSpec& controls, bool derived) {
    std::ostringstream out;
    out << "digraph " << (derived ? "derived" : "network") << " {\n";
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        out << "  " << quote(graph.label(v));
        if (controls.contains(v)) {
            out << " [style=filled, fillcolor=lightblue]";
        }
        out << ";\n";
    }
    for (const Edge& e : graph.edges()) {
        if (derived && controls.contains(e.dst)) {
            continue;
        }
        out << "  " << quote(graph.label(e.src)) << " -> " << quote(graph.label(e.dst)) << ";\n";
    }
    out << "}\n";
    return out.str();
}

ControlSpec resolve_controls(const Digraph& graph, const std::vector<std::string>& labels) {
    std::vector<NodeId> nodes;
    for (const auto& label : labels) {
        const auto v = graph.find(label);
        if (!v) {
            throw specification_error("unknown node \"" + label + "\"");
        }
        nodes.push_back(*v);
    }
    return ControlSpec(std::move(nodes));
}

ControlSpec resolve_controls(const Digraph& graph, std::string_view list) {
    std::vector<std::string> labels;
    std::string current;
    for (char c : list) {
        if (c == ',') {
            if (!current.empty()) {
                labels.push_back(current);
            }
            current.clear();
        } else if (c != ' ') {
            current += c;
        }
    }
    if (!current.empty()) {
        labels.push_back(current);
    }
    return resolve_controls(graph, labels);
}

} // namespace cbn::cli
