#include "commands.hpp"

#include "network_document.hpp"

#include <cbn/cbn.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace cbn::cli {

namespace {

using nlohmann::json;

constexpr std::size_t default_budget = 20;

struct Globals {
    std::string format = "text";
    std::size_t budget = default_budget;
    std::uint64_t seed = 1;
};

struct Io {
    std::ostream& out;
    std::ostream& err;
    const Globals& globals;

    [[nodiscard]] bool json_output() const { return globals.format == "json"; }

    [[nodiscard]] OracleBudget oracle_budget() const {
        OracleBudget b;
        b.max_state_bits = globals.budget;
        b.max_reach_bits = globals.budget;
        b.max_subset_nodes = globals.budget;
        return b;
    }

    void emit(const json& doc) const { out << doc.dump(2) << '\n'; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw specification_error("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ParsedNetwork load_network(const Io& io, const std::string& path) {
    ParsedNetwork net = parse_network(read_file(path));
    for (NodeId v : constant_nodes(net.graph, net.controls)) {
        io.err << "warning: " << net.graph.label(v) << " has no in-neighbours and is pinned to 1\n";
    }
    return net;
}

// --controls wins over the document's own list.
ControlSpec pick_controls(const ParsedNetwork& net, const std::string& option) {
    if (!option.empty()) {
        return resolve_controls(net.graph, option);
    }
    if (net.has_controls) {
        return net.controls;
    }
    throw specification_error("no control set: pass --controls or add \"controls\" to the network file");
}

CbnState parse_bits(const Digraph& graph, const std::string& bits, const char* what) {
    CbnState x = CbnState::from_string(bits);
    if (x.size() != graph.node_count()) {
        throw specification_error(std::string(what) + " \"" + bits + "\" has " + std::to_string(bits.size()) +
                                  " bits, network has " + std::to_string(graph.node_count()) + " nodes");
    }
    return x;
}

json label_list(const Digraph& graph, std::span<const NodeId> nodes) {
    json out = json::array();
    for (NodeId v : nodes) {
        out.push_back(graph.label(v));
    }
    return out;
}

std::string node_list(const Digraph& graph, std::span<const NodeId> nodes) { return format_nodes(graph, nodes); }

void print_schedule_table(std::ostream& out, const Digraph& graph, const ControlSchedule& schedule) {
    std::size_t label_width = std::string("Step t").size();
    for (NodeId v : schedule.spec().nodes()) {
        label_width = std::max(label_width, graph.label(v).size());
    }
    const std::size_t cell = std::to_string(schedule.horizon()).size();
    out << std::left << std::setw(static_cast<int>(label_width)) << "Step t" << " |";
    for (std::size_t t = 0; t <= schedule.horizon(); ++t) {
        out << ' ' << std::right << std::setw(static_cast<int>(cell)) << t;
    }
    out << '\n';
    for (std::size_t j = 0; j < schedule.spec().size(); ++j) {
        out << std::left << std::setw(static_cast<int>(label_width)) << graph.label(schedule.spec().nodes()[j])
            << " |";
        for (std::size_t t = 0; t <= schedule.horizon(); ++t) {
            out << ' ' << std::right << std::setw(static_cast<int>(cell)) << (schedule.bit(t, j) ? 1 : 0);
        }
        out << '\n';
    }
}

json schedule_json(const Digraph& graph, const ControlSchedule& schedule) {
    json inputs = json::object();
    for (std::size_t j = 0; j < schedule.spec().size(); ++j) {
        inputs[graph.label(schedule.spec().nodes()[j])] = schedule.row_string(j);
    }
    return {
        {"controls", label_list(graph, schedule.spec().nodes())},
        {"horizon", schedule.horizon()},
        {"inputs", inputs},
    };
}

void write_schedule_file(const std::string& path, const json& doc) {
    if (path.empty()) {
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw specification_error("cannot write " + path);
    }
    out << doc.dump(2) << '\n';
}

ControlSchedule schedule_from_json(const Digraph& graph, const json& doc) {
    if (!doc.contains("controls") || !doc.contains("horizon") || !doc.contains("inputs")) {
        throw specification_error("schedule file needs \"controls\", \"horizon\" and \"inputs\"");
    }
    const ControlSpec spec = resolve_controls(graph, doc["controls"].get<std::vector<std::string>>());
    ControlSchedule schedule(spec, doc["horizon"].get<std::size_t>());
    const auto& inputs = doc["inputs"];
    if (inputs.size() != spec.size()) {
        throw specification_error("schedule rows do not match the control list");
    }
    for (std::size_t j = 0; j < spec.size(); ++j) {
        const std::string label = graph.label(spec.nodes()[j]);
        if (!inputs.contains(label)) {
            throw specification_error("schedule has no row for " + label);
        }
        schedule.set_row(j, inputs[label].get<std::string>());
    }
    return schedule;
}

// ---------------------------------------------------------------------------

int cmd_simulate(const Io& io, const std::string& path, const std::string& init, std::size_t steps) {
    const auto net = load_network(io, path);
    const Trajectory traj = simulate(net.graph, parse_bits(net.graph, init, "--init"), steps);
    if (io.json_output()) {
        json states = json::array();
        for (const auto& s : traj.states) {
            states.push_back(s.to_string());
        }
        io.emit({{"steps", steps}, {"states", states}});
    } else {
        const std::size_t width = std::to_string(steps).size();
        for (std::size_t t = 0; t < traj.size(); ++t) {
            io.out << "t=" << std::left << std::setw(static_cast<int>(width)) << t << "  " << traj.at(t).to_string()
                   << '\n';
        }
    }
    return exit_ok;
}

int cmd_orbits(const Io& io, const std::string& path) {
    const auto net = load_network(io, path);
    const std::size_t p = loop_number(net.graph);
    const auto orbits = enumerate_orbits(net.graph);
    if (io.json_output()) {
        json list = json::array();
        for (const auto& o : orbits) {
            json states = json::array();
            for (const auto& s : o.states) {
                states.push_back(s.to_string());
            }
            list.push_back({{"necklace", o.necklace.to_string()}, {"period", o.states.size()}, {"states", states}});
        }
        io.emit({{"loop_number", p}, {"orbit_count", orbits.size()}, {"orbits", list}});
    } else {
        io.out << "loop number " << p << ", " << orbits.size() << " periodic orbits\n";
        for (const auto& o : orbits) {
            io.out << "  " << o.necklace.to_string() << "  period " << o.states.size() << ":";
            for (const auto& s : o.states) {
                io.out << ' ' << s.to_string();
            }
            io.out << '\n';
        }
    }
    return exit_ok;
}

int cmd_loop_number(const Io& io, const std::string& path) {
    const auto net = load_network(io, path);
    const std::size_t p = loop_number(net.graph);
    if (io.json_output()) {
        io.emit({{"loop_number", p}});
    } else {
        io.out << p << '\n';
    }
    return exit_ok;
}

int cmd_components(const Io& io, const std::string& path) {
    const auto net = load_network(io, path);
    const Partition part = irreducible_components(net.graph);
    if (io.json_output()) {
        json classes = json::array();
        for (std::size_t k = 0; k < part.loop_number; ++k) {
            json edges = json::array();
            for (const Edge& e : part.components[k].edges()) {
                edges.push_back({net.graph.label(part.classes[k][e.src]), net.graph.label(part.classes[k][e.dst])});
            }
            classes.push_back({{"index", k}, {"nodes", label_list(net.graph, part.classes[k])}, {"edges", edges}});
        }
        io.emit({{"loop_number", part.loop_number}, {"classes", classes}});
    } else {
        io.out << "loop number " << part.loop_number << '\n';
        for (std::size_t k = 0; k < part.loop_number; ++k) {
            io.out << "U_" << k << " = " << node_list(net.graph, part.classes[k]) << "\n  G_" << k << " edges:";
            for (const Edge& e : part.components[k].edges()) {
                io.out << ' ' << net.graph.label(part.classes[k][e.src]) << "->"
                       << net.graph.label(part.classes[k][e.dst]);
            }
            io.out << '\n';
        }
    }
    return exit_ok;
}

int check_orbit(const Io& io, const ParsedNetwork& net, const ControlSpec& spec) {
    const bool ok = is_orbit_controlling(net.graph, spec);
    const DerivedGraph derived = derived_graph(net.graph, spec);
    if (io.json_output()) {
        io.emit({{"kind", "orbit"},
                 {"controls", label_list(net.graph, spec.nodes())},
                 {"controlling", ok},
                 {"derived_acyclic", ok},
                 {"derived_sources", label_list(net.graph, derived.source_nodes)}});
    } else {
        io.out << "orbit-controlling: " << (ok ? "yes" : "no") << '\n';
        io.out << "derived graph: " << (ok ? "acyclic" : "has a cycle") << ", sources "
               << node_list(net.graph, derived.source_nodes) << '\n';
    }
    return ok ? exit_ok : exit_negative;
}

int check_state(const Io& io, const ParsedNetwork& net, const ControlSpec& spec) {
    const StateControlVerdict verdict = is_state_controlling(net.graph, spec);
    if (io.json_output()) {
        json witnesses = json::object();
        for (NodeId v = 0; v < verdict.witnesses.size(); ++v) {
            if (verdict.witnesses[v]) {
                witnesses[net.graph.label(v)] = {{"control", net.graph.label(verdict.witnesses[v]->control)},
                                                 {"steps", verdict.witnesses[v]->steps}};
            }
        }
        io.emit({{"kind", "state"},
                 {"controls", label_list(net.graph, spec.nodes())},
                 {"controlling", verdict.controlling},
                 {"derived_acyclic", verdict.derived_acyclic},
                 {"witnesses", witnesses},
                 {"unwitnessed", label_list(net.graph, verdict.unwitnessed)}});
    } else {
        io.out << "state-controlling: " << (verdict.controlling ? "yes" : "no") << '\n';
        if (!verdict.derived_acyclic) {
            io.out << "derived graph has a cycle\n";
        } else {
            io.out << "witnesses (N_out^k(u; D') = {v}):\n";
            for (NodeId v = 0; v < verdict.witnesses.size(); ++v) {
                if (verdict.witnesses[v]) {
                    io.out << "  " << net.graph.label(v) << " = N_out^" << verdict.witnesses[v]->steps << "("
                           << net.graph.label(verdict.witnesses[v]->control) << ")\n";
                }
            }
            if (!verdict.unwitnessed.empty()) {
                io.out << "no witness for " << node_list(net.graph, verdict.unwitnessed) << '\n';
            }
        }
    }
    return verdict.controlling ? exit_ok : exit_negative;
}

int cmd_check(const Io& io, const std::string& path, bool orbit, bool state, const std::string& controls) {
    if (orbit == state) {
        throw specification_error("pass exactly one of --orbit or --state");
    }
    const auto net = load_network(io, path);
    const ControlSpec spec = pick_controls(net, controls);
    return orbit ? check_orbit(io, net, spec) : check_state(io, net, spec);
}

int cmd_synthesize_orbit(const Io& io, const std::string& path, const std::string& controls,
                         const std::string& necklace_bits, const std::string& init, const std::string& driver,
                         const std::string& out_path) {
    const auto net = load_network(io, path);
    const ControlSpec spec = pick_controls(net, controls);
    const Necklace s = Necklace::parse(necklace_bits);
    const CbnState x0 = parse_bits(net.graph, init, "--init");
    OrbitSynthesisOptions options;
    if (!driver.empty()) {
        const auto v = net.graph.find(driver);
        if (!v) {
            throw specification_error("unknown node \"" + driver + "\"");
        }
        options.driver = *v;
    }
    const SynthesisReport report = synthesize_orbit_control(net.graph, spec, s, x0, options);

    json doc = schedule_json(net.graph, report.schedule);
    doc["kind"] = "orbit";
    doc["necklace"] = s.to_string();
    doc["init"] = x0.to_string();
    doc["tau"] = *report.tau;
    doc["driver"] = net.graph.label(*report.driver);
    doc["entry_time"] = report.entry_time;
    write_schedule_file(out_path, doc);

    if (io.json_output()) {
        io.emit(doc);
    } else {
        io.out << "necklace " << s.to_string() << ", tau = " << *report.tau << ", driver "
               << net.graph.label(*report.driver) << ", orbit entered at t = " << report.entry_time << '\n';
        print_schedule_table(io.out, net.graph, report.schedule);
    }
    return exit_ok;
}

int cmd_synthesize_state(const Io& io, const std::string& path, const std::string& controls,
                         const std::string& target, const std::string& out_path) {
    const auto net = load_network(io, path);
    const ControlSpec spec = pick_controls(net, controls);
    const CbnState x_star = parse_bits(net.graph, target, "--target");
    const SynthesisReport report = synthesize_state_control(net.graph, spec, x_star);

    json doc = schedule_json(net.graph, report.schedule);
    doc["kind"] = "state";
    doc["target"] = x_star.to_string();
    doc["reach_time"] = report.entry_time;
    write_schedule_file(out_path, doc);

    if (io.json_output()) {
        io.emit(doc);
    } else {
        io.out << "target " << x_star.to_string() << " reached at t = " << report.entry_time << '\n';
        print_schedule_table(io.out, net.graph, report.schedule);
    }
    return exit_ok;
}

int cmd_min_set(const Io& io, const std::string& path, bool orbit, bool state) {
    if (orbit == state) {
        throw specification_error("pass exactly one of --orbit or --state");
    }
    const auto net = load_network(io, path);
    const NodeSet best = orbit ? min_orbit_controlling_set(net.graph, io.oracle_budget())
                               : min_state_controlling_set(net.graph, io.oracle_budget());
    if (io.json_output()) {
        io.emit({{"kind", orbit ? "orbit" : "state"}, {"nodes", label_list(net.graph, best)}, {"size", best.size()}});
    } else {
        io.out << "minimum " << (orbit ? "orbit" : "state") << "-controlling set (" << best.size()
               << "): " << node_list(net.graph, best) << '\n';
    }
    return exit_ok;
}

int verify_state(const Io& io, const ParsedNetwork& net, const ControlSchedule& schedule, const json& doc) {
    const CbnState target = parse_bits(net.graph, doc.at("target").get<std::string>(), "target");
    const std::size_t n = net.graph.node_count();
    if (n > io.globals.budget) {
        throw budget_error("exhaustive replay over 2^" + std::to_string(n) + " initial states exceeds budget " +
                           std::to_string(io.globals.budget));
    }
    std::size_t failures = 0;
    std::string first_failure;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        const CbnState x0 = CbnState::from_code(n, code);
        if (run_schedule(net.graph, schedule.spec(), x0, schedule).back() != target) {
            if (failures++ == 0) {
                first_failure = x0.to_string();
            }
        }
    }
    const bool ok = failures == 0;
    if (io.json_output()) {
        io.emit({{"kind", "state"}, {"verified", ok}, {"initial_states", std::uint64_t{1} << n}, {"failures", failures}});
    } else if (ok) {
        io.out << "verified: every one of " << (std::uint64_t{1} << n) << " initial states reaches " << target.to_string()
               << " at t = " << schedule.horizon() << '\n';
    } else {
        io.out << "FAILED: " << failures << " initial states miss the target, e.g. " << first_failure << '\n';
    }
    return ok ? exit_ok : exit_negative;
}

int verify_orbit(const Io& io, const ParsedNetwork& net, const ControlSchedule& schedule, const json& doc) {
    const CbnState x0 = parse_bits(net.graph, doc.at("init").get<std::string>(), "init");
    const Necklace s = Necklace::parse(doc.at("necklace").get<std::string>());
    const Partition part = irreducible_components(net.graph);
    const Trajectory traj = run_schedule(net.graph, schedule.spec(), x0, schedule);
    const OrbitInfo tail = find_orbit(net.graph, traj.back());
    const Necklace reached = necklace_from_orbit(net.graph, part, tail.orbit_states);

    bool ok = reached == s;
    std::string problem = ok ? "" : "free run settles on orbit " + reached.to_string();
    if (ok && doc.contains("entry_time")) {
        const auto entry = doc["entry_time"].get<std::size_t>();
        const std::unordered_set<CbnState, CbnStateHash> members(tail.orbit_states.begin(), tail.orbit_states.end());
        std::vector<CbnState> states = traj.states;
        const std::size_t until = std::max(entry, schedule.horizon() + tail.transient_length) + tail.period;
        while (states.size() <= until) {
            states.push_back(step(net.graph, states.back()));
        }
        for (std::size_t t = entry; t <= until && ok; ++t) {
            if (!members.contains(states[t])) {
                ok = false;
                problem = "state at t = " + std::to_string(t) + " is outside the orbit";
            }
        }
    }
    if (io.json_output()) {
        io.emit({{"kind", "orbit"}, {"verified", ok}, {"reached_necklace", reached.to_string()}});
    } else if (ok) {
        io.out << "verified: trajectory from " << x0.to_string() << " enters orbit " << s.to_string() << '\n';
    } else {
        io.out << "FAILED: " << problem << '\n';
    }
    return ok ? exit_ok : exit_negative;
}

int cmd_verify(const Io& io, const std::string& path, const std::string& schedule_path) {
    const auto net = load_network(io, path);
    json doc;
    try {
        doc = json::parse(read_file(schedule_path));
    } catch (const json::exception& e) {
        throw specification_error("bad schedule file: " + std::string(e.what()));
    }
    const ControlSchedule schedule = schedule_from_json(net.graph, doc);
    const std::string kind = doc.value("kind", "");
    if (kind == "state") {
        return verify_state(io, net, schedule, doc);
    }
    if (kind == "orbit") {
        return verify_orbit(io, net, schedule, doc);
    }
    throw specification_error("schedule \"kind\" must be \"state\" or \"orbit\"");
}

int cmd_export_dot(const Io& io, const std::string& path, bool derived, const std::string& controls) {
    const auto net = load_network(io, path);
    ControlSpec spec;
    if (!controls.empty() || net.has_controls) {
        spec = pick_controls(net, controls);
    }
    io.out << to_dot(net.graph, spec, derived);
    return exit_ok;
}

int cmd_oracle_orbits(const Io& io, const std::string& path) {
    const auto net = load_network(io, path);
    const auto orbits = brute_enumerate_orbits(net.graph, io.oracle_budget());
    if (io.json_output()) {
        json list = json::array();
        for (const auto& o : orbits) {
            json states = json::array();
            for (const auto& s : o) {
                states.push_back(s.to_string());
            }
            list.push_back(states);
        }
        io.emit({{"orbit_count", orbits.size()}, {"orbits", list}});
    } else {
        io.out << orbits.size() << " periodic orbits (exhaustive search)\n";
        for (const auto& o : orbits) {
            io.out << "  period " << o.size() << ":";
            for (const auto& s : o) {
                io.out << ' ' << s.to_string();
            }
            io.out << '\n';
        }
    }
    return exit_ok;
}

int cmd_oracle_check(const Io& io, const std::string& path, bool orbit, bool state, const std::string& controls) {
    if (orbit == state) {
        throw specification_error("pass exactly one of --orbit or --state");
    }
    const auto net = load_network(io, path);
    const ControlSpec spec = pick_controls(net, controls);
    const bool ok = orbit ? brute_orbit_controllable(net.graph, spec, io.oracle_budget())
                          : brute_state_controllable(net.graph, spec, io.oracle_budget());
    if (io.json_output()) {
        io.emit({{"kind", orbit ? "orbit" : "state"},
                 {"controls", label_list(net.graph, spec.nodes())},
                 {"controlling", ok},
                 {"method", "exhaustive"}});
    } else {
        io.out << (orbit ? "orbit" : "state") << "-controlling (exhaustive search): " << (ok ? "yes" : "no") << '\n';
    }
    return ok ? exit_ok : exit_negative;
}

int cmd_gen(const Io& io, std::size_t nodes, double density, std::size_t period, bool strongly_connected) {
    std::mt19937_64 rng(io.globals.seed);
    Digraph g;
    if (period > 0) {
        g = random_periodic(nodes, period, density, rng);
    } else if (strongly_connected) {
        g = random_strongly_connected(nodes, density, rng);
    } else {
        g = random_digraph(nodes, density, rng);
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < nodes; ++i) {
        labels.push_back("v" + std::to_string(i + 1));
    }
    io.out << serialize_document(make_document(Digraph(nodes, g.edges(), labels)));
    return exit_ok;
}

std::size_t env_budget() {
    if (const char* env = std::getenv("CBN_BUDGET")) {
        try {
            return std::stoul(env);
        } catch (const std::exception&) {
            // fall through to the default
        }
    }
    return default_budget;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Globals globals;
    globals.budget = env_budget();

    CLI::App app{"Conjunctive Boolean network analysis and control synthesis.\n"
                 "Bit strings list node values in declaration order, leftmost = first node."};
    app.name("cbnctl");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--budget", globals.budget,
                   "Max bits of exhaustive state search (default 20, or $CBN_BUDGET)");
    app.add_option("--seed", globals.seed, "Seed for the gen command");

    const Io io{out, err, globals};
    std::function<int()> action;

    std::string network;
    std::string controls;
    std::string init;
    std::string target;
    std::string necklace;
    std::string driver;
    std::string out_path;
    std::string schedule_path;
    std::size_t steps = 0;
    bool orbit = false;
    bool state = false;
    bool derived = false;
    std::size_t gen_nodes = 6;
    double gen_density = 0.2;
    std::size_t gen_period = 0;
    bool gen_sc = false;

    auto add_network = [&](CLI::App* sub) {
        sub->add_option("network", network, "Network document (JSON)")->required();
    };

    auto* simulate_cmd = app.add_subcommand("simulate", "Run the uncontrolled dynamics");
    add_network(simulate_cmd);
    simulate_cmd->add_option("--init", init, "Initial state bits")->required();
    simulate_cmd->add_option("--steps", steps, "Number of steps")->required();
    simulate_cmd->callback([&] { action = [&] { return cmd_simulate(io, network, init, steps); }; });

    auto* orbits_cmd = app.add_subcommand("orbits", "List periodic orbits via necklaces");
    add_network(orbits_cmd);
    orbits_cmd->callback([&] { action = [&] { return cmd_orbits(io, network); }; });

    auto* loop_cmd = app.add_subcommand("loop-number", "Print the loop number (gcd of cycle lengths)");
    add_network(loop_cmd);
    loop_cmd->callback([&] { action = [&] { return cmd_loop_number(io, network); }; });

    auto* comp_cmd = app.add_subcommand("components", "Dump the irreducible-component partition");
    add_network(comp_cmd);
    comp_cmd->callback([&] { action = [&] { return cmd_components(io, network); }; });

    auto* check_cmd = app.add_subcommand("check", "Decide orbit- or state-controllability");
    add_network(check_cmd);
    check_cmd->add_flag("--orbit", orbit, "Orbit-controllability");
    check_cmd->add_flag("--state", state, "State-controllability");
    check_cmd->add_option("--controls", controls, "Comma-separated control labels");
    check_cmd->callback([&] { action = [&] { return cmd_check(io, network, orbit, state, controls); }; });

    auto* syn_orbit = app.add_subcommand("synthesize-orbit", "Schedule that steers into a periodic orbit");
    add_network(syn_orbit);
    syn_orbit->add_option("--controls", controls, "Comma-separated control labels");
    syn_orbit->add_option("--necklace", necklace, "Target orbit as a necklace bit string")->required();
    syn_orbit->add_option("--init", init, "Initial state bits")->required();
    syn_orbit->add_option("--driver", driver, "Control node that replays the necklace (default: first)");
    syn_orbit->add_option("--out", out_path, "Also write the schedule file here");
    syn_orbit->callback([&] {
        action = [&] { return cmd_synthesize_orbit(io, network, controls, necklace, init, driver, out_path); };
    });

    auto* syn_state = app.add_subcommand("synthesize-state", "Schedule that reaches a target state");
    add_network(syn_state);
    syn_state->add_option("--controls", controls, "Comma-separated control labels");
    syn_state->add_option("--target", target, "Target state bits")->required();
    syn_state->add_option("--out", out_path, "Also write the schedule file here");
    syn_state->callback([&] { action = [&] { return cmd_synthesize_state(io, network, controls, target, out_path); }; });

    auto* min_cmd = app.add_subcommand("min-set", "Smallest controlling set by exhaustive search");
    add_network(min_cmd);
    min_cmd->add_flag("--orbit", orbit, "Orbit-controlling");
    min_cmd->add_flag("--state", state, "State-controlling");
    min_cmd->callback([&] { action = [&] { return cmd_min_set(io, network, orbit, state); }; });

    auto* verify_cmd = app.add_subcommand("verify", "Replay a schedule file and check its claim");
    add_network(verify_cmd);
    verify_cmd->add_option("--schedule", schedule_path, "Schedule file from synthesize-*")->required();
    verify_cmd->callback([&] { action = [&] { return cmd_verify(io, network, schedule_path); }; });

    auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of the network");
    add_network(dot_cmd);
    dot_cmd->add_flag("--derived", derived, "Drop in-edges of control nodes");
    dot_cmd->add_option("--controls", controls, "Comma-separated control labels");
    dot_cmd->callback([&] { action = [&] { return cmd_export_dot(io, network, derived, controls); }; });

    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive-search counterparts of orbits/check");
    oracle_cmd->require_subcommand(1);
    auto* oracle_orbits = oracle_cmd->add_subcommand("orbits", "Enumerate orbits from all 2^n states");
    add_network(oracle_orbits);
    oracle_orbits->callback([&] { action = [&] { return cmd_oracle_orbits(io, network); }; });
    auto* oracle_check = oracle_cmd->add_subcommand("check", "Controllability by reachability search");
    add_network(oracle_check);
    oracle_check->add_flag("--orbit", orbit, "Orbit-controlling");
    oracle_check->add_flag("--state", state, "State-controlling");
    oracle_check->add_option("--controls", controls, "Comma-separated control labels");
    oracle_check->callback([&] { action = [&] { return cmd_oracle_check(io, network, orbit, state, controls); }; });

    auto* gen_cmd = app.add_subcommand("gen", "Print a random network document");
    gen_cmd->add_option("--nodes", gen_nodes, "Node count")->check(CLI::Range(1, 64));
    gen_cmd->add_option("--density", gen_density, "Extra edge probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--period", gen_period, "Force the loop number to a multiple of this");
    gen_cmd->add_flag("--strongly-connected", gen_sc, "Only strongly connected graphs");
    gen_cmd->callback([&] { action = [&] { return cmd_gen(io, gen_nodes, gen_density, gen_period, gen_sc); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        return action();
    } catch (const budget_error& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return exit_budget;
    } catch (const not_controllable_error& e) {
        err << "not controllable: " << e.what() << '\n';
        return exit_negative;
    } catch (const consistency_error& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_usage;
    } catch (const cbn::error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace cbn::cli
