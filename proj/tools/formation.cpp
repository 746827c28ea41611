#include "formation/distributed.hpp"
#include "formation/generators.hpp"
#include "formation/json_io.hpp"
#include "formation/svg.hpp"
#include "formation/validator.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace formation;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

struct Planned {
    PathSet q;
    std::vector<Cluster> clusters;
    DistanceValues dvals;
};

Planned plan_all(const Instance& inst) {
    Planned p;
    p.q = plan_shortest_path_set(inst);
    p.clusters = find_clusters(p.q);
    p.dvals = build_distance_values(inst.graph, p.q, p.clusters);
    return p;
}

// Text table: one row per agent (1-based), one column per time step,
// coordinate cells when the instance has them.
std::string render_table(const Instance& inst, const Schedule& s) {
    const Graph& g = inst.graph;
    const int last = makespan(s);
    auto cell = [&](VertexId v) {
        if (!g.has_coords()) return std::to_string(v);
        const Coord c = g.coord(v);
        return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
    };

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"agent"};
    for (int t = 0; t <= last; ++t) header.push_back("t=" + std::to_string(t));
    rows.push_back(std::move(header));
    for (size_t i = 0; i < s.occupancy.size(); ++i) {
        std::vector<std::string> row{std::to_string(i + 1)};
        for (int t = 0; t <= last; ++t) row.push_back(cell(s.occupancy[i][t]));
        rows.push_back(std::move(row));
    }

    std::vector<size_t> width(rows.front().size(), 0);
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            if (c + 1 < row.size())
                out += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += '\n';
    }
    for (const GoalSwitch& sw : s.switches)
        out += "switch at t=" + std::to_string(sw.t) + ": agent " +
               std::to_string(sw.a + 1) + " takes over from agent " +
               std::to_string(sw.b + 1) + "\n";
    return out;
}

int cmd_gen(const std::string& kind, std::vector<int> params, std::uint64_t seed,
            const std::string& out) {
    Instance inst = [&] {
        if (kind == "grid") {
            if (params.size() != 2)
                throw std::runtime_error("gen grid needs WIDTH HEIGHT");
            const int w = params[0], h = params[1];
            Graph g = grid_with_holes(w, h);
            std::vector<VertexId> starts, goals;
            for (int y = 0; y < h; ++y) {
                starts.push_back(y * w);
                goals.push_back(y * w + w - 1);
            }
            return make_instance(std::move(g), starts, goals);
        }
        if (kind == "star") {
            if (params.size() != 3)
                throw std::runtime_error("gen star needs N PATH_EDGES EDGE_LEN");
            return star_path_star(params[0], params[1], params[2]);
        }
        if (params.empty()) params = {6, 6, 6, 4};
        if (params.size() != 4)
            throw std::runtime_error("gen random needs no params or W H MAX_HOLES N");
        Rng rng(seed);
        std::cerr << "seed: " << seed << "\n";
        return random_grid_instance(rng, params[0], params[1], params[2], params[3]);
    }();
    emit(out, serialize_instance(inst));
    return 0;
}

int cmd_plan(const std::string& file, bool explain, const std::string& out) {
    const Instance inst = parse_instance(read_file(file));
    const Planned p = plan_all(inst);
    if (explain) std::cerr << serialize_ordering(p.clusters, p.dvals);
    emit(out, serialize_path_set(p.q));
    return 0;
}

int cmd_schedule(const std::string& file, const std::string& paths_file,
                 const std::string& mode, const std::string& format,
                 const std::string& out) {
    const Instance inst = parse_instance(read_file(file));
    if (mode.empty()) {
        PathSet q;
        if (paths_file.empty()) {
            q = plan_shortest_path_set(inst);
        } else {
            q = parse_path_set(read_file(paths_file));
            const PathSetReport rep = verify_properties(inst.graph, q, inst);
            if (!rep.ok()) {
                std::string msg = "path set rejected:";
                for (const auto& issue : rep.issues)
                    msg += "\n  " + issue.check + ": " + issue.detail;
                throw std::runtime_error(msg);
            }
        }
        const auto clusters = find_clusters(q);
        const auto dvals = build_distance_values(inst.graph, q, clusters);
        const Schedule s = schedule_paths(inst.graph, q, dvals);
        emit(out, format == "table" ? render_table(inst, s) : serialize_schedule(s));
        return 0;
    }
    if (!paths_file.empty())
        throw std::runtime_error("--paths only applies without --capacity-mode");
    if (format == "table")
        throw std::runtime_error("--format table only applies without --capacity-mode");
    const TimedSchedule ts = mode == "full"   ? schedule_full_capacity(inst)
                             : mode == "unit" ? schedule_unit_capacity(inst)
                                              : schedule_mixed(inst);
    emit(out, serialize_timed(ts));
    return 0;
}

int cmd_simulate(const std::string& file, std::uint64_t seed,
                 const std::string& tie_break, const std::string& out) {
    const Instance inst = parse_instance(read_file(file));
    const Planned p = plan_all(inst);
    SimConfig cfg;
    cfg.tie_break = tie_break == "random" ? SimConfig::TieBreak::seeded_random
                                          : SimConfig::TieBreak::vertex_id;
    cfg.seed = seed;
    std::cerr << "seed: " << seed << " tie-break: " << tie_break << "\n";
    const SimTrace trace = simulate(inst.graph, p.q, cfg);
    const MessageStats stats = message_stats(trace, inst.graph);
    std::cerr << "rounds: " << trace.rounds.size()
              << " peak messages/round: " << stats.max_per_round << "\n";
    emit(out, serialize_trace(trace));
    return 0;
}

int cmd_verify(const std::string& schedule_file, const std::string& instance_file,
               const std::string& out) {
    const Instance inst = parse_instance(read_file(instance_file));
    const std::string text = read_file(schedule_file);
    std::vector<Violation> violations;
    try {
        violations = check_all(parse_schedule(text), inst);
    } catch (const std::invalid_argument& plain_err) {
        try {
            violations = check_timed(parse_timed(text), inst);
        } catch (const std::invalid_argument&) {
            throw plain_err; // neither schema parsed; report the first failure
        }
    }
    emit(out, serialize_violations(violations));
    std::cerr << violations.size() << " violation(s)\n";
    return violations.empty() ? 0 : 1;
}

int cmd_oracle(const std::string& file, const std::string& out) {
    const Instance inst = parse_instance(read_file(file));
    const int n = inst.agent_count();
    if (n > 8) throw std::runtime_error("oracle needs n <= 8");
    const BruteForceMatching matching = brute_force_min_matching(inst);
    nlohmann::ordered_json j;
    j["matching_cost"] = matching.cost;
    j["assignment"] = matching.assignment;
    if (n <= 3 && inst.graph.vertex_count() <= 12 && inst.graph.unit_capacities()) {
        const PathSet q = plan_shortest_path_set(inst);
        long long max_hops = 0;
        for (const auto& p : q.paths)
            max_hops = std::max(max_hops,
                                static_cast<long long>(p.vertices.size()) - 1);
        const long long d_max = inst.graph.max_edge_length();
        const long long horizon = (max_hops + n - 1) * d_max;
        const SearchResult res = min_completion_exhaustive(inst, horizon);
        j["horizon"] = horizon;
        j["min_completion"] = res.min_completion;
        j["states_explored"] = res.states;
    }
    emit(out, j.dump(2) + "\n");
    return 0;
}

int cmd_export_svg(const std::string& schedule_file, const std::string& instance_file,
                   std::string prefix) {
    const Instance inst = parse_instance(read_file(instance_file));
    const Schedule s = parse_schedule(read_file(schedule_file));
    if (prefix.empty()) prefix = "frame";
    const std::vector<std::string> frames = render_svg_frames(inst, s);
    for (size_t t = 0; t < frames.size(); ++t) {
        std::string num = std::to_string(t);
        num.insert(0, num.size() < 3 ? 3 - num.size() : 0, '0');
        write_file(prefix + "_" + num + ".svg", frames[t]);
    }
    std::cerr << "wrote " << frames.size() << " frames\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance-optimal formation planning on graphs"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate an instance file");
    std::string gen_kind;
    std::vector<int> gen_params;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("kind", gen_kind, "grid | star | random")
        ->required()
        ->check(CLI::IsMember({"grid", "star", "random"}));
    gen->add_option("params", gen_params,
                    "grid: W H; star: N PATH_EDGES EDGE_LEN; random: [W H MAX_HOLES N]");
    gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
    gen->add_option("--out", gen_out, "output file (default stdout)");

    auto* plan = app.add_subcommand("plan", "assign goals and emit shortest paths");
    std::string plan_file, plan_out;
    bool plan_explain = false;
    plan->add_option("instance", plan_file, "instance JSON file")->required();
    plan->add_flag("--explain", plan_explain, "dump clusters and distance values to stderr");
    plan->add_option("--out", plan_out, "output file (default stdout)");

    auto* schedule = app.add_subcommand("schedule", "turn an instance into a schedule");
    std::string sch_file, sch_paths, sch_mode, sch_format = "json", sch_out;
    schedule->add_option("instance", sch_file, "instance JSON file")->required();
    schedule->add_option("--paths", sch_paths, "pre-planned path set JSON");
    schedule->add_option("--capacity-mode", sch_mode,
                         "timed scheduling on lengths/capacities")
        ->check(CLI::IsMember({"full", "unit", "mixed"}));
    schedule->add_option("--format", sch_format, "json | table")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "table"}));
    schedule->add_option("--out", sch_out, "output file (default stdout)");

    auto* simulate = app.add_subcommand("simulate", "run the message-passing protocol");
    std::string sim_file, sim_tie = "vertex-id", sim_out;
    std::uint64_t sim_seed = 1;
    simulate->add_option("instance", sim_file, "instance JSON file")->required();
    simulate->add_option("--seed", sim_seed, "tie-break seed")->capture_default_str();
    simulate->add_option("--tie-break", sim_tie, "vertex-id | random")
        ->capture_default_str()
        ->check(CLI::IsMember({"vertex-id", "random"}));
    simulate->add_option("--out", sim_out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "validate a schedule against an instance");
    std::string ver_file, ver_inst, ver_out;
    verify->add_option("schedule", ver_file, "schedule or timed-schedule JSON file")
        ->required();
    verify->add_option("--instance", ver_inst, "instance JSON file")->required();
    verify->add_option("--out", ver_out, "violation report file (default stdout)");

    auto* oracle = app.add_subcommand("oracle", "exhaustive small-instance reference");
    std::string ora_file, ora_out;
    oracle->add_option("instance", ora_file, "instance JSON file")->required();
    oracle->add_option("--out", ora_out, "output file (default stdout)");

    auto* exp = app.add_subcommand("export-svg", "render one SVG per time step");
    std::string exp_file, exp_inst, exp_out;
    exp->add_option("schedule", exp_file, "schedule JSON file")->required();
    exp->add_option("--instance", exp_inst, "instance JSON file")->required();
    exp->add_option("--out", exp_out, "frame path prefix (default 'frame')");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_kind, gen_params, gen_seed, gen_out);
        if (plan->parsed()) return cmd_plan(plan_file, plan_explain, plan_out);
        if (schedule->parsed())
            return cmd_schedule(sch_file, sch_paths, sch_mode, sch_format, sch_out);
        if (simulate->parsed()) return cmd_simulate(sim_file, sim_seed, sim_tie, sim_out);
        if (verify->parsed()) return cmd_verify(ver_file, ver_inst, ver_out);
        if (oracle->parsed()) return cmd_oracle(ora_file, ora_out);
        if (exp->parsed()) return cmd_export_svg(exp_file, exp_inst, exp_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
