#include "formation/json_io.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>

namespace formation {

namespace {

using ordered = nlohmann::ordered_json;

std::string finish(const ordered& j) { return j.dump(2) + "\n"; }

// json exceptions carry the offending key/type; surface them uniformly
ordered parse_text(const std::string& text) {
    try {
        return ordered::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("json: ") + e.what());
    }
}

template <typename F>
auto extracting(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("json: ") + e.what());
    }
}

ordered switches_to_json(const std::vector<GoalSwitch>& switches) {
    ordered arr = ordered::array();
    for (const GoalSwitch& s : switches)
        arr.push_back({{"t", s.t}, {"a", s.a}, {"b", s.b}});
    return arr;
}

std::vector<GoalSwitch> switches_from_json(const ordered& arr) {
    std::vector<GoalSwitch> out;
    for (const auto& s : arr)
        out.push_back({s.at("t").get<int>(), s.at("a").get<int>(),
                       s.at("b").get<int>()});
    return out;
}

ordered schedule_to_json(const Schedule& s) {
    ordered j;
    j["makespan"] = makespan(s);
    ordered agents = ordered::array();
    for (size_t i = 0; i < s.occupancy.size(); ++i)
        agents.push_back({{"agent", i}, {"occupancy", s.occupancy[i]}});
    j["agents"] = std::move(agents);
    j["switches"] = switches_to_json(s.switches);
    j["total_moves"] = total_moves(s);
    return j;
}

const char* phase_name(Message::Phase p) {
    return p == Message::Phase::forward ? "fwd" : "bwd";
}

const char* kind_name(Message::Kind k) {
    switch (k) {
    case Message::Kind::intent: return "intent";
    case Message::Kind::goal_switch: return "goal-switch";
    case Message::Kind::grant: return "grant";
    case Message::Kind::deny: return "deny";
    case Message::Kind::relay_deny: return "relay-deny";
    }
    return "unknown";
}

} // namespace

std::string serialize_instance(const Instance& inst) {
    const Graph& g = inst.graph;
    ordered j;
    ordered vertices = ordered::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        ordered entry{{"id", v}};
        if (g.has_coords()) {
            entry["x"] = g.coord(v).x;
            entry["y"] = g.coord(v).y;
        }
        vertices.push_back(std::move(entry));
    }
    j["vertices"] = std::move(vertices);
    ordered edges = ordered::array();
    for (const Edge& e : g.edges())
        edges.push_back({{"u", e.u}, {"v", e.v}, {"length", e.length},
                         {"capacity", e.capacity}});
    j["edges"] = std::move(edges);
    j["starts"] = inst.starts;
    j["goals"] = inst.goals;
    return finish(j);
}

Instance parse_instance(const std::string& text) {
    const ordered j = parse_text(text);
    return extracting([&] {
        const auto& jverts = j.at("vertices");
        const int V = static_cast<int>(jverts.size());
        std::vector<char> seen(V, 0);
        int with_coords = 0;
        std::vector<Coord> coords(V);
        for (const auto& jv : jverts) {
            const int id = jv.at("id").get<int>();
            if (id < 0 || id >= V || seen[id])
                throw std::invalid_argument(
                    "vertices: ids must be exactly 0.." + std::to_string(V - 1));
            seen[id] = 1;
            if (jv.contains("x") != jv.contains("y"))
                throw std::invalid_argument("vertices: x and y come together");
            if (jv.contains("x")) {
                ++with_coords;
                coords[id] = {jv.at("x").get<int>(), jv.at("y").get<int>()};
            }
        }
        if (with_coords != 0 && with_coords != V)
            throw std::invalid_argument(
                "vertices: coordinates must cover all vertices or none");
        if (with_coords == 0) coords.clear();

        std::vector<Edge> edges;
        for (const auto& je : j.at("edges"))
            edges.push_back({je.at("u").get<int>(), je.at("v").get<int>(),
                             je.value("length", 1), je.value("capacity", 1)});

        Graph g(V, std::move(edges), std::move(coords));
        return make_instance(std::move(g),
                             j.at("starts").get<std::vector<VertexId>>(),
                             j.at("goals").get<std::vector<VertexId>>());
    });
}

std::string serialize_path_set(const PathSet& q) {
    ordered j;
    j["total_length"] = q.total_length;
    ordered paths = ordered::array();
    for (const UnscheduledPath& p : q.paths)
        paths.push_back({{"agent", p.agent}, {"vertices", p.vertices}});
    j["paths"] = std::move(paths);
    return finish(j);
}

PathSet parse_path_set(const std::string& text) {
    const ordered j = parse_text(text);
    return extracting([&] {
        PathSet q;
        q.total_length = j.at("total_length").get<long long>();
        int index = 0;
        for (const auto& jp : j.at("paths")) {
            UnscheduledPath p{jp.at("agent").get<int>(),
                              jp.at("vertices").get<std::vector<VertexId>>()};
            if (p.agent != index++)
                throw std::invalid_argument("paths: agents must run 0..n-1 in order");
            if (p.vertices.empty())
                throw std::invalid_argument("paths: empty vertex sequence");
            q.paths.push_back(std::move(p));
        }
        return q;
    });
}

std::string serialize_schedule(const Schedule& s) { return finish(schedule_to_json(s)); }

Schedule parse_schedule(const std::string& text) {
    const ordered j = parse_text(text);
    return extracting([&] {
        Schedule s;
        int index = 0;
        for (const auto& ja : j.at("agents")) {
            if (ja.at("agent").get<int>() != index++)
                throw std::invalid_argument("agents: ids must run 0..n-1 in order");
            s.occupancy.push_back(ja.at("occupancy").get<std::vector<VertexId>>());
            if (s.occupancy.back().empty())
                throw std::invalid_argument("agents: empty occupancy row");
        }
        s.switches = switches_from_json(j.at("switches"));
        return s;
    });
}

std::string serialize_timed(const TimedSchedule& ts) {
    ordered j;
    j["makespan"] = ts.makespan;
    ordered agents = ordered::array();
    for (size_t i = 0; i < ts.agents.size(); ++i) {
        const TimedAgent& a = ts.agents[i];
        ordered arrivals = ordered::array();
        for (const VertexArrival& va : a.arrivals)
            arrivals.push_back({{"vertex", va.vertex}, {"t", va.t}});
        ordered crossings = ordered::array();
        for (const EdgeCrossing& c : a.crossings)
            crossings.push_back({{"from", c.from}, {"to", c.to},
                                 {"enter", c.enter}, {"exit", c.exit}});
        agents.push_back({{"agent", i},
                          {"arrival_times", std::move(arrivals)},
                          {"edge_intervals", std::move(crossings)},
                          {"completion", a.completion}});
    }
    j["agents"] = std::move(agents);
    j["switches"] = switches_to_json(ts.switches);
    ordered bounds{{"ell", ts.bounds.ell},
                   {"d_max", ts.bounds.d_max},
                   {"ell_hat", ts.bounds.ell_hat},
                   {"bound", ts.bounds.bound}};
    if (ts.bounds.original_ell) bounds["original_ell"] = *ts.bounds.original_ell;
    if (ts.bounds.original_d_max)
        bounds["original_d_max"] = *ts.bounds.original_d_max;
    j["bounds"] = std::move(bounds);
    return finish(j);
}

TimedSchedule parse_timed(const std::string& text) {
    const ordered j = parse_text(text);
    return extracting([&] {
        TimedSchedule ts;
        ts.makespan = j.at("makespan").get<long long>();
        int index = 0;
        for (const auto& ja : j.at("agents")) {
            if (ja.at("agent").get<int>() != index++)
                throw std::invalid_argument("agents: ids must run 0..n-1 in order");
            TimedAgent a;
            for (const auto& jv : ja.at("arrival_times"))
                a.arrivals.push_back(
                    {jv.at("vertex").get<VertexId>(), jv.at("t").get<long long>()});
            for (const auto& jc : ja.at("edge_intervals"))
                a.crossings.push_back(
                    {jc.at("from").get<VertexId>(), jc.at("to").get<VertexId>(),
                     jc.at("enter").get<long long>(), jc.at("exit").get<long long>()});
            a.completion = ja.at("completion").get<long long>();
            ts.agents.push_back(std::move(a));
        }
        ts.switches = switches_from_json(j.at("switches"));
        const auto& jb = j.at("bounds");
        ts.bounds.ell = jb.at("ell").get<long long>();
        ts.bounds.d_max = jb.at("d_max").get<long long>();
        ts.bounds.ell_hat = jb.at("ell_hat").get<long long>();
        ts.bounds.bound = jb.at("bound").get<long long>();
        if (jb.contains("original_ell"))
            ts.bounds.original_ell = jb.at("original_ell").get<long long>();
        if (jb.contains("original_d_max"))
            ts.bounds.original_d_max = jb.at("original_d_max").get<long long>();
        return ts;
    });
}

std::string serialize_trace(const SimTrace& trace) {
    ordered j;
    ordered rounds = ordered::array();
    for (const RoundRecord& r : trace.rounds) {
        ordered messages = ordered::array();
        for (const Message& m : r.messages)
            messages.push_back({{"t", m.t},
                                {"phase", phase_name(m.phase)},
                                {"kind", kind_name(m.kind)},
                                {"from", m.from},
                                {"to", m.to},
                                {"vertex", m.vertex}});
        ordered moves = ordered::array();
        for (const SimMove& m : r.moves)
            moves.push_back({{"agent", m.agent}, {"from", m.from}, {"to", m.to}});
        rounds.push_back({{"t", r.t},
                          {"messages", std::move(messages)},
                          {"moves", std::move(moves)},
                          {"switches", switches_to_json(r.switches)}});
    }
    j["rounds"] = std::move(rounds);
    j["schedule"] = schedule_to_json(trace.schedule);
    return finish(j);
}

std::string serialize_violations(const std::vector<Violation>& violations) {
    ordered j;
    ordered arr = ordered::array();
    for (const Violation& v : violations)
        arr.push_back({{"kind", to_string(v.kind)},
                       {"t", v.t},
                       {"agents", v.agents},
                       {"vertices", v.vertices},
                       {"detail", v.detail}});
    j["violations"] = std::move(arr);
    return finish(j);
}

std::string serialize_ordering(const std::vector<Cluster>& clusters,
                               const DistanceValues& dvals) {
    ordered j;
    ordered arr = ordered::array();
    for (size_t c = 0; c < clusters.size(); ++c) {
        ordered values = ordered::array();
        for (const auto& [v, d] : dvals.cluster_values.at(c))
            values.push_back({{"vertex", v}, {"value", d}});
        arr.push_back({{"paths", clusters[c].paths}, {"values", std::move(values)}});
    }
    j["clusters"] = std::move(arr);
    return finish(j);
}

} // namespace formation
