#include "armcfg/io.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "armcfg/errors.hpp"

namespace armcfg {

namespace {

std::string expect_string(const Json& j, const char* what) {
    if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

}  // namespace

GraphDocument load_graph(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("graph document is not JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("graph document must be an object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw InputError("graph document needs a \"vertices\" array");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw InputError("graph document needs an \"edges\" array");

    std::vector<std::string> names;
    for (const auto& v : doc["vertices"]) names.push_back(expect_string(v, "vertex"));
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2) throw InputError("every edge must be a pair of vertices");
        edges.emplace_back(expect_string(e[0], "edge endpoint"), expect_string(e[1], "edge endpoint"));
    }
    GraphDocument out{std::make_shared<const Graph>(std::move(names), edges), std::nullopt};
    if (doc.contains("base")) {
        out.base = expect_string(doc["base"], "base");
        if (!out.graph->find(*out.base)) throw InputError("base vertex '" + *out.base + "' is not in the graph");
    }
    return out;
}

GraphDocument load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read graph file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_graph(ss.str());
}

Json to_json(const Graph& g, const GraphPath& p) { return path_names(g, p); }

Json to_json(const Graph& g, const IndexedPath& u) { return {{"path", to_json(g, u.path)}, {"a", u.index}}; }

Json to_json(const PipInstance& pip, const LowerSet& mu) {
    Json arr = Json::array();
    for (auto i : mu.maximal) arr.push_back(to_json(pip.arm().graph(), pip.element(i)));
    return arr;
}

Json to_json(const Graph& g, const PathTableau& t) {
    return {{"path", to_json(g, t.path)}, {"labels", t.labels}};
}

Json to_json(const Graph& g, const ExtendedTableau& u) {
    Json values = Json::array();
    for (int v : u.values) values.push_back(v == kInfinity ? Json("inf") : Json(v));
    return {{"spine", to_json(g, u.spine)}, {"values", values}};
}

Json to_json(const Graph& g, const Configuration& x) {
    Json arr = Json::array();
    for (const auto& c : x.cells) arr.push_back(Json::array({g.name(c.v), c.h}));
    return arr;
}

Json to_json(const Graph& g, const Move& m) {
    return {{"kind", m.kind == MoveKind::Tail ? "T" : "C"},
            {"dir", m.dir},
            {"v", g.name(m.v)},
            {"w", g.name(m.w)},
            {"h", m.h}};
}

Json to_json(const Graph& g, const Plan& plan) {
    Json moves = Json::array();
    for (const auto& m : plan.moves) moves.push_back(to_json(g, m));
    Json j{{"source", to_json(g, plan.source)}, {"target", to_json(g, plan.target)}, {"moves", moves}};
    if (!plan.rounds.empty()) j["rounds"] = plan.rounds;
    return j;
}

Json to_json(const Graph& g, const DiameterReport& rep) {
    Json j{{"n", rep.n},
           {"length", rep.length},
           {"bound", rep.bound},
           {"tightBound", rep.tight_bound},
           {"hypothesisHolds", rep.hypothesis_holds},
           {"exactDiameter", nullptr},
           {"witnessPair", nullptr}};
    if (rep.exact) j["exactDiameter"] = *rep.exact;
    if (rep.witness) j["witnessPair"] = Json::array({to_json(g, rep.witness->first), to_json(g, rep.witness->second)});
    return j;
}

Json fvector_json(const std::vector<std::size_t>& f) { return {{"dims", f}}; }

Json complex_json(const CubicalComplex& k) {
    Json cubes = Json::array();
    for (const auto& layer : k.cubes) {
        Json l = Json::array();
        for (const auto& c : layer) l.push_back(c.corners);
        cubes.push_back(std::move(l));
    }
    return {{"vertices", k.vertex_count()}, {"root", k.root}, {"cubes", cubes}};
}

Configuration configuration_from_json(const Arm& arm, const Json& j) {
    if (!j.is_array()) throw InputError("configuration must be an array of [vertex, height] pairs");
    Configuration x;
    for (const auto& c : j) {
        if (!c.is_array() || c.size() != 2 || !c[1].is_number_integer())
            throw InputError("configuration entries must be [vertex, height]");
        x.cells.push_back({arm.graph().vertex(expect_string(c[0], "vertex")), c[1].get<int>()});
    }
    validate_configuration(arm, x);
    return x;
}

Move move_from_json(const Graph& g, const Json& j) {
    if (!j.is_object()) throw InputError("move must be an object");
    try {
        const auto kind = j.at("kind").get<std::string>();
        if (kind != "T" && kind != "C") throw InputError("move kind must be T or C");
        const int dir = j.at("dir").get<int>();
        if (dir != 1 && dir != -1) throw InputError("move dir must be 1 or -1");
        return {kind == "T" ? MoveKind::Tail : MoveKind::Corner, dir, g.vertex(j.at("v").get<std::string>()),
                g.vertex(j.at("w").get<std::string>()), j.at("h").get<int>()};
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed move: ") + e.what());
    }
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

Configuration parse_configuration(const Arm& arm, std::string_view text) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string_view::npos && text[first] == '[') {
        try {
            return configuration_from_json(arm, Json::parse(text));
        } catch (const Json::parse_error& e) {
            throw InputError(std::string("configuration is not JSON: ") + e.what());
        }
    }
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw InputError("configuration must be JSON or the shorthand \"path:labels\"");
    const auto names = split(text.substr(0, colon), ',');
    if (names.empty()) throw InputError("shorthand path needs its start vertex");
    std::vector<int> labels;
    for (const auto& l : split(text.substr(colon + 1), ',')) {
        try {
            std::size_t used = 0;
            labels.push_back(std::stoi(l, &used));
            if (used != l.size()) throw std::invalid_argument(l);
        } catch (const std::exception&) {
            throw InputError("label '" + l + "' is not an integer");
        }
    }
    PathTableau t{make_path(arm.graph(), names), labels};
    if (t.path.start() != arm.base()) throw InputError("shorthand path must start at the base vertex");
    if (!is_tableau(arm, t)) throw InputError("shorthand is not a tableau: " + format_tableau(arm.graph(), t));
    return tableau_to_config(arm, t);
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string hasse_dot(const PipInstance& pip) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
    for (std::size_t i = 0; i < pip.size(); ++i) os << "  n" << i << " [label=" << quoted(pip.name(i)) << "];\n";
    for (auto [i, j] : cover_relations(pip)) os << "  n" << i << " -> n" << j << ";\n";
    for (auto [i, j] : minimal_inconsistent_pairs(pip))
        os << "  n" << i << " -> n" << j << " [style=dashed, dir=none, constraint=false];\n";
    os << "}\n";
    return os.str();
}

std::string transition_dot(const Arm& arm, const TransitionGraph& tg, bool full_labels) {
    const auto& g = arm.graph();
    std::ostringstream os;
    os << "graph transitions {\n  node [shape=ellipse, fontsize=10];\n";
    for (std::size_t i = 0; i < tg.size(); ++i) {
        const auto text = to_json(g, tg.nodes[i]).dump();
        std::string label = format_configuration(g, tg.nodes[i]);
        if (!full_labels) {
            char buf[17];
            std::snprintf(buf, sizeof buf, "%08zx", std::hash<std::string>{}(text) & 0xffffffffu);
            label = buf;
        }
        os << "  n" << i << " [label=" << quoted(label) << "];\n";
    }
    for (std::size_t i = 0; i < tg.size(); ++i)
        for (const auto& arc : tg.adjacency[i])
            if (i < arc.to)
                os << "  n" << i << " -- n" << arc.to << " [label=" << quoted(format_move(g, arc.move)) << "];\n";
    os << "}\n";
    return os.str();
}

}  // namespace armcfg
