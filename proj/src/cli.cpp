#include "armcfg/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "armcfg/errors.hpp"
#include "armcfg/io.hpp"
#include "armcfg/verify.hpp"

namespace armcfg {

namespace {

struct RunConfig {
    std::string graph_file;
    std::string base;
    int length = -1;
    std::optional<std::size_t> limit;
    std::string format;
    std::string out_file;

    // command-specific
    bool list = false;
    std::string source;
    std::string target;
    bool rounds = false;
    std::string mode = "exact-bfs";
    std::string oracle = "formula";
    bool corrupt = false;
    int spine_max = 4;
    std::string what = "transition";
    bool full_labels = false;
};

struct Limits {
    std::size_t nodes = kDefaultNodeLimit;
    std::size_t pip = kDefaultPipLimit;
    std::size_t lattice = kDefaultLatticeLimit;
};

// --limit wins over ARM_LIMIT; either replaces every default guard.
Limits resolve_limits(const RunConfig& cfg) {
    std::optional<std::size_t> chosen = cfg.limit;
    if (!chosen) {
        if (const char* env = std::getenv("ARM_LIMIT"); env && *env) {
            char* end = nullptr;
            const long long v = std::strtoll(env, &end, 10);
            if (*end != '\0' || v <= 0) throw InputError("ARM_LIMIT must be a positive integer");
            chosen = static_cast<std::size_t>(v);
        }
    }
    if (chosen && *chosen == 0) throw InputError("limit must be positive");
    Limits l;
    if (chosen) l.nodes = l.pip = l.lattice = *chosen;
    return l;
}

Arm make_arm(const RunConfig& cfg) {
    auto doc = load_graph_file(cfg.graph_file);
    std::string base = cfg.base.empty() ? doc.base.value_or("") : cfg.base;
    if (base.empty()) throw InputError("no base vertex: pass --base or declare \"base\" in the graph");
    if (cfg.length < 0) throw InputError("arm length must be non-negative");
    return Arm(doc.graph, doc.graph->vertex(base), cfg.length);
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out_file);
    if (!f) throw InputError("cannot write '" + cfg.out_file + "'");
    f << text;
}

std::string format_or(const RunConfig& cfg, const char* fallback) {
    return cfg.format.empty() ? fallback : cfg.format;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    const auto arm = make_arm(cfg);
    const auto limits = resolve_limits(cfg);
    const auto& g = arm.graph();
    auto tg = build_transition_graph(arm, limits.nodes);
    auto tabs = enumerate_tableaux(arm, limits.nodes);
    auto pip = build_ip(arm);
    auto lowers = enumerate_consistent_lower_sets(pip, limits.pip);
    const bool agree = tg.size() == tabs.size() && tabs.size() == lowers.size();

    std::ostringstream os;
    if (format_or(cfg, "text") == "json") {
        Json j{{"configurations", tg.size()},
               {"tableaux", tabs.size()},
               {"pipElements", pip.size()},
               {"consistentLowerSets", lowers.size()},
               {"countsAgree", agree}};
        if (cfg.list) {
            for (const auto& x : tg.nodes) j["configurationList"].push_back(to_json(g, x));
            for (const auto& t : tabs) j["tableauList"].push_back(to_json(g, t));
            for (const auto& u : pip.elements()) j["pipElementList"].push_back(to_json(g, u));
            for (const auto& mu : lowers) j["lowerSetList"].push_back(to_json(pip, mu));
        }
        os << j.dump(2) << "\n";
    } else {
        os << "configurations: " << tg.size() << "\n"
           << "tableaux: " << tabs.size() << "\n"
           << "pip elements: " << pip.size() << "\n"
           << "consistent lower sets: " << lowers.size() << "\n";
        if (cfg.list) {
            os << "\n[configurations]\n";
            for (const auto& x : tg.nodes) os << format_configuration(g, x) << "\n";
            os << "\n[tableaux]\n";
            for (const auto& t : tabs) os << format_tableau(g, t) << "\n";
            os << "\n[pip elements]\n";
            for (std::size_t i = 0; i < pip.size(); ++i) os << pip.name(i) << "\n";
            os << "\n[consistent lower sets]\n";
            for (const auto& mu : lowers) os << to_json(pip, mu).dump() << "\n";
        }
        if (!agree) os << "counts disagree\n";
    }
    emit(cfg, os.str(), out);
    return agree ? kExitOk : kExitCheckFailed;
}

int cmd_plan(const RunConfig& cfg, std::ostream& out) {
    const auto arm = make_arm(cfg);
    const auto& g = arm.graph();
    const auto x = cfg.source.empty() ? initial_configuration(arm) : parse_configuration(arm, cfg.source);
    if (cfg.target.empty()) throw InputError("plan needs --target");
    const auto y = parse_configuration(arm, cfg.target);
    const auto plan = cfg.rounds ? plan_rounds(arm, x, y) : plan_moves(arm, x, y);
    const auto check = validate_plan(arm, plan);

    std::ostringstream os;
    if (format_or(cfg, "json") == "text") {
        os << "source: " << format_configuration(g, plan.source) << "\n"
           << "target: " << format_configuration(g, plan.target) << "\n"
           << "moves: " << plan.moves.size() << "\n";
        if (cfg.rounds) {
            os << "rounds: " << plan.rounds.size() << "\n";
            for (std::size_t r = 0; r < plan.rounds.size(); ++r) {
                os << "  round " << r + 1 << ":";
                for (auto i : plan.rounds[r]) os << " " << format_move(g, plan.moves[i]);
                os << "\n";
            }
        } else {
            for (const auto& m : plan.moves) os << "  " << format_move(g, m) << "\n";
        }
    } else {
        os << to_json(g, plan).dump(2) << "\n";
    }
    emit(cfg, os.str(), out);
    return check ? kExitOk : kExitCheckFailed;
}

int cmd_diameter(const RunConfig& cfg, std::ostream& out) {
    const auto arm = make_arm(cfg);
    const auto limits = resolve_limits(cfg);
    const auto mode = cfg.mode == "bound"           ? DiameterMode::Bound
                      : cfg.mode == "exact-formula" ? DiameterMode::ExactFormula
                                                    : DiameterMode::ExactBfs;
    const auto oracle = cfg.oracle == "bfs" ? DistanceOracle::Bfs : DistanceOracle::Formula;
    const auto rep = diameter(arm, mode, oracle, limits.nodes);
    const bool within = !rep.exact || *rep.exact <= rep.bound;

    std::ostringstream os;
    if (format_or(cfg, "json") == "text") {
        os << "n: " << rep.n << "\nlength: " << rep.length << "\nbound: " << rep.bound
           << "\ntight bound: " << rep.tight_bound
           << "\nhypothesis holds: " << (rep.hypothesis_holds ? "yes" : "no") << "\nexact diameter: "
           << (rep.exact ? std::to_string(*rep.exact) : "unknown") << "\n";
        if (rep.witness)
            os << "witness: " << format_configuration(arm.graph(), rep.witness->first) << "\n         "
               << format_configuration(arm.graph(), rep.witness->second) << "\n";
    } else {
        os << to_json(arm.graph(), rep).dump(2) << "\n";
    }
    emit(cfg, os.str(), out);
    return within ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto arm = make_arm(cfg);
    const auto limits = resolve_limits(cfg);
    VerifyOptions opts;
    opts.node_limit = limits.nodes;
    opts.pip_limit = limits.pip;
    opts.lattice_limit = limits.lattice;
    opts.spine_max = cfg.spine_max;
    opts.corrupt = cfg.corrupt;
    const auto reports = verify_all(arm, opts);

    std::ostringstream os;
    if (format_or(cfg, "text") == "json") {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        os << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports)
            os << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    }
    emit(cfg, os.str(), out);
    return all_passed(reports) ? kExitOk : kExitCheckFailed;
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
    const auto arm = make_arm(cfg);
    const auto limits = resolve_limits(cfg);
    const auto& g = arm.graph();
    std::string text;
    if (cfg.what == "hasse") {
        auto pip = build_ip(arm);
        if (format_or(cfg, "dot") != "dot") throw InputError("hasse export is DOT only");
        text = hasse_dot(pip);
    } else if (cfg.what == "transition") {
        auto tg = build_transition_graph(arm, limits.nodes);
        if (format_or(cfg, "dot") == "json") {
            Json j{{"nodes", Json::array()}, {"edges", Json::array()}};
            for (const auto& x : tg.nodes) j["nodes"].push_back(to_json(g, x));
            for (std::size_t i = 0; i < tg.size(); ++i)
                for (const auto& arc : tg.adjacency[i])
                    if (i < arc.to) j["edges"].push_back({{"from", i}, {"to", arc.to}, {"move", to_json(g, arc.move)}});
            text = j.dump(2) + "\n";
        } else {
            text = transition_dot(arm, tg, cfg.full_labels);
        }
    } else {
        auto tg = build_transition_graph(arm, limits.nodes);
        auto pip = build_ip(arm);
        auto S = build_S(arm, tg);
        auto X = build_X(pip, enumerate_consistent_lower_sets(pip, limits.pip));
        if (format_or(cfg, "json") != "json") throw InputError(cfg.what + " export is JSON only");
        Json j = cfg.what == "fvector" ? Json{{"S", fvector_json(S.f_vector())}, {"X", fvector_json(X.f_vector())}}
                                       : Json{{"S", complex_json(S)}, {"X", complex_json(X)}};
        text = j.dump(2) + "\n";
    }
    emit(cfg, text, out);
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Configuration spaces of robotic arms on graphs"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&cfg](CLI::App* sub) {
        sub->add_option("--graph", cfg.graph_file, "graph JSON file")->required()->check(CLI::ExistingFile);
        sub->add_option("--base", cfg.base, "base vertex (defaults to the graph's \"base\")");
        sub->add_option("--len", cfg.length, "arm length")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--limit", cfg.limit, "size guard for every exhaustive step (also ARM_LIMIT)");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
        sub->add_option("--out", cfg.out_file, "write output here instead of stdout");
    };

    auto* enumerate = app.add_subcommand("enumerate", "count configurations, tableaux, PIP elements, lower sets");
    common(enumerate);
    enumerate->add_flag("--list", cfg.list, "print the full listings");

    auto* plan = app.add_subcommand("plan", "shortest move sequence between configurations");
    common(plan);
    plan->add_option("--source", cfg.source, "JSON configuration or path:labels (default: initial)");
    plan->add_option("--target", cfg.target, "JSON configuration or path:labels")->required();
    plan->add_flag("--rounds", cfg.rounds, "group moves into rounds of simultaneous moves");

    auto* diam = app.add_subcommand("diameter", "diameter of the transition graph");
    common(diam);
    diam->add_option("--mode", cfg.mode)->check(CLI::IsMember({"bound", "exact-bfs", "exact-formula"}));
    diam->add_option("--oracle", cfg.oracle, "distance oracle for exact-bfs")->check(CLI::IsMember({"formula", "bfs"}));

    auto* verify = app.add_subcommand("verify", "run every exhaustive check");
    common(verify);
    verify->add_flag("--corrupt", cfg.corrupt, "negative control: corrupt the PIP relation and one generator");
    verify->add_option("--spine-max", cfg.spine_max, "longest spine for the lattice checks")
        ->check(CLI::NonNegativeNumber);

    auto* exp = app.add_subcommand("export", "write DOT/JSON exports");
    common(exp);
    exp->add_option("--what", cfg.what)->check(CLI::IsMember({"transition", "hasse", "fvector", "complex"}));
    exp->add_flag("--full-labels", cfg.full_labels, "label transition-graph nodes by configuration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(cfg, out);
        if (*plan) return cmd_plan(cfg, out);
        if (*diam) return cmd_diameter(cfg, out);
        if (*verify) return cmd_verify(cfg, out);
        return cmd_export(cfg, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GuardExceeded& e) {
        err << "refused: " << e.what() << " (raise --limit or ARM_LIMIT)\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

}  // namespace armcfg
