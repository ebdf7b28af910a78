#include "armcfg/verify.hpp"

namespace armcfg {

std::vector<CheckReport> check_distances(const Arm& arm, const TransitionGraph& tg, const PipInstance& pip) {
    const auto& g = arm.graph();
    const std::size_t n = tg.size();
    const auto adj = plain_adjacency(tg);
    const auto cube_adj = build_S(arm, tg).cube_adjacency();
    std::vector<Bitset> sig;
    for (const auto& x : tg.nodes) sig.push_back(sigma_lower_set(pip, x).members);

    CheckReport triple = CheckReport::pass("distance-triple");
    CheckReport moves = CheckReport::pass("plan-moves");
    CheckReport rounds = CheckReport::pass("plan-rounds");
    auto pair = [&](std::size_t i, std::size_t j) {
        return format_configuration(g, tg.nodes[i]) + " -> " + format_configuration(g, tg.nodes[j]);
    };
    for (std::size_t i = 0; i < n; ++i) {
        const auto bfs = bfs_distances(adj, i);
        const auto cube_bfs = bfs_distances(cube_adj, i);
        for (std::size_t j = 0; j < n; ++j) {
            const auto& x = tg.nodes[i];
            const auto& y = tg.nodes[j];
            const int formula = distance(arm, x, y);
            const auto sym = static_cast<int>((sig[i] ^ sig[j]).count());
            if (triple && (formula != bfs[j] || sym != bfs[j]))
                triple = CheckReport::fail(triple.name, "formula " + std::to_string(formula) + ", BFS " +
                                                            std::to_string(bfs[j]) + ", symmetric difference " +
                                                            std::to_string(sym) + " for " + pair(i, j));
            if (moves) {
                auto r = validate_plan(arm, plan_moves(arm, x, y));
                if (!r) moves = CheckReport::fail(moves.name, r.detail + " for " + pair(i, j));
            }
            if (rounds) {
                const auto plan = plan_rounds(arm, x, y);
                auto r = validate_plan(arm, plan);
                if (!r)
                    rounds = CheckReport::fail(rounds.name, r.detail + " for " + pair(i, j));
                else if (static_cast<int>(plan.rounds.size()) != cube_bfs[j])
                    rounds = CheckReport::fail(rounds.name, std::to_string(plan.rounds.size()) +
                                                                " rounds, cube distance " +
                                                                std::to_string(cube_bfs[j]) + " for " + pair(i, j));
            }
        }
    }
    const auto detail = std::to_string(n * n) + " ordered pairs";
    for (auto* r : {&triple, &moves, &rounds})
        if (*r) r->detail = detail;
    return {triple, moves, rounds};
}

namespace {

void corrupt_relation(PipRelation& rel) {
    for (std::size_t i = 0; i < rel.size(); ++i)
        for (std::size_t j = 0; j < rel.size(); ++j)
            if (i != j && rel.leq[i][j]) {
                rel.flip_leq(j, i);
                return;
            }
    if (rel.size() > 0) rel.flip_leq(0, 0);
}

}  // namespace

std::vector<CheckReport> verify_all(const Arm& arm, const VerifyOptions& options) {
    std::vector<CheckReport> out;
    const auto& g = arm.graph();
    auto pip = build_ip(arm);

    PipRelation rel = pip.relation();
    if (options.corrupt) corrupt_relation(rel);
    out.push_back(verify_pip_axioms(rel, [&](std::size_t i) { return pip.name(i); }));

    auto spines = enumerate_gb_paths(g, arm.base(), [&](int length, int) { return length <= options.spine_max; });
    spines.insert(spines.begin(), GraphPath::empty_at(arm.base()));
    CheckReport birkhoff = CheckReport::pass("birkhoff");
    CheckReport iso = CheckReport::pass("poset-iso");
    for (const auto& q : spines) {
        if (birkhoff) {
            auto r = birkhoff_verify(build_extended_lattice(arm, q, options.lattice_limit).lattice).report;
            if (!r) birkhoff = CheckReport::fail(birkhoff.name, r.detail + " on spine " + format_path(g, q));
        }
        if (iso) {
            auto r = check_poset_iso(arm, q, options.lattice_limit);
            if (!r) iso = r;
        }
    }
    const auto spine_detail = std::to_string(spines.size()) + " spines";
    if (birkhoff) birkhoff.detail = spine_detail;
    if (iso) iso.detail = spine_detail;
    out.push_back(birkhoff);
    out.push_back(iso);

    for (auto& r : check_cube_isomorphism(arm, {options.node_limit, options.pip_limit, options.corrupt}))
        out.push_back(std::move(r));

    auto tg = build_transition_graph(arm, options.node_limit);
    if (tg.size() <= options.pair_limit) {
        for (auto& r : check_distances(arm, tg, pip)) out.push_back(std::move(r));
    } else {
        const auto why = "skipped: " + std::to_string(tg.size()) + " configurations exceed the pair limit";
        for (const char* name : {"distance-triple", "plan-moves", "plan-rounds"})
            out.push_back(CheckReport::pass(name, why));
    }
    return out;
}

}  // namespace armcfg
