#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "armcfg/arm.hpp"
#include "armcfg/errors.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace armcfg;

namespace {

Configuration cells(const Graph& g, const std::vector<std::pair<std::string, int>>& xs) {
    Configuration x;
    for (const auto& [v, h] : xs) x.cells.push_back({g.vertex(v), h});
    return x;
}

}  // namespace

TEST_CASE("worked configuration and its legal moves") {
    auto g = suite::figure();
    Arm arm(g, 0, 9);
    PathTableau t{make_path(*g, std::vector<std::string>{"b", "a", "d", "a", "c", "b", "a"}), {0, 1, 2, 2, 2, 3}};
    auto x = tableau_to_config(arm, t);
    REQUIRE(is_configuration(arm, x));
    CHECK(config_to_tableau(arm, x) == t);

    auto moves = legal_moves(arm, x);
    std::vector<std::string> names;
    for (const auto& m : moves) names.push_back(format_move(*g, m));
    CHECK(names == std::vector<std::string>{"C+(b,a,0)", "C-(a,d,0)", "C+(c,b,2)", "T+(b,a,3)"});

    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<Move> A;
        for (unsigned i = 0; i < 4; ++i)
            if (mask >> i & 1) A.push_back(moves[i]);
        CAPTURE(mask);
        CHECK(is_commutative_set(arm, x, A) == ((mask & 3u) != 3u));
    }
}

TEST_CASE("worked configuration maps to its tableau") {
    auto g = suite::figure();
    Arm arm(g, 0, 10);
    auto x = cells(*g, {{"b", 0}, {"a", 0}, {"a", 1}, {"d", 1}, {"d", 2}, {"a", 2},
                        {"a", 3}, {"c", 3}, {"b", 3}, {"b", 4}, {"a", 4}});
    REQUIRE(is_configuration(arm, x));
    auto t = config_to_tableau(arm, x);
    CHECK(format_path(*g, t.path) == "b->a->d->a->c->b->a");
    CHECK(t.labels == std::vector<int>{0, 1, 2, 3, 3, 4});
    CHECK(tableau_to_config(arm, t) == x);
    CHECK(format_configuration(*g, initial_configuration(Arm(g, 0, 2))) == "(b,0) (b,1) (b,2)");
}

TEST_CASE("configuration defects") {
    auto g = suite::c3();
    Arm arm(g, 0, 2);
    CHECK(is_configuration(arm, cells(*g, {{"b", 0}, {"a", 0}, {"a", 1}})));
    CHECK_FALSE(is_configuration(arm, cells(*g, {{"b", 0}, {"a", 0}})));                // too short
    CHECK_FALSE(is_configuration(arm, cells(*g, {{"a", 0}, {"b", 0}, {"b", 1}})));      // wrong start
    CHECK_FALSE(is_configuration(arm, cells(*g, {{"b", 0}, {"b", 2}, {"b", 3}})));      // jump
    CHECK_FALSE(is_configuration(arm, cells(*g, {{"b", 0}, {"b", 1}, {"a", 0}})));      // descends
    CHECK_FALSE(is_configuration(arm, cells(*g, {{"b", 0}, {"a", 0}, {"b", 0}})));      // revisits
    CHECK_FALSE(configuration_defect(arm, cells(*g, {{"b", 0}, {"a", 0}, {"b", 0}})).empty());
    CHECK_THROWS_AS(validate_configuration(arm, cells(*g, {{"b", 0}})), InputError);
}

TEST_CASE("f is a bijection onto tableaux") {
    for (const auto& m : suite::desk())
        for (int ell = 0; ell <= 5; ++ell) {
            CAPTURE(m.name);
            CAPTURE(ell);
            const auto arm = m.arm(ell);
            auto configs = oracle::all_configurations(*m.graph, arm.base(), ell);
            std::set<std::pair<std::vector<Vertex>, std::vector<int>>> seen;
            for (const auto& x : configs) {
                REQUIRE(is_configuration(arm, x));
                auto t = config_to_tableau(arm, x);
                REQUIRE(is_tableau(arm, t));
                CHECK(tableau_to_config(arm, t) == x);
                seen.insert({t.path.vertices(), t.labels});
            }
            CHECK(seen.size() == configs.size());
            CHECK(seen.size() == enumerate_tableaux(arm, 100000).size());
        }
}

TEST_CASE("transition graph reaches every configuration") {
    for (const auto& m : suite::desk())
        for (int ell = 0; ell <= 5; ++ell) {
            CAPTURE(m.name);
            CAPTURE(ell);
            const auto arm = m.arm(ell);
            auto tg = build_transition_graph(arm);
            auto configs = oracle::all_configurations(*m.graph, arm.base(), ell);
            auto nodes = tg.nodes;
            std::sort(nodes.begin(), nodes.end());
            CHECK(nodes == configs);
            CHECK(tg.nodes.front() == initial_configuration(arm));
            auto adj = plain_adjacency(tg);
            CHECK(bfs_distances(adj, 0) == oracle::bfs(adj, 0));
            // arcs are symmetric and labelled by inverse moves
            for (std::size_t i = 0; i < tg.size(); ++i)
                for (const auto& arc : tg.adjacency[i]) {
                    CHECK(apply_move(arm, tg.nodes[i], arc.move) == tg.nodes[arc.to]);
                    CHECK(apply_move(arm, tg.nodes[arc.to], inverse(arc.move)) == tg.nodes[i]);
                }
        }
}

TEST_CASE("legal moves are exactly the one-cell rotations") {
    // Oracle: move one cell to another vertex one level up or down, keeping
    // a configuration. Sideways swings of a cell are not moves.
    auto g = suite::figure();
    Arm arm(g, 0, 5);
    for (const auto& x : oracle::all_configurations(*g, 0, 5)) {
        std::set<Configuration> by_moves;
        for (const auto& m : legal_moves(arm, x)) by_moves.insert(apply_move(arm, x, m));
        std::set<Configuration> by_cells;
        for (int j = 1; j <= 5; ++j)
            for (Vertex v = 0; v < 4; ++v)
                for (int h = 0; h <= 6; ++h) {
                    auto y = x;
                    y.cells[j] = {v, h};
                    if (v != x.cells[j].v && std::abs(h - x.cells[j].h) == 1 && is_configuration(arm, y))
                        by_cells.insert(y);
                }
        CHECK(by_moves == by_cells);
    }
}

TEST_CASE("illegal moves throw") {
    auto g = suite::c3();
    Arm arm(g, 0, 2);
    auto x = initial_configuration(arm);
    Move m{MoveKind::Corner, 1, 0, 1, 0};
    CHECK_FALSE(try_apply(arm, x, m).has_value());
    CHECK_THROWS_AS(apply_move(arm, x, m), InputError);
    CHECK(upward_moves(arm, x).empty());
    CHECK(legal_moves(arm, x).size() == 2);
}

TEST_CASE("commutativity guard") {
    auto g = suite::c3();
    Arm arm(g, 0, 2);
    auto x = initial_configuration(arm);
    std::vector<Move> many(kCommutativeLimit + 1, legal_moves(arm, x).front());
    CHECK_THROWS_AS(is_commutative_set(arm, x, many), GuardExceeded);
}

TEST_CASE("node guard") {
    CHECK_THROWS_AS(build_transition_graph(suite::desk()[2].arm(5), 10), GuardExceeded);
}
