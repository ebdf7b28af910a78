#include "armcfg/arm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "armcfg/errors.hpp"

namespace armcfg {

namespace {

bool occupied(const Configuration& x, WorkVertex c) {
    return std::find(x.cells.begin(), x.cells.end(), c) != x.cells.end();
}

bool horizontal(const WorkVertex& a, const WorkVertex& b) { return a.h == b.h && a.v != b.v; }
bool vertical(const WorkVertex& a, const WorkVertex& b) { return a.v == b.v && b.h == a.h + 1; }

}  // namespace

std::string configuration_defect(const Arm& arm, const Configuration& x) {
    const auto& g = arm.graph();
    if (static_cast<int>(x.cells.size()) != arm.length() + 1)
        return "expected " + std::to_string(arm.length() + 1) + " vertices, got " +
               std::to_string(x.cells.size());
    for (const auto& c : x.cells)
        if (!g.contains(c.v) || c.h < 0) return "vertex outside the workspace";
    if (x.cells.front() != WorkVertex{arm.base(), 0}) return "does not start at (base,0)";
    for (std::size_t i = 1; i < x.cells.size(); ++i) {
        const auto& a = x.cells[i - 1];
        const auto& b = x.cells[i];
        if (b.h < a.h) return "height decreases at position " + std::to_string(i);
        if (horizontal(a, b) ? !g.adjacent(a.v, b.v) : !vertical(a, b))
            return "step " + std::to_string(i) + " is not a workspace edge";
    }
    std::set<WorkVertex> seen(x.cells.begin(), x.cells.end());
    if (seen.size() != x.cells.size()) return "arm intersects itself";
    return {};
}

bool is_configuration(const Arm& arm, const Configuration& x) { return configuration_defect(arm, x).empty(); }

void validate_configuration(const Arm& arm, const Configuration& x) {
    if (auto d = configuration_defect(arm, x); !d.empty()) throw InputError("invalid configuration: " + d);
}

Configuration initial_configuration(const Arm& arm) {
    Configuration x;
    for (int h = 0; h <= arm.length(); ++h) x.cells.push_back({arm.base(), h});
    return x;
}

std::string format_configuration(const Graph& g, const Configuration& x) {
    std::string s;
    for (const auto& c : x.cells) {
        if (!s.empty()) s += ' ';
        s += "(" + g.name(c.v) + "," + std::to_string(c.h) + ")";
    }
    return s;
}

Move inverse(const Move& m) {
    Move r = m;
    r.dir = -m.dir;
    return r;
}

std::string format_move(const Graph& g, const Move& m) {
    return std::string(m.kind == MoveKind::Tail ? "T" : "C") + (m.dir > 0 ? "+" : "-") + "(" +
           g.name(m.v) + "," + g.name(m.w) + "," + std::to_string(m.h) + ")";
}

std::optional<int> move_site(const Arm& arm, const Configuration& x, const Move& m) {
    const int ell = arm.length();
    if (ell < 1 || static_cast<int>(x.cells.size()) != ell + 1) return std::nullopt;
    const auto& c = x.cells;
    auto at = [&](int j) { return c[static_cast<std::size_t>(j)]; };
    const WorkVertex vh{m.v, m.h}, vh1{m.v, m.h + 1}, wh{m.w, m.h}, wh1{m.w, m.h + 1};

    if (m.kind == MoveKind::Tail) {
        if (at(ell - 1) != vh) return std::nullopt;
        if (m.dir > 0) return at(ell) == wh ? std::optional<int>(ell) : std::nullopt;
        if (at(ell) != vh1 || !arm.graph().adjacent(m.v, m.w) || occupied(x, wh)) return std::nullopt;
        return ell;
    }

    auto it = std::find(c.begin(), c.end(), vh);
    if (it == c.end()) return std::nullopt;
    const int j = static_cast<int>(it - c.begin()) + 1;
    if (j > ell - 1) return std::nullopt;
    if (m.dir > 0) {
        if (at(j) == wh && at(j + 1) == wh1 && !occupied(x, vh1)) return j;
    } else {
        if (at(j) == vh1 && at(j + 1) == wh1 && !occupied(x, wh)) return j;
    }
    return std::nullopt;
}

std::vector<Move> legal_moves(const Arm& arm, const Configuration& x) {
    std::vector<Move> out;
    const int ell = arm.length();
    const auto& c = x.cells;
    auto at = [&](int j) { return c[static_cast<std::size_t>(j)]; };
    for (int j = 1; j < ell; ++j) {
        const auto a = at(j - 1), m = at(j), b = at(j + 1);
        if (horizontal(a, m) && vertical(m, b) && !occupied(x, {a.v, a.h + 1}))
            out.push_back({MoveKind::Corner, +1, a.v, m.v, a.h});
        else if (vertical(a, m) && horizontal(m, b) && !occupied(x, {b.v, a.h}))
            out.push_back({MoveKind::Corner, -1, a.v, b.v, a.h});
    }
    if (ell >= 1) {
        const auto a = at(ell - 1), z = at(ell);
        if (horizontal(a, z)) {
            out.push_back({MoveKind::Tail, +1, a.v, z.v, a.h});
        } else {
            for (Vertex w : arm.graph().neighbours(a.v))
                if (!occupied(x, {w, a.h})) out.push_back({MoveKind::Tail, -1, a.v, w, a.h});
        }
    }
    return out;
}

std::vector<Move> upward_moves(const Arm& arm, const Configuration& x) {
    auto all = legal_moves(arm, x);
    std::erase_if(all, [](const Move& m) { return !m.upward(); });
    return all;
}

std::optional<Configuration> try_apply(const Arm& arm, const Configuration& x, const Move& m) {
    auto site = move_site(arm, x, m);
    if (!site) return std::nullopt;
    Configuration y = x;
    y.cells[static_cast<std::size_t>(*site)] = m.dir > 0 ? WorkVertex{m.v, m.h + 1} : WorkVertex{m.w, m.h};
    return y;
}

Configuration apply_move(const Arm& arm, const Configuration& x, const Move& m) {
    if (auto y = try_apply(arm, x, m)) return *y;
    throw InputError("move " + format_move(arm.graph(), m) + " is not legal at " +
                     format_configuration(arm.graph(), x));
}

Configuration apply_moves(const Arm& arm, Configuration x, const std::vector<Move>& moves) {
    for (const auto& m : moves) x = apply_move(arm, x, m);
    return x;
}

bool is_commutative_set(const Arm& arm, const Configuration& x, const std::vector<Move>& A,
                        std::size_t limit) {
    if (A.size() > limit) throw GuardExceeded("commutativity check", A.size(), limit);
    const std::size_t k = A.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) order.push_back(i);
        std::optional<Configuration> first;
        do {
            std::optional<Configuration> y = x;
            for (auto i : order) {
                y = try_apply(arm, *y, A[i]);
                if (!y) return false;
            }
            if (!first) first = y;
            else if (*first != *y) return false;
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return true;
}

PathTableau config_to_tableau(const Arm& arm, const Configuration& x) {
    validate_configuration(arm, x);
    std::vector<Vertex> path{arm.base()};
    std::vector<int> labels;
    for (std::size_t i = 1; i < x.cells.size(); ++i) {
        if (x.cells[i].h == x.cells[i - 1].h) {
            path.push_back(x.cells[i].v);
            labels.push_back(x.cells[i].h);
        }
    }
    return {GraphPath(std::move(path)), std::move(labels)};
}

Configuration tableau_to_config(const Arm& arm, const PathTableau& t) {
    if (!is_tableau(arm, t)) throw InputError("not a tableau: " + format_tableau(arm.graph(), t));
    Configuration x{{{arm.base(), 0}}};
    auto climb_to = [&](int h) {
        while (x.cells.back().h < h) x.cells.push_back({x.cells.back().v, x.cells.back().h + 1});
    };
    for (int i = 1; i <= t.path.length(); ++i) {
        const int h = t.labels[static_cast<std::size_t>(i - 1)];
        climb_to(h);
        x.cells.push_back({t.path.at(i), h});
    }
    climb_to(x.cells.back().h + (arm.length() + 1 - static_cast<int>(x.cells.size())));
    if (auto d = configuration_defect(arm, x); !d.empty())
        throw std::logic_error("tableau produced an invalid configuration: " + d);
    return x;
}

std::size_t TransitionGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& arcs : adjacency) twice += arcs.size();
    return twice / 2;
}

std::size_t TransitionGraph::index_of(const Configuration& x) const {
    auto it = index.find(x);
    if (it == index.end()) throw InputError("configuration is not a node of the transition graph");
    return it->second;
}

TransitionGraph build_transition_graph(const Arm& arm, std::size_t limit) {
    TransitionGraph tg;
    auto add = [&](const Configuration& x) {
        auto [it, fresh] = tg.index.emplace(x, tg.nodes.size());
        if (fresh) {
            if (tg.nodes.size() >= limit) throw GuardExceeded("transition graph", tg.nodes.size() + 1, limit);
            tg.nodes.push_back(x);
            tg.adjacency.emplace_back();
        }
        return it->second;
    };
    add(initial_configuration(arm));
    for (std::size_t i = 0; i < tg.nodes.size(); ++i) {
        for (const auto& m : legal_moves(arm, tg.nodes[i])) {
            auto y = apply_move(arm, tg.nodes[i], m);
            const auto j = add(y);
            tg.adjacency[i].push_back({j, m});
        }
    }
    return tg;
}

std::vector<int> bfs_distances(const std::vector<std::vector<std::size_t>>& adjacency,
                               std::size_t source) {
    std::vector<int> dist(adjacency.size(), -1);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto v : adjacency[u]) {
            if (dist[v] >= 0) continue;
            dist[v] = dist[u] + 1;
            queue.push_back(v);
        }
    }
    return dist;
}

std::vector<std::vector<std::size_t>> plain_adjacency(const TransitionGraph& tg) {
    std::vector<std::vector<std::size_t>> adj(tg.size());
    for (std::size_t i = 0; i < tg.size(); ++i)
        for (const auto& arc : tg.adjacency[i]) adj[i].push_back(arc.to);
    return adj;
}

}  // namespace armcfg
