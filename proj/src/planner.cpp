#include "armcfg/planner.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "armcfg/errors.hpp"

namespace armcfg {

std::vector<int> m_profile(const Arm& arm, const Configuration& x) {
    const auto t = config_to_tableau(arm, x);
    std::vector<int> m;
    for (int i = 1; i <= t.path.length(); ++i)
        m.push_back(arm.length() - t.labels[static_cast<std::size_t>(i - 1)] - i + 1);
    return m;
}

namespace {

long long profile_distance(const std::vector<Vertex>& px, const std::vector<int>& mx,
                           const std::vector<Vertex>& py, const std::vector<int>& my) {
    std::size_t r = 0;
    while (r < mx.size() && r < my.size() && px[r + 1] == py[r + 1]) ++r;
    long long d = 0;
    for (std::size_t j = 0; j < r; ++j) d += std::abs(mx[j] - my[j]);
    for (std::size_t j = r; j < mx.size(); ++j) d += mx[j];
    for (std::size_t j = r; j < my.size(); ++j) d += my[j];
    return d;
}

}  // namespace

int distance(const Arm& arm, const Configuration& x, const Configuration& y) {
    const auto px = config_to_tableau(arm, x).path;
    const auto py = config_to_tableau(arm, y).path;
    return static_cast<int>(profile_distance(px.vertices(), m_profile(arm, x), py.vertices(), m_profile(arm, y)));
}

namespace {

struct Step {
    Move move;
    IndexedPath element;
};

// Legal moves at x that shrink Sigma(x) xor Sigma(y), each with the element
// it changes, removals first and each group in element order.
std::vector<Step> improving_moves(const Arm& arm, const Configuration& x, const PipCoordinates& target) {
    const auto cx = pip_coordinates(arm, x);
    std::vector<Step> removals, additions;
    for (const auto& m : legal_moves(arm, x)) {
        const auto e = move_effect(arm, x, cx, m);
        const bool wanted = target.contains(arm.length(), e.element);
        if (e.removes && !wanted) removals.push_back({m, e.element});
        if (!e.removes && wanted) additions.push_back({m, e.element});
    }
    auto by_element = [](const Step& a, const Step& b) { return a.element < b.element; };
    std::sort(removals.begin(), removals.end(), by_element);
    std::sort(additions.begin(), additions.end(), by_element);
    removals.insert(removals.end(), additions.begin(), additions.end());
    return removals;
}

}  // namespace

Plan plan_moves(const Arm& arm, const Configuration& x, const Configuration& y) {
    validate_configuration(arm, x);
    validate_configuration(arm, y);
    const auto target = pip_coordinates(arm, y);
    const int d = distance(arm, x, y);
    Plan plan{x, y, {}, {}};
    Configuration cur = x;
    while (cur != y) {
        if (static_cast<int>(plan.moves.size()) >= d) throw std::logic_error("planner overshot the distance");
        auto steps = improving_moves(arm, cur, target);
        if (steps.empty()) throw std::logic_error("planner found no improving move");
        cur = apply_move(arm, cur, steps.front().move);
        plan.moves.push_back(steps.front().move);
    }
    return plan;
}

Plan plan_rounds(const Arm& arm, const Configuration& x, const Configuration& y) {
    validate_configuration(arm, x);
    validate_configuration(arm, y);
    const auto target = pip_coordinates(arm, y);
    const int d = distance(arm, x, y);
    Plan plan{x, y, {}, {}};
    Configuration cur = x;
    while (cur != y) {
        auto steps = improving_moves(arm, cur, target);
        if (steps.empty()) throw std::logic_error("scheduler found no improving move");
        std::vector<std::size_t> round;
        for (const auto& s : steps) {
            cur = apply_move(arm, cur, s.move);
            round.push_back(plan.moves.size());
            plan.moves.push_back(s.move);
        }
        plan.rounds.push_back(std::move(round));
        if (static_cast<int>(plan.moves.size()) > d) throw std::logic_error("scheduler overshot the distance");
    }
    return plan;
}

CheckReport validate_plan(const Arm& arm, const Plan& plan) {
    const std::string check = "plan";
    const auto& g = arm.graph();
    Configuration cur = plan.source;
    for (std::size_t i = 0; i < plan.moves.size(); ++i) {
        auto next = try_apply(arm, cur, plan.moves[i]);
        if (!next) return CheckReport::fail(check, "move " + std::to_string(i) + " (" +
                                                       format_move(g, plan.moves[i]) + ") is illegal");
        cur = *next;
    }
    if (cur != plan.target) return CheckReport::fail(check, "replay does not end at the target");
    const int d = distance(arm, plan.source, plan.target);
    if (static_cast<int>(plan.moves.size()) != d)
        return CheckReport::fail(check, std::to_string(plan.moves.size()) + " moves for distance " +
                                            std::to_string(d));
    if (!plan.rounds.empty()) {
        std::size_t next = 0;
        cur = plan.source;
        for (const auto& round : plan.rounds) {
            std::vector<Move> set;
            for (auto i : round) {
                if (i != next++) return CheckReport::fail(check, "rounds do not partition the moves in order");
                set.push_back(plan.moves[i]);
            }
            if (set.empty()) return CheckReport::fail(check, "empty round");
            if (set.size() <= kCommutativeLimit && !is_commutative_set(arm, cur, set))
                return CheckReport::fail(check, "a round is not a commutative set");
            cur = apply_moves(arm, cur, set);
        }
        if (next != plan.moves.size()) return CheckReport::fail(check, "rounds miss some moves");
    }
    return CheckReport::pass(check, std::to_string(plan.moves.size()) + " moves");
}

long long omega(int ell, int n) {
    if (n < 1) throw InputError("omega needs n >= 1");
    if (ell < 0) throw InputError("omega needs l >= 0");
    const long long k = ell + 1;
    return (static_cast<long long>(n - 1) * k * k) / (2LL * n);
}

long long omega_sum(int ell, int n) {
    if (n < 1) throw InputError("omega needs n >= 1");
    long long s = 0;
    for (int t = 1; t <= ell; ++t)
        if ((t - (ell + 1)) % n != 0) s += t;
    return s;
}

long long turan_edges(long long vertices, int parts) {
    if (parts < 1) throw InputError("Turan graph needs at least one part");
    const long long q = vertices / parts;
    const long long r = vertices % parts;
    // r parts of size q+1, the rest of size q.
    const long long squares = r * (q + 1) * (q + 1) + (parts - r) * q * q;
    return (vertices * vertices - squares) / 2;
}

std::optional<std::pair<GraphPath, GraphPath>> hypothesis_paths(const Arm& arm) {
    const int k = std::min(arm.length(), arm.vertex_count() - 1);
    if (k < 1) return std::nullopt;
    auto paths = cycle_free_paths(arm.graph(), arm.base(), k);
    for (std::size_t i = 1; i < paths.size(); ++i)
        if (paths[i].at(1) != paths[0].at(1)) return std::make_pair(paths[0], paths[i]);
    return std::nullopt;
}

int antipodal_length(int ell, int n) {
    if (n < 2) throw InputError("antipodal construction needs n >= 2");
    int m = 0;
    while (m / (n - 1) + m + 1 <= ell) ++m;
    return m;
}

namespace {

// First m edges of p, p reversed, p, ... where p has n-1 edges, or of p
// alone when it is shorter than that.
PathTableau winding(const GraphPath& p, int m, int n) {
    std::vector<Vertex> vs{p.at(0)};
    std::vector<int> labels;
    const int len = p.length();
    for (int i = 1; i <= m; ++i) {
        const int r = i % (2 * len);
        vs.push_back(p.at(r <= len ? r : 2 * len - r));
        labels.push_back((i - 1) / (n - 1));
    }
    return {GraphPath(std::move(vs)), std::move(labels)};
}

}  // namespace

std::pair<Configuration, Configuration> antipodal_pair(const Arm& arm) {
    auto paths = hypothesis_paths(arm);
    if (!paths) throw InputError("no two cycle-free paths of length min{l, n-1} with different first edges");
    const int n = arm.vertex_count();
    const int m = antipodal_length(arm.length(), n);
    return {tableau_to_config(arm, winding(paths->first, m, n)),
            tableau_to_config(arm, winding(paths->second, m, n))};
}

DiameterReport diameter(const Arm& arm, DiameterMode mode, DistanceOracle oracle, std::size_t node_limit) {
    DiameterReport rep;
    rep.n = arm.vertex_count();
    rep.length = arm.length();
    rep.bound = 2 * omega(arm.length(), rep.n);
    rep.tight_bound = 2 * omega_sum(arm.length(), rep.n);
    rep.hypothesis_holds = hypothesis_paths(arm).has_value();

    if (mode == DiameterMode::ExactFormula) {
        if (rep.hypothesis_holds) {
            auto pair = antipodal_pair(arm);
            if (distance(arm, pair.first, pair.second) != rep.tight_bound)
                throw std::logic_error("antipodal pair misses the bound");
            rep.exact = rep.tight_bound;
            rep.witness = std::move(pair);
        }
        return rep;
    }
    if (mode == DiameterMode::Bound) return rep;

    auto tg = build_transition_graph(arm, node_limit);
    long long best = -1;
    std::pair<std::size_t, std::size_t> where{0, 0};
    if (oracle == DistanceOracle::Bfs) {
        const auto adj = plain_adjacency(tg);
        for (std::size_t i = 0; i < tg.size(); ++i) {
            const auto dist = bfs_distances(adj, i);
            for (std::size_t j = i; j < tg.size(); ++j)
                if (dist[j] > best) best = dist[j], where = {i, j};
        }
    } else {
        std::vector<GraphPath> paths;
        std::vector<std::vector<int>> profiles;
        for (const auto& x : tg.nodes) {
            paths.push_back(config_to_tableau(arm, x).path);
            profiles.push_back(m_profile(arm, x));
        }
        for (std::size_t i = 0; i < tg.size(); ++i) {
            for (std::size_t j = i; j < tg.size(); ++j) {
                const auto d = profile_distance(paths[i].vertices(), profiles[i], paths[j].vertices(), profiles[j]);
                if (d > best) best = d, where = {i, j};
            }
        }
    }
    rep.exact = best;
    rep.witness = std::make_pair(tg.nodes[where.first], tg.nodes[where.second]);
    return rep;
}

}  // namespace armcfg
