#include "armcfg/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "armcfg/errors.hpp"

namespace armcfg {

IndexedPath PipCoordinates::generator(int i) const {
    return {tableau.path.prefix(i), index.at(static_cast<std::size_t>(i - 1))};
}

bool PipCoordinates::contains(int arm_length, const IndexedPath& u) const {
    const int k = u.path.length();
    if (k < 1 || k > segments() || !is_prefix(u.path, tableau.path)) return false;
    const auto i = static_cast<std::size_t>(k - 1);
    return u.index >= index[i] && u.index <= arm_length + 1 - k - blocks[i];
}

PipCoordinates pip_coordinates(const Arm& arm, const Configuration& x) {
    PipCoordinates c{config_to_tableau(arm, x), {}, {}};
    for (int i = 1; i <= c.segments(); ++i) {
        const int n = suffix_decomposition(c.tableau.path.prefix(i)).blocks();
        c.blocks.push_back(n);
        c.index.push_back(c.tableau.labels[static_cast<std::size_t>(i - 1)] - n + 1);
    }
    return c;
}

std::vector<IndexedPath> sigma_generators(const Arm& arm, const Configuration& x) {
    const auto c = pip_coordinates(arm, x);
    std::vector<IndexedPath> out;
    for (int i = 1; i <= c.segments(); ++i) out.push_back(c.generator(i));
    return out;
}

std::vector<IndexedPath> sigma(const Arm& arm, const Configuration& x) {
    const auto gens = sigma_generators(arm, x);
    std::vector<IndexedPath> out;
    // Anything below generator j has a prefix of the induced path as its path.
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& p = gens[i].path;
        for (int a = 0; a <= max_index(arm.length(), p); ++a) {
            IndexedPath u{p, a};
            for (std::size_t j = i; j < gens.size(); ++j) {
                if (ip_leq(u, gens[j])) {
                    out.push_back(u);
                    break;
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LowerSet sigma_lower_set(const PipInstance& pip, const Configuration& x) {
    std::vector<std::size_t> ids;
    for (const auto& g : sigma_generators(pip.arm(), x)) {
        auto id = pip.find(g);
        if (!id) throw std::logic_error("generator " + format_indexed_path(pip.arm().graph(), g) +
                                        " is not in the PIP");
        ids.push_back(*id);
    }
    return lower_set_generated(pip, ids);
}

Configuration sigma_inverse(const Arm& arm, const std::vector<IndexedPath>& members) {
    if (members.empty()) return initial_configuration(arm);
    const GraphPath* q = &members.front().path;
    for (const auto& u : members)
        if (u.path.length() > q->length()) q = &u.path;
    std::vector<int> lowest(static_cast<std::size_t>(q->length()), kInfinity);
    for (const auto& u : members) {
        if (!is_prefix(u.path, *q)) throw InputError("lower set is not consistent");
        auto& slot = lowest[static_cast<std::size_t>(u.path.length() - 1)];
        slot = std::min(slot, u.index);
    }
    PathTableau t{*q, {}};
    for (int i = 1; i <= q->length(); ++i) {
        const int a = lowest[static_cast<std::size_t>(i - 1)];
        if (a == kInfinity) throw InputError("lower set misses a prefix of its longest path");
        t.labels.push_back(a + suffix_decomposition(q->prefix(i)).blocks() - 1);
    }
    return tableau_to_config(arm, t);
}

Configuration sigma_inverse(const PipInstance& pip, const LowerSet& mu) {
    if (!mu.consistent) throw InputError("lower set is not consistent");
    std::vector<IndexedPath> members;
    for (auto i : mu.member_list()) members.push_back(pip.element(i));
    return sigma_inverse(pip.arm(), members);
}

namespace {

// Horizontal edges among edges 1..e (edge i joins cells i-1 and i).
int horizontal_before(const Configuration& x, int e) {
    int s = 0;
    for (int i = 1; i <= e; ++i)
        if (x.cells[static_cast<std::size_t>(i)].h == x.cells[static_cast<std::size_t>(i - 1)].h) ++s;
    return s;
}

}  // namespace

MoveEffect move_effect(const Arm& arm, const Configuration& x, const Move& m) {
    return move_effect(arm, x, pip_coordinates(arm, x), m);
}

MoveEffect move_effect(const Arm& arm, const Configuration& x, const PipCoordinates& cx,
                       const Move& m) {
    auto site = move_site(arm, x, m);
    if (!site) throw InputError("move " + format_move(arm.graph(), m) + " is not legal here");
    if (m.kind == MoveKind::Tail && !m.upward()) {
        // A new last segment appears at height h.
        const auto p = cx.tableau.path.extended(m.w);
        return {{p, m.h - suffix_decomposition(p).blocks() + 1}, false};
    }
    if (m.upward()) {
        const int s = m.kind == MoveKind::Tail ? cx.segments() : horizontal_before(x, *site);
        return {cx.generator(s), true};
    }
    // Downward corner: the horizontal edge right after the site drops by one.
    const int s = horizontal_before(x, *site + 1);
    auto g = cx.generator(s);
    --g.index;
    return {g, false};
}

std::vector<std::size_t> Cube::vertex_set() const {
    auto v = corners;
    std::sort(v.begin(), v.end());
    return v;
}

Cube face(const Cube& c, int axis, bool side) {
    if (axis < 0 || axis >= c.dim) throw std::out_of_range("face axis out of range");
    Cube f{c.dim - 1, {}};
    const std::size_t low_mask = (std::size_t{1} << axis) - 1;
    for (std::size_t m = 0; m < (std::size_t{1} << f.dim); ++m) {
        const std::size_t full = (m & low_mask) | (std::size_t{side} << axis) | ((m & ~low_mask) << 1);
        f.corners.push_back(c.corners[full]);
    }
    return f;
}

std::vector<std::size_t> CubicalComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& layer : cubes) f.push_back(layer.size());
    return f;
}

std::vector<std::vector<std::size_t>> CubicalComplex::cube_adjacency() const {
    std::vector<std::set<std::size_t>> sets(vertex_count());
    for (std::size_t k = 1; k < cubes.size(); ++k)
        for (const auto& c : cubes[k])
            for (auto a : c.corners)
                for (auto b : c.corners)
                    if (a != b) sets[a].insert(b);
    std::vector<std::vector<std::size_t>> adj;
    for (auto& s : sets) adj.emplace_back(s.begin(), s.end());
    return adj;
}

CheckReport check_face_closure(const CubicalComplex& k) {
    std::vector<std::set<std::vector<std::size_t>>> present(k.cubes.size());
    for (std::size_t d = 0; d < k.cubes.size(); ++d)
        for (const auto& c : k.cubes[d]) present[d].insert(c.vertex_set());
    for (std::size_t d = 1; d < k.cubes.size(); ++d) {
        for (const auto& c : k.cubes[d]) {
            for (int axis = 0; axis < c.dim; ++axis) {
                for (bool side : {false, true}) {
                    if (!present[d - 1].contains(face(c, axis, side).vertex_set()))
                        return CheckReport::fail("face-closure", "a face of a " + std::to_string(d) +
                                                                     "-cube is missing");
                }
            }
        }
    }
    return CheckReport::pass("face-closure");
}

namespace {

struct CubeCollector {
    CubicalComplex complex;
    std::vector<std::set<std::vector<std::size_t>>> seen;

    explicit CubeCollector(std::size_t vertices) {
        complex.cubes.emplace_back();
        seen.emplace_back();
        for (std::size_t v = 0; v < vertices; ++v) add({0, {v}});
    }

    void add(Cube c) {
        const auto d = static_cast<std::size_t>(c.dim);
        if (complex.cubes.size() <= d) {
            complex.cubes.resize(d + 1);
            seen.resize(d + 1);
        }
        if (seen[d].insert(c.vertex_set()).second) complex.cubes[d].push_back(std::move(c));
    }
};

constexpr std::size_t kCubeAxisLimit = 20;

}  // namespace

CubicalComplex build_S(const Arm& arm, const TransitionGraph& tg) {
    CubeCollector out(tg.size());
    out.complex.root = tg.index_of(initial_configuration(arm));
    for (std::size_t i = 0; i < tg.size(); ++i) {
        const auto& x = tg.nodes[i];
        const auto up = upward_moves(arm, x);
        if (up.size() > kCubeAxisLimit) throw GuardExceeded("cube axes at one vertex", up.size(), kCubeAxisLimit);
        for (std::size_t sub = 1; sub < (std::size_t{1} << up.size()); ++sub) {
            std::vector<Move> A;
            for (std::size_t b = 0; b < up.size(); ++b)
                if (sub >> b & 1) A.push_back(up[b]);
            Cube c{static_cast<int>(A.size()), {}};
            for (std::size_t mask = 0; mask < (std::size_t{1} << A.size()); ++mask) {
                std::optional<Configuration> y = x;
                for (std::size_t b = 0; b < A.size() && y; ++b)
                    if (mask >> b & 1) y = try_apply(arm, *y, A[b]);
                if (!y) throw std::logic_error("upward moves at one configuration do not commute");
                c.corners.push_back(tg.index_of(*y));
            }
            const auto vs = c.vertex_set();
            if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
                throw std::logic_error("upward move set spans fewer than 2^k configurations");
            out.add(std::move(c));
        }
    }
    return std::move(out.complex);
}

CubicalComplex build_X(const PipInstance& pip, const std::vector<LowerSet>& lower_sets) {
    CubeCollector out(lower_sets.size());
    std::map<Bitset, std::size_t> index;
    for (std::size_t i = 0; i < lower_sets.size(); ++i) index.emplace(lower_sets[i].members, i);
    out.complex.root = index.at(pip.empty_set());
    for (const auto& mu : lower_sets) {
        const auto& K = mu.maximal;
        if (K.size() > kCubeAxisLimit) throw GuardExceeded("cube axes at one vertex", K.size(), kCubeAxisLimit);
        for (std::size_t sub = 1; sub < (std::size_t{1} << K.size()); ++sub) {
            std::vector<std::size_t> axes;
            for (std::size_t b = 0; b < K.size(); ++b)
                if (sub >> b & 1) axes.push_back(K[b]);
            Cube c{static_cast<int>(axes.size()), {}};
            for (std::size_t mask = 0; mask < (std::size_t{1} << axes.size()); ++mask) {
                Bitset nu = mu.members;
                for (std::size_t b = 0; b < axes.size(); ++b)
                    if (mask >> b & 1) nu.reset(axes[b]);
                auto it = index.find(nu);
                if (it == index.end()) throw std::logic_error("cube corner is not a consistent lower set");
                c.corners.push_back(it->second);
            }
            out.add(std::move(c));
        }
    }
    return std::move(out.complex);
}

namespace {

std::string fvec_string(const std::vector<std::size_t>& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + ")";
}

}  // namespace

std::vector<CheckReport> check_cube_isomorphism(const Arm& arm, const CubeCheckOptions& options) {
    const auto& g = arm.graph();
    auto tg = build_transition_graph(arm, options.node_limit);
    auto pip = build_ip(arm);
    auto lowers = enumerate_consistent_lower_sets(pip, options.pip_limit);
    const std::size_t n = tg.size();
    auto cfg = [&](std::size_t i) { return format_configuration(g, tg.nodes[i]); };

    std::vector<CheckReport> out;
    auto finish = [&](CheckReport r) { out.push_back(std::move(r)); };

    // Negative control: the last node whose final generator can be shifted
    // by one and stay inside the PIP.
    std::size_t victim = n;
    int shift = 0;
    if (options.corrupt) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto gens = sigma_generators(arm, tg.nodes[i]);
            if (gens.empty()) continue;
            const auto& last = gens.back();
            if (last.index + 1 <= max_index(arm.length(), last.path)) victim = i, shift = 1;
            else if (last.index >= 1) victim = i, shift = -1;
        }
    }

    std::vector<LowerSet> sig(n);
    std::vector<PipCoordinates> coords;
    coords.reserve(n);
    {
        CheckReport r = CheckReport::pass("sigma-bijection");
        for (std::size_t i = 0; i < n && r; ++i) {
            coords.push_back(pip_coordinates(arm, tg.nodes[i]));
            auto gens = sigma_generators(arm, tg.nodes[i]);
            if (i == victim) gens.back().index += shift;
            std::vector<std::size_t> ids;
            for (const auto& u : gens) {
                auto id = pip.find(u);
                if (!id) {
                    r = CheckReport::fail(r.name, "generator " + format_indexed_path(g, u) + " of " + cfg(i) +
                                                      " is not in the PIP");
                    break;
                }
                ids.push_back(*id);
            }
            if (!r) break;
            sig[i] = lower_set_generated(pip, ids);
            if (!sig[i].consistent) r = CheckReport::fail(r.name, "Sigma of " + cfg(i) + " is inconsistent");
        }

        std::map<Bitset, std::size_t> seen;
        for (std::size_t i = 0; i < n && r; ++i) {
            auto [it, fresh] = seen.emplace(sig[i].members, i);
            if (!fresh) r = CheckReport::fail(r.name, "Sigma agrees on " + cfg(it->second) + " and " + cfg(i));
        }
        if (r && lowers.size() != n)
            r = CheckReport::fail(r.name, std::to_string(n) + " configurations but " +
                                              std::to_string(lowers.size()) + " consistent lower sets");
        for (std::size_t k = 0; k < lowers.size() && r; ++k)
            if (!seen.contains(lowers[k].members))
                r = CheckReport::fail(r.name, "a consistent lower set has no configuration");
        for (std::size_t i = 0; i < n && r; ++i) {
            Configuration back;
            try {
                back = sigma_inverse(pip, sig[i]);
            } catch (const InputError& e) {
                r = CheckReport::fail(r.name, "inverse fails on Sigma of " + cfg(i) + ": " + e.what());
                break;
            }
            if (back != tg.nodes[i]) r = CheckReport::fail(r.name, "round trip fails at " + cfg(i));
        }
        const auto root = tg.index_of(initial_configuration(arm));
        if (r && sig[root].size() != 0) r = CheckReport::fail(r.name, "Sigma of the initial configuration is not empty");
        for (std::size_t i = 0; i < n && r; ++i)
            for (const auto& arc : tg.adjacency[i])
                if ((sig[i].members ^ sig[arc.to].members).count() != 1) {
                    r = CheckReport::fail(r.name, "move " + format_move(g, arc.move) + " at " + cfg(i) +
                                                      " changes Sigma by more than one element");
                    break;
                }
        if (r) r.detail = std::to_string(n) + " configurations";
        finish(std::move(r));
    }

    // chi on upward moves: predicted from the segment, compared with the
    // actual change of Sigma, and required to hit every maximal element once.
    CheckReport chi = CheckReport::pass("chi-bijection");
    CheckReport cubes = CheckReport::pass("chi-cubes");
    std::size_t cube_count = 0;
    if (out.front()) {
        for (std::size_t i = 0; i < n && chi && cubes; ++i) {
            const auto& x = tg.nodes[i];
            const auto up = upward_moves(arm, x);
            std::vector<std::size_t> image;
            for (const auto& m : up) {
                const auto u = move_effect(arm, x, coords[i], m).element;
                auto id = pip.find(u);
                const auto j = tg.index_of(apply_move(arm, x, m));
                Bitset removed = sig[i].members - sig[j].members;
                if (!id || !sig[j].members.is_subset_of(sig[i].members) || removed.count() != 1 ||
                    !removed[*id]) {
                    chi = CheckReport::fail(chi.name, "chi(" + format_move(g, m) + ") = " +
                                                          format_indexed_path(g, u) + " disagrees with Sigma at " +
                                                          cfg(i));
                    break;
                }
                image.push_back(*id);
            }
            if (!chi) break;
            auto sorted = image;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted != sig[i].maximal) {
                chi = CheckReport::fail(chi.name, "upward moves do not match maximal elements at " + cfg(i));
                break;
            }
            if (up.size() > kCubeAxisLimit) throw GuardExceeded("cube axes at one vertex", up.size(), kCubeAxisLimit);
            for (std::size_t sub = 1; sub < (std::size_t{1} << up.size()); ++sub) {
                std::optional<Configuration> y = x;
                Bitset expect = sig[i].members;
                for (std::size_t b = 0; b < up.size() && y; ++b) {
                    if (!(sub >> b & 1)) continue;
                    y = try_apply(arm, *y, up[b]);
                    expect.reset(image[b]);
                }
                ++cube_count;
                if (!y || sig[tg.index_of(*y)].members != expect) {
                    cubes = CheckReport::fail(cubes.name, "Sigma(Sx) != Sigma(x) - chi(S) at " + cfg(i));
                    break;
                }
            }
        }
    } else {
        chi = CheckReport::fail(chi.name, "skipped: sigma-bijection failed");
        cubes = CheckReport::fail(cubes.name, "skipped: sigma-bijection failed");
    }
    if (chi) chi.detail = std::to_string(n) + " configurations";
    if (cubes) cubes.detail = std::to_string(cube_count) + " upward move sets";
    finish(std::move(chi));
    finish(std::move(cubes));

    auto S = build_S(arm, tg);
    auto X = build_X(pip, lowers);
    const auto fs = S.f_vector();
    const auto fx = X.f_vector();
    finish(fs == fx ? CheckReport::pass("f-vector", fvec_string(fs))
                    : CheckReport::fail("f-vector", "S " + fvec_string(fs) + " vs X " + fvec_string(fx)));
    auto cs = check_face_closure(S);
    auto cx = check_face_closure(X);
    if (!cs) cs.detail = "S: " + cs.detail;
    if (!cx) cs = CheckReport::fail("face-closure", "X: " + cx.detail);
    finish(std::move(cs));
    return out;
}

}  // namespace armcfg
