#include "armcfg/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "armcfg/errors.hpp"

namespace armcfg {

Graph::Graph(std::vector<std::string> names,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)) {
    if (names_.empty()) throw InputError("graph has no vertices");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto [it, fresh] = index_.emplace(names_[i], static_cast<Vertex>(i));
        if (!fresh) throw InputError("duplicate vertex '" + names_[i] + "'");
    }
    adjacency_.resize(names_.size());

    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& [a, b] : edges) {
        auto va = find(a);
        auto vb = find(b);
        if (!va || !vb)
            throw InputError("edge {" + a + "," + b + "} names an unknown vertex");
        if (*va == *vb) throw InputError("loop at vertex '" + a + "'");
        auto key = std::minmax(*va, *vb);
        if (!seen.insert(key).second)
            throw InputError("duplicate edge {" + a + "," + b + "}");
        adjacency_[static_cast<std::size_t>(*va)].push_back(*vb);
        adjacency_[static_cast<std::size_t>(*vb)].push_back(*va);
    }
    edge_count_ = seen.size();
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

    std::vector<bool> reached(names_.size(), false);
    std::deque<Vertex> queue{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : neighbours(v)) {
            if (reached[static_cast<std::size_t>(w)]) continue;
            reached[static_cast<std::size_t>(w)] = true;
            ++count;
            queue.push_back(w);
        }
    }
    if (count != names_.size()) throw InputError("graph is disconnected");
}

std::optional<Vertex> Graph::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vertex Graph::vertex(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw InputError("unknown vertex '" + std::string(name) + "'");
}

bool Graph::adjacent(Vertex v, Vertex w) const {
    if (!contains(v) || !contains(w)) return false;
    const auto& nb = neighbours(v);
    return std::binary_search(nb.begin(), nb.end(), w);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex v = 0; static_cast<std::size_t>(v) < size(); ++v)
        for (Vertex w : neighbours(v))
            if (v < w) out.emplace_back(v, w);
    return out;
}

GraphPath::GraphPath(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InputError("a path needs at least its start vertex");
}

GraphPath GraphPath::prefix(int k) const {
    if (k < 0 || k > length()) throw std::out_of_range("prefix length out of range");
    return GraphPath({vertices_.begin(), vertices_.begin() + k + 1});
}

GraphPath GraphPath::extended(Vertex w) const {
    auto v = vertices_;
    v.push_back(w);
    return GraphPath(std::move(v));
}

GraphPath GraphPath::concat(const GraphPath& tail) const {
    if (finish() != tail.start()) throw InputError("concatenated paths do not meet");
    auto v = vertices_;
    v.insert(v.end(), tail.vertices_.begin() + 1, tail.vertices_.end());
    return GraphPath(std::move(v));
}

GraphPath make_path(const Graph& g, std::vector<Vertex> vertices) {
    if (vertices.empty()) throw InputError("a path needs at least its start vertex");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!g.contains(vertices[i])) throw InputError("path visits a vertex outside the graph");
        if (i > 0 && !g.adjacent(vertices[i - 1], vertices[i]))
            throw InputError("path steps along a non-edge {" + g.name(vertices[i - 1]) + "," +
                             g.name(vertices[i]) + "}");
    }
    return GraphPath(std::move(vertices));
}

GraphPath make_path(const Graph& g, const std::vector<std::string>& names) {
    std::vector<Vertex> vs;
    vs.reserve(names.size());
    for (const auto& n : names) vs.push_back(g.vertex(n));
    return make_path(g, std::move(vs));
}

std::vector<std::string> path_names(const Graph& g, const GraphPath& p) {
    std::vector<std::string> out;
    for (Vertex v : p.vertices()) out.push_back(g.name(v));
    return out;
}

std::string format_path(const Graph& g, const GraphPath& p) {
    std::string s;
    for (Vertex v : p.vertices()) {
        if (!s.empty()) s += "->";
        s += g.name(v);
    }
    return s;
}

bool is_cycle_free(const GraphPath& p) {
    auto vs = p.vertices();
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

bool is_prefix(const GraphPath& p, const GraphPath& r) {
    const auto& a = p.vertices();
    const auto& b = r.vertices();
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

namespace {

// Start index (into the vertex sequence) of the maximal cycle-free suffix of
// vs[0..end].
std::size_t cycle_free_suffix_start(const std::vector<Vertex>& vs, std::size_t end) {
    std::set<Vertex> seen;
    std::size_t s = end;
    seen.insert(vs[s]);
    while (s > 0 && !seen.contains(vs[s - 1])) {
        --s;
        seen.insert(vs[s]);
    }
    return s;
}

}  // namespace

SuffixDecomposition suffix_decomposition(const GraphPath& p) {
    if (p.empty()) throw InputError("suffix decomposition is defined for non-empty paths only");
    const auto& vs = p.vertices();
    std::vector<int> reversed;
    std::size_t end = vs.size() - 1;
    while (end > 0) {
        std::size_t s = cycle_free_suffix_start(vs, end);
        reversed.push_back(static_cast<int>(end - s));
        end = s;
    }
    SuffixDecomposition dec;
    dec.block_lengths.assign(reversed.rbegin(), reversed.rend());
    dec.block_of.reserve(static_cast<std::size_t>(p.length()));
    for (int t = 0; t < dec.blocks(); ++t)
        dec.block_of.insert(dec.block_of.end(), static_cast<std::size_t>(dec.block_lengths[t]), t + 1);
#ifndef NDEBUG
    if (!satisfies_suffix_property(p, dec.block_lengths))
        throw std::logic_error("suffix decomposition failed its own verification");
#endif
    return dec;
}

bool satisfies_suffix_property(const GraphPath& p, const std::vector<int>& block_lengths) {
    const auto& vs = p.vertices();
    if (std::accumulate(block_lengths.begin(), block_lengths.end(), 0) != p.length()) return false;
    std::size_t begin = 0;
    for (int len : block_lengths) {
        if (len <= 0) return false;
        std::size_t end = begin + static_cast<std::size_t>(len);
        // The block must be cycle-free and must not extend one step further
        // to the left while staying cycle-free.
        std::set<Vertex> seen(vs.begin() + static_cast<std::ptrdiff_t>(begin),
                              vs.begin() + static_cast<std::ptrdiff_t>(end) + 1);
        if (seen.size() != static_cast<std::size_t>(len) + 1) return false;
        if (begin > 0 && !seen.contains(vs[begin - 1])) return false;
        begin = end;
    }
    return true;
}

namespace {

void extend_paths(const Graph& g, std::vector<Vertex>& walk, const PathBound& bound,
                  std::vector<GraphPath>& out) {
    for (Vertex w : g.neighbours(walk.back())) {
        walk.push_back(w);
        GraphPath p(walk);
        if (bound(p.length(), suffix_decomposition(p).blocks())) {
            out.push_back(std::move(p));
            extend_paths(g, walk, bound, out);
        }
        walk.pop_back();
    }
}

void extend_cycle_free(const Graph& g, std::vector<Vertex>& walk, std::vector<bool>& used,
                       int length, std::vector<GraphPath>& out) {
    if (static_cast<int>(walk.size()) - 1 == length) {
        out.emplace_back(walk);
        return;
    }
    for (Vertex w : g.neighbours(walk.back())) {
        if (used[static_cast<std::size_t>(w)]) continue;
        used[static_cast<std::size_t>(w)] = true;
        walk.push_back(w);
        extend_cycle_free(g, walk, used, length, out);
        walk.pop_back();
        used[static_cast<std::size_t>(w)] = false;
    }
}

}  // namespace

std::vector<GraphPath> enumerate_gb_paths(const Graph& g, Vertex b, const PathBound& bound) {
    if (!g.contains(b)) throw InputError("base vertex is not in the graph");
    std::vector<GraphPath> out;
    std::vector<Vertex> walk{b};
    extend_paths(g, walk, bound, out);
    return out;
}

std::vector<GraphPath> cycle_free_paths(const Graph& g, Vertex b, int length) {
    if (!g.contains(b)) throw InputError("base vertex is not in the graph");
    std::vector<GraphPath> out;
    if (length < 0) return out;
    std::vector<Vertex> walk{b};
    std::vector<bool> used(g.size(), false);
    used[static_cast<std::size_t>(b)] = true;
    extend_cycle_free(g, walk, used, length, out);
    return out;
}

}  // namespace armcfg
