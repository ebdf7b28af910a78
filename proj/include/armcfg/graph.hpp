#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace armcfg {

/// Index of a vertex in its graph's canonical (document) order.
using Vertex = std::int32_t;

/// Simple connected undirected graph: no loops, no multi-edges.
///
/// Vertices are opaque string identifiers; their order of declaration is the
/// canonical order used by every enumeration in the library. Neighbour lists
/// are kept sorted by that order so depth-first walks come out in
/// lexicographic order.
class Graph {
public:
    /// Validates and builds the graph. Throws InputError on duplicate
    /// vertices, loops, duplicate edges, unknown endpoints or disconnection.
    Graph(std::vector<std::string> names,
          const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t size() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const std::string& name(Vertex v) const { return names_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<Vertex> find(std::string_view name) const;
    /// Like find(), but throws InputError for unknown names.
    Vertex vertex(std::string_view name) const;

    const std::vector<Vertex>& neighbours(Vertex v) const {
        return adjacency_.at(static_cast<std::size_t>(v));
    }
    bool adjacent(Vertex v, Vertex w) const;
    bool contains(Vertex v) const noexcept {
        return v >= 0 && static_cast<std::size_t>(v) < names_.size();
    }

    /// Edges as (smaller index, larger index), sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// A walk p_0, ..., p_{#p} along edges of a graph. The edge sequence is
/// implied by the vertex sequence. The empty path at x has the single
/// vertex x.
class GraphPath {
public:
    /// Unchecked: use make_path() to validate against a graph.
    explicit GraphPath(std::vector<Vertex> vertices);

    static GraphPath empty_at(Vertex x) { return GraphPath({x}); }

    int length() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    bool empty() const noexcept { return vertices_.size() == 1; }
    Vertex start() const noexcept { return vertices_.front(); }
    Vertex finish() const noexcept { return vertices_.back(); }
    /// p_i for i in [0, #p].
    Vertex at(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

    /// Length-k prefix (q_0 .. q_k).
    GraphPath prefix(int k) const;
    GraphPath extended(Vertex w) const;
    /// Concatenation; requires finish() == tail.start().
    GraphPath concat(const GraphPath& tail) const;

    friend auto operator<=>(const GraphPath&, const GraphPath&) = default;
    friend bool operator==(const GraphPath&, const GraphPath&) = default;

private:
    std::vector<Vertex> vertices_;
};

/// Validates that consecutive vertices are adjacent in g.
GraphPath make_path(const Graph& g, std::vector<Vertex> vertices);
GraphPath make_path(const Graph& g, const std::vector<std::string>& names);
std::vector<std::string> path_names(const Graph& g, const GraphPath& p);
std::string format_path(const Graph& g, const GraphPath& p);

bool is_cycle_free(const GraphPath& p);
/// True iff p's vertex sequence is an initial segment of r's.
bool is_prefix(const GraphPath& p, const GraphPath& r);

/// Maximal-length cycle-free suffix decomposition p = p^(1) ... p^(n_p).
struct SuffixDecomposition {
    /// #p^(1), ..., #p^(n_p); all positive, summing to #p.
    std::vector<int> block_lengths;
    /// block_of[r-1] = d_p(r) for r in [1, #p]; 1-based block numbers.
    std::vector<int> block_of;

    int blocks() const noexcept { return static_cast<int>(block_lengths.size()); }
    /// d_p(r), r in [1, #p].
    int d(int r) const { return block_of.at(static_cast<std::size_t>(r - 1)); }
};

/// Peels maximal cycle-free suffixes right to left. Throws InputError for
/// the empty path.
SuffixDecomposition suffix_decomposition(const GraphPath& p);

/// Checks the defining property of a candidate block structure: every block
/// is cycle-free and is the maximal cycle-free suffix of the prefix it ends.
bool satisfies_suffix_property(const GraphPath& p, const std::vector<int>& block_lengths);

/// Predicate on (length, n_p) used to bound path enumeration. It must be
/// antitone along extension: if a path fails, all of its extensions fail.
using PathBound = std::function<bool(int length, int blocks)>;

/// All (G,b)+-paths accepted by `bound`, in lexicographic order of their
/// vertex sequences. Depth-first with pruning at the first rejected path.
std::vector<GraphPath> enumerate_gb_paths(const Graph& g, Vertex b, const PathBound& bound);

/// All cycle-free (G,b)-paths of exactly the given length.
std::vector<GraphPath> cycle_free_paths(const Graph& g, Vertex b, int length);

}  // namespace armcfg

template <>
struct std::hash<armcfg::GraphPath> {
    std::size_t operator()(const armcfg::GraphPath& p) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto v : p.vertices()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
        return h;
    }
};
