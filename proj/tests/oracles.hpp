#pragma once

// Independent brute-force oracles. None of these call the code they are
// used to check; they only share the basic Graph/Configuration types.

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <vector>

#include "armcfg/arm.hpp"
#include "armcfg/pip.hpp"

namespace oracle {

using armcfg::Configuration;
using armcfg::Graph;
using armcfg::Vertex;
using armcfg::WorkVertex;

/// Every composition of p's edge count whose blocks are cycle-free and
/// cannot be extended one edge to the left without a repeated vertex.
inline std::vector<std::vector<int>> suffix_decompositions_by_search(const std::vector<Vertex>& vs) {
    const int len = static_cast<int>(vs.size()) - 1;
    std::vector<std::vector<int>> found;
    if (len < 1) return found;
    auto distinct = [&](int from, int to) {  // vertices vs[from..to]
        std::set<Vertex> s(vs.begin() + from, vs.begin() + to + 1);
        return static_cast<int>(s.size()) == to - from + 1;
    };
    // Bit i of cuts (i in [1, len-1]) places a block boundary after edge i.
    for (unsigned cuts = 0; cuts < (1u << (len - 1)); ++cuts) {
        std::vector<int> blocks;
        int start = 0;
        bool ok = true;
        for (int e = 1; e <= len && ok; ++e) {
            if (e == len || (cuts >> (e - 1) & 1u)) {
                if (!distinct(start, e)) ok = false;
                if (start > 0 && distinct(start - 1, e)) ok = false;
                blocks.push_back(e - start);
                start = e;
            }
        }
        if (ok) found.push_back(blocks);
    }
    return found;
}

inline int blocks_by_search(const std::vector<Vertex>& vs) {
    auto all = suffix_decompositions_by_search(vs);
    return all.size() == 1 ? static_cast<int>(all.front().size()) : -1;
}

/// All walks from b with 1..max_len edges, breadth first with no pruning,
/// sorted by vertex sequence.
inline std::vector<std::vector<Vertex>> all_walks(const Graph& g, Vertex b, int max_len) {
    std::vector<std::vector<Vertex>> out, frontier{{b}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<Vertex>> next;
        for (const auto& w : frontier) {
            for (std::size_t v = 0; v < g.size(); ++v) {
                if (!g.adjacent(w.back(), static_cast<Vertex>(v))) continue;
                auto e = w;
                e.push_back(static_cast<Vertex>(v));
                next.push_back(e);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// |IP| as the sum over paths of the number of admissible indices.
inline std::size_t ip_size(const Graph& g, Vertex b, int ell) {
    std::size_t total = 0;
    for (const auto& w : all_walks(g, b, ell)) {
        const int len = static_cast<int>(w.size()) - 1;
        const int count = ell + 2 - len - blocks_by_search(w);
        if (count > 0) total += static_cast<std::size_t>(count);
    }
    return total;
}

/// Arms built cell by cell: from (v,h) go up to (v,h+1) or across to
/// (w,h), never revisiting a workspace vertex.
inline std::vector<Configuration> all_configurations(const Graph& g, Vertex b, int ell) {
    std::vector<Configuration> out;
    std::vector<WorkVertex> cells{{b, 0}};
    std::function<void()> grow = [&] {
        if (static_cast<int>(cells.size()) == ell + 1) {
            out.push_back({cells});
            return;
        }
        const auto last = cells.back();
        std::vector<WorkVertex> next{{last.v, last.h + 1}};
        for (std::size_t w = 0; w < g.size(); ++w)
            if (g.adjacent(last.v, static_cast<Vertex>(w))) next.push_back({static_cast<Vertex>(w), last.h});
        for (const auto& c : next) {
            if (std::find(cells.begin(), cells.end(), c) != cells.end()) continue;
            cells.push_back(c);
            grow();
            cells.pop_back();
        }
    };
    grow();
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> bfs(const std::vector<std::vector<std::size_t>>& adj, std::size_t s) {
    std::vector<int> d(adj.size(), -1);
    std::deque<std::size_t> q{s};
    d[s] = 0;
    while (!q.empty()) {
        auto u = q.front();
        q.pop_front();
        for (auto v : adj[u])
            if (d[v] < 0) d[v] = d[u] + 1, q.push_back(v);
    }
    return d;
}

/// Subsets of a small PIP that are downward closed and consistent.
inline std::size_t consistent_lower_sets_by_subsets(const armcfg::PipInstance& pip) {
    const std::size_t n = pip.size();
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::size_t j = 0; j < n && ok; ++j) {
                if (pip.leq(j, i) && !(mask >> j & 1)) ok = false;
                if ((mask >> j & 1) && pip.inconsistent(i, j)) ok = false;
            }
        }
        count += ok;
    }
    return count;
}

inline long long omega_by_sum(int ell, int n) {
    long long s = 0;
    for (int t = 1; t <= ell; ++t)
        if (((t - ell - 1) % n + n) % n != 0) s += t;
    return s;
}

/// Edges of the complete n-partite graph on N vertices with vertex i in
/// part i mod n: all pairs minus pairs inside a part.
inline long long turan_by_pairs(long long N, int n) {
    long long inside = 0;
    for (int part = 0; part < n; ++part) {
        const long long s = N / n + (part < N % n ? 1 : 0);
        inside += s * (s - 1) / 2;
    }
    return N * (N - 1) / 2 - inside;
}

}  // namespace oracle
