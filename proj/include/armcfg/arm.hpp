#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "armcfg/ambient.hpp"
#include "armcfg/tableau.hpp"

namespace armcfg {

/// Vertex (v, h) of the workspace G x Z>=0.
struct WorkVertex {
    Vertex v = 0;
    int h = 0;

    friend auto operator<=>(const WorkVertex&, const WorkVertex&) = default;
    friend bool operator==(const WorkVertex&, const WorkVertex&) = default;
};

/// The l + 1 workspace vertices x_0 .. x_l of an arm. Validity depends on
/// the ambient arm; see validate_configuration().
struct Configuration {
    std::vector<WorkVertex> cells;

    friend auto operator<=>(const Configuration&, const Configuration&) = default;
    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Empty string when x is a configuration of `arm`, else the first defect:
/// wrong length or start, a non-edge step, a height decrease, a repeated
/// workspace vertex.
std::string configuration_defect(const Arm& arm, const Configuration& x);
bool is_configuration(const Arm& arm, const Configuration& x);
/// Throws InputError with configuration_defect().
void validate_configuration(const Arm& arm, const Configuration& x);

/// (b,0), (b,1), ..., (b,l).
Configuration initial_configuration(const Arm& arm);

std::string format_configuration(const Graph& g, const Configuration& x);

enum class MoveKind { Tail, Corner };

/// T^{dir}_{v,w,h} or C^{dir}_{v,w,h}; dir is +1 (upward) or -1.
struct Move {
    MoveKind kind = MoveKind::Tail;
    int dir = 1;
    Vertex v = 0;
    Vertex w = 0;
    int h = 0;

    bool upward() const noexcept { return dir > 0; }

    friend auto operator<=>(const Move&, const Move&) = default;
    friend bool operator==(const Move&, const Move&) = default;
};

Move inverse(const Move& m);
std::string format_move(const Graph& g, const Move& m);

/// Index j of the workspace vertex the move rewrites, if x is in the
/// support of m. Corner moves rewrite the middle of their corner, tail
/// moves rewrite x_l.
std::optional<int> move_site(const Arm& arm, const Configuration& x, const Move& m);

/// Every move whose support contains x, ordered by site and then upward
/// before downward (downward tail moves by target vertex).
std::vector<Move> legal_moves(const Arm& arm, const Configuration& x);
/// Only the upward ones, same order.
std::vector<Move> upward_moves(const Arm& arm, const Configuration& x);

std::optional<Configuration> try_apply(const Arm& arm, const Configuration& x, const Move& m);
/// Throws InputError when m is not legal at x.
Configuration apply_move(const Arm& arm, const Configuration& x, const Move& m);
/// Applies the moves in order; throws if any step is illegal.
Configuration apply_moves(const Arm& arm, Configuration x, const std::vector<Move>& moves);

constexpr std::size_t kCommutativeLimit = 6;

/// Exhaustive: every ordering of every subset of A applies legally from x,
/// and the orderings of a subset agree on the result. GuardExceeded when
/// |A| > limit.
bool is_commutative_set(const Arm& arm, const Configuration& x, const std::vector<Move>& A,
                        std::size_t limit = kCommutativeLimit);

/// f: horizontal edges in order give the path, their heights the labels.
PathTableau config_to_tableau(const Arm& arm, const Configuration& x);
/// f^{-1}: climbs at p_{i-1} to height L(i), steps to p_i, and climbs at
/// the end to fill length l. Throws InputError on an invalid tableau.
Configuration tableau_to_config(const Arm& arm, const PathTableau& t);

constexpr std::size_t kDefaultNodeLimit = 20000;

/// Configurations in BFS order from the initial one, with legal-move
/// adjacency.
struct TransitionGraph {
    struct Arc {
        std::size_t to;
        Move move;
    };

    std::vector<Configuration> nodes;
    std::vector<std::vector<Arc>> adjacency;
    std::map<Configuration, std::size_t> index;

    std::size_t size() const noexcept { return nodes.size(); }
    std::size_t edge_count() const;
    std::size_t index_of(const Configuration& x) const;
};

/// GuardExceeded when more than `limit` configurations are reached.
TransitionGraph build_transition_graph(const Arm& arm, std::size_t limit = kDefaultNodeLimit);

/// Unweighted single-source distances; unreachable nodes stay at -1.
std::vector<int> bfs_distances(const std::vector<std::vector<std::size_t>>& adjacency,
                               std::size_t source);
std::vector<std::vector<std::size_t>> plain_adjacency(const TransitionGraph& tg);

}  // namespace armcfg
