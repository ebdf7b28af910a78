#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "armcfg/arm.hpp"
#include "armcfg/complex.hpp"

namespace armcfg {

/// M_x(i) = l - L_x(i) - i + 1 for i in [1, #x-bar].
std::vector<int> m_profile(const Arm& arm, const Configuration& x);

/// Closed-form transition-graph distance: the profiles beyond the common
/// path prefix add up, the shared part contributes |M_x - M_y|.
int distance(const Arm& arm, const Configuration& x, const Configuration& y);

struct Plan {
    Configuration source;
    Configuration target;
    std::vector<Move> moves;
    /// Indices into moves, one list per round; empty unless scheduled.
    std::vector<std::vector<std::size_t>> rounds;
};

/// Shortest move sequence. Each step takes out a maximal element of
/// Sigma(current) \ Sigma(y) if there is one, otherwise puts in a minimal
/// element of Sigma(y) \ Sigma(current); ties go to the smallest element.
Plan plan_moves(const Arm& arm, const Configuration& x, const Configuration& y);

/// Rounds of simultaneous moves: each round applies every legal move that
/// brings Sigma one element closer to Sigma(y).
Plan plan_rounds(const Arm& arm, const Configuration& x, const Configuration& y);

/// Replays the plan, compares its length with distance(), and checks that
/// rounds partition the moves in order and (up to the commutativity guard)
/// form commutative sets.
CheckReport validate_plan(const Arm& arm, const Plan& plan);

/// floor((n-1)(l+1)^2 / (2n)); throws InputError for n < 1 or l < 0.
long long omega(int ell, int n);
/// Sum of t in [1, l] with t != l + 1 (mod n).
long long omega_sum(int ell, int n);
/// Edges of the complete n-partite graph on `vertices` vertices with parts
/// as equal as possible.
long long turan_edges(long long vertices, int parts);

/// Two cycle-free (G,b)-paths of length min{l, n-1} with different first
/// edges, the first such pair in path order.
std::optional<std::pair<GraphPath, GraphPath>> hypothesis_paths(const Arm& arm);

/// Largest m with floor((m-1)/(n-1)) + m <= l.
int antipodal_length(int ell, int n);

/// The two arms wound back and forth along the hypothesis paths. Throws
/// InputError when the hypothesis fails.
std::pair<Configuration, Configuration> antipodal_pair(const Arm& arm);

enum class DiameterMode { Bound, ExactBfs, ExactFormula };
enum class DistanceOracle { Formula, Bfs };

struct DiameterReport {
    int n = 0;
    int length = 0;
    /// 2 * omega(l, n), the closed form.
    long long bound = 0;
    /// 2 * omega_sum(l, n). Never above `bound`; smaller for some n >= 8,
    /// where the closed form overshoots the sum.
    long long tight_bound = 0;
    bool hypothesis_holds = false;
    std::optional<long long> exact;
    std::optional<std::pair<Configuration, Configuration>> witness;
};

/// Bound mode never enumerates. ExactBfs maximizes over all pairs of
/// configurations (first maximal pair in node order is the witness).
/// ExactFormula reports tight_bound as exact when the hypothesis holds and
/// checks the antipodal pair realizes it.
DiameterReport diameter(const Arm& arm, DiameterMode mode, DistanceOracle oracle = DistanceOracle::Formula,
                        std::size_t node_limit = kDefaultNodeLimit);

}  // namespace armcfg
