#pragma once

#include <cstddef>
#include <vector>

#include "armcfg/arm.hpp"
#include "armcfg/pip.hpp"

namespace armcfg {

/// Position of x in PIP coordinates: its tableau, n of every prefix of the
/// induced path, and the generator indices a^{(x,i)} = L(i) - n_i + 1.
struct PipCoordinates {
    PathTableau tableau;
    std::vector<int> blocks;
    std::vector<int> index;

    int segments() const noexcept { return tableau.path.length(); }
    /// Generator <sigma^{(x,i)}, a^{(x,i)}>, i in [1, segments()].
    IndexedPath generator(int i) const;
    /// Membership in Sigma(x) read off the coordinates: u's path is a
    /// prefix sigma^{(x,i)} and a^{(x,i)} <= u.index <= its maximum.
    bool contains(int arm_length, const IndexedPath& u) const;
};

PipCoordinates pip_coordinates(const Arm& arm, const Configuration& x);
std::vector<IndexedPath> sigma_generators(const Arm& arm, const Configuration& x);

/// Sigma(x) by definition: everything below some generator, sorted.
std::vector<IndexedPath> sigma(const Arm& arm, const Configuration& x);
/// Same set as a LowerSet of `pip`.
LowerSet sigma_lower_set(const PipInstance& pip, const Configuration& x);

/// Reads the tableau back from a consistent lower set: q is the longest
/// path among the members and L(i) = min{a : <q_{<=i}, a> in mu} + n - 1.
/// Throws InputError for inconsistent input or a missing prefix.
Configuration sigma_inverse(const Arm& arm, const std::vector<IndexedPath>& members);
Configuration sigma_inverse(const PipInstance& pip, const LowerSet& mu);

/// The single element a legal move takes out of (upward) or puts into
/// (downward) Sigma(x).
struct MoveEffect {
    IndexedPath element;
    bool removes = true;
};

/// chi for upward moves, and its counterpart for downward ones, computed
/// from the segment the move acts on. Throws InputError if m is illegal.
MoveEffect move_effect(const Arm& arm, const Configuration& x, const Move& m);
MoveEffect move_effect(const Arm& arm, const Configuration& x, const PipCoordinates& cx,
                       const Move& m);

/// A k-cube by its 2^k corners; corners[mask] is the vertex index reached
/// by the coordinate bits in mask.
struct Cube {
    int dim = 0;
    std::vector<std::size_t> corners;

    /// Sorted corners, the identity used for deduplication.
    std::vector<std::size_t> vertex_set() const;
};

/// The (dim-1)-face obtained by fixing coordinate `axis` to `side`.
Cube face(const Cube& c, int axis, bool side);

struct CubicalComplex {
    std::size_t root = 0;
    /// cubes[k] holds the k-cubes; cubes[0] are the vertices.
    std::vector<std::vector<Cube>> cubes;

    std::size_t vertex_count() const { return cubes.empty() ? 0 : cubes[0].size(); }
    int dimension() const { return static_cast<int>(cubes.size()) - 1; }
    std::vector<std::size_t> f_vector() const;
    /// Every pair of vertices sharing a cube (the cube-adjacency graph).
    std::vector<std::vector<std::size_t>> cube_adjacency() const;
};

/// Every face of every cube is a cube of the complex.
CheckReport check_face_closure(const CubicalComplex& k);

/// Vertices indexed like tg.nodes; cubes [A;x] for A a set of upward legal
/// moves at x. Throws std::logic_error if such a set fails to span 2^|A|
/// distinct configurations.
CubicalComplex build_S(const Arm& arm, const TransitionGraph& tg);
/// Vertices indexed like `lower_sets`; cubes [mu;K] for K a set of maximal
/// elements of mu.
CubicalComplex build_X(const PipInstance& pip, const std::vector<LowerSet>& lower_sets);

struct CubeCheckOptions {
    std::size_t node_limit = kDefaultNodeLimit;
    std::size_t pip_limit = kDefaultPipLimit;
    /// Negative control: shift one generator index of one configuration.
    bool corrupt = false;
};

/// Reports "sigma-bijection", "chi-bijection", "chi-cubes", "f-vector" and
/// "face-closure".
std::vector<CheckReport> check_cube_isomorphism(const Arm& arm, const CubeCheckOptions& options = {});

}  // namespace armcfg
