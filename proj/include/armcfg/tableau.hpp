#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "armcfg/ambient.hpp"
#include "armcfg/lattice.hpp"
#include "armcfg/pip.hpp"

namespace armcfg {

/// Stands for the infinite label of an extended tableau; compares above
/// every finite label.
constexpr int kInfinity = std::numeric_limits<int>::max();

/// A path p with labels L(1..#p). The go-nowhere path carries no labels.
struct PathTableau {
    GraphPath path;
    std::vector<int> labels;

    friend bool operator==(const PathTableau&, const PathTableau&) = default;
};

/// Labels U(1..#q) on a fixed spine q, with kInfinity allowed.
struct ExtendedTableau {
    GraphPath spine;
    std::vector<int> values;

    /// Number of leading finite values.
    int finite_length() const;

    friend bool operator==(const ExtendedTableau&, const ExtendedTableau&) = default;
    friend auto operator<=>(const ExtendedTableau&, const ExtendedTableau&) = default;
};

/// Conditions (i)-(iii): labels weakly increase; a revisit p_{i-1} = p_j
/// with i < j forces L(i) < L(j); L(#p) + #p <= l.
bool is_tableau(const Arm& arm, const GraphPath& p, const std::vector<int>& labels);
bool is_tableau(const Arm& arm, const PathTableau& t);

/// The tight tableau of <p,a>: L(r) = d_p(r) + a - 1.
PathTableau tau(const IndexedPath& u);
/// <p, L(#p) - n_p + 1>; the only candidate preimage of t under tau.
IndexedPath tight_index(const PathTableau& t);
/// Throws InputError for the go-nowhere path.
bool is_tight(const PathTableau& t);

/// Pads t with kInfinity up to the length of q. Throws InputError unless
/// t.path is a prefix of q.
ExtendedTableau extend(const PathTableau& t, const GraphPath& q);
/// Cuts at the last finite value.
PathTableau truncate(const ExtendedTableau& u);
bool is_extended_tableau(const Arm& arm, const ExtendedTableau& u);

/// U <= U' iff U(i) >= U'(i) for every i. The all-infinite tableau is the
/// bottom.
bool ext_leq(const ExtendedTableau& u, const ExtendedTableau& v);
/// Pointwise max / min. Throw InputError on a spine mismatch.
ExtendedTableau ext_meet(const ExtendedTableau& u, const ExtendedTableau& v);
ExtendedTableau ext_join(const ExtendedTableau& u, const ExtendedTableau& v);

std::string format_labels(const std::vector<int>& labels);
std::string format_tableau(const Graph& g, const PathTableau& t);

/// Every tableau of the arm, path-lexicographic then label-lexicographic.
/// GuardExceeded past `limit` results.
std::vector<PathTableau> enumerate_tableaux(const Arm& arm, std::size_t limit);
/// Tableaux whose path is exactly p.
std::vector<PathTableau> tableaux_on_path(const Arm& arm, const GraphPath& p);

constexpr std::size_t kDefaultLatticeLimit = 4096;

struct ExtendedLattice {
    std::vector<ExtendedTableau> elements;
    FiniteLattice lattice;
};

/// All extended tableaux on spine q ordered by ascending finite length and
/// then values, with the order and operation tables. Throws std::logic_error
/// if meet or join ever leaves the set.
ExtendedLattice build_extended_lattice(const Arm& arm, const GraphPath& q,
                                       std::size_t limit = kDefaultLatticeLimit);

/// Checks u -> extend(tau(u), q) is an order isomorphism from the elements
/// of the PIP whose path is a prefix of q onto the join-irreducibles of the
/// extended lattice on q.
CheckReport check_poset_iso(const Arm& arm, const GraphPath& q,
                            std::size_t limit = kDefaultLatticeLimit);

}  // namespace armcfg
