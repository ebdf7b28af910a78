#pragma once

#include <cstddef>
#include <vector>

#include "armcfg/complex.hpp"
#include "armcfg/planner.hpp"
#include "armcfg/tableau.hpp"

namespace armcfg {

struct VerifyOptions {
    std::size_t node_limit = kDefaultNodeLimit;
    std::size_t pip_limit = kDefaultPipLimit;
    std::size_t lattice_limit = kDefaultLatticeLimit;
    /// Spines for the lattice checks: every (G,b)-path up to this length.
    int spine_max = 4;
    /// All-pairs distance and plan checks run only up to this many
    /// configurations.
    std::size_t pair_limit = 3000;
    /// Negative control: corrupts the PIP relation and one Sigma generator.
    bool corrupt = false;
};

/// For all pairs: closed-form distance, BFS distance and |Sigma xor Sigma|
/// agree ("distance-triple"); plan_moves replays at that length
/// ("plan-moves"); plan_rounds needs exactly the cube-adjacency distance
/// ("plan-rounds").
std::vector<CheckReport> check_distances(const Arm& arm, const TransitionGraph& tg, const PipInstance& pip);

/// PIP axioms, Birkhoff on every extended lattice, the tight-tableau poset
/// isomorphism, the cube isomorphism checks and, when small enough, the
/// all-pairs distance checks.
std::vector<CheckReport> verify_all(const Arm& arm, const VerifyOptions& options = {});

}  // namespace armcfg
