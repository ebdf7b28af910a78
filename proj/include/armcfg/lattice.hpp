#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "armcfg/pip.hpp"
#include "armcfg/report.hpp"

namespace armcfg {

/// Finite lattice given by its order matrix and operation tables.
class FiniteLattice {
public:
    using Table = std::vector<std::vector<std::size_t>>;

    /// leq[i][j] is i <= j. Tables are taken as given; verify_lattice_laws()
    /// checks them against the order.
    FiniteLattice(std::vector<Bitset> leq, Table meet, Table join,
                  std::vector<std::string> labels = {});

    /// Derives meet and join from the order by search. Throws InputError if
    /// some pair lacks a unique infimum or supremum.
    static FiniteLattice from_order(std::vector<Bitset> leq, std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return leq_.size(); }
    bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
    std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i][j]; }
    std::size_t join(std::size_t i, std::size_t j) const { return join_[i][j]; }
    const std::vector<Bitset>& order() const noexcept { return leq_; }
    std::string label(std::size_t i) const;
    /// The least element (assumes lattice laws hold).
    std::size_t bottom() const;

private:
    std::vector<Bitset> leq_;
    Table meet_;
    Table join_;
    std::vector<std::string> labels_;
};

/// Partial-order axioms, tables agreeing with infimum/supremum, commutativity,
/// associativity, absorption and (optionally) distributivity, all checked
/// exhaustively.
CheckReport verify_lattice_laws(const FiniteLattice& lat, bool distributive);

/// Elements u other than the bottom such that u = v v w forces u in {v, w}.
std::vector<std::size_t> join_irreducibles(const FiniteLattice& lat);

struct BirkhoffResult {
    CheckReport report;
    std::vector<std::size_t> join_irreducibles;
};

/// Checks that x -> {j in J(lat) : j <= x} is a lattice isomorphism onto
/// the lower sets of J(lat). Non-distributive input fails with a
/// distributivity counterexample.
BirkhoffResult birkhoff_verify(const FiniteLattice& lat);

}  // namespace armcfg
