#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "armcfg/ambient.hpp"
#include "armcfg/graph.hpp"
#include "armcfg/report.hpp"

namespace armcfg {

using Bitset = boost::dynamic_bitset<>;

/// Element <p, a> of the PIP of indexed paths: a non-empty (G,b)-path with
/// an integer index.
struct IndexedPath {
    GraphPath path;
    int index = 0;

    friend auto operator<=>(const IndexedPath&, const IndexedPath&) = default;
    friend bool operator==(const IndexedPath&, const IndexedPath&) = default;
};

/// Largest admissible index l + 1 - #p - n_p for p in IP_{G,b,l}; negative
/// when p carries no element at all.
int max_index(int arm_length, const GraphPath& p);
bool in_ip(int arm_length, const IndexedPath& u);

/// <p,a> <= <q,b> iff p is a prefix of q and n_p + a >= d_q(#p) + b.
bool ip_leq(const IndexedPath& u, const IndexedPath& v);
/// Neither path is a prefix of the other.
bool ip_inconsistent(const IndexedPath& u, const IndexedPath& v);

std::string format_indexed_path(const Graph& g, const IndexedPath& u);

/// Dense relation matrices over elements 0..size-1: leq[i][j] is i <= j,
/// inconsistent[i][j] is i and j inconsistent. Kept separate from the
/// instance so tests can corrupt a copy.
struct PipRelation {
    std::vector<Bitset> leq;
    std::vector<Bitset> inconsistent;

    std::size_t size() const noexcept { return leq.size(); }
    void flip_leq(std::size_t i, std::size_t j) { leq[i].flip(j); }
};

/// Exhaustive scan of the PIP axioms: reflexivity, antisymmetry,
/// transitivity, symmetry of inconsistency, and u # v <= w => u # w.
CheckReport verify_pip_axioms(const PipRelation& rel,
                              const std::function<std::string(std::size_t)>& name = {});

/// The finite PIP IP_{G,b,l}. Elements are ordered by path (lexicographic
/// vertex sequence) and then by ascending index. Immutable once built.
class PipInstance {
public:
    const Arm& arm() const noexcept { return arm_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    const IndexedPath& element(std::size_t i) const { return elements_.at(i); }
    const std::vector<IndexedPath>& elements() const noexcept { return elements_; }
    std::optional<std::size_t> find(const IndexedPath& u) const;
    std::string name(std::size_t i) const;

    bool leq(std::size_t i, std::size_t j) const { return rel_.leq[i][j]; }
    bool inconsistent(std::size_t i, std::size_t j) const { return rel_.inconsistent[i][j]; }
    /// {k : k <= i}, including i.
    const Bitset& down_set(std::size_t i) const { return down_[i]; }
    const Bitset& inconsistent_with(std::size_t i) const { return rel_.inconsistent[i]; }
    const PipRelation& relation() const noexcept { return rel_; }
    /// Element indices sorted so that every element follows everything
    /// below it.
    const std::vector<std::size_t>& linear_extension() const noexcept { return linear_; }

    Bitset empty_set() const { return Bitset(size()); }

private:
    friend PipInstance build_ip(const Arm& arm);
    explicit PipInstance(Arm arm) : arm_(std::move(arm)) {}

    Arm arm_;
    std::vector<IndexedPath> elements_;
    std::map<IndexedPath, std::size_t> index_;
    PipRelation rel_;
    std::vector<Bitset> down_;
    std::vector<std::size_t> linear_;
};

/// Every <p,a> with p a (G,b)+-path, #p + n_p <= l + 1 and
/// a in [0, l + 1 - #p - n_p].
PipInstance build_ip(const Arm& arm);

/// A lower set of a PipInstance. The canonical form is the sorted antichain
/// of maximal elements; membership is kept as a bitset alongside.
struct LowerSet {
    Bitset members;
    std::vector<std::size_t> maximal;
    bool consistent = true;

    std::size_t size() const { return members.count(); }
    bool contains(std::size_t i) const { return members[i]; }
    std::vector<std::size_t> member_list() const;

    friend bool operator==(const LowerSet& a, const LowerSet& b) { return a.members == b.members; }
};

/// I(gens) = {u : u <= v for some v in gens}.
LowerSet lower_set_generated(const PipInstance& pip, const std::vector<std::size_t>& gens);
/// Wraps a member bitset; throws InputError if it is not downward closed.
LowerSet make_lower_set(const PipInstance& pip, Bitset members);

constexpr std::size_t kDefaultPipLimit = 64;

/// All consistent lower sets, ordered by size and then by maximal antichain.
/// Refuses (GuardExceeded) when the PIP has more than `limit` elements.
std::vector<LowerSet> enumerate_consistent_lower_sets(const PipInstance& pip,
                                                      std::size_t limit = kDefaultPipLimit);

/// Cover pairs (i, j): i < j with nothing strictly between.
std::vector<std::pair<std::size_t, std::size_t>> cover_relations(const PipInstance& pip);
/// Inconsistent pairs (i < j by index) that are minimal: no other
/// inconsistent pair lies below them componentwise.
std::vector<std::pair<std::size_t, std::size_t>> minimal_inconsistent_pairs(const PipInstance& pip);

}  // namespace armcfg
