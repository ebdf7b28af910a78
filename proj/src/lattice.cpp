#include "armcfg/lattice.hpp"

#include <map>

#include "armcfg/errors.hpp"

namespace armcfg {

FiniteLattice::FiniteLattice(std::vector<Bitset> leq, Table meet, Table join,
                             std::vector<std::string> labels)
    : leq_(std::move(leq)), meet_(std::move(meet)), join_(std::move(join)), labels_(std::move(labels)) {
    const std::size_t n = leq_.size();
    if (n == 0) throw InputError("a lattice has at least one element");
    auto square = [n](const Table& t) {
        if (t.size() != n) return false;
        for (const auto& row : t) {
            if (row.size() != n) return false;
            for (auto v : row)
                if (v >= n) return false;
        }
        return true;
    };
    for (const auto& row : leq_)
        if (row.size() != n) throw InputError("order matrix is not square");
    if (!square(meet_) || !square(join_)) throw InputError("operation table has the wrong shape");
    if (!labels_.empty() && labels_.size() != n) throw InputError("label count mismatch");
}

FiniteLattice FiniteLattice::from_order(std::vector<Bitset> leq, std::vector<std::string> labels) {
    const std::size_t n = leq.size();
    Table meet(n, std::vector<std::size_t>(n));
    Table join(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // Candidates: common lower (upper) bounds; the extremal one must
            // dominate (be dominated by) all the others.
            std::vector<std::size_t> lower, upper;
            for (std::size_t k = 0; k < n; ++k) {
                if (leq[k][i] && leq[k][j]) lower.push_back(k);
                if (leq[i][k] && leq[j][k]) upper.push_back(k);
            }
            auto pick = [&](const std::vector<std::size_t>& cand, bool greatest) -> std::size_t {
                for (auto c : cand) {
                    bool ok = true;
                    for (auto d : cand)
                        if (greatest ? !leq[d][c] : !leq[c][d]) ok = false;
                    if (ok) return c;
                }
                throw InputError("order is not a lattice");
            };
            meet[i][j] = pick(lower, true);
            join[i][j] = pick(upper, false);
        }
    }
    return FiniteLattice(std::move(leq), std::move(meet), std::move(join), std::move(labels));
}

std::string FiniteLattice::label(std::size_t i) const {
    return labels_.empty() ? "#" + std::to_string(i) : labels_.at(i);
}

std::size_t FiniteLattice::bottom() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (leq_[i].count() == size()) return i;
    throw InputError("lattice has no least element");
}

CheckReport verify_lattice_laws(const FiniteLattice& lat, bool distributive) {
    const std::string check = distributive ? "distributive-lattice" : "lattice";
    const std::size_t n = lat.size();
    auto L = [&](std::size_t i) { return lat.label(i); };

    for (std::size_t i = 0; i < n; ++i) {
        if (!lat.leq(i, i)) return CheckReport::fail(check, "order not reflexive at " + L(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && lat.leq(i, j) && lat.leq(j, i))
                return CheckReport::fail(check, "order not antisymmetric: " + L(i) + ", " + L(j));
            for (std::size_t k = 0; k < n; ++k)
                if (lat.leq(i, j) && lat.leq(j, k) && !lat.leq(i, k))
                    return CheckReport::fail(check, "order not transitive: " + L(i) + ", " + L(j) +
                                                        ", " + L(k));
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto m = lat.meet(i, j);
            const auto s = lat.join(i, j);
            if (!lat.leq(m, i) || !lat.leq(m, j) || !lat.leq(i, s) || !lat.leq(j, s))
                return CheckReport::fail(check, "meet/join of " + L(i) + ", " + L(j) + " not a bound");
            for (std::size_t k = 0; k < n; ++k) {
                if (lat.leq(k, i) && lat.leq(k, j) && !lat.leq(k, m))
                    return CheckReport::fail(check, "meet of " + L(i) + ", " + L(j) + " not greatest");
                if (lat.leq(i, k) && lat.leq(j, k) && !lat.leq(s, k))
                    return CheckReport::fail(check, "join of " + L(i) + ", " + L(j) + " not least");
            }
            if (m != lat.meet(j, i) || s != lat.join(j, i))
                return CheckReport::fail(check, "operations not commutative on " + L(i) + ", " + L(j));
            if (lat.join(i, lat.meet(i, j)) != i || lat.meet(i, lat.join(i, j)) != i)
                return CheckReport::fail(check, "absorption fails on " + L(i) + ", " + L(j));
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (lat.meet(i, lat.meet(j, k)) != lat.meet(lat.meet(i, j), k) ||
                    lat.join(i, lat.join(j, k)) != lat.join(lat.join(i, j), k))
                    return CheckReport::fail(check, "associativity fails on " + L(i) + ", " + L(j) +
                                                        ", " + L(k));
                if (distributive &&
                    lat.meet(i, lat.join(j, k)) != lat.join(lat.meet(i, j), lat.meet(i, k)))
                    return CheckReport::fail(check, "distributivity fails on " + L(i) + ", " + L(j) +
                                                        ", " + L(k));
            }
    return CheckReport::pass(check, std::to_string(n) + " elements");
}

std::vector<std::size_t> join_irreducibles(const FiniteLattice& lat) {
    const std::size_t n = lat.size();
    const std::size_t bottom = lat.bottom();
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < n; ++u) {
        if (u == bottom) continue;
        bool irreducible = true;
        for (std::size_t v = 0; v < n && irreducible; ++v)
            for (std::size_t w = 0; w < n && irreducible; ++w)
                if (lat.join(v, w) == u && v != u && w != u) irreducible = false;
        if (irreducible) out.push_back(u);
    }
    return out;
}

namespace {

// Lower sets of the subposet `elems` (given in an order compatible with the
// lattice order), as bitsets over positions in `elems`.
void grow_poset_ideals(const FiniteLattice& lat, const std::vector<std::size_t>& elems,
                       std::size_t pos, Bitset& current, std::vector<Bitset>& out) {
    if (pos == elems.size()) {
        out.push_back(current);
        return;
    }
    grow_poset_ideals(lat, elems, pos + 1, current, out);
    bool closed = true;
    for (std::size_t q = 0; q < pos && closed; ++q)
        if (lat.leq(elems[q], elems[pos]) && !current[q]) closed = false;
    if (closed) {
        current.set(pos);
        grow_poset_ideals(lat, elems, pos + 1, current, out);
        current.reset(pos);
    }
}

}  // namespace

BirkhoffResult birkhoff_verify(const FiniteLattice& lat) {
    const std::string check = "birkhoff";
    BirkhoffResult result{CheckReport::pass(check), {}};
    if (auto laws = verify_lattice_laws(lat, true); !laws) {
        result.report = CheckReport::fail(check, laws.detail);
        return result;
    }

    auto J = join_irreducibles(lat);
    // Sort J by the number of elements below, a linear extension.
    std::stable_sort(J.begin(), J.end(), [&](std::size_t a, std::size_t b) {
        std::size_t ca = 0, cb = 0;
        for (std::size_t k = 0; k < lat.size(); ++k) {
            ca += lat.leq(k, a);
            cb += lat.leq(k, b);
        }
        return ca < cb;
    });
    result.join_irreducibles = J;

    const std::size_t n = lat.size();
    std::vector<Bitset> image(n, Bitset(J.size()));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t t = 0; t < J.size(); ++t)
            if (lat.leq(J[t], x)) image[x].set(t);

    std::vector<Bitset> ideals;
    Bitset scratch(J.size());
    grow_poset_ideals(lat, J, 0, scratch, ideals);

    std::map<Bitset, std::size_t> preimage;
    for (std::size_t x = 0; x < n; ++x) {
        auto [it, fresh] = preimage.emplace(image[x], x);
        if (!fresh) {
            result.report = CheckReport::fail(check, "B not injective: " + lat.label(it->second) +
                                                         " and " + lat.label(x));
            return result;
        }
    }
    if (ideals.size() != n) {
        result.report = CheckReport::fail(check, "|L(J)| = " + std::to_string(ideals.size()) +
                                                     " but lattice has " + std::to_string(n));
        return result;
    }
    for (const auto& ideal : ideals) {
        if (!preimage.contains(ideal)) {
            result.report = CheckReport::fail(check, "a lower set of J has no preimage");
            return result;
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (lat.leq(x, y) != image[x].is_subset_of(image[y])) {
                result.report = CheckReport::fail(check, "B not an order isomorphism at " +
                                                             lat.label(x) + ", " + lat.label(y));
                return result;
            }
            if (image[lat.join(x, y)] != (image[x] | image[y]) ||
                image[lat.meet(x, y)] != (image[x] & image[y])) {
                result.report = CheckReport::fail(check, "B does not preserve operations at " +
                                                             lat.label(x) + ", " + lat.label(y));
                return result;
            }
        }
    }
    result.report.detail = std::to_string(n) + " elements, " + std::to_string(J.size()) +
                           " join-irreducible";
    return result;
}

}  // namespace armcfg
