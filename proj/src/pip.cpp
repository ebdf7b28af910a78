#include "armcfg/pip.hpp"

#include <algorithm>
#include <tuple>

#include "armcfg/errors.hpp"

namespace armcfg {

int max_index(int arm_length, const GraphPath& p) {
    if (p.empty()) return -1;
    return arm_length + 1 - p.length() - suffix_decomposition(p).blocks();
}

bool in_ip(int arm_length, const IndexedPath& u) {
    return !u.path.empty() && u.index >= 0 && u.index <= max_index(arm_length, u.path);
}

bool ip_leq(const IndexedPath& u, const IndexedPath& v) {
    if (!is_prefix(u.path, v.path)) return false;
    const int n_u = suffix_decomposition(u.path).blocks();
    const int d_v = suffix_decomposition(v.path).d(u.path.length());
    return n_u + u.index >= d_v + v.index;
}

bool ip_inconsistent(const IndexedPath& u, const IndexedPath& v) {
    return !is_prefix(u.path, v.path) && !is_prefix(v.path, u.path);
}

std::string format_indexed_path(const Graph& g, const IndexedPath& u) {
    return "<" + format_path(g, u.path) + "," + std::to_string(u.index) + ">";
}

CheckReport verify_pip_axioms(const PipRelation& rel,
                              const std::function<std::string(std::size_t)>& name) {
    const std::string check = "pip-axioms";
    auto nm = [&](std::size_t i) { return name ? name(i) : "#" + std::to_string(i); };
    const std::size_t n = rel.size();

    for (std::size_t i = 0; i < n; ++i)
        if (!rel.leq[i][i]) return CheckReport::fail(check, "reflexivity fails at " + nm(i));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rel.leq[i][j] && rel.leq[j][i])
                return CheckReport::fail(check, "antisymmetry fails for " + nm(i) + ", " + nm(j));

    // i <= j requires up(j) to be contained in up(i).
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = rel.leq[i].find_first(); j != Bitset::npos; j = rel.leq[i].find_next(j)) {
            if (rel.leq[j].is_subset_of(rel.leq[i])) continue;
            std::size_t k = (rel.leq[j] - rel.leq[i]).find_first();
            return CheckReport::fail(check, "transitivity fails for " + nm(i) + " <= " + nm(j) +
                                                " <= " + nm(k));
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rel.inconsistent[i][j] != rel.inconsistent[j][i])
                return CheckReport::fail(check, "inconsistency is not symmetric on " + nm(i) +
                                                    ", " + nm(j));

    // v <= w requires incons(v) to be contained in incons(w).
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = rel.leq[v].find_first(); w != Bitset::npos; w = rel.leq[v].find_next(w)) {
            if (rel.inconsistent[v].is_subset_of(rel.inconsistent[w])) continue;
            std::size_t u = (rel.inconsistent[v] - rel.inconsistent[w]).find_first();
            return CheckReport::fail(check, "inconsistency not inherited upward: " + nm(u) + " # " +
                                                nm(v) + " <= " + nm(w));
        }
    }
    return CheckReport::pass(check, std::to_string(n) + " elements");
}

std::optional<std::size_t> PipInstance::find(const IndexedPath& u) const {
    auto it = index_.find(u);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string PipInstance::name(std::size_t i) const {
    return format_indexed_path(arm_.graph(), elements_.at(i));
}

PipInstance build_ip(const Arm& arm) {
    PipInstance pip(arm);
    const int ell = arm.length();
    // #p + n_p <= l + 1 with n_p >= 1 forces #p <= l, which is antitone.
    auto paths = enumerate_gb_paths(arm.graph(), arm.base(),
                                    [ell](int length, int) { return length <= ell; });

    struct PathInfo {
        GraphPath path;
        SuffixDecomposition dec;
    };
    std::vector<PathInfo> infos;
    std::vector<std::size_t> path_of;
    for (auto& p : paths) {
        auto dec = suffix_decomposition(p);
        const int top = ell + 1 - p.length() - dec.blocks();
        if (top < 0) continue;
        infos.push_back({p, dec});
        for (int a = 0; a <= top; ++a) {
            pip.index_.emplace(IndexedPath{p, a}, pip.elements_.size());
            pip.elements_.push_back({p, a});
            path_of.push_back(infos.size() - 1);
        }
    }

    const std::size_t n = pip.elements_.size();
    pip.rel_.leq.assign(n, Bitset(n));
    pip.rel_.inconsistent.assign(n, Bitset(n));
    pip.down_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& u = pip.elements_[i];
        const auto& pu = infos[path_of[i]];
        for (std::size_t j = 0; j < n; ++j) {
            const auto& v = pip.elements_[j];
            const auto& pv = infos[path_of[j]];
            if (is_prefix(u.path, v.path)) {
                if (pu.dec.blocks() + u.index >= pv.dec.d(u.path.length()) + v.index) {
                    pip.rel_.leq[i].set(j);
                    pip.down_[j].set(i);
                }
            } else if (!is_prefix(v.path, u.path)) {
                pip.rel_.inconsistent[i].set(j);
            }
        }
    }

    pip.linear_.resize(n);
    for (std::size_t i = 0; i < n; ++i) pip.linear_[i] = i;
    // Prefixes first; on a common path a larger index sits lower.
    std::stable_sort(pip.linear_.begin(), pip.linear_.end(), [&](std::size_t a, std::size_t b) {
        const auto& u = pip.elements_[a];
        const auto& v = pip.elements_[b];
        return std::make_tuple(u.path.length(), u.path, -u.index) <
               std::make_tuple(v.path.length(), v.path, -v.index);
    });
    return pip;
}

std::vector<std::size_t> LowerSet::member_list() const {
    std::vector<std::size_t> out;
    for (std::size_t i = members.find_first(); i != Bitset::npos; i = members.find_next(i))
        out.push_back(i);
    return out;
}

namespace {

LowerSet finish_lower_set(const PipInstance& pip, Bitset members) {
    LowerSet ls;
    ls.members = std::move(members);
    for (std::size_t i = ls.members.find_first(); i != Bitset::npos; i = ls.members.find_next(i)) {
        // Maximal: the only member above i is i itself.
        Bitset above = pip.relation().leq[i] & ls.members;
        if (above.count() == 1) ls.maximal.push_back(i);
        if (ls.consistent && pip.inconsistent_with(i).intersects(ls.members)) ls.consistent = false;
    }
    return ls;
}

}  // namespace

LowerSet lower_set_generated(const PipInstance& pip, const std::vector<std::size_t>& gens) {
    Bitset members = pip.empty_set();
    for (auto g : gens) {
        if (g >= pip.size()) throw InputError("generator is not an element of the PIP");
        members |= pip.down_set(g);
    }
    return finish_lower_set(pip, std::move(members));
}

LowerSet make_lower_set(const PipInstance& pip, Bitset members) {
    if (members.size() != pip.size()) throw InputError("member set has the wrong universe size");
    for (std::size_t i = members.find_first(); i != Bitset::npos; i = members.find_next(i))
        if (!pip.down_set(i).is_subset_of(members))
            throw InputError("set is not downward closed at " + pip.name(i));
    return finish_lower_set(pip, std::move(members));
}

namespace {

// Decides elements in linear-extension order; excluding is always possible,
// so every branch of the recursion ends in at least one output.
void grow_lower_sets(const PipInstance& pip, std::size_t pos, Bitset& current,
                     std::vector<Bitset>& out) {
    const auto& order = pip.linear_extension();
    if (pos == order.size()) {
        out.push_back(current);
        return;
    }
    const std::size_t e = order[pos];
    grow_lower_sets(pip, pos + 1, current, out);

    Bitset strictly_below = pip.down_set(e);
    strictly_below.reset(e);
    if (strictly_below.is_subset_of(current) && !pip.inconsistent_with(e).intersects(current)) {
        current.set(e);
        grow_lower_sets(pip, pos + 1, current, out);
        current.reset(e);
    }
}

}  // namespace

std::vector<LowerSet> enumerate_consistent_lower_sets(const PipInstance& pip, std::size_t limit) {
    if (pip.size() > limit)
        throw GuardExceeded("consistent lower set enumeration", pip.size(), limit);
    std::vector<Bitset> raw;
    Bitset current = pip.empty_set();
    grow_lower_sets(pip, 0, current, raw);

    std::vector<LowerSet> out;
    out.reserve(raw.size());
    for (auto& b : raw) out.push_back(finish_lower_set(pip, std::move(b)));
    std::sort(out.begin(), out.end(), [](const LowerSet& a, const LowerSet& b) {
        const auto sa = a.size();
        const auto sb = b.size();
        if (sa != sb) return sa < sb;
        return a.maximal < b.maximal;
    });
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> cover_relations(const PipInstance& pip) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = pip.size();
    for (std::size_t i = 0; i < n; ++i) {
        Bitset strictly_above = pip.relation().leq[i];
        strictly_above.reset(i);
        for (std::size_t j = strictly_above.find_first(); j != Bitset::npos;
             j = strictly_above.find_next(j)) {
            // Something strictly between i and j?
            Bitset between = strictly_above & pip.down_set(j);
            between.reset(j);
            if (between.none()) out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> minimal_inconsistent_pairs(const PipInstance& pip) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = pip.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!pip.inconsistent(i, j)) continue;
            bool minimal = true;
            const auto& di = pip.down_set(i);
            const auto& dj = pip.down_set(j);
            for (std::size_t a = di.find_first(); a != Bitset::npos && minimal; a = di.find_next(a)) {
                Bitset lower = dj & pip.inconsistent_with(a);
                if (a == i) lower.reset(j);
                if (lower.any()) minimal = false;
            }
            if (minimal) out.emplace_back(i, j);
        }
    }
    return out;
}

}  // namespace armcfg
