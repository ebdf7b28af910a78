#include "armcfg/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "armcfg/errors.hpp"

namespace armcfg {

int ExtendedTableau::finite_length() const {
    int m = 0;
    while (m < static_cast<int>(values.size()) && values[static_cast<std::size_t>(m)] != kInfinity) ++m;
    return m;
}

namespace {

// Smallest label edge j may carry given labels 1..j-1 (1-based j).
int label_floor(const GraphPath& p, const std::vector<int>& labels, int j) {
    int lo = j > 1 ? labels[static_cast<std::size_t>(j - 2)] : 0;
    for (int i = 1; i < j; ++i)
        if (p.at(i - 1) == p.at(j)) lo = std::max(lo, labels[static_cast<std::size_t>(i - 1)] + 1);
    return lo;
}

}  // namespace

bool is_tableau(const Arm& arm, const GraphPath& p, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != p.length()) return false;
    for (int j = 1; j <= p.length(); ++j) {
        const int l = labels[static_cast<std::size_t>(j - 1)];
        if (l < 0 || l == kInfinity) return false;
        if (l < label_floor(p, labels, j)) return false;
    }
    if (p.empty()) return true;
    return static_cast<long long>(labels.back()) + p.length() <= arm.length();
}

bool is_tableau(const Arm& arm, const PathTableau& t) { return is_tableau(arm, t.path, t.labels); }

PathTableau tau(const IndexedPath& u) {
    const auto dec = suffix_decomposition(u.path);
    PathTableau t{u.path, {}};
    for (int r = 1; r <= u.path.length(); ++r) t.labels.push_back(dec.d(r) + u.index - 1);
    return t;
}

IndexedPath tight_index(const PathTableau& t) {
    if (t.path.empty()) throw InputError("the go-nowhere tableau has no tight index");
    return {t.path, t.labels.back() - suffix_decomposition(t.path).blocks() + 1};
}

bool is_tight(const PathTableau& t) { return tau(tight_index(t)) == t; }

ExtendedTableau extend(const PathTableau& t, const GraphPath& q) {
    if (!is_prefix(t.path, q)) throw InputError("tableau path is not a prefix of the spine");
    ExtendedTableau u{q, t.labels};
    u.values.resize(static_cast<std::size_t>(q.length()), kInfinity);
    return u;
}

PathTableau truncate(const ExtendedTableau& u) {
    const int m = u.finite_length();
    return {u.spine.prefix(m), {u.values.begin(), u.values.begin() + m}};
}

bool is_extended_tableau(const Arm& arm, const ExtendedTableau& u) {
    if (static_cast<int>(u.values.size()) != u.spine.length()) return false;
    const int m = u.finite_length();
    for (int i = m; i < u.spine.length(); ++i)
        if (u.values[static_cast<std::size_t>(i)] != kInfinity) return false;
    // Every finite prefix is a tableau iff the longest one is.
    return is_tableau(arm, truncate(u));
}

bool ext_leq(const ExtendedTableau& u, const ExtendedTableau& v) {
    if (u.spine != v.spine) throw InputError("extended tableaux on different spines");
    for (std::size_t i = 0; i < u.values.size(); ++i)
        if (u.values[i] < v.values[i]) return false;
    return true;
}

ExtendedTableau ext_meet(const ExtendedTableau& u, const ExtendedTableau& v) {
    if (u.spine != v.spine) throw InputError("extended tableaux on different spines");
    ExtendedTableau out = u;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = std::max(u.values[i], v.values[i]);
    return out;
}

ExtendedTableau ext_join(const ExtendedTableau& u, const ExtendedTableau& v) {
    if (u.spine != v.spine) throw InputError("extended tableaux on different spines");
    ExtendedTableau out = u;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = std::min(u.values[i], v.values[i]);
    return out;
}

std::string format_labels(const std::vector<int>& labels) {
    std::string s = "(";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) s += ",";
        s += labels[i] == kInfinity ? "inf" : std::to_string(labels[i]);
    }
    return s + ")";
}

std::string format_tableau(const Graph& g, const PathTableau& t) {
    return format_path(g, t.path) + " " + format_labels(t.labels);
}

namespace {

void label_along(const Arm& arm, const GraphPath& p, int cap, std::vector<int>& labels,
                 std::vector<PathTableau>& out) {
    const int j = static_cast<int>(labels.size()) + 1;
    if (j > p.length()) {
        out.push_back({p, labels});
        return;
    }
    for (int l = label_floor(p, labels, j); l <= cap; ++l) {
        labels.push_back(l);
        label_along(arm, p, cap, labels, out);
        labels.pop_back();
    }
}

struct TableauWalk {
    const Arm& arm;
    std::size_t limit;
    std::vector<Vertex> walk;
    std::vector<int> labels;
    std::vector<PathTableau> out;

    void emit() {
        if (out.size() >= limit) throw GuardExceeded("tableau enumeration", out.size() + 1, limit);
        out.push_back({GraphPath(walk), labels});
    }

    // Prefixes of tableaux are tableaux, and L(i) + i <= l holds along the
    // way, so the search can stop as soon as that fails.
    void grow() {
        emit();
        const int j = static_cast<int>(labels.size()) + 1;
        if (j > arm.length()) return;
        for (Vertex w : arm.graph().neighbours(walk.back())) {
            walk.push_back(w);
            GraphPath p(walk);
            for (int l = label_floor(p, labels, j); l + j <= arm.length(); ++l) {
                labels.push_back(l);
                grow();
                labels.pop_back();
            }
            walk.pop_back();
        }
    }
};

}  // namespace

std::vector<PathTableau> enumerate_tableaux(const Arm& arm, std::size_t limit) {
    TableauWalk w{arm, limit, {arm.base()}, {}, {}};
    w.grow();
    // Depth-first emission interleaves paths; restore the documented order.
    std::sort(w.out.begin(), w.out.end(), [](const PathTableau& a, const PathTableau& b) {
        if (a.path != b.path) return a.path < b.path;
        return a.labels < b.labels;
    });
    return std::move(w.out);
}

std::vector<PathTableau> tableaux_on_path(const Arm& arm, const GraphPath& p) {
    std::vector<PathTableau> out;
    if (p.length() > arm.length()) return out;
    std::vector<int> labels;
    label_along(arm, p, arm.length() - p.length(), labels, out);
    return out;
}

ExtendedLattice build_extended_lattice(const Arm& arm, const GraphPath& q, std::size_t limit) {
    std::vector<ExtendedTableau> elems;
    for (int m = 0; m <= q.length(); ++m) {
        for (const auto& t : tableaux_on_path(arm, q.prefix(m))) {
            if (elems.size() >= limit)
                throw GuardExceeded("extended tableau lattice", elems.size() + 1, limit);
            elems.push_back(extend(t, q));
        }
    }

    std::map<ExtendedTableau, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

    const std::size_t n = elems.size();
    std::vector<Bitset> leq(n, Bitset(n));
    FiniteLattice::Table meet(n, std::vector<std::size_t>(n));
    FiniteLattice::Table join(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(format_labels(elems[i].values));
        for (std::size_t j = 0; j < n; ++j) {
            if (ext_leq(elems[i], elems[j])) leq[i].set(j);
            auto m = index.find(ext_meet(elems[i], elems[j]));
            auto s = index.find(ext_join(elems[i], elems[j]));
            if (m == index.end() || s == index.end())
                throw std::logic_error("extended tableaux not closed under meet/join: " + labels.back() +
                                       ", " + format_labels(elems[j].values));
            meet[i][j] = m->second;
            join[i][j] = s->second;
        }
    }
    return {std::move(elems), FiniteLattice(std::move(leq), std::move(meet), std::move(join), std::move(labels))};
}

CheckReport check_poset_iso(const Arm& arm, const GraphPath& q, std::size_t limit) {
    const std::string check = "poset-iso";
    const std::string where = " on spine " + format_path(arm.graph(), q);
    auto lat = build_extended_lattice(arm, q, limit);
    auto J = join_irreducibles(lat.lattice);

    std::vector<IndexedPath> dom;
    for (int k = 1; k <= q.length(); ++k) {
        const auto p = q.prefix(k);
        for (int a = 0; a <= max_index(arm.length(), p); ++a) dom.push_back({p, a});
    }

    std::map<ExtendedTableau, std::size_t> index;
    for (std::size_t i = 0; i < lat.elements.size(); ++i) index.emplace(lat.elements[i], i);

    std::vector<std::size_t> image;
    for (const auto& u : dom) {
        const auto t = tau(u);
        if (!is_tableau(arm, t))
            return CheckReport::fail(check, "tau" + format_indexed_path(arm.graph(), u) +
                                                " is not a tableau" + where);
        image.push_back(index.at(extend(t, q)));
    }

    auto sorted_image = image;
    std::sort(sorted_image.begin(), sorted_image.end());
    if (std::adjacent_find(sorted_image.begin(), sorted_image.end()) != sorted_image.end())
        return CheckReport::fail(check, "map is not injective" + where);
    std::sort(J.begin(), J.end());
    if (sorted_image != J)
        return CheckReport::fail(check, "image has " + std::to_string(image.size()) + " elements, J has " +
                                            std::to_string(J.size()) + where);

    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = 0; j < dom.size(); ++j)
            if (ip_leq(dom[i], dom[j]) != lat.lattice.leq(image[i], image[j]))
                return CheckReport::fail(check, "order mismatch at " +
                                                    format_indexed_path(arm.graph(), dom[i]) + ", " +
                                                    format_indexed_path(arm.graph(), dom[j]) + where);
    return CheckReport::pass(check, std::to_string(dom.size()) + " elements" + where);
}

}  // namespace armcfg
