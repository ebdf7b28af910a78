// One PASS/FAIL line per acceptance criterion. Exit status is non-zero if
// any criterion fails other than in its recorded known way.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "armcfg/verify.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace armcfg;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::size_t kSuiteNodeLimit = 20000;
constexpr std::size_t kSuitePipLimit = 100000;
constexpr std::size_t kPairLimit = 3000;
constexpr int kMaxLength = 5;
constexpr int kSpineMax = 4;
constexpr double kDiameterSeconds = 60.0;
constexpr double kDistanceSeconds = 600.0;

int failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << " (" << detail << ")\n";
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// First problem found, or empty.
struct Problems {
    std::string first;
    void add(const std::string& s) {
        if (first.empty()) first = s;
    }
    bool ok() const { return first.empty(); }
};

void criterion1() {
    const auto arm = suite::desk()[0].arm(5);
    auto t0 = Clock::now();
    auto bfs = diameter(arm, DiameterMode::ExactBfs, DistanceOracle::Bfs);
    const double secs = seconds_since(t0);
    auto formula = diameter(arm, DiameterMode::ExactFormula);
    bool ok = bfs.exact == 24 && secs < kDiameterSeconds && formula.exact == 24 && formula.witness.has_value();
    std::size_t replayed = 0;
    if (formula.witness) {
        auto plan = plan_moves(arm, formula.witness->first, formula.witness->second);
        replayed = plan.moves.size();
        ok = ok && replayed == 24 && validate_plan(arm, plan).passed &&
             apply_moves(arm, plan.source, plan.moves) == plan.target;
    }
    std::ostringstream d;
    d << "exact-bfs " << (bfs.exact ? *bfs.exact : -1) << " in " << secs << " s, exact-formula "
      << (formula.exact ? *formula.exact : -1) << ", witness plan " << replayed << " moves";
    report(1, "diameter of C3 with arm length 5 is 24", ok, d.str());
}

void criterion2() {
    Problems pr;
    auto g = suite::figure();
    const auto p = make_path(*g, std::vector<std::string>{"b", "a", "d", "a", "c", "b", "a"});

    // (a)
    if (suffix_decomposition(p).block_of != std::vector<int>{1, 1, 2, 2, 3, 3}) pr.add("(a) block indices");
    // (b)
    Arm arm10(g, 0, 10);
    if (tau({p, 2}).labels != std::vector<int>{2, 2, 3, 3, 4, 4}) pr.add("(b) tau labels");
    PathTableau loose{p, {2, 2, 3, 3, 3, 4}};
    if (!is_tableau(arm10, loose) || is_tight(loose)) pr.add("(b) valid-but-not-tight");
    // (c)
    Configuration x6;
    for (auto [v, h] : std::vector<std::pair<const char*, int>>{{"b", 0}, {"a", 0}, {"a", 1}, {"d", 1}, {"d", 2},
                                                                 {"a", 2}, {"a", 3}, {"c", 3}, {"b", 3}, {"b", 4},
                                                                 {"a", 4}})
        x6.cells.push_back({g->vertex(v), h});
    auto t6 = config_to_tableau(arm10, x6);
    if (t6.path != p || t6.labels != std::vector<int>{0, 1, 2, 3, 3, 4}) pr.add("(c) f labels");
    // (d)
    if (pip_coordinates(arm10, x6).index != std::vector<int>{0, 1, 1, 2, 2, 2}) pr.add("(d) generator indices");
    // (e)
    Arm arm9(g, 0, 9);
    auto x3 = tableau_to_config(arm9, {p, {0, 1, 2, 2, 2, 3}});
    auto moves = legal_moves(arm9, x3);
    std::vector<std::string> names;
    for (const auto& m : moves) names.push_back(format_move(*g, m));
    if (names != std::vector<std::string>{"C+(b,a,0)", "C-(a,d,0)", "C+(c,b,2)", "T+(b,a,3)"}) pr.add("(e) legal moves");
    else
        for (unsigned mask = 0; mask < 16; ++mask) {
            std::vector<Move> A;
            for (unsigned i = 0; i < 4; ++i)
                if (mask >> i & 1) A.push_back(moves[i]);
            if (is_commutative_set(arm9, x3, A) != ((mask & 3u) != 3u)) pr.add("(e) commutative subset " + std::to_string(mask));
        }
    report(2, "worked-figure golden values (a)-(e)", pr.ok(), pr.ok() ? "exact match" : pr.first);
}

void criterion3() {
    Problems pr;
    int instances = 0, skipped = 0;
    for (const auto& m : suite::desk())
        for (int ell = 0; ell <= kMaxLength; ++ell) {
            const auto arm = m.arm(ell);
            const auto tag = m.name + " l=" + std::to_string(ell) + ": ";
            auto configs = oracle::all_configurations(*m.graph, arm.base(), ell);
            if (configs.size() > kSuiteNodeLimit) {
                ++skipped;
                continue;
            }
            ++instances;
            auto pip = build_ip(arm);
            auto tabs = enumerate_tableaux(arm, kSuiteNodeLimit);
            auto lowers = enumerate_consistent_lower_sets(pip, kSuitePipLimit);
            if (tabs.size() != configs.size() || lowers.size() != configs.size())
                pr.add(tag + "counts " + std::to_string(configs.size()) + "/" + std::to_string(tabs.size()) + "/" +
                       std::to_string(lowers.size()));
            std::set<Bitset> images;
            for (const auto& x : configs) {
                if (tableau_to_config(arm, config_to_tableau(arm, x)) != x) pr.add(tag + "f round trip");
                auto mu = sigma_lower_set(pip, x);
                if (sigma_inverse(pip, mu) != x) pr.add(tag + "Sigma round trip");
                images.insert(mu.members);
            }
            if (images.size() != configs.size()) pr.add(tag + "Sigma not injective");
            for (const auto& t : tabs)
                if (config_to_tableau(arm, tableau_to_config(arm, t)) != t) pr.add(tag + "f inverse round trip");
            if (auto r = verify_pip_axioms(pip.relation()); !r) pr.add(tag + r.detail);

            auto spines = enumerate_gb_paths(*m.graph, arm.base(), [](int len, int) { return len <= kSpineMax; });
            spines.insert(spines.begin(), GraphPath::empty_at(arm.base()));
            for (const auto& q : spines) {
                if (auto r = check_poset_iso(arm, q); !r) pr.add(tag + r.detail);
                if (auto r = birkhoff_verify(build_extended_lattice(arm, q).lattice).report; !r)
                    pr.add(tag + r.detail);
            }
        }
    report(3, "bijections, PIP axioms, poset isomorphism, Birkhoff", pr.ok(),
           pr.ok() ? std::to_string(instances) + " instances, " + std::to_string(skipped) + " skipped" : pr.first);
}

void criterion4() {
    Problems pr;
    int instances = 0;
    std::size_t local_checks = 0;
    int c3_dim = -1;
    for (const auto& m : suite::desk())
        for (int ell = 0; ell <= kMaxLength; ++ell) {
            const auto arm = m.arm(ell);
            const auto tag = m.name + " l=" + std::to_string(ell) + ": ";
            auto tg = build_transition_graph(arm, kSuiteNodeLimit);
            ++instances;
            auto pip = build_ip(arm);
            auto S = build_S(arm, tg);
            auto X = build_X(pip, enumerate_consistent_lower_sets(pip, kSuitePipLimit));
            if (S.f_vector() != X.f_vector()) pr.add(tag + "f-vectors differ");
            if (m.name == "C3" && ell == 5) c3_dim = S.dimension();

            // Sigma(Sx) = Sigma(x) minus chi(S) for every set of upward moves at x.
            for (const auto& x : tg.nodes) {
                auto up = upward_moves(arm, x);
                auto sx = sigma_lower_set(pip, x).members;
                for (std::size_t mask = 0; mask < (std::size_t{1} << up.size()); ++mask) {
                    std::vector<Move> A;
                    auto expect = sx;
                    for (std::size_t b = 0; b < up.size(); ++b)
                        if (mask >> b & 1) {
                            A.push_back(up[b]);
                            auto eff = move_effect(arm, x, up[b]);
                            auto idx = pip.find(eff.element);
                            if (!idx || !eff.removes) {
                                pr.add(tag + "chi outside the PIP");
                                continue;
                            }
                            expect.reset(*idx);
                        }
                    if (A.size() <= kCommutativeLimit && !is_commutative_set(arm, x, A)) pr.add(tag + "upward set not commutative");
                    auto y = apply_moves(arm, x, A);
                    if (sigma_lower_set(pip, y).members != expect) pr.add(tag + "Sigma(Sx) != Sigma(x) minus chi(S)");
                    ++local_checks;
                }
            }
        }
    if (c3_dim != 3) pr.add("C3 l=5 dimension " + std::to_string(c3_dim));
    report(4, "S and X agree; chi local check; C3 l=5 has dimension 3", pr.ok(),
           pr.ok() ? std::to_string(instances) + " instances, " + std::to_string(local_checks) + " move sets" : pr.first);
}

void criterion5() {
    Problems pr;
    int instances = 0;
    auto t0 = Clock::now();
    for (const auto& m : suite::desk())
        for (int ell = 0; ell <= kMaxLength; ++ell) {
            const auto arm = m.arm(ell);
            auto tg = build_transition_graph(arm, kSuiteNodeLimit);
            if (tg.size() > kPairLimit) continue;
            ++instances;
            for (const auto& r : check_distances(arm, tg, build_ip(arm)))
                if (!r) pr.add(m.name + " l=" + std::to_string(ell) + ": " + r.name + ": " + r.detail);
        }
    const double secs = seconds_since(t0);
    if (secs >= kDistanceSeconds) pr.add("took " + std::to_string(secs) + " s");
    std::ostringstream d;
    d << instances << " instances in " << secs << " s";
    report(5, "formula = BFS = |Sigma xor Sigma|; plans replay; rounds = cube distance", pr.ok(),
           pr.ok() ? d.str() : pr.first);
}

// The closed form overshoots the defining sum for some n >= 8 (three
// vertices in nine parts: 4 against 3). That failure is reported as it is;
// it counts as known only while it keeps exactly this shape.
void criterion6() {
    const std::vector<long long> quarter{0, 0, 1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36, 42, 49, 56, 64, 72, 81, 90, 100};
    std::string first_gap;
    int gaps = 0;
    Problems unexpected;
    for (int ell = 0; ell <= 300; ++ell) {
        for (int n = 1; n <= 25; ++n) {
            const auto closed = omega(ell, n);
            const auto sum = oracle::omega_by_sum(ell, n);
            const auto at = " at l=" + std::to_string(ell) + " n=" + std::to_string(n);
            if (sum != oracle::turan_by_pairs(ell + 1, n)) unexpected.add("sum form differs from Turan edges" + at);
            if (sum != omega_sum(ell, n)) unexpected.add("library sum form differs" + at);
            if (closed == sum) continue;
            if (closed < sum || n < 8) unexpected.add("closed form " + std::to_string(closed) + " vs sum " +
                                                      std::to_string(sum) + at);
            if (gaps++ == 0) first_gap = "closed form " + std::to_string(closed) + " vs sum and Turan " +
                                         std::to_string(sum) + at;
        }
        const int k = ell + 1;
        const long long q = k < static_cast<int>(quarter.size()) ? quarter[k] : static_cast<long long>(k) * k / 4;
        if (omega(ell, 2) != q) unexpected.add("quarter-squares at l=" + std::to_string(ell));
    }
    const std::string what = "omega closed form = sum form = Turan edges; n=2 gives quarter-squares";
    if (!unexpected.ok()) {
        report(6, what, false, unexpected.first);
    } else if (gaps > 0) {
        std::cout << "FAIL criterion 6: " << what << " (" << gaps << " of 7525 pairs disagree, all with n >= 8, first "
                  << first_gap << "; sum form = Turan edges and quarter-squares hold everywhere) [known deviation]\n";
    } else {
        report(6, what, true, "l <= 300, n in [1,25]");
    }
}

void criterion7() {
    Problems pr;
    bool strict_end = false;
    std::ostringstream d;
    for (const auto& m : suite::desk()) {
        d << m.name << ":";
        for (int ell = 0; ell <= kMaxLength; ++ell) {
            auto rep = diameter(m.arm(ell), DiameterMode::ExactBfs, DistanceOracle::Formula, kSuiteNodeLimit);
            const long long exact = *rep.exact;
            d << " " << exact << "/" << rep.bound;
            if (exact > rep.bound) pr.add(m.name + " exceeds the bound at l=" + std::to_string(ell));
            const bool must_equal = m.name == "C3" || m.name == "C4" || m.name == "K4";
            if (must_equal && exact != rep.bound) pr.add(m.name + " below the bound at l=" + std::to_string(ell));
            if (m.name == "A3-end" && exact < rep.bound) strict_end = true;
        }
        d << "; ";
    }
    if (!strict_end) pr.add("A3 with endpoint base never strictly below the bound");
    report(7, "diameter <= 2 omega; equality on C3, C4, K4; strict on A3 from an endpoint", pr.ok(),
           pr.ok() ? d.str() : pr.first);
}

}  // namespace

int main() {
    int n = 0;
    for (auto* c : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7}) {
        ++n;
        try {
            c();
        } catch (const std::exception& e) {
            report(n, "unexpected exception", false, e.what());
        }
    }
    return failures == 0 ? 0 : 1;
}
