#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "armcfg/errors.hpp"
#include "armcfg/lattice.hpp"

using namespace armcfg;

namespace {

std::vector<Bitset> order(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& below) {
    std::vector<Bitset> leq(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) leq[i].set(i);
    for (auto [i, j] : below) leq[i].set(j);
    return leq;
}

}  // namespace

TEST_CASE("boolean square is distributive with two join-irreducibles") {
    // 0 < a, b < 1
    auto lat = FiniteLattice::from_order(order(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}));
    CHECK(lat.bottom() == 0);
    CHECK(lat.join(1, 2) == 3);
    CHECK(lat.meet(1, 2) == 0);
    CHECK(verify_lattice_laws(lat, true).passed);
    CHECK(join_irreducibles(lat) == std::vector<std::size_t>{1, 2});
    auto b = birkhoff_verify(lat);
    CHECK(b.report.passed);
    CHECK(b.report.name == "birkhoff");
}

TEST_CASE("chain") {
    auto lat = FiniteLattice::from_order(order(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(join_irreducibles(lat) == std::vector<std::size_t>{1, 2});
    CHECK(birkhoff_verify(lat).report.passed);
}

TEST_CASE("diamond M3 is not distributive") {
    auto lat = FiniteLattice::from_order(
        order(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}));
    CHECK(verify_lattice_laws(lat, false).passed);
    auto r = verify_lattice_laws(lat, true);
    CHECK_FALSE(r.passed);
    CHECK(r.detail.find("distributivity fails") != std::string::npos);
    CHECK_FALSE(birkhoff_verify(lat).report.passed);
}

TEST_CASE("pentagon N5 is not distributive") {
    // 0 < x < y < 1, 0 < z < 1
    auto lat = FiniteLattice::from_order(
        order(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 4}, {3, 4}}));
    CHECK_FALSE(birkhoff_verify(lat).report.passed);
}

TEST_CASE("a poset without joins is rejected") {
    // two maximal elements
    CHECK_THROWS_AS(FiniteLattice::from_order(order(3, {{0, 1}, {0, 2}})), InputError);
}

TEST_CASE("wrong tables are caught") {
    auto leq = order(3, {{0, 1}, {0, 2}, {1, 2}});
    FiniteLattice::Table meet{{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
    FiniteLattice::Table join{{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
    CHECK(verify_lattice_laws(FiniteLattice(leq, meet, join), true).passed);
    join[1][2] = join[2][1] = 1;
    CHECK_FALSE(verify_lattice_laws(FiniteLattice(leq, meet, join), true).passed);
}
