#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chainpoly/abindex.hpp"
#include "chainpoly/io.hpp"
#include "chainpoly/matroid.hpp"

using namespace chainpoly;

namespace {

const char* u32_text =
    "# rank-2 uniform matroid on three elements\n"
    "ground 3\n"
    "basis 0 1\n"
    "basis 0 2\n"
    "basis 1 2\n";

Matroid k4_graphic() {
    // Edges of K_4: 01, 02, 03, 12, 13, 23 as elements 0..5; bases are the
    // spanning trees (16 of them).
    const int edges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::uint32_t> bases;
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        if (__builtin_popcount(mask) != 3) continue;
        // spanning tree: connects all four vertices
        int parent[4] = {0, 1, 2, 3};
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        int components = 4;
        for (int e = 0; e < 6; ++e) {
            if (!(mask & (1u << e))) continue;
            int a = find(edges[e][0]), b = find(edges[e][1]);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
        if (components == 1) bases.push_back(mask);
    }
    return Matroid(6, std::move(bases), "k4");
}

}  // namespace

TEST_CASE("bases parsing") {
    Matroid u32 = matroid_from_text(u32_text, "u32");
    CHECK(u32.ground() == 3);
    CHECK(u32.rank() == 2);
    CHECK(u32.bases().size() == 3);
    CHECK_FALSE(verify_exchange(u32).has_value());

    SUBCASE("round trip") {
        Matroid again = matroid_from_text(matroid_to_text(u32));
        CHECK(again.bases() == u32.bases());
    }
    SUBCASE("parse errors carry line numbers") {
        CHECK_THROWS_WITH_AS(matroid_from_text("ground 3\nbasis 0 7\n"),
                             doctest::Contains("line 2"), Error);
        CHECK_THROWS_AS(matroid_from_text("basis 0 1\n"), Error);
        CHECK_THROWS_AS(matroid_from_text("ground 3\n"), Error);
        CHECK_THROWS_AS(matroid_from_text("ground 3\nbasis 0 1\nbasis 0\n"), Error);
    }
    SUBCASE("exchange violations are caught with a witness") {
        // {0,1} and {2,3} cannot exchange.
        Matroid bad(4, {0b0011, 0b1100}, "bad");
        auto violation = verify_exchange(bad);
        REQUIRE(violation.has_value());
        CHECK((violation->basis_a == 0b0011 || violation->basis_a == 0b1100));
    }
}

TEST_CASE("rank and closure oracles") {
    Matroid u42 = uniform_matroid(4, 2);
    CHECK(u42.rank_of(0b0001) == 1);
    CHECK(u42.closure(0b0001) == 0b0001);
    CHECK(u42.rank_of(0b0111) == 2);
    CHECK(u42.closure(0b0110) == 0b1111);
    CHECK(u42.rank_of(0) == 0);

    // A coloop lies in every basis and is closed on its own.
    Matroid with_coloop = add_coloop(uniform_matroid(3, 2));
    CHECK(with_coloop.rank() == 3);
    CHECK(with_coloop.closure(0b1000) == 0b1000);
    for (std::uint32_t b : with_coloop.bases()) CHECK((b & 0b1000) != 0);
}

TEST_CASE("flats lattice") {
    SUBCASE("free matroid gives the boolean lattice") {
        FlatLattice fl = flats_lattice(uniform_matroid(4, 4));
        CHECK(graded_isomorphic(fl.graded, boolean_lattice(4).graded));
    }
    SUBCASE("K_4 graphic matroid gives Pi_4") {
        FlatLattice fl = flats_lattice(k4_graphic());
        CHECK(graded_isomorphic(fl.graded, partition_lattice(4).graded));
    }
    SUBCASE("uniform matroids match the direct constructor") {
        for (auto [m, n] : {std::pair{4, 2}, {4, 3}, {5, 3}, {6, 3}, {7, 4}}) {
            FlatLattice fl = flats_lattice(uniform_matroid(m, n));
            CHECK(graded_isomorphic(fl.graded, uniform_flats(m, n).graded));
            CHECK(h_of_bounded(fl.graded) == h_of_bounded(uniform_flats(m, n).graded));
        }
    }
    SUBCASE("flag totals match maximal chains") {
        FlatLattice fl = flats_lattice(k4_graphic());
        CHECK(beta_flag(fl.graded).total() == maximal_chain_count(fl.graded));
    }
}

TEST_CASE("coloops pyramid the lattice of flats") {
    for (auto base : {uniform_matroid(2, 2), uniform_matroid(4, 2), uniform_matroid(4, 3)}) {
        Matroid extended = add_coloop(base);
        FlatLattice before = flats_lattice(base);
        FlatLattice after = flats_lattice(extended);
        CHECK(graded_isomorphic(after.graded, pyramid_poset(before.graded)));
        CHECK(h_of_bounded(after.graded) ==
              pyr_h(h_of_bounded(before.graded), before.graded.rank_top));
    }
    SUBCASE("near-pencil from coloops matches the constructor") {
        Matroid m = uniform_matroid(3, 2);
        for (int step = 0; step < 2; ++step) m = add_coloop(m);
        // rank 4 near-pencil on 5 elements
        CHECK(graded_isomorphic(flats_lattice(m).graded, near_pencil_flats(5, 4).graded));
    }
}

TEST_CASE("revlex adapter") {
    // All-stars encodes the uniform matroid.
    Matroid u42 = matroid_from_revlex(4, 2, "******");
    CHECK(u42.bases() == uniform_matroid(4, 2).bases());
    // First subset in revlex order is {0,1}; knocking it out keeps the rest.
    Matroid almost = matroid_from_revlex(4, 2, "0*****");
    CHECK(almost.bases().size() == 5);
    CHECK(!std::binary_search(almost.bases().begin(), almost.bases().end(),
                              std::uint32_t{0b0011}));
    CHECK_THROWS_AS(matroid_from_revlex(4, 2, "***"), Error);
    CHECK_THROWS_AS(matroid_from_revlex(4, 2, "x*****"), Error);
}

TEST_CASE("coloop-pyramid isomorphism across the whole enumerated range") {
    for (int ground = 2; ground <= 6; ++ground) {
        for (const Matroid& m : enumerate_simple_matroids(ground)) {
            FlatLattice before = flats_lattice(m);
            FlatLattice after = flats_lattice(add_coloop(m));
            CHECK(graded_isomorphic(after.graded, pyramid_poset(before.graded)));
            CHECK(beta_flag(before.graded).total() == maximal_chain_count(before.graded));
        }
    }
}

TEST_CASE("spot matroids are sound") {
    auto spots = spot_matroids();
    REQUIRE(spots.size() == 5);
    for (const Matroid& m : spots) {
        CHECK_FALSE(verify_exchange(m).has_value());
        for (int e = 0; e < m.ground(); ++e) CHECK(m.closure(1u << e) == (1u << e));
    }
    CHECK(spots[0].bases().size() == 28);  // fano: C(7,3) - 7 lines
    CHECK(spots[1].bases().size() == 29);  // nonfano
    CHECK(spots[3].bases().size() == 56);  // ag_3_2: C(8,4) - 14 planes
    // Fano's flats lattice: 7 atoms, 7 lines, rank 3.
    FlatLattice fano = flats_lattice(spots[0]);
    CHECK(fano.graded.rank_top == 3);
    CHECK(fano.graded.by_rank[1].size() == 7);
    CHECK(fano.graded.by_rank[2].size() == 7);
}

TEST_CASE("enumeration of simple matroids") {
    // Counts by ground size: rank-2 simple means every pair independent, so
    // exactly the uniform matroid; the free matroid always shows up.
    auto on3 = enumerate_simple_matroids(3);
    CHECK(on3.size() == 2);  // U_{3,2}, U_{3,3}
    auto on4 = enumerate_simple_matroids(4);
    CHECK(on4.size() == 4);  // U_{4,2}, U_{4,3}, three-point-line + point, U_{4,4}
    auto on5 = enumerate_simple_matroids(5);
    CHECK(on5.size() == 9);
    for (const auto& m : on5) {
        CHECK_FALSE(verify_exchange(m).has_value());
        // simplicity: closure of a point is the point
        for (int e = 0; e < m.ground(); ++e) CHECK(m.closure(1u << e) == (1u << e));
    }
}
