#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chainpoly/eulerian.hpp"
#include "chainpoly/lattices.hpp"

using namespace chainpoly;

namespace {

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int pi_a_chains(int n) {  // n! (n-1)! / 2^{n-1}
    Int v = factorial(n) * factorial(n - 1);
    for (int i = 0; i < n - 1; ++i) v /= 2;
    return v;
}

}  // namespace

TEST_CASE("boolean lattice") {
    BuiltLattice b1 = boolean_lattice(1);
    CHECK(b1.graded.size() == 2);
    CHECK(b1.graded.rank_top == 1);

    BuiltLattice b3 = boolean_lattice(3);
    CHECK(h_of_bounded(b3.graded) == eulerian_a(3));
    CHECK(beta_flag(boolean_lattice(4).graded).total() == 24);
    for (int n = 1; n <= 7; ++n)
        CHECK(h_of_bounded(boolean_lattice(n).graded) == eulerian_a(n));
    CHECK_THROWS_AS(boolean_lattice(0), Error);
}

TEST_CASE("subspace lattice") {
    BuiltLattice l22 = subspace_lattice(2, 2);
    CHECK(l22.graded.size() == 5);
    CHECK(maximal_chain_count(l22.graded) == 3);
    CHECK(h_of_bounded(l22.graded) == Polynomial::from_ints({1, 2}));

    CHECK(h_of_bounded(subspace_lattice(3, 2).graded) == Polynomial::from_ints({1, 12, 8}));
    CHECK(subspace_lattice(1, 3).graded.size() == 2);

    SUBCASE("matches the q-Eulerian polynomial") {
        for (auto [n, q] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {2, 4}, {2, 5}, {3, 4}})
            CHECK(h_of_bounded(subspace_lattice(n, q).graded) == eulerian_aq(n, Rat(q)));
    }
    SUBCASE("unsupported field sizes") {
        CHECK_THROWS_AS(subspace_lattice(2, 6), Error);
        CHECK_THROWS_AS(subspace_lattice(2, 7), Error);
    }
}

TEST_CASE("partition lattice") {
    BuiltLattice pi4 = partition_lattice(4);
    CHECK(pi4.graded.size() == 15);
    CHECK(pi4.graded.rank_top == 3);
    CHECK(maximal_chain_count(pi4.graded) == 18);
    CHECK(h_of_bounded(pi4.graded) == Polynomial::from_ints({1, 11, 6}));

    CHECK(h_of_bounded(partition_lattice(3).graded) == Polynomial::from_ints({1, 2}));
    CHECK(h_of_bounded(partition_lattice(5).graded) == Polynomial::from_ints({1, 47, 108, 24}));

    for (int n = 2; n <= 8; ++n)
        CHECK(maximal_chain_count(partition_lattice(n).graded) == pi_a_chains(n));

    CHECK_THROWS_AS(partition_lattice(10), Error);
    LatticeCaps relaxed;
    relaxed.partition_a = 3;
    CHECK_THROWS_AS(partition_lattice(4, relaxed), Error);
    relaxed.override_caps = true;
    CHECK(partition_lattice(4, relaxed).graded.size() == 15);
}

TEST_CASE("type B partition lattice") {
    BuiltLattice b2 = partition_lattice_b(2);
    CHECK(b2.graded.size() == 6);
    CHECK(b2.graded.rank_top == 2);
    CHECK(maximal_chain_count(b2.graded) == 4);
    CHECK(h_of_bounded(b2.graded) == Polynomial::from_ints({1, 3}));

    CHECK(h_of_bounded(partition_lattice_b(3).graded) == Polynomial::from_ints({1, 20, 15}));
    CHECK(h_of_bounded(partition_lattice_b(4).graded) ==
          Polynomial::from_ints({1, 111, 359, 105}));

    for (int n = 1; n <= 5; ++n) {
        Int expected = factorial(n) * factorial(n);
        CHECK(maximal_chain_count(partition_lattice_b(n).graded) == expected);
    }
}

TEST_CASE("type D partition lattice") {
    BuiltLattice d3 = partition_lattice_d(3);
    CHECK(h_of_bounded(d3.graded) == Polynomial::from_ints({1, 11, 6}));
    // D_3 = A_3: the lattice is the partition lattice on four elements.
    CHECK(graded_isomorphic(d3.graded, partition_lattice(4).graded));

    CHECK(h_of_bounded(partition_lattice_d(2).graded) == Polynomial::from_ints({1, 1}));
    CHECK(h_of_bounded(partition_lattice_d(4).graded) == Polynomial::from_ints({1, 67, 175, 45}));

    for (int n = 2; n <= 5; ++n) {
        Int expected = factorial(n) * factorial(n) / 2;
        CHECK(maximal_chain_count(partition_lattice_d(n).graded) == expected);
    }
    CHECK_THROWS_AS(partition_lattice_d(1), Error);
}

TEST_CASE("uniform and near-pencil flats") {
    CHECK(graded_isomorphic(uniform_flats(4, 4).graded, boolean_lattice(4).graded));
    CHECK(uniform_flats(4, 3).graded.rank_top == 3);
    CHECK(h_of_bounded(near_pencil_flats(4, 3).graded) == Polynomial::from_ints({1, 6, 2}));
    CHECK(graded_isomorphic(near_pencil_flats(5, 2).graded, uniform_flats(5, 2).graded));
    CHECK_THROWS_AS(uniform_flats(3, 1), Error);
    CHECK_THROWS_AS(uniform_flats(3, 4), Error);
}

TEST_CASE("face lattices of simplices and cubes") {
    CHECK(h_of_bounded(simplex_face_lattice(2).graded) == Polynomial::from_ints({1, 4, 1}));
    CHECK(simplex_face_lattice(3).graded.size() == 16);

    BuiltLattice c2 = cube_face_lattice(2);
    CHECK(c2.graded.size() == 10);
    CHECK(h_of_bounded(c2.graded) == eulerian_b(2));
    BuiltLattice c3 = cube_face_lattice(3);
    CHECK(c3.graded.size() == 28);
    CHECK(h_of_bounded(c3.graded) == eulerian_b(3));
    CHECK(h_of_bounded(cube_face_lattice(4).graded) == eulerian_b(4));
}

TEST_CASE("geometric lattices are atomic and semimodular") {
    BuiltLattice pi4 = partition_lattice(4);
    BuiltLattice pib3 = partition_lattice_b(3);
    for (const BuiltLattice* l : {&pi4, &pib3}) {
        CHECK(check_atomic(l->graded));
        CHECK(check_semimodular(l->graded));
    }
    CHECK(check_atomic(partition_lattice_d(3).graded));
    CHECK(check_semimodular(partition_lattice_d(3).graded));
    CHECK(check_atomic(uniform_flats(5, 3).graded));
    CHECK(check_semimodular(uniform_flats(5, 3).graded));
    CHECK(check_atomic(subspace_lattice(3, 2).graded));
    CHECK(check_semimodular(subspace_lattice(3, 2).graded));
    CHECK(check_atomic(boolean_lattice(4).graded));
    CHECK(check_semimodular(boolean_lattice(4).graded));
    // Cube face lattices are atomic but not semimodular: antipodal vertices
    // join to the whole cube.
    CHECK(check_atomic(cube_face_lattice(2).graded));
    std::pair<int, int> witness;
    CHECK_FALSE(check_semimodular(cube_face_lattice(2).graded, &witness));
}

TEST_CASE("flag totals equal maximal chain counts across families") {
    std::vector<Graded> lattices;
    lattices.push_back(boolean_lattice(4).graded);
    lattices.push_back(subspace_lattice(3, 2).graded);
    lattices.push_back(partition_lattice(5).graded);
    lattices.push_back(partition_lattice_b(3).graded);
    lattices.push_back(partition_lattice_d(3).graded);
    lattices.push_back(uniform_flats(5, 3).graded);
    lattices.push_back(near_pencil_flats(5, 3).graded);
    lattices.push_back(simplex_face_lattice(3).graded);
    lattices.push_back(cube_face_lattice(3).graded);
    for (const Graded& g : lattices) {
        CHECK(beta_flag(g).total() == maximal_chain_count(g));
        CHECK(h_of_bounded(g) == beta_flag(g).h());
    }
}
