#pragma once

#include "chainpoly/poset.hpp"

#include <cstdint>
#include <vector>

namespace chainpoly {

enum class Family {
    generic,
    boolean_family,
    subspace,
    partition_a,
    partition_b,
    partition_d,
    uniform,
    near_pencil,
    simplex,
    cube,
};

// Which blocks merged along a cover of a partition lattice; block indices
// are 1-based positions in the min-sorted block list of the lower element.
// The edge labelings and the psi words are read off from this.
struct CoverInfo {
    enum Kind : std::uint8_t {
        merge_pos,   // type A merge, or type B merge of B_i with B_j
        merge_neg,   // type B merge of B_i with -B_j
        merge_zero,  // type B merge of B_j into the zero block
    };
    Kind kind = merge_pos;
    int i = 0;
    int j = 0;
};

struct BuiltLattice {
    Graded graded;
    Family family = Family::generic;
    int n = 0;
    int q = 0;
    int m = 0;
    // Aligned with graded.poset.covers() for the type A/B partition
    // lattices; empty otherwise.
    std::vector<CoverInfo> cover_info;
    // Per element: minima of its blocks in sorted order (absolute values in
    // type B, zero block excluded). Used by the labelings.
    std::vector<std::vector<int>> block_mins;
};

// Default resource caps; partition_lattice_b(7) already has 28640 elements.
struct LatticeCaps {
    int partition_a = 9;
    int partition_bd = 6;
    int subspace_elements = 20000;
    bool override_caps = false;
};

BuiltLattice boolean_lattice(int n);
// Subspaces of F_q^n via reduced row-echelon canonical forms; q prime <= 5
// or q = 4 through an explicit GF(4) table.
BuiltLattice subspace_lattice(int n, int q, const LatticeCaps& caps = {});
BuiltLattice partition_lattice(int n, const LatticeCaps& caps = {});
BuiltLattice partition_lattice_b(int n, const LatticeCaps& caps = {});
BuiltLattice partition_lattice_d(int n, const LatticeCaps& caps = {});
BuiltLattice uniform_flats(int m, int n);
// Pyr^{n-2} of the rank-two uniform lattice on m-n+2 elements.
BuiltLattice near_pencil_flats(int m, int n);
BuiltLattice simplex_face_lattice(int n);
BuiltLattice cube_face_lattice(int n);

// rho(x v y) + rho(x ^ y) <= rho(x) + rho(y) over all pairs, using joins and
// meets from the order relation; returns a witness pair on failure.
bool check_semimodular(const Graded& g, std::pair<int, int>* witness = nullptr);
// Every element is a join of atoms.
bool check_atomic(const Graded& g, int* witness = nullptr);

}  // namespace chainpoly
