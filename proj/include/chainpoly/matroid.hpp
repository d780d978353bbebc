#pragma once

#include "chainpoly/lattices.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chainpoly {

// A matroid given by its bases over ground set {0, ..., ground-1}, each
// basis a bitmask. Rank queries are memoized; closure is built on rank.
class Matroid {
  public:
    Matroid(int ground, std::vector<std::uint32_t> bases, std::string name = "");

    int ground() const { return ground_; }
    int rank() const { return rank_; }
    const std::vector<std::uint32_t>& bases() const { return bases_; }
    const std::string& name() const { return name_; }

    int rank_of(std::uint32_t subset) const;
    std::uint32_t closure(std::uint32_t subset) const;

  private:
    int ground_;
    int rank_;
    std::vector<std::uint32_t> bases_;
    std::string name_;
    mutable std::vector<std::int8_t> rank_cache_;
};

struct ExchangeViolation {
    std::uint32_t basis_a = 0;
    std::uint32_t basis_b = 0;
    int element = -1;  // x in A \ B without a valid replacement
};

// Basis-exchange axiom by brute force; nullopt when it holds.
std::optional<ExchangeViolation> verify_exchange(const Matroid& m);

Matroid uniform_matroid(int m, int r, std::string name = "");

// New ground element contained in every basis.
Matroid add_coloop(const Matroid& m);

struct FlatLattice {
    Graded graded;
    std::vector<std::uint32_t> flat_sets;  // per lattice element
};

// Flats enumerated rank by rank through the closure operator, ordered by
// inclusion. Verifies atomicity and semimodularity and throws
// errc::internal with a witness if either fails.
FlatLattice flats_lattice(const Matroid& m, bool verify_geometric = true);

// All simple matroids on exactly `ground` elements up to isomorphism, every
// rank, by exhaustive generation over basis families. Intended for small
// ground sets (<= 6; the search is exponential in C(m, r)).
std::vector<Matroid> enumerate_simple_matroids(int ground);

// Named 7- and 8-element matroids for spot checks beyond the enumerated
// range: the Fano and non-Fano planes, U_{7,3}, the binary affine cube
// AG(3,2), and U_{8,4}.
std::vector<Matroid> spot_matroids();

}  // namespace chainpoly
