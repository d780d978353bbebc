#pragma once

#include "chainpoly/lattices.hpp"

#include <functional>
#include <optional>

namespace chainpoly {

// An edge labeling of a bounded graded poset; labels aligned with
// host.graded.poset.covers().
struct EdgeLabeling {
    const BuiltLattice* host = nullptr;
    std::vector<int> labels;

    int label_of_cover_index(int idx) const { return labels.at(idx); }
};

// Gessel's labeling of the partition lattice: the larger of the two block
// minima being merged. Labels lie in {2, ..., n}.
EdgeLabeling gessel_labeling(const BuiltLattice& host);

// The type B analogue: the larger of min|B| over the unique merging pair,
// in {1, ..., n}.
EdgeLabeling typeb_labeling(const BuiltLattice& host);

struct StrictRFailure {
    int x = -1;
    int y = -1;
    long increasing_chains = 0;  // count found in [x, y]
};

// Exhaustively checks that every closed interval has exactly one strictly
// increasing maximal chain. Returns the first failing interval, or nullopt
// when the labeling is a strict R-labeling. Exponential in principle; gated
// by an element cap.
std::optional<StrictRFailure> verify_strict_r(const EdgeLabeling& labeling,
                                              int element_cap = 2000);

// beta(S) = number of maximal chains with weak descent set S. Chains are
// streamed by depth-first search; worker > 1 partitions by first cover.
FlagVector flag_from_labeling(const EdgeLabeling& labeling, int workers = 1);

// Maximal chains of g as element sequences bottom..top, lexicographic in
// cover order.
void for_each_maximal_chain(const Graded& g,
                            const std::function<void(const std::vector<int>&)>& fn);

// The word of sorted-position indices of the merged blocks along a maximal
// chain of a type A or B partition lattice.
std::vector<int> psi_word(const BuiltLattice& host, const std::vector<int>& chain);

// Weak descent positions {i : lambda_i >= lambda_{i+1}}, 1-based, of the
// label sequence of a maximal chain.
std::vector<int> descent_set_of_chain(const EdgeLabeling& labeling, const std::vector<int>& chain);

}  // namespace chainpoly
