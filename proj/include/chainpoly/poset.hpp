#pragma once

#include "chainpoly/polynomial.hpp"

#include <boost/dynamic_bitset.hpp>

#include <string>
#include <utility>
#include <vector>

namespace chainpoly {

using Bitset = boost::dynamic_bitset<>;

// Finite poset on elements 0..size-1, stored as the cover relation plus the
// derived strict order (transitive closure). Immutable after construction.
class Poset {
  public:
    // Validates acyclicity, closes transitively, and keeps exactly the
    // transitively irreducible input pairs as covers. Input pairs that are
    // not covers after closure are dropped and reported.
    static Poset from_cover_relations(int size, std::vector<std::pair<int, int>> pairs,
                                      std::vector<std::pair<int, int>>* dropped = nullptr);

    int size() const { return size_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    bool less(int a, int b) const { return below_[b].test(a); }
    bool leq(int a, int b) const { return a == b || less(a, b); }
    const Bitset& below(int x) const { return below_[x]; }
    const Bitset& above(int x) const { return above_[x]; }
    const std::vector<int>& up_covers(int x) const { return up_[x]; }
    const std::vector<int>& down_covers(int x) const { return down_[x]; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    Poset dual() const;
    // Subposet on the kept elements (induced order, recomputed covers).
    // keep is a strictly increasing list of old indices; new index i maps to
    // keep[i].
    Poset induced(const std::vector<int>& keep) const;
    // Closed interval [x, y]; throws when x <= y fails.
    Poset interval(int x, int y) const;

    // Chain polynomial: coefficient of x^k counts k-element chains, c_0 = 1.
    Polynomial chain_polynomial() const;
    int longest_chain_size() const;
    // (1-x)^n p(x/(1-x)) with n the largest chain cardinality.
    Polynomial h_polynomial() const;

  private:
    int size_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::vector<Bitset> below_, above_;
    std::vector<std::vector<int>> up_, down_;
    std::vector<std::string> labels_;
};

// A bounded graded poset: unique minimum and maximum, every maximal chain of
// length rank_top, rank rising by one along covers.
struct Graded {
    Poset poset;
    int bottom = 0;
    int top = 0;
    int rank_top = 0;
    std::vector<int> rank;
    std::vector<std::vector<int>> by_rank;

    int size() const { return poset.size(); }
};

// Detects bounds, verifies gradedness, assigns ranks. Throws
// errc::not_bounded / errc::not_graded.
Graded grade(Poset p);

// Proper part L minus its extremes.
Poset remove_extremes(const Graded& g);

// h-polynomial of the proper part; equal to the h-polynomial of L itself,
// of L minus the bottom, and of L minus the top.
Polynomial h_of_bounded(const Graded& g);

// Number of maximal chains of the rank-selected subposet
// {t : rank(t) in S} plus the bounds. S as a bitmask over ranks 1..n-1
// (bit i-1 <-> rank i).
Int alpha_flag(const Graded& g, unsigned subset_mask);

// Flag h-vector: beta over every subset of [n-1], indexed by bitmask.
struct FlagVector {
    int rank_top = 0;
    std::vector<Int> beta;

    Int value(unsigned mask) const { return beta.at(mask); }
    Int total() const;
    Polynomial h() const;
};

FlagVector beta_flag(const Graded& g);

Int maximal_chain_count(const Graded& g);

// Pyr(L) = L x 2-chain.
Graded pyramid_poset(const Graded& g);
// Prism(L): a new minimum below (L minus bottom) x (L_2 minus bottom).
Graded prism_poset(const Graded& g);

// Graded poset isomorphism (rank-preserving); color refinement plus
// backtracking, intended for the small lattices used in cross-checks.
bool graded_isomorphic(const Graded& a, const Graded& b);

}  // namespace chainpoly
