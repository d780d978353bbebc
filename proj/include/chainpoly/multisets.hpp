#pragma once

#include "chainpoly/polynomial.hpp"

#include <functional>
#include <vector>

namespace chainpoly {

// The word multisets behind the flag h-vectors of the partition lattices:
// kind A words have length n-1 with the j-th factor holding j+1-i copies of
// each i in [j]; kind B words have length n with 2k-2i+1 copies of i in the
// k-th factor. The starred kinds are the reversal views used in the
// bijective proofs; signed words carry every sign pattern over kind A.
enum class WordKind { A, B, AStar, BStar, ASigned };

struct MultisetCaps {
    int stream_a = 8;     // full streams of A / AStar / ASigned
    int stream_b = 7;     // full streams of B / BStar
    int recurrence = 14;  // descent_h / hk_recurrence
    bool override_caps = false;
};

struct WordMultiset {
    WordKind kind = WordKind::A;
    int n = 0;
    // Per position: (value, multiplicity), values ascending.
    std::vector<std::vector<std::pair<int, Int>>> factors;

    static WordMultiset make(WordKind kind, int n, const MultisetCaps& caps = {});
    int length() const { return static_cast<int>(factors.size()); }
    // Total multiplicity; the signed kind counts every sign pattern.
    Int total() const;
};

// Streams each distinct word with its multiplicity. For ASigned the words
// carry signs and the multiplicity is that of the underlying unsigned word.
void for_each_word(const WordMultiset& ms,
                   const std::function<void(const std::vector<int>&, const Int&)>& fn);

// Weak descent set {i : w_i >= w_{i+1}} as a bitmask (bit i-1 <-> i).
unsigned weak_descent_mask(const std::vector<int>& w);

// Sum of x^{des} over the multiset; for kinds A and B this equals the
// h-polynomial of the matching partition lattice and is computed by the
// h_{n,k} recurrence rather than by streaming.
Polynomial descent_h(WordKind kind, int n, const MultisetCaps& caps = {});

// The polynomials h_{n,k} (words with last letter k), ordered by descending
// k: (h_{n,n-1}, ..., h_{n,1}) for kind A, (h_{n,n}, ..., h_{n,1}) for kind
// B. The sequence is interlacing and sums to descent_h.
std::vector<Polynomial> hk_recurrence(WordKind kind, int n, const MultisetCaps& caps = {});

// Checks beta_{Pi_n}(S) = #{sigma in A_n : Des(sigma) = n-1-S} (type A) or
// beta_{Pi^B_n}(S) = #{sigma in B_n : Des(sigma) = n-S} (type B) for every
// subset, against the rank-selection flag vector.
bool beta_match(WordKind kind, int n);

// Left peaks: descents i with i-1 an ascent or i = 1.
int lpeak_word(const std::vector<int>& w);
// Set version: elements i of S with i-1 not in S; agrees with lpeak_word
// when S is the descent set.
int lpeak_set(unsigned mask, int n);

// Type B descents of a signed word with the sentinel tau_0 = 0: positions
// i >= 0 with tau_i > tau_{i+1} or tau_i = tau_{i+1} > 0.
int edes_b(const std::vector<int>& signed_word);

// Checks sum over sign patterns of x^{edes_B} against
// (4x)^{lpeak} (1+x)^{len-2 lpeak} for one unsigned word.
bool per_word_identity(const std::vector<int>& word);

// Sum of x^{edes_B} over all signed words of A^pm_n.
Polynomial signed_edesb_h(int n, const MultisetCaps& caps = {});

// 4^i times the number of words of A_n with lpeak = i (with multiplicity).
std::vector<Int> lpeak_gamma(int n, const MultisetCaps& caps = {});

}  // namespace chainpoly
