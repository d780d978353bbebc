#pragma once

#include "chainpoly/polynomial.hpp"

#include <optional>
#include <vector>

namespace chainpoly {

// Isolating interval for one distinct real root. Either exact (lo == hi, a
// rational root) or an open interval (lo, hi) whose endpoints are not roots
// and which contains exactly one distinct root.
struct RootInterval {
    Rat lo;
    Rat hi;
    int multiplicity = 1;
    bool exact = false;
};

// Disjoint isolating intervals for all distinct real roots, sorted
// ascending, with multiplicities from the squarefree decomposition.
// Refinable to any requested rational width.
class RootIsolation {
  public:
    RootIsolation(Polynomial squarefree, std::vector<RootInterval> intervals)
        : squarefree_(std::move(squarefree)), intervals_(std::move(intervals)) {}

    const std::vector<RootInterval>& intervals() const { return intervals_; }
    Int total_multiplicity() const;

    void refine_to_width(const Rat& width);

  private:
    void refine_once(RootInterval& iv);
    friend RootIsolation isolate_roots(const Polynomial&);
    Polynomial squarefree_;
    std::vector<RootInterval> intervals_;
};

// Number of distinct real roots of p in (lo, hi]; nullopt bounds mean
// -infinity / +infinity. Rejects the zero polynomial.
long sturm_count(const Polynomial& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi);

// True iff p == 0 or all complex roots of p are real.
bool is_real_rooted(const Polynomial& p);

RootIsolation isolate_roots(const Polynomial& p);

// Weak root alternation ... <= a2 <= b2 <= a1 <= b1 between the root
// multisets of f and g, both required real-rooted. The zero polynomial
// interlaces and is interlaced by every real-rooted polynomial. For nonzero
// f, g the alternation forces deg g in {deg f, deg f + 1}.
bool interlaces(const Polynomial& f, const Polynomial& g);

// f_i interlaces f_j for all i < j.
bool is_interlacing_sequence(const std::vector<Polynomial>& fs);

// g_k = x * sum_{i<k} f_i + sum_{i>=k} f_i for k = 0..m+1. Preserves the
// interlacing property for interlacing inputs with positive leading
// coefficients.
std::vector<Polynomial> lemma_combine(const std::vector<Polynomial>& fs);

struct GammaResult {
    bool symmetric = false;
    int bad_index = -1;  // witness i with a_i != a_{n-i} when asymmetric
    std::vector<Rat> gamma;
};

// Expansion of p in the basis x^i (1+x)^{n-2i}, defined when p is symmetric
// with center n/2.
GammaResult gamma_decompose(const Polynomial& p, int n);

// Inverse of gamma_decompose: sum gamma_i x^i (1+x)^{n-2i}.
Polynomial gamma_expand(const std::vector<Rat>& gamma, int n);

}  // namespace chainpoly
