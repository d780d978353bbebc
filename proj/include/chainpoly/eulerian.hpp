#pragma once

#include "chainpoly/polynomial.hpp"

namespace chainpoly {

// A_n(x) = sum over permutations of [n] of x^des(w).
Polynomial eulerian_a(int n);

// B_n(x) = sum over signed permutations of x^{des_B(w)} with w_0 = 0.
Polynomial eulerian_b(int n);

// A_n(x;q) = sum over permutations of q^inv(w) x^des(w), evaluated at a
// fixed positive rational q via the triangle recurrence
// A_{n+1,k} = q^{n+1-k} (sum_{i<k} A_{n,i} + x sum_{i>=k} A_{n,i}).
Polynomial eulerian_aq(int n, const Rat& q);

}  // namespace chainpoly
