#pragma once

#include "chainpoly/poset.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace chainpoly {

// Integer combination of ab-words of one fixed length. A word is a bitmask:
// bit i-1 set means letter b at position i, so the word of a subset S of
// [n-1] is its mask. The empty word (length 0) is the multiplicative unit.
class AbPolynomial {
  public:
    explicit AbPolynomial(int length) : length_(length) {
        if (length < 0 || length > 62)
            throw Error(errc::invalid_argument, "ab-polynomial length out of range");
    }

    int length() const { return length_; }
    const std::map<std::uint64_t, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::uint64_t mask, const Int& coeff);
    Int coeff(std::uint64_t mask) const;

    AbPolynomial& operator+=(const AbPolynomial& o);
    AbPolynomial operator*(const Int& c) const;
    bool operator==(const AbPolynomial& o) const {
        return length_ == o.length_ && terms_ == o.terms_;
    }

    std::string word_string(std::uint64_t mask) const;
    static std::uint64_t mask_of_word(const std::string& word);

  private:
    int length_;
    std::map<std::uint64_t, Int> terms_;
};

// Psi_L = sum over S of beta(S) u_S; words of length rank - 1.
AbPolynomial ab_index(const FlagVector& flags);
AbPolynomial ab_index(const Graded& g);

// Specialization a = 1, b = x; sends Psi_L to h_L.
Polynomial specialize_ab(const AbPolynomial& psi);

// The BER transform: every occurrence of the factor ab becomes
// 2(ab + ba) and every remaining letter becomes a + b.
AbPolynomial omega_map(const AbPolynomial& v);

// The derivation with D(a) = D(b) = ab + ba, extended by the Leibniz rule;
// raises word length by one.
AbPolynomial derivation_d(const AbPolynomial& v);

// 2 Psi_Pyr = Psi (a+b) + (a+b) Psi + D(Psi); the division by two is exact
// for genuine ab-indices and throws errc::odd_coefficient otherwise.
AbPolynomial pyr_ab(const AbPolynomial& psi);
// Psi_Prism = Psi (a+b) + D(Psi).
AbPolynomial prism_ab(const AbPolynomial& psi);

// Psi of the face lattice of a zonotope from the ab-index of its lattice of
// flats: omega(a * Psi_L).
AbPolynomial zonotope_ab(const AbPolynomial& psi);

// h-level pyramid and prism formulas for a rank-n input:
//   pyr:   (1 + n x) h + (x - x^2) h'
//   prism: (1 + (2n-1) x) h + 2 (x - x^2) h'
Polynomial pyr_h(const Polynomial& h, int n);
Polynomial prism_h(const Polynomial& h, int n);

// h_{F(Z)} = sum_S beta(S) (4x)^{lpeak(S)} (1+x)^{n - 2 lpeak(S)} over a
// rank-n lattice of flats.
Polynomial zonotope_h_from_flags(const FlagVector& flags);

// h of the second barycentric subdivision of the boundary of the
// (n-1)-simplex, by three routes that must agree on their ranges:
// flags of Pi_n (any n with the lattice in reach), signed word statistics
// (n <= 8), and the direct double-subdivision poset (n <= 5).
Polynomial sd2_h(int n);
Polynomial sd2_h_words(int n);
Polynomial sd2_h_poset(int n);
std::vector<Int> sd2_gamma(int n);

}  // namespace chainpoly
