#pragma once

#include "chainpoly/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace chainpoly {

// Dense univariate polynomial with exact rational coefficients, ascending
// degree, no trailing zeros. The zero polynomial has an empty coefficient
// vector and degree -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Rat c);
    static Polynomial one() { return constant(Rat(1)); }
    static Polynomial x();
    static Polynomial from_ints(std::initializer_list<long> coeffs);
    // x - r, handy for deflating rational roots.
    static Polynomial linear_root(const Rat& r);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& leading() const;
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rat& c);
    Polynomial& operator/=(const Rat& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }
    friend Polynomial operator*(const Rat& c, Polynomial a) { return a *= c; }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative() const;
    Rat evaluate(const Rat& x) const;
    int sign_at(const Rat& x) const { return sign_of(evaluate(x)); }
    int sign_at_neg_inf() const;
    int sign_at_pos_inf() const;

    // Monic multiple (leading coefficient 1); zero stays zero.
    Polynomial monic() const;

    // Euclidean division by a nonzero divisor; returns (quotient, remainder).
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    // Division known to be exact; throws errc::internal on a nonzero remainder.
    static Polynomial exact_div(const Polynomial& a, const Polynomial& b);

    // Human-readable form such as "1 + 4x + x^2".
    std::string to_string() const;

  private:
    void normalize();
    std::vector<Rat> coeffs_;
};

Polynomial poly_pow(const Polynomial& base, int exponent);

// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// p / gcd(p, p'), monic. The radical: same distinct roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

// Yun decomposition: pairwise coprime monic factors with multiplicities,
// p = lc * prod f_i^{m_i}.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

}  // namespace chainpoly
