#include "chainpoly/polynomial.hpp"

#include <sstream>

namespace chainpoly {

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw Error(errc::parse_error, "empty rational literal");
    try {
        Rat q(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error(errc::parse_error, "bad rational literal: " + text);
    }
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Rat c) {
    Polynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::x() {
    Polynomial p;
    p.coeffs_ = {Rat(0), Rat(1)};
    return p;
}

Polynomial Polynomial::from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::linear_root(const Rat& r) {
    Polynomial p;
    p.coeffs_ = {-r, Rat(1)};
    return p;
}

const Rat& Polynomial::leading() const {
    if (is_zero()) throw Error(errc::invalid_argument, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rat Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[i];
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rat& c) {
    if (c == 0) throw Error(errc::invalid_argument, "division by zero");
    for (auto& a : coeffs_) a /= c;
    return *this;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rat> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return Polynomial(std::move(out));
}

Rat Polynomial::evaluate(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int Polynomial::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    int s = sign_of(leading());
    return (degree() % 2 == 0) ? s : -s;
}

int Polynomial::sign_at_pos_inf() const {
    if (is_zero()) return 0;
    return sign_of(leading());
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Polynomial r = *this;
    r /= leading();
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(errc::invalid_argument, "division by the zero polynomial");
    Polynomial rem = a;
    if (a.degree() < b.degree()) return {Polynomial(), rem};
    std::vector<Rat> q(a.degree() - b.degree() + 1, Rat(0));
    const Rat& lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rat factor = rem.leading() / lead;
        q[shift] = factor;
        // rem -= factor * x^shift * b
        for (int i = 0; i <= b.degree(); ++i) rem.coeffs_[i + shift] -= factor * b.coeffs_[i];
        rem.normalize();
    }
    return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(errc::internal, "exact_div: nonzero remainder");
    return q;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit = (abs == 1);
        if (i == 0 || !unit) out << rat_to_string(abs);
        if (i >= 1) {
            out << "x";
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

Polynomial poly_pow(const Polynomial& base, int exponent) {
    if (exponent < 0) throw Error(errc::invalid_argument, "negative polynomial power");
    Polynomial acc = Polynomial::one();
    for (int i = 0; i < exponent; ++i) acc *= base;
    return acc;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial f = a.monic(), g = b.monic();
    while (!g.is_zero()) {
        Polynomial r = Polynomial::divmod(f, g).second;
        f = std::move(g);
        g = r.monic();
    }
    return f;
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw Error(errc::invalid_argument, "squarefree part of the zero polynomial");
    if (p.degree() == 0) return Polynomial::one();
    Polynomial d = poly_gcd(p, p.derivative());
    return Polynomial::exact_div(p, d).monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw Error(errc::invalid_argument, "squarefree decomposition of the zero polynomial");
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial f = p.monic();
    if (f.degree() == 0) return out;
    Polynomial fp = f.derivative();
    Polynomial d = poly_gcd(f, fp);
    if (d.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    // Yun's algorithm over Q.
    Polynomial b = Polynomial::exact_div(f, d);
    Polynomial c = Polynomial::exact_div(fp, d);
    Polynomial z = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Polynomial a = poly_gcd(b, z);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = Polynomial::exact_div(b, a).monic();
        c = z.is_zero() ? Polynomial() : Polynomial::exact_div(z, a);
        z = c - b.derivative();
        ++i;
    }
    return out;
}

}  // namespace chainpoly
