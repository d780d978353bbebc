#include "chainpoly/abindex.hpp"

#include "chainpoly/lattices.hpp"
#include "chainpoly/multisets.hpp"

#include <algorithm>

namespace chainpoly {

void AbPolynomial::add_term(std::uint64_t mask, const Int& coeff) {
    if (length_ < 64 && mask >> length_)
        throw Error(errc::invalid_argument, "ab-word longer than the polynomial length");
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        if (coeff != 0) terms_.emplace(mask, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

Int AbPolynomial::coeff(std::uint64_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Int(0) : it->second;
}

AbPolynomial& AbPolynomial::operator+=(const AbPolynomial& o) {
    if (length_ != o.length_)
        throw Error(errc::invalid_argument, "ab-polynomial length mismatch");
    for (const auto& [mask, c] : o.terms_) add_term(mask, c);
    return *this;
}

AbPolynomial AbPolynomial::operator*(const Int& c) const {
    AbPolynomial out(length_);
    if (c != 0)
        for (const auto& [mask, v] : terms_) out.terms_.emplace(mask, v * c);
    return out;
}

std::string AbPolynomial::word_string(std::uint64_t mask) const {
    std::string s(static_cast<std::size_t>(length_), 'a');
    for (int i = 0; i < length_; ++i)
        if (mask & (std::uint64_t{1} << i)) s[i] = 'b';
    return s;
}

std::uint64_t AbPolynomial::mask_of_word(const std::string& word) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == 'b')
            mask |= std::uint64_t{1} << i;
        else if (word[i] != 'a')
            throw Error(errc::parse_error, "ab-word may contain only 'a' and 'b'");
    }
    return mask;
}

AbPolynomial ab_index(const FlagVector& flags) {
    if (flags.rank_top < 1)
        throw Error(errc::invalid_argument, "ab_index: rank must be at least 1");
    AbPolynomial psi(flags.rank_top - 1);
    for (std::size_t mask = 0; mask < flags.beta.size(); ++mask)
        psi.add_term(mask, flags.beta[mask]);
    return psi;
}

AbPolynomial ab_index(const Graded& g) { return ab_index(beta_flag(g)); }

Polynomial specialize_ab(const AbPolynomial& psi) {
    std::vector<Rat> coeffs(psi.length() + 1, Rat(0));
    for (const auto& [mask, c] : psi.terms())
        coeffs[static_cast<std::size_t>(__builtin_popcountll(mask))] += Rat(c);
    return Polynomial(std::move(coeffs));
}

AbPolynomial omega_map(const AbPolynomial& v) {
    const int len = v.length();
    AbPolynomial out(len);
    for (const auto& [mask, c] : v.terms()) {
        // Occurrences of the factor ab: a at position i, b at i+1. They
        // cannot overlap.
        std::vector<int> occ;
        for (int i = 0; i + 1 < len; ++i) {
            bool a_here = !(mask & (std::uint64_t{1} << i));
            bool b_next = (mask >> (i + 1)) & 1;
            if (a_here && b_next) occ.push_back(i);
        }
        std::vector<int> free_pos;
        {
            std::vector<bool> used(len, false);
            for (int i : occ) used[i] = used[i + 1] = true;
            for (int i = 0; i < len; ++i)
                if (!used[i]) free_pos.push_back(i);
        }
        Int scale = c;
        for (std::size_t i = 0; i < occ.size(); ++i) scale *= 2;

        // Expand: each occurrence contributes ab or ba, each free letter a
        // or b.
        const std::size_t branches = occ.size() + free_pos.size();
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << branches); ++pick) {
            std::uint64_t word = 0;
            for (std::size_t t = 0; t < occ.size(); ++t) {
                int i = occ[t];
                if ((pick >> t) & 1)
                    word |= std::uint64_t{1} << i;  // ba
                else
                    word |= std::uint64_t{1} << (i + 1);  // ab
            }
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                if ((pick >> (occ.size() + t)) & 1) word |= std::uint64_t{1} << free_pos[t];
            out.add_term(word, scale);
        }
    }
    return out;
}

AbPolynomial derivation_d(const AbPolynomial& v) {
    const int len = v.length();
    AbPolynomial out(len + 1);
    for (const auto& [mask, c] : v.terms()) {
        for (int i = 0; i < len; ++i) {
            // Replace letter i by ab and by ba; other letters keep their
            // positions, those right of i shift by one.
            std::uint64_t low = mask & ((std::uint64_t{1} << i) - 1);
            std::uint64_t high = (mask >> (i + 1)) << (i + 2);
            out.add_term(low | high | (std::uint64_t{1} << (i + 1)), c);  // ab
            out.add_term(low | high | (std::uint64_t{1} << i), c);        // ba
        }
    }
    return out;
}

namespace {

// psi * (a + b): append one letter.
AbPolynomial append_letter(const AbPolynomial& psi) {
    AbPolynomial out(psi.length() + 1);
    for (const auto& [mask, c] : psi.terms()) {
        out.add_term(mask, c);
        out.add_term(mask | (std::uint64_t{1} << psi.length()), c);
    }
    return out;
}

// (a + b) * psi: prepend one letter.
AbPolynomial prepend_letter(const AbPolynomial& psi) {
    AbPolynomial out(psi.length() + 1);
    for (const auto& [mask, c] : psi.terms()) {
        out.add_term(mask << 1, c);
        out.add_term((mask << 1) | 1, c);
    }
    return out;
}

AbPolynomial prepend_a(const AbPolynomial& psi) {
    AbPolynomial out(psi.length() + 1);
    for (const auto& [mask, c] : psi.terms()) out.add_term(mask << 1, c);
    return out;
}

}  // namespace

AbPolynomial pyr_ab(const AbPolynomial& psi) {
    AbPolynomial doubled = append_letter(psi);
    doubled += prepend_letter(psi);
    doubled += derivation_d(psi);
    AbPolynomial out(doubled.length());
    for (const auto& [mask, c] : doubled.terms()) {
        if (c % 2 != 0)
            throw Error(errc::odd_coefficient,
                        "pyr_ab: odd coefficient; input is not a valid ab-index");
        out.add_term(mask, c / 2);
    }
    return out;
}

AbPolynomial prism_ab(const AbPolynomial& psi) {
    AbPolynomial out = append_letter(psi);
    out += derivation_d(psi);
    return out;
}

AbPolynomial zonotope_ab(const AbPolynomial& psi) { return omega_map(prepend_a(psi)); }

Polynomial pyr_h(const Polynomial& h, int n) {
    if (n < 1) throw Error(errc::invalid_argument, "pyr_h: rank must be at least 1");
    Polynomial x_minus_x2 = Polynomial::from_ints({0, 1, -1});
    return Polynomial::from_ints({1, n}) * h + x_minus_x2 * h.derivative();
}

Polynomial prism_h(const Polynomial& h, int n) {
    if (n < 1) throw Error(errc::invalid_argument, "prism_h: rank must be at least 1");
    Polynomial x_minus_x2 = Polynomial::from_ints({0, 1, -1});
    return Polynomial::from_ints({1, 2 * n - 1}) * h + Rat(2) * (x_minus_x2 * h.derivative());
}

Polynomial zonotope_h_from_flags(const FlagVector& flags) {
    const int n = flags.rank_top;
    Polynomial out;
    const Polynomial four_x = Polynomial::from_ints({0, 4});
    const Polynomial one_plus_x = Polynomial::from_ints({1, 1});
    for (std::size_t mask = 0; mask < flags.beta.size(); ++mask) {
        if (flags.beta[mask] == 0) continue;
        int lp = lpeak_set(static_cast<unsigned>(mask), n);
        Polynomial term = poly_pow(four_x, lp) * poly_pow(one_plus_x, n - 2 * lp);
        out += term * Rat(flags.beta[mask]);
    }
    return out;
}

Polynomial sd2_h(int n) {
    if (n < 2) throw Error(errc::invalid_argument, "sd2_h: n must be at least 2");
    return zonotope_h_from_flags(beta_flag(partition_lattice(n).graded));
}

Polynomial sd2_h_words(int n) {
    if (n < 2) throw Error(errc::invalid_argument, "sd2_h_words: n must be at least 2");
    return signed_edesb_h(n);
}

Polynomial sd2_h_poset(int n) {
    if (n < 2) throw Error(errc::invalid_argument, "sd2_h_poset: n must be at least 2");
    if (n > 6) throw Error(errc::cap_exceeded, "sd2_h_poset: direct route capped at n = 6");
    // Nonempty proper subsets of [n], the face poset of the boundary of the
    // simplex.
    Poset faces = remove_extremes(boolean_lattice(n).graded);
    // Faces of sd: chains of `faces`, ordered by containment; covers drop
    // one element.
    std::vector<std::vector<int>> chains;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        for (int x = start; x < faces.size(); ++x) {
            if (!cur.empty() && !faces.less(cur.back(), x)) continue;
            cur.push_back(x);
            chains.push_back(cur);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < chains.size(); ++i) index[chains[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        if (chains[i].size() < 2) continue;
        for (std::size_t drop = 0; drop < chains[i].size(); ++drop) {
            std::vector<int> sub;
            for (std::size_t t = 0; t < chains[i].size(); ++t)
                if (t != drop) sub.push_back(chains[i][t]);
            covers.push_back({index.at(sub), static_cast<int>(i)});
        }
    }
    Poset sd_face_poset =
        Poset::from_cover_relations(static_cast<int>(chains.size()), std::move(covers));
    return sd_face_poset.h_polynomial();
}

std::vector<Int> sd2_gamma(int n) {
    if (n < 2) throw Error(errc::invalid_argument, "sd2_gamma: n must be at least 2");
    return lpeak_gamma(n);
}

}  // namespace chainpoly
