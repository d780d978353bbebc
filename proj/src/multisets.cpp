#include "chainpoly/multisets.hpp"

#include "chainpoly/labelings.hpp"
#include "chainpoly/lattices.hpp"

#include <algorithm>
#include <map>

namespace chainpoly {

namespace {

void check_stream_cap(WordKind kind, int n, const MultisetCaps& caps) {
    if (caps.override_caps) return;
    bool ok = true;
    switch (kind) {
        case WordKind::A:
        case WordKind::AStar:
        case WordKind::ASigned:
            ok = n <= caps.stream_a;
            break;
        case WordKind::B:
        case WordKind::BStar:
            ok = n <= caps.stream_b;
            break;
    }
    if (!ok) throw Error(errc::cap_exceeded, "word multiset stream: n exceeds cap (override to force)");
}

std::vector<std::pair<int, Int>> factor_a(int j) {
    std::vector<std::pair<int, Int>> f;
    for (int i = 1; i <= j; ++i) f.push_back({i, Int(j + 1 - i)});
    return f;
}

std::vector<std::pair<int, Int>> factor_b(int k) {
    std::vector<std::pair<int, Int>> f;
    for (int i = 1; i <= k; ++i) f.push_back({i, Int(2 * k - 2 * i + 1)});
    return f;
}

// The reversal bijection sends position t of the starred multiset to factor
// len+1-t of the plain one, with values mapped v -> (len + 3 - t) - v for A
// (letters in 2..n+1-t) and v -> (n + 2 - t) - v for B.
std::vector<std::pair<int, Int>> reversed_factor(const std::vector<std::pair<int, Int>>& src,
                                                 int offset) {
    std::vector<std::pair<int, Int>> f;
    for (auto it = src.rbegin(); it != src.rend(); ++it) f.push_back({offset - it->first, it->second});
    return f;
}

}  // namespace

WordMultiset WordMultiset::make(WordKind kind, int n, const MultisetCaps& caps) {
    if (n < 1) throw Error(errc::invalid_argument, "word multiset: n must be positive");
    check_stream_cap(kind, n, caps);
    WordMultiset ms;
    ms.kind = kind;
    ms.n = n;
    switch (kind) {
        case WordKind::A:
        case WordKind::ASigned:
            for (int j = 1; j <= n - 1; ++j) ms.factors.push_back(factor_a(j));
            break;
        case WordKind::AStar:
            // position t corresponds to factor n-t, values u = n+2-t-i
            for (int t = 1; t <= n - 1; ++t)
                ms.factors.push_back(reversed_factor(factor_a(n - t), n + 2 - t));
            break;
        case WordKind::B:
            for (int k = 1; k <= n; ++k) ms.factors.push_back(factor_b(k));
            break;
        case WordKind::BStar:
            for (int t = 1; t <= n; ++t)
                ms.factors.push_back(reversed_factor(factor_b(n + 1 - t), n + 2 - t));
            break;
    }
    return ms;
}

Int WordMultiset::total() const {
    Int t = 1;
    for (const auto& f : factors) {
        Int size = 0;
        for (const auto& [v, m] : f) size += m;
        t *= size;
    }
    if (kind == WordKind::ASigned)
        for (int i = 0; i < length(); ++i) t *= 2;
    return t;
}

void for_each_word(const WordMultiset& ms,
                   const std::function<void(const std::vector<int>&, const Int&)>& fn) {
    const int len = ms.length();
    if (len == 0) {
        fn({}, Int(1));
        return;
    }
    std::vector<std::size_t> pos(len, 0);
    std::vector<int> word(len);
    const bool with_signs = ms.kind == WordKind::ASigned;
    while (true) {
        Int mult = 1;
        for (int i = 0; i < len; ++i) {
            word[i] = ms.factors[i][pos[i]].first;
            mult *= ms.factors[i][pos[i]].second;
        }
        if (with_signs) {
            std::vector<int> signed_word(len);
            for (unsigned mask = 0; mask < (1u << len); ++mask) {
                for (int i = 0; i < len; ++i)
                    signed_word[i] = (mask & (1u << i)) ? -word[i] : word[i];
                fn(signed_word, mult);
            }
        } else {
            fn(word, mult);
        }
        int i = 0;
        while (i < len && ++pos[i] == ms.factors[i].size()) pos[i++] = 0;
        if (i == len) break;
    }
}

unsigned weak_descent_mask(const std::vector<int>& w) {
    unsigned mask = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] >= w[i + 1]) mask |= 1u << i;
    return mask;
}

std::vector<Polynomial> hk_recurrence(WordKind kind, int n, const MultisetCaps& caps) {
    if (kind != WordKind::A && kind != WordKind::B)
        throw Error(errc::invalid_argument, "hk_recurrence: kind must be A or B");
    if (!caps.override_caps && n > caps.recurrence)
        throw Error(errc::cap_exceeded, "hk_recurrence: n exceeds cap (override to force)");
    const Polynomial x = Polynomial::x();

    std::vector<Polynomial> cur{Polynomial::one()};  // A: h_{2,1}; B: h_{1,1}
    int m = kind == WordKind::A ? 2 : 1;
    if (kind == WordKind::A && n < 2)
        throw Error(errc::invalid_argument, "hk_recurrence: kind A needs n >= 2");
    while (m < n) {
        const int rows = static_cast<int>(cur.size());
        // prefix[k] = sum_{i<k} cur_i, suffix[k] = sum_{i>=k}
        std::vector<Polynomial> prefix(rows + 1), suffix(rows + 1);
        for (int i = 0; i < rows; ++i) prefix[i + 1] = prefix[i] + cur[i];
        for (int i = rows - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + cur[i];
        std::vector<Polynomial> next(rows + 1);
        for (int k = 1; k <= rows + 1; ++k) {
            Rat scale = kind == WordKind::A ? Rat(m + 1 - k) : Rat(2 * m - 2 * k + 3);
            next[k - 1] = (prefix[std::min(k - 1, rows)] + x * suffix[std::min(k - 1, rows)]) * scale;
        }
        cur = std::move(next);
        ++m;
    }
    std::reverse(cur.begin(), cur.end());
    return cur;
}

Polynomial descent_h(WordKind kind, int n, const MultisetCaps& caps) {
    if (kind != WordKind::A && kind != WordKind::B)
        throw Error(errc::invalid_argument, "descent_h: kind must be A or B");
    if (kind == WordKind::A && n == 1) return Polynomial::one();
    Polynomial total;
    for (const Polynomial& p : hk_recurrence(kind, n, caps)) total += p;
    return total;
}

bool beta_match(WordKind kind, int n) {
    if (kind != WordKind::A && kind != WordKind::B)
        throw Error(errc::invalid_argument, "beta_match: kind must be A or B");
    FlagVector fv;
    int width;  // descent positions live in [width]
    if (kind == WordKind::A) {
        fv = beta_flag(partition_lattice(n).graded);
        width = n - 2;
    } else {
        fv = beta_flag(partition_lattice_b(n).graded);
        width = n - 1;
    }
    std::vector<Int> hist(std::size_t{1} << std::max(width, 0), 0);
    for_each_word(WordMultiset::make(kind, n),
                  [&](const std::vector<int>& w, const Int& mult) { hist[weak_descent_mask(w)] += mult; });
    for (std::size_t s = 0; s < fv.beta.size(); ++s) {
        // S maps to the reversed mask: descent at n-1-x (type A) or n-x (B).
        unsigned rev = 0;
        for (int b = 0; b < width; ++b)
            if (s & (1u << b)) rev |= 1u << (width - 1 - b);
        if (fv.beta[s] != hist[rev]) return false;
    }
    return true;
}

int lpeak_word(const std::vector<int>& w) {
    unsigned des = weak_descent_mask(w);
    return lpeak_set(des, static_cast<int>(w.size()));
}

int lpeak_set(unsigned mask, int) {
    int count = 0;
    for (unsigned m = mask; m; m &= m - 1) {
        unsigned bit = m & ~(m - 1);
        if (!(mask & (bit >> 1))) ++count;  // i in S, i-1 not (bit 0 always counts)
    }
    return count;
}

int edes_b(const std::vector<int>& signed_word) {
    int count = 0, prev = 0;
    for (int v : signed_word) {
        if (prev > v || (prev == v && v > 0)) ++count;
        prev = v;
    }
    return count;
}

bool per_word_identity(const std::vector<int>& word) {
    const int len = static_cast<int>(word.size());
    std::vector<Rat> lhs_coeffs(len + 1, Rat(0));
    std::vector<int> signed_word(len);
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
        for (int i = 0; i < len; ++i)
            signed_word[i] = (mask & (1u << i)) ? -word[i] : word[i];
        lhs_coeffs[edes_b(signed_word)] += 1;
    }
    Polynomial lhs((std::vector<Rat>(lhs_coeffs)));
    int lp = lpeak_word(word);
    Polynomial rhs = poly_pow(Polynomial::from_ints({0, 4}), lp) *
                     poly_pow(Polynomial::from_ints({1, 1}), len - 2 * lp);
    return lhs == rhs;
}

Polynomial signed_edesb_h(int n, const MultisetCaps& caps) {
    std::vector<Rat> coeffs(n, Rat(0));
    for_each_word(WordMultiset::make(WordKind::ASigned, n, caps),
                  [&](const std::vector<int>& w, const Int& mult) { coeffs[edes_b(w)] += Rat(mult); });
    return Polynomial(std::move(coeffs));
}

std::vector<Int> lpeak_gamma(int n, const MultisetCaps& caps) {
    std::vector<Int> counts((n + 1) / 2, 0);
    for_each_word(WordMultiset::make(WordKind::A, n, caps),
                  [&](const std::vector<int>& w, const Int& mult) {
                      std::size_t lp = static_cast<std::size_t>(lpeak_word(w));
                      if (lp >= counts.size()) counts.resize(lp + 1, 0);
                      counts[lp] += mult;
                  });
    Int power = 1;
    for (auto& c : counts) {
        c *= power;
        power *= 4;
    }
    return counts;
}

}  // namespace chainpoly
