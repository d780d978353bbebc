#include "chainpoly/roots.hpp"

#include <algorithm>
#include <cstdlib>

namespace chainpoly {

namespace {

// Canonical Sturm chain of a squarefree polynomial. Each entry is scaled by
// a positive rational to keep leading coefficients at +-1; positive scaling
// preserves all sign evaluations.
std::vector<Polynomial> sturm_chain(const Polynomial& squarefree) {
    std::vector<Polynomial> chain;
    Polynomial f = squarefree;
    if (f.is_zero()) return chain;
    Rat lead = f.leading();
    f /= (lead < 0 ? Rat(-lead) : lead);
    chain.push_back(f);
    Polynomial g = f.derivative();
    while (!g.is_zero()) {
        Rat gl = g.leading();
        g /= (gl < 0 ? Rat(-gl) : gl);
        chain.push_back(g);
        Polynomial r = -Polynomial::divmod(chain[chain.size() - 2], g).second;
        g = std::move(r);
    }
    return chain;
}

int variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int variations_at(const std::vector<Polynomial>& chain, const std::optional<Rat>& point, bool pos_inf) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) {
        if (point) {
            signs.push_back(p.sign_at(*point));
        } else {
            signs.push_back(pos_inf ? p.sign_at_pos_inf() : p.sign_at_neg_inf());
        }
    }
    return variations(signs);
}

// Roots of a squarefree s in the open interval (lo, hi), both endpoints
// non-roots (nullopt = infinite).
long open_count(const std::vector<Polynomial>& chain, const std::optional<Rat>& lo,
                const std::optional<Rat>& hi) {
    return variations_at(chain, lo, false) - variations_at(chain, hi, true);
}

// 1 + max |c_i| / |c_d|; every complex root has modulus strictly below this.
Rat cauchy_bound(const Polynomial& p) {
    Rat m(0);
    const Rat lead = p.leading() < 0 ? Rat(-p.leading()) : p.leading();
    for (int i = 0; i < p.degree(); ++i) {
        Rat a = p.coeff(i);
        if (a < 0) a = -a;
        a /= lead;
        if (a > m) m = a;
    }
    return m + 1;
}

struct Isolator {
    const Polynomial& s;
    const std::vector<Polynomial>& chain;
    std::vector<RootInterval> out;

    void isolate(const Rat& lo, const Rat& hi, long count) {
        if (count == 0) return;
        if (count == 1) {
            out.push_back(RootInterval{lo, hi, 1, false});
            return;
        }
        Rat mid = (lo + hi) / 2;
        if (s.sign_at(mid) == 0) {
            out.push_back(RootInterval{mid, mid, 1, true});
            // Shrink a gap around the exact root so the flanking intervals
            // have non-root endpoints.
            Rat eps = (hi - lo) / 4;
            while (s.sign_at(mid - eps) == 0 || s.sign_at(mid + eps) == 0 ||
                   open_count(chain, mid - eps, mid + eps) != 1) {
                eps /= 2;
            }
            isolate(lo, mid - eps, open_count(chain, lo, mid - eps));
            isolate(mid + eps, hi, open_count(chain, mid + eps, hi));
        } else {
            isolate(lo, mid, open_count(chain, lo, mid));
            isolate(mid, hi, open_count(chain, mid, hi));
        }
    }
};

}  // namespace

long sturm_count(const Polynomial& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    if (p.is_zero()) throw Error(errc::invalid_argument, "sturm_count: zero polynomial");
    if (lo && hi && *lo >= *hi) return 0;
    Polynomial s = squarefree_part(p);
    if (s.degree() == 0) return 0;
    long extra = 0;
    if (hi && s.sign_at(*hi) == 0) {
        extra = 1;  // (lo, hi] includes hi
        s = Polynomial::exact_div(s, Polynomial::linear_root(*hi));
    }
    if (lo && !s.is_zero() && s.degree() > 0 && s.sign_at(*lo) == 0)
        s = Polynomial::exact_div(s, Polynomial::linear_root(*lo));
    if (s.degree() == 0) return extra;
    auto chain = sturm_chain(s);
    return open_count(chain, lo, hi) + extra;
}

bool is_real_rooted(const Polynomial& p) {
    if (p.is_zero()) return true;
    Polynomial s = squarefree_part(p);
    if (s.degree() == 0) return true;
    auto chain = sturm_chain(s);
    return open_count(chain, std::nullopt, std::nullopt) == s.degree();
}

Int RootIsolation::total_multiplicity() const {
    Int total = 0;
    for (const auto& iv : intervals_) total += iv.multiplicity;
    return total;
}

void RootIsolation::refine_once(RootInterval& iv) {
    if (iv.exact) return;
    Rat mid = (iv.lo + iv.hi) / 2;
    int sm = squarefree_.sign_at(mid);
    if (sm == 0) {
        iv.lo = iv.hi = mid;
        iv.exact = true;
        return;
    }
    if (squarefree_.sign_at(iv.lo) * sm < 0) {
        iv.hi = mid;
    } else {
        iv.lo = mid;
    }
}

void RootIsolation::refine_to_width(const Rat& width) {
    for (auto& iv : intervals_) {
        while (!iv.exact && iv.hi - iv.lo > width) refine_once(iv);
    }
}

RootIsolation isolate_roots(const Polynomial& p) {
    if (p.is_zero()) throw Error(errc::invalid_argument, "isolate_roots: zero polynomial");
    Polynomial s = squarefree_part(p);
    if (s.degree() == 0) return RootIsolation(std::move(s), {});
    auto chain = sturm_chain(s);
    Rat bound = cauchy_bound(s);
    Isolator iso{s, chain, {}};
    iso.isolate(-bound, bound, open_count(chain, Rat(-bound), Rat(bound)));
    std::sort(iso.out.begin(), iso.out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });

    RootIsolation result(s, std::move(iso.out));

    // Multiplicities: each isolating interval holds a root of exactly one
    // factor of the squarefree decomposition.
    auto factors = squarefree_decomposition(p);
    for (auto& iv : result.intervals_) {
        for (const auto& [factor, mult] : factors) {
            bool hit;
            if (iv.exact) {
                hit = factor.sign_at(iv.lo) == 0;
            } else {
                hit = factor.sign_at(iv.lo) * factor.sign_at(iv.hi) < 0 ||
                      sturm_count(factor, iv.lo, iv.hi) > 0;
            }
            if (hit) {
                iv.multiplicity = mult;
                break;
            }
        }
    }

    // Separate closed intervals that touch at a shared endpoint.
    for (std::size_t i = 0; i + 1 < result.intervals_.size(); ++i) {
        auto& a = result.intervals_[i];
        auto& b = result.intervals_[i + 1];
        while (a.hi >= b.lo) {
            if (!a.exact) result.refine_once(a);
            if (a.hi >= b.lo && !b.exact) result.refine_once(b);
        }
    }
    return result;
}

namespace {

// Root multisets of f and g laid over the common ordered list of distinct
// roots of f*g; entry k of each list is the number of times distinct root k
// occurs.
struct MergedRoots {
    std::vector<int> mult_f;
    std::vector<int> mult_g;
};

MergedRoots merge_roots(const Polynomial& f, const Polynomial& g) {
    RootIsolation iso = isolate_roots(f * g);
    auto f_factors = squarefree_decomposition(f);
    auto g_factors = squarefree_decomposition(g);
    auto mult_in = [](const std::vector<std::pair<Polynomial, int>>& factors,
                      const RootInterval& iv) {
        for (const auto& [factor, mult] : factors) {
            if (factor.degree() <= 0) continue;
            bool hit = iv.exact ? factor.sign_at(iv.lo) == 0
                                : sturm_count(factor, iv.lo, iv.hi) > 0;
            if (hit) return mult;
        }
        return 0;
    };
    MergedRoots out;
    for (const auto& iv : iso.intervals()) {
        out.mult_f.push_back(mult_in(f_factors, iv));
        out.mult_g.push_back(mult_in(g_factors, iv));
    }
    return out;
}

}  // namespace

bool interlaces(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return is_real_rooted(g);
    if (g.is_zero()) return is_real_rooted(f);
    if (!is_real_rooted(f) || !is_real_rooted(g)) return false;
    int s = f.degree(), t = g.degree();
    if (t != s && t != s + 1) return false;
    if (s == 0) return true;

    MergedRoots merged = merge_roots(f, g);
    int k = static_cast<int>(merged.mult_f.size());
    // Descending lists of root ordinals, repeated by multiplicity.
    std::vector<int> a, b;
    for (int i = k - 1; i >= 0; --i) {
        for (int c = 0; c < merged.mult_f[i]; ++c) a.push_back(i);
        for (int c = 0; c < merged.mult_g[i]; ++c) b.push_back(i);
    }
    // ... <= a[1] <= b[1] <= a[0] <= b[0], weakly.
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > b[j]) return false;
        if (j + 1 < b.size() && a[j] < b[j + 1]) return false;
    }
    return true;
}

bool is_interlacing_sequence(const std::vector<Polynomial>& fs) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            if (!interlaces(fs[i], fs[j])) return false;
        }
    }
    return true;
}

std::vector<Polynomial> lemma_combine(const std::vector<Polynomial>& fs) {
    if (fs.empty()) throw Error(errc::invalid_argument, "lemma_combine: empty input");
    std::vector<Polynomial> out;
    out.reserve(fs.size() + 1);
    const Polynomial x = Polynomial::x();
    for (std::size_t k = 0; k <= fs.size(); ++k) {
        Polynomial low, high;
        for (std::size_t i = 0; i < k; ++i) low += fs[i];
        for (std::size_t i = k; i < fs.size(); ++i) high += fs[i];
        out.push_back(x * low + high);
    }
    return out;
}

GammaResult gamma_decompose(const Polynomial& p, int n) {
    GammaResult result;
    if (n < 0 || p.degree() > n) {
        result.symmetric = false;
        result.bad_index = p.degree();
        return result;
    }
    for (int i = 0; 2 * i <= n; ++i) {
        if (p.coeff(i) != p.coeff(n - i)) {
            result.symmetric = false;
            result.bad_index = i;
            return result;
        }
    }
    result.symmetric = true;
    Polynomial rest = p;
    const Polynomial one_plus_x = Polynomial::from_ints({1, 1});
    for (int i = 0; 2 * i <= n; ++i) {
        Rat gi = rest.coeff(i);
        result.gamma.push_back(gi);
        if (gi != 0) {
            Polynomial term = poly_pow(one_plus_x, n - 2 * i) * gi;
            term *= poly_pow(Polynomial::x(), i);
            rest -= term;
        }
    }
    if (!rest.is_zero()) throw Error(errc::internal, "gamma_decompose: nonzero remainder");
    return result;
}

Polynomial gamma_expand(const std::vector<Rat>& gamma, int n) {
    Polynomial out;
    const Polynomial one_plus_x = Polynomial::from_ints({1, 1});
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i] == 0) continue;
        Polynomial term = poly_pow(one_plus_x, n - 2 * static_cast<int>(i)) * gamma[i];
        term *= poly_pow(Polynomial::x(), static_cast<int>(i));
        out += term;
    }
    return out;
}

}  // namespace chainpoly
