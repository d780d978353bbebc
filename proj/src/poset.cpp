#include "chainpoly/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace chainpoly {

Poset Poset::from_cover_relations(int size, std::vector<std::pair<int, int>> pairs,
                                  std::vector<std::pair<int, int>>* dropped) {
    if (size < 0) throw Error(errc::invalid_argument, "poset size must be nonnegative");
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= size || b < 0 || b >= size)
            throw Error(errc::invalid_argument, "cover index out of range");
        if (a == b) throw Error(errc::cycle_detected, "self-loop in cover relations");
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    std::vector<std::vector<int>> raw_up(size);
    std::vector<int> indegree(size, 0);
    for (auto [a, b] : pairs) {
        raw_up[a].push_back(b);
        ++indegree[b];
    }

    // Kahn topological order; failure means a cycle.
    std::vector<int> topo;
    topo.reserve(size);
    std::queue<int> ready;
    for (int i = 0; i < size; ++i)
        if (indegree[i] == 0) ready.push(i);
    while (!ready.empty()) {
        int x = ready.front();
        ready.pop();
        topo.push_back(x);
        for (int y : raw_up[x])
            if (--indegree[y] == 0) ready.push(y);
    }
    if (static_cast<int>(topo.size()) != size)
        throw Error(errc::cycle_detected, "cycle detected in cover relations");

    Poset p;
    p.size_ = size;
    p.below_.assign(size, Bitset(size));
    p.above_.assign(size, Bitset(size));
    std::vector<std::vector<int>> raw_down(size);
    for (auto [a, b] : pairs) raw_down[b].push_back(a);
    for (int y : topo) {
        for (int x : raw_down[y]) {
            p.below_[y] |= p.below_[x];
            p.below_[y].set(x);
        }
    }
    for (int y = 0; y < size; ++y) {
        for (int x = p.below_[y].find_first(); x != static_cast<int>(Bitset::npos);
             x = p.below_[y].find_next(x)) {
            p.above_[x].set(y);
        }
    }

    p.up_.assign(size, {});
    p.down_.assign(size, {});
    for (auto [a, b] : pairs) {
        if ((p.below_[b] & p.above_[a]).any()) {
            if (dropped) dropped->push_back({a, b});
            continue;
        }
        p.covers_.push_back({a, b});
        p.up_[a].push_back(b);
        p.down_[b].push_back(a);
    }
    for (auto& v : p.up_) std::sort(v.begin(), v.end());
    for (auto& v : p.down_) std::sort(v.begin(), v.end());
    return p;
}

void Poset::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != size_)
        throw Error(errc::invalid_argument, "label count does not match poset size");
    labels_ = std::move(labels);
}

Poset Poset::dual() const {
    std::vector<std::pair<int, int>> flipped;
    flipped.reserve(covers_.size());
    for (auto [a, b] : covers_) flipped.push_back({b, a});
    Poset d = from_cover_relations(size_, std::move(flipped));
    d.labels_ = labels_;
    return d;
}

Poset Poset::induced(const std::vector<int>& keep) const {
    std::vector<int> new_of_old(size_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        int old = keep[i];
        if (old < 0 || old >= size_) throw Error(errc::invalid_argument, "induced: index out of range");
        if (i > 0 && keep[i - 1] >= old)
            throw Error(errc::invalid_argument, "induced: keep list must be strictly increasing");
        new_of_old[old] = static_cast<int>(i);
    }
    // Order pairs of the induced order; from_cover_relations prunes the
    // non-covers.
    std::vector<std::pair<int, int>> pairs;
    for (int y : keep) {
        for (int x = below_[y].find_first(); x != static_cast<int>(Bitset::npos);
             x = below_[y].find_next(x)) {
            if (new_of_old[x] >= 0) pairs.push_back({new_of_old[x], new_of_old[y]});
        }
    }
    Poset sub = from_cover_relations(static_cast<int>(keep.size()), std::move(pairs));
    if (!labels_.empty()) {
        std::vector<std::string> sublabels;
        sublabels.reserve(keep.size());
        for (int old : keep) sublabels.push_back(labels_[old]);
        sub.labels_ = std::move(sublabels);
    }
    return sub;
}

Poset Poset::interval(int x, int y) const {
    if (x < 0 || x >= size_ || y < 0 || y >= size_)
        throw Error(errc::invalid_argument, "interval: index out of range");
    if (!leq(x, y)) throw Error(errc::invalid_argument, "interval: endpoints out of order");
    std::vector<int> keep;
    for (int z = 0; z < size_; ++z)
        if (leq(x, z) && leq(z, y)) keep.push_back(z);
    return induced(keep);
}

Polynomial Poset::chain_polynomial() const {
    std::vector<Rat> coeffs{Rat(1)};
    std::vector<Int> count(size_, 1);
    while (true) {
        Int layer_total = 0;
        for (const Int& v : count) layer_total += v;
        if (layer_total == 0) break;
        coeffs.emplace_back(layer_total);
        std::vector<Int> next(size_, 0);
        for (int y = 0; y < size_; ++y) {
            Int acc = 0;
            for (int x = below_[y].find_first(); x != static_cast<int>(Bitset::npos);
                 x = below_[y].find_next(x)) {
                acc += count[x];
            }
            next[y] = std::move(acc);
        }
        count = std::move(next);
    }
    return Polynomial(std::move(coeffs));
}

int Poset::longest_chain_size() const {
    // Longest path in the cover digraph, in elements.
    if (size_ == 0) return 0;
    std::vector<int> depth(size_, 0);
    int best = 1;
    // below_ is closed, so a plain sweep by increasing down-set works; use
    // topological order via covers instead.
    std::vector<int> order(size_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return below_[a].count() < below_[b].count(); });
    for (int x : order) {
        int d = 1;
        for (int y : down_[x]) d = std::max(d, depth[y] + 1);
        depth[x] = d;
        best = std::max(best, d);
    }
    return best;
}

Polynomial Poset::h_polynomial() const {
    Polynomial p = chain_polynomial();
    int n = p.degree();
    Polynomial h;
    const Polynomial one_minus_x = Polynomial::from_ints({1, -1});
    for (int i = 0; i <= n; ++i) {
        if (p.coeff(i) == 0) continue;
        Polynomial term = poly_pow(one_minus_x, n - i) * p.coeff(i);
        term *= poly_pow(Polynomial::x(), i);
        h += term;
    }
    return h;
}

Graded grade(Poset p) {
    const int m = p.size();
    if (m == 0) throw Error(errc::not_bounded, "empty poset has no bounds");
    int bottom = -1, top = -1;
    for (int x = 0; x < m; ++x) {
        if (p.down_covers(x).empty()) {
            if (bottom != -1) throw Error(errc::not_bounded, "no unique minimum element");
            bottom = x;
        }
        if (p.up_covers(x).empty()) {
            if (top != -1) throw Error(errc::not_bounded, "no unique maximum element");
            top = x;
        }
    }
    for (int x = 0; x < m; ++x) {
        if (x != bottom && !p.less(bottom, x))
            throw Error(errc::not_bounded, "minimum not below every element");
        if (x != top && !p.less(x, top)) throw Error(errc::not_bounded, "maximum not above every element");
    }

    // Longest-path ranks; gradedness means every cover climbs exactly one.
    std::vector<int> rank(m, 0);
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return p.below(a).count() < p.below(b).count(); });
    for (int x : order) {
        for (int y : p.down_covers(x)) rank[x] = std::max(rank[x], rank[y] + 1);
    }
    for (auto [a, b] : p.covers()) {
        if (rank[b] != rank[a] + 1)
            throw Error(errc::not_graded, "maximal chains of unequal length");
    }

    Graded g;
    g.bottom = bottom;
    g.top = top;
    g.rank_top = rank[top];
    g.by_rank.assign(g.rank_top + 1, {});
    for (int x = 0; x < m; ++x) g.by_rank[rank[x]].push_back(x);
    g.rank = std::move(rank);
    g.poset = std::move(p);
    return g;
}

Poset remove_extremes(const Graded& g) {
    std::vector<int> keep;
    for (int x = 0; x < g.size(); ++x)
        if (x != g.bottom && x != g.top) keep.push_back(x);
    return g.poset.induced(keep);
}

Polynomial h_of_bounded(const Graded& g) {
    if (g.rank_top == 0) return Polynomial::one();
    return remove_extremes(g).h_polynomial();
}

Int alpha_flag(const Graded& g, unsigned subset_mask) {
    const int n = g.rank_top;
    if (n > 0 && subset_mask >= (1u << (n - 1)))
        throw Error(errc::invalid_argument, "alpha_flag: subset outside [n-1]");
    std::vector<int> ranks;
    for (int r = 1; r <= n - 1; ++r)
        if (subset_mask & (1u << (r - 1))) ranks.push_back(r);
    if (ranks.empty()) return 1;

    std::vector<Int> count;
    for (std::size_t layer = 0; layer < ranks.size(); ++layer) {
        const auto& cur = g.by_rank[ranks[layer]];
        if (layer == 0) {
            count.assign(cur.size(), 1);
            continue;
        }
        const auto& prev = g.by_rank[ranks[layer - 1]];
        std::vector<Int> next(cur.size(), 0);
        for (std::size_t j = 0; j < cur.size(); ++j) {
            for (std::size_t i = 0; i < prev.size(); ++i) {
                if (g.poset.less(prev[i], cur[j])) next[j] += count[i];
            }
        }
        count = std::move(next);
    }
    Int total = 0;
    for (const Int& v : count) total += v;
    return total;
}

Int FlagVector::total() const {
    Int t = 0;
    for (const Int& v : beta) t += v;
    return t;
}

Polynomial FlagVector::h() const {
    std::vector<Rat> coeffs(rank_top == 0 ? 1 : rank_top, Rat(0));
    for (std::size_t mask = 0; mask < beta.size(); ++mask) {
        coeffs[static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)))] +=
            Rat(beta[mask]);
    }
    return Polynomial(std::move(coeffs));
}

FlagVector beta_flag(const Graded& g) {
    const int n = g.rank_top;
    const unsigned subsets = n >= 1 ? (1u << (n - 1)) : 1u;
    std::vector<Int> alpha(subsets);
    for (unsigned mask = 0; mask < subsets; ++mask) alpha[mask] = alpha_flag(g, mask);

    FlagVector fv;
    fv.rank_top = n;
    fv.beta.assign(subsets, 0);
    for (unsigned mask = 0; mask < subsets; ++mask) {
        Int acc = 0;
        unsigned sub = mask;
        int bits = __builtin_popcount(mask);
        while (true) {
            int sign = ((bits - __builtin_popcount(sub)) % 2 == 0) ? 1 : -1;
            acc += sign * alpha[sub];
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
        fv.beta[mask] = std::move(acc);
    }
    return fv;
}

Int maximal_chain_count(const Graded& g) {
    // Saturated chains bottom -> top via covers.
    std::vector<Int> count(g.size(), 0);
    count[g.bottom] = 1;
    for (int r = 0; r < g.rank_top; ++r) {
        for (int x : g.by_rank[r]) {
            if (count[x] == 0) continue;
            for (int y : g.poset.up_covers(x)) count[y] += count[x];
        }
    }
    return count[g.top];
}

Graded pyramid_poset(const Graded& g) {
    if (g.rank_top < 1) throw Error(errc::invalid_argument, "pyramid: rank must be at least 1");
    const int m = g.size();
    std::vector<std::pair<int, int>> covers;
    covers.reserve(2 * g.poset.covers().size() + m);
    for (auto [a, b] : g.poset.covers()) {
        covers.push_back({a, b});
        covers.push_back({m + a, m + b});
    }
    for (int x = 0; x < m; ++x) covers.push_back({x, m + x});
    return grade(Poset::from_cover_relations(2 * m, std::move(covers)));
}

Graded prism_poset(const Graded& g) {
    if (g.rank_top < 1) throw Error(errc::invalid_argument, "prism: rank must be at least 1");
    // Elements: 0 is the new minimum; (x, u) for x != bottom and u in
    // {a=0, b=1, t=2} is 1 + 3*(x index among non-bottom) + u.
    std::vector<int> idx(g.size(), -1);
    int k = 0;
    for (int x = 0; x < g.size(); ++x)
        if (x != g.bottom) idx[x] = k++;
    auto id = [&](int x, int u) { return 1 + 3 * idx[x] + u; };

    std::vector<std::pair<int, int>> covers;
    for (auto [a, b] : g.poset.covers()) {
        if (a == g.bottom) continue;
        for (int u = 0; u < 3; ++u) covers.push_back({id(a, u), id(b, u)});
    }
    for (int x = 0; x < g.size(); ++x) {
        if (x == g.bottom) continue;
        covers.push_back({id(x, 0), id(x, 2)});
        covers.push_back({id(x, 1), id(x, 2)});
    }
    for (int x : g.poset.up_covers(g.bottom)) {
        covers.push_back({0, id(x, 0)});
        covers.push_back({0, id(x, 1)});
    }
    return grade(Poset::from_cover_relations(1 + 3 * k, std::move(covers)));
}

namespace {

// Joint color refinement on (rank, down-cover colors, up-cover colors); one
// palette across both posets so the resulting ids are comparable.
void refine_colors(const Graded& a, const Graded& b, std::vector<int>& color_a,
                   std::vector<int>& color_b) {
    color_a = a.rank;
    color_b = b.rank;
    for (int round = 0; round < a.size(); ++round) {
        std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> palette;
        auto recolor = [&](const Graded& g, const std::vector<int>& color, std::vector<int>& next) {
            next.resize(g.size());
            for (int x = 0; x < g.size(); ++x) {
                std::vector<int> dn, up;
                for (int y : g.poset.down_covers(x)) dn.push_back(color[y]);
                for (int y : g.poset.up_covers(x)) up.push_back(color[y]);
                std::sort(dn.begin(), dn.end());
                std::sort(up.begin(), up.end());
                auto key = std::make_tuple(color[x], std::move(dn), std::move(up));
                auto [it, inserted] = palette.emplace(std::move(key), static_cast<int>(palette.size()));
                next[x] = it->second;
            }
        };
        std::vector<int> next_a, next_b;
        recolor(a, color_a, next_a);
        recolor(b, color_b, next_b);
        if (next_a == color_a && next_b == color_b) break;
        color_a = std::move(next_a);
        color_b = std::move(next_b);
    }
}

bool extend_isomorphism(const Graded& a, const Graded& b, const std::vector<int>& order,
                        const std::vector<int>& color_a, const std::vector<int>& color_b,
                        std::vector<int>& map_ab, std::vector<int>& map_ba, std::size_t next) {
    const int m = a.size();
    if (next == order.size()) return true;
    int x = order[next];
    for (int y = 0; y < m; ++y) {
        if (map_ba[y] != -1 || color_b[y] != color_a[x]) continue;
        bool ok = true;
        for (int z : a.poset.down_covers(x)) {
            if (map_ab[z] != -1 && std::find(b.poset.down_covers(y).begin(),
                                             b.poset.down_covers(y).end(),
                                             map_ab[z]) == b.poset.down_covers(y).end()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (int z : a.poset.up_covers(x)) {
                if (map_ab[z] != -1 && std::find(b.poset.up_covers(y).begin(),
                                                 b.poset.up_covers(y).end(),
                                                 map_ab[z]) == b.poset.up_covers(y).end()) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        map_ab[x] = y;
        map_ba[y] = x;
        if (extend_isomorphism(a, b, order, color_a, color_b, map_ab, map_ba, next + 1)) return true;
        map_ab[x] = -1;
        map_ba[y] = -1;
    }
    return false;
}

}  // namespace

bool graded_isomorphic(const Graded& a, const Graded& b) {
    if (a.size() != b.size() || a.rank_top != b.rank_top) return false;
    if (a.poset.covers().size() != b.poset.covers().size()) return false;
    std::vector<int> color_a, color_b;
    refine_colors(a, b, color_a, color_b);
    std::vector<int> hist_a(color_a), hist_b(color_b);
    std::sort(hist_a.begin(), hist_a.end());
    std::sort(hist_b.begin(), hist_b.end());
    if (hist_a != hist_b) return false;
    // Match bottom-up so cover constraints bind as early as possible.
    std::vector<int> order;
    for (const auto& layer : a.by_rank)
        for (int x : layer) order.push_back(x);
    std::vector<int> map_ab(a.size(), -1), map_ba(b.size(), -1);
    return extend_isomorphism(a, b, order, color_a, color_b, map_ab, map_ba, 0);
}

}  // namespace chainpoly
