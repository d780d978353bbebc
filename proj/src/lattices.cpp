#include "chainpoly/lattices.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

namespace chainpoly {

namespace {

std::string subset_label(unsigned mask, int) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int e = 0; mask >> e; ++e) {
        if (!(mask & (1u << e))) continue;
        if (!first) out << ",";
        out << e + 1;
        first = false;
    }
    out << "}";
    return out.str();
}

void require(bool cond, errc code, const char* message) {
    if (!cond) throw Error(code, message);
}

}  // namespace

BuiltLattice boolean_lattice(int n) {
    require(n >= 1, errc::invalid_argument, "boolean_lattice: n must be positive");
    require(n <= 20, errc::cap_exceeded, "boolean_lattice: n too large");
    const int m = 1 << n;
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> labels(m);
    for (int mask = 0; mask < m; ++mask) {
        labels[mask] = subset_label(static_cast<unsigned>(mask), n);
        for (int e = 0; e < n; ++e)
            if (!(mask & (1 << e))) covers.push_back({mask, mask | (1 << e)});
    }
    Poset p = Poset::from_cover_relations(m, std::move(covers));
    p.set_labels(std::move(labels));
    BuiltLattice out;
    out.graded = grade(std::move(p));
    out.family = Family::boolean_family;
    out.n = n;
    return out;
}

// ---------------------------------------------------------------------------
// Subspace lattices.

namespace {

// Arithmetic tables for GF(q), q prime in {2,3,5} or q = 4 with
// GF(4) = {0, 1, w, w+1}, w^2 = w + 1, addition = xor.
struct GaloisField {
    int q = 0;
    int add[8][8] = {};
    int mul[8][8] = {};

    explicit GaloisField(int q_) : q(q_) {
        if (q == 2 || q == 3 || q == 5) {
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b) {
                    add[a][b] = (a + b) % q;
                    mul[a][b] = (a * b) % q;
                }
        } else if (q == 4) {
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) add[a][b] = a ^ b;
            const int table[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) mul[a][b] = table[a][b];
        } else {
            throw Error(errc::unsupported, "subspace_lattice: q must be one of 2, 3, 4, 5");
        }
    }

    int neg(int a) const {
        for (int b = 0; b < q; ++b)
            if (add[a][b] == 0) return b;
        return 0;
    }
};

using Row = std::vector<int>;

struct Subspace {
    int dim = 0;
    std::vector<Row> rows;       // reduced row echelon basis
    std::vector<int> pivots;     // pivot column per row
};

// v lies in the row space of s.
bool in_rowspace(const GaloisField& gf, const Subspace& s, Row v) {
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        int c = v[s.pivots[r]];
        if (c == 0) continue;
        int f = gf.neg(c);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = gf.add[v[j]][gf.mul[f][s.rows[r][j]]];
    }
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

bool subspace_contains(const GaloisField& gf, const Subspace& big, const Subspace& small) {
    for (const Row& v : small.rows)
        if (!in_rowspace(gf, big, v)) return false;
    return true;
}

void enumerate_rrefs(const GaloisField& gf, int n, int k, std::vector<Subspace>& out) {
    if (k == 0) {
        out.push_back(Subspace{0, {}, {}});
        return;
    }
    std::vector<int> pivots(k);
    // iterate over pivot column combinations
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        // free positions: (r, j) with j > pivot r and j not a pivot
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_pivot(n, false);
        for (int c : comb) is_pivot[c] = true;
        for (int r = 0; r < k; ++r)
            for (int j = comb[r] + 1; j < n; ++j)
                if (!is_pivot[j]) free_pos.push_back({r, j});

        std::vector<int> digits(free_pos.size(), 0);
        while (true) {
            Subspace s;
            s.dim = k;
            s.pivots = comb;
            s.rows.assign(k, Row(n, 0));
            for (int r = 0; r < k; ++r) s.rows[r][comb[r]] = 1;
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                s.rows[free_pos[t].first][free_pos[t].second] = digits[t];
            out.push_back(std::move(s));
            // odometer
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == gf.q) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
        // next combination
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
}

}  // namespace

BuiltLattice subspace_lattice(int n, int q, const LatticeCaps& caps) {
    require(n >= 1, errc::invalid_argument, "subspace_lattice: n must be positive");
    GaloisField gf(q);

    std::vector<std::vector<Subspace>> by_dim(n + 1);
    std::size_t total = 0;
    for (int k = 0; k <= n; ++k) {
        enumerate_rrefs(gf, n, k, by_dim[k]);
        total += by_dim[k].size();
        if (!caps.override_caps && total > static_cast<std::size_t>(caps.subspace_elements))
            throw Error(errc::cap_exceeded, "subspace_lattice: too many subspaces (override to force)");
    }

    std::vector<int> offset(n + 2, 0);
    for (int k = 0; k <= n; ++k) offset[k + 1] = offset[k] + static_cast<int>(by_dim[k].size());

    std::vector<std::pair<int, int>> covers;
    for (int k = 0; k + 1 <= n; ++k) {
        for (std::size_t i = 0; i < by_dim[k].size(); ++i)
            for (std::size_t j = 0; j < by_dim[k + 1].size(); ++j)
                if (subspace_contains(gf, by_dim[k + 1][j], by_dim[k][i]))
                    covers.push_back({offset[k] + static_cast<int>(i),
                                      offset[k + 1] + static_cast<int>(j)});
    }

    std::vector<std::string> labels(total);
    for (int k = 0; k <= n; ++k) {
        for (std::size_t i = 0; i < by_dim[k].size(); ++i) {
            std::ostringstream out;
            if (k == 0) {
                out << "0";
            } else {
                for (int r = 0; r < k; ++r) {
                    if (r) out << ";";
                    for (int c : by_dim[k][i].rows[r]) out << c;
                }
            }
            labels[offset[k] + i] = out.str();
        }
    }

    Poset p = Poset::from_cover_relations(static_cast<int>(total), std::move(covers));
    p.set_labels(std::move(labels));
    BuiltLattice out;
    out.graded = grade(std::move(p));
    out.family = Family::subspace;
    out.n = n;
    out.q = q;
    return out;
}

// ---------------------------------------------------------------------------
// Partition lattices.

namespace {

std::vector<std::vector<int>> rgs_blocks(const std::vector<int>& rgs) {
    int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(k);
    for (std::size_t i = 0; i < rgs.size(); ++i) blocks[rgs[i]].push_back(static_cast<int>(i) + 1);
    return blocks;  // block order = first occurrence = min, ascending
}

std::vector<int> canonical_rgs(std::vector<int> raw) {
    std::vector<int> relabel(raw.size(), -1);
    int next = 0;
    for (int& v : raw) {
        if (relabel[v] == -1) relabel[v] = next++;
        v = relabel[v];
    }
    return raw;
}

void enumerate_rgs(int n, std::vector<std::vector<int>>& out) {
    std::vector<int> rgs(n, 0);
    auto rec = [&](auto&& self, int pos, int maxb) -> void {
        if (pos == n) {
            out.push_back(rgs);
            return;
        }
        for (int b = 0; b <= maxb; ++b) {
            rgs[pos] = b;
            self(self, pos + 1, std::max(maxb, b + 1));
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

BuiltLattice partition_lattice(int n, const LatticeCaps& caps) {
    require(n >= 1, errc::invalid_argument, "partition_lattice: n must be positive");
    require(caps.override_caps || n <= caps.partition_a, errc::cap_exceeded,
            "partition_lattice: n exceeds cap (override to force)");

    std::vector<std::vector<int>> elems;
    enumerate_rgs(n, elems);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);

    BuiltLattice out;
    out.family = Family::partition_a;
    out.n = n;
    out.block_mins.resize(elems.size());

    std::vector<std::pair<int, int>> covers;
    std::vector<CoverInfo> infos;
    std::vector<std::string> labels(elems.size());
    for (std::size_t x = 0; x < elems.size(); ++x) {
        auto blocks = rgs_blocks(elems[x]);
        const int k = static_cast<int>(blocks.size());
        for (const auto& block : blocks) out.block_mins[x].push_back(block.front());
        {
            std::ostringstream lab;
            for (int b = 0; b < k; ++b) {
                if (b) lab << "|";
                for (std::size_t t = 0; t < blocks[b].size(); ++t) {
                    if (t) lab << ",";
                    lab << blocks[b][t];
                }
            }
            labels[x] = lab.str();
        }
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                std::vector<int> merged = elems[x];
                for (int& v : merged)
                    if (v == j) v = i;
                merged = canonical_rgs(std::move(merged));
                covers.push_back({static_cast<int>(x), index.at(merged)});
                infos.push_back(CoverInfo{CoverInfo::merge_pos, i + 1, j + 1});
            }
        }
    }

    Poset p = Poset::from_cover_relations(static_cast<int>(elems.size()), covers);
    p.set_labels(std::move(labels));
    // from_cover_relations sorts and dedupes; rebuild infos aligned with the
    // surviving covers. Merges of distinct pairs can produce the same cover
    // only for distinct (i, j), and each generated pair is a genuine cover;
    // map by pair.
    std::map<std::pair<int, int>, CoverInfo> info_of;
    for (std::size_t t = 0; t < covers.size(); ++t) info_of.emplace(covers[t], infos[t]);
    out.cover_info.clear();
    for (const auto& c : p.covers()) out.cover_info.push_back(info_of.at(c));
    out.graded = grade(std::move(p));
    return out;
}

// ---------------------------------------------------------------------------
// Type B and D partition lattices.

namespace {

// A signed partition: zero block as a mask over [n] (element e -> bit e-1),
// nonzero block pairs stored by their positive representative, elements
// sorted by absolute value, min-abs element positive, blocks sorted by
// min-abs. Encoded for indexing as a flat int vector.
struct BElem {
    unsigned zero = 0;
    std::vector<std::vector<int>> blocks;

    std::vector<int> key() const {
        std::vector<int> k;
        k.push_back(static_cast<int>(zero));
        for (const auto& b : blocks) {
            k.push_back(static_cast<int>(b.size()));
            k.insert(k.end(), b.begin(), b.end());
        }
        return k;
    }
};

void enumerate_b(int n, std::vector<BElem>& out) {
    BElem cur;
    auto rec = [&](auto&& self, int e) -> void {
        if (e > n) {
            out.push_back(cur);
            return;
        }
        cur.zero |= 1u << (e - 1);
        self(self, e + 1);
        cur.zero &= ~(1u << (e - 1));

        cur.blocks.push_back({e});
        self(self, e + 1);
        cur.blocks.pop_back();

        for (std::size_t b = 0; b < cur.blocks.size(); ++b) {
            for (int s : {+1, -1}) {
                cur.blocks[b].push_back(s * e);
                self(self, e + 1);
                cur.blocks[b].pop_back();
            }
        }
    };
    rec(rec, 1);
}

BElem merge_blocks(const BElem& x, int i, int j, int sign) {
    BElem y;
    y.zero = x.zero;
    for (int b = 0; b < static_cast<int>(x.blocks.size()); ++b) {
        if (b == j) continue;
        y.blocks.push_back(x.blocks[b]);
        if (b == i) {
            auto& target = y.blocks.back();
            for (int v : x.blocks[j]) target.push_back(sign * v);
            std::sort(target.begin(), target.end(),
                      [](int a, int c) { return std::abs(a) < std::abs(c); });
        }
    }
    return y;
}

BElem merge_into_zero(const BElem& x, int j) {
    BElem y;
    y.zero = x.zero;
    for (int v : x.blocks[j]) y.zero |= 1u << (std::abs(v) - 1);
    for (int b = 0; b < static_cast<int>(x.blocks.size()); ++b)
        if (b != j) y.blocks.push_back(x.blocks[b]);
    return y;
}

std::string b_label(const BElem& e) {
    std::ostringstream out;
    out << "{0";
    for (int v = 1; e.zero >> (v - 1); ++v)
        if (e.zero & (1u << (v - 1))) out << "," << v << "," << -v;
    out << "}";
    for (const auto& b : e.blocks) {
        out << "|{";
        for (std::size_t t = 0; t < b.size(); ++t) {
            if (t) out << ",";
            out << b[t];
        }
        out << "}";
    }
    return out.str();
}

BuiltLattice build_partition_b(int n) {
    std::vector<BElem> elems;
    enumerate_b(n, elems);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i].key()] = static_cast<int>(i);

    BuiltLattice out;
    out.family = Family::partition_b;
    out.n = n;
    out.block_mins.resize(elems.size());

    std::vector<std::pair<int, int>> covers;
    std::vector<CoverInfo> infos;
    std::vector<std::string> labels(elems.size());
    for (std::size_t x = 0; x < elems.size(); ++x) {
        const BElem& e = elems[x];
        labels[x] = b_label(e);
        const int k = static_cast<int>(e.blocks.size());
        for (const auto& b : e.blocks) out.block_mins[x].push_back(b.front());
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                covers.push_back({static_cast<int>(x), index.at(merge_blocks(e, i, j, +1).key())});
                infos.push_back(CoverInfo{CoverInfo::merge_pos, i + 1, j + 1});
                covers.push_back({static_cast<int>(x), index.at(merge_blocks(e, i, j, -1).key())});
                infos.push_back(CoverInfo{CoverInfo::merge_neg, i + 1, j + 1});
            }
        }
        for (int j = 0; j < k; ++j) {
            covers.push_back({static_cast<int>(x), index.at(merge_into_zero(e, j).key())});
            infos.push_back(CoverInfo{CoverInfo::merge_zero, j + 1, j + 1});
        }
    }

    Poset p = Poset::from_cover_relations(static_cast<int>(elems.size()), covers);
    p.set_labels(std::move(labels));
    std::map<std::pair<int, int>, CoverInfo> info_of;
    for (std::size_t t = 0; t < covers.size(); ++t) info_of.emplace(covers[t], infos[t]);
    out.cover_info.clear();
    for (const auto& c : p.covers()) out.cover_info.push_back(info_of.at(c));
    out.graded = grade(std::move(p));
    return out;
}

}  // namespace

BuiltLattice partition_lattice_b(int n, const LatticeCaps& caps) {
    require(n >= 1, errc::invalid_argument, "partition_lattice_b: n must be positive");
    require(caps.override_caps || n <= caps.partition_bd, errc::cap_exceeded,
            "partition_lattice_b: n exceeds cap (override to force)");
    return build_partition_b(n);
}

BuiltLattice partition_lattice_d(int n, const LatticeCaps& caps) {
    require(n >= 2, errc::invalid_argument, "partition_lattice_d: n must be at least 2");
    require(caps.override_caps || n <= caps.partition_bd, errc::cap_exceeded,
            "partition_lattice_d: n exceeds cap (override to force)");
    BuiltLattice b = build_partition_b(n);
    // Drop the elements whose zero block is {0, i, -i}, i.e. zero mask a
    // single bit. Covers are recomputed from the induced order; the type B
    // labeling provenance does not restrict, so the type D lattice ships
    // with rank-selection flags only.
    std::vector<BElem> elems;
    enumerate_b(n, elems);
    std::vector<int> keep;
    for (int x = 0; x < static_cast<int>(elems.size()); ++x)
        if (__builtin_popcount(elems[x].zero) != 1) keep.push_back(x);

    Poset induced = b.graded.poset.induced(keep);
    BuiltLattice out;
    out.family = Family::partition_d;
    out.n = n;
    out.graded = grade(std::move(induced));
    return out;
}

// ---------------------------------------------------------------------------
// Uniform matroids, near-pencils, polytope face lattices.

BuiltLattice uniform_flats(int m, int n) {
    require(2 <= n && n <= m, errc::invalid_argument, "uniform_flats: need 2 <= n <= m");
    require(m <= 20, errc::cap_exceeded, "uniform_flats: m too large");
    // Flats: all subsets of size < n, plus the full ground set.
    std::vector<unsigned> flats;
    for (unsigned mask = 0; mask < (1u << m); ++mask)
        if (__builtin_popcount(mask) < n) flats.push_back(mask);
    std::sort(flats.begin(), flats.end(), [](unsigned a, unsigned b) {
        return std::make_pair(__builtin_popcount(a), a) < std::make_pair(__builtin_popcount(b), b);
    });
    flats.push_back((1u << m) - 1);
    std::map<unsigned, int> index;
    for (std::size_t i = 0; i < flats.size(); ++i) index[flats[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> labels(flats.size());
    for (std::size_t i = 0; i < flats.size(); ++i) {
        unsigned f = flats[i];
        labels[i] = subset_label(f, m);
        int size = __builtin_popcount(f);
        if (static_cast<int>(i) == static_cast<int>(flats.size()) - 1) break;  // full set
        if (size + 1 < n) {
            for (int e = 0; e < m; ++e)
                if (!(f & (1u << e))) covers.push_back({static_cast<int>(i), index.at(f | (1u << e))});
        } else {
            covers.push_back({static_cast<int>(i), static_cast<int>(flats.size()) - 1});
        }
    }
    Poset p = Poset::from_cover_relations(static_cast<int>(flats.size()), std::move(covers));
    p.set_labels(std::move(labels));
    BuiltLattice out;
    out.graded = grade(std::move(p));
    out.family = Family::uniform;
    out.n = n;
    out.m = m;
    return out;
}

BuiltLattice near_pencil_flats(int m, int n) {
    require(2 <= n && n <= m, errc::invalid_argument, "near_pencil_flats: need 2 <= n <= m");
    BuiltLattice base = uniform_flats(m - n + 2, 2);
    Graded g = std::move(base.graded);
    for (int step = 0; step < n - 2; ++step) g = pyramid_poset(g);
    BuiltLattice out;
    out.graded = std::move(g);
    out.family = Family::near_pencil;
    out.n = n;
    out.m = m;
    return out;
}

BuiltLattice simplex_face_lattice(int n) {
    require(n >= 1, errc::invalid_argument, "simplex_face_lattice: n must be positive");
    BuiltLattice out = boolean_lattice(n + 1);
    out.family = Family::simplex;
    out.n = n;
    return out;
}

BuiltLattice cube_face_lattice(int n) {
    require(n >= 1, errc::invalid_argument, "cube_face_lattice: n must be positive");
    require(n <= 10, errc::cap_exceeded, "cube_face_lattice: n too large");
    // Nonempty faces are words over {0, 1, *}; digit 2 encodes *.
    int count = 1;
    for (int i = 0; i < n; ++i) count *= 3;
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> labels(count + 1);
    labels[0] = "{}";
    std::vector<int> digits(n, 0);
    for (int code = 0; code < count; ++code) {
        int v = code;
        int stars = 0;
        std::string word(n, '0');
        for (int i = 0; i < n; ++i) {
            digits[i] = v % 3;
            v /= 3;
            word[i] = digits[i] == 2 ? '*' : static_cast<char>('0' + digits[i]);
            if (digits[i] == 2) ++stars;
        }
        labels[code + 1] = word;
        if (stars == 0) covers.push_back({0, code + 1});
        int power = 1;
        for (int i = 0; i < n; ++i) {
            if (digits[i] != 2) covers.push_back({code + 1, code + (2 - digits[i]) * power + 1});
            power *= 3;
        }
    }
    Poset p = Poset::from_cover_relations(count + 1, std::move(covers));
    p.set_labels(std::move(labels));
    BuiltLattice out;
    out.graded = grade(std::move(p));
    out.family = Family::cube;
    out.n = n;
    return out;
}

// ---------------------------------------------------------------------------
// Lattice property checks.

namespace {

// Unique minimal element of a nonempty up-set or down-set; -1 when not
// unique (not a lattice).
int unique_extreme(const Graded& g, const Bitset& candidates, bool minimal) {
    int best = -1;
    for (int x = candidates.find_first(); x != static_cast<int>(Bitset::npos);
         x = candidates.find_next(x)) {
        if (best == -1 || (minimal ? g.rank[x] < g.rank[best] : g.rank[x] > g.rank[best])) best = x;
    }
    if (best == -1) return -1;
    for (int x = candidates.find_first(); x != static_cast<int>(Bitset::npos);
         x = candidates.find_next(x)) {
        if (x == best) continue;
        if (minimal ? !g.poset.less(best, x) : !g.poset.less(x, best)) return -1;
    }
    return best;
}

}  // namespace

bool check_semimodular(const Graded& g, std::pair<int, int>* witness) {
    const int m = g.size();
    for (int x = 0; x < m; ++x) {
        for (int y = x + 1; y < m; ++y) {
            if (g.poset.leq(x, y) || g.poset.leq(y, x)) continue;
            Bitset ups = g.poset.above(x) & g.poset.above(y);
            Bitset downs = g.poset.below(x) & g.poset.below(y);
            int join = unique_extreme(g, ups, true);
            int meet = unique_extreme(g, downs, false);
            if (join < 0 || meet < 0 ||
                g.rank[join] + g.rank[meet] > g.rank[x] + g.rank[y]) {
                if (witness) *witness = {x, y};
                return false;
            }
        }
    }
    return true;
}

bool check_atomic(const Graded& g, int* witness) {
    const int m = g.size();
    std::vector<int> atoms = g.rank_top >= 1 ? g.by_rank[1] : std::vector<int>{};
    for (int x = 0; x < m; ++x) {
        if (x == g.bottom) continue;
        Bitset common(static_cast<std::size_t>(m));
        common.set();
        bool any = false;
        for (int a : atoms) {
            if (!g.poset.leq(a, x)) continue;
            any = true;
            Bitset up = g.poset.above(a);
            up.set(a);
            common &= up;
        }
        if (!any) {
            if (witness) *witness = x;
            return false;
        }
        int join = unique_extreme(g, common, true);
        if (join != x) {
            if (witness) *witness = x;
            return false;
        }
    }
    return true;
}

}  // namespace chainpoly
