#include "chainpoly/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace chainpoly {

Matroid::Matroid(int ground, std::vector<std::uint32_t> bases, std::string name)
    : ground_(ground), bases_(std::move(bases)), name_(std::move(name)) {
    if (ground < 1 || ground > 20)
        throw Error(errc::invalid_argument, "matroid: ground set size out of range");
    if (bases_.empty()) throw Error(errc::invalid_argument, "matroid: no bases");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    rank_ = __builtin_popcount(bases_[0]);
    const std::uint32_t full = (ground >= 32) ? ~0u : ((1u << ground) - 1);
    for (std::uint32_t b : bases_) {
        if (b & ~full) throw Error(errc::invalid_argument, "matroid: basis element out of range");
        if (__builtin_popcount(b) != rank_)
            throw Error(errc::invalid_argument, "matroid: bases of unequal cardinality");
    }
}

int Matroid::rank_of(std::uint32_t subset) const {
    if (rank_cache_.empty()) rank_cache_.assign(std::size_t{1} << ground_, -1);
    std::int8_t& slot = rank_cache_[subset];
    if (slot >= 0) return slot;
    int best = 0;
    for (std::uint32_t b : bases_) best = std::max(best, __builtin_popcount(b & subset));
    slot = static_cast<std::int8_t>(best);
    return best;
}

std::uint32_t Matroid::closure(std::uint32_t subset) const {
    int r = rank_of(subset);
    std::uint32_t cl = subset;
    for (int e = 0; e < ground_; ++e) {
        if (subset & (1u << e)) continue;
        if (rank_of(subset | (1u << e)) == r) cl |= 1u << e;
    }
    return cl;
}

std::optional<ExchangeViolation> verify_exchange(const Matroid& m) {
    const auto& bases = m.bases();
    for (std::uint32_t a : bases) {
        for (std::uint32_t b : bases) {
            if (a == b) continue;
            std::uint32_t only_a = a & ~b;
            for (int x = 0; x < m.ground(); ++x) {
                if (!(only_a & (1u << x))) continue;
                bool found = false;
                std::uint32_t only_b = b & ~a;
                for (int y = 0; y < m.ground() && !found; ++y) {
                    if (!(only_b & (1u << y))) continue;
                    std::uint32_t candidate = (a & ~(1u << x)) | (1u << y);
                    found = std::binary_search(bases.begin(), bases.end(), candidate);
                }
                if (!found) return ExchangeViolation{a, b, x};
            }
        }
    }
    return std::nullopt;
}

Matroid uniform_matroid(int m, int r, std::string name) {
    if (r < 0 || r > m) throw Error(errc::invalid_argument, "uniform_matroid: need 0 <= r <= m");
    std::vector<std::uint32_t> bases;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
        if (__builtin_popcount(mask) == r) bases.push_back(mask);
    if (name.empty()) name = "U_" + std::to_string(m) + "_" + std::to_string(r);
    return Matroid(m, std::move(bases), std::move(name));
}

Matroid add_coloop(const Matroid& m) {
    std::vector<std::uint32_t> bases;
    bases.reserve(m.bases().size());
    const std::uint32_t coloop = 1u << m.ground();
    for (std::uint32_t b : m.bases()) bases.push_back(b | coloop);
    return Matroid(m.ground() + 1, std::move(bases), m.name().empty() ? "" : m.name() + "+coloop");
}

FlatLattice flats_lattice(const Matroid& m, bool verify_geometric) {
    if (m.ground() > 12)
        throw Error(errc::cap_exceeded, "flats_lattice: ground set cap is 12 elements");
    const std::uint32_t full = (1u << m.ground()) - 1;

    std::vector<std::vector<std::uint32_t>> by_rank(m.rank() + 1);
    by_rank[0].push_back(m.closure(0));
    for (int r = 0; r < m.rank(); ++r) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t f : by_rank[r]) {
            for (int e = 0; e < m.ground(); ++e) {
                if (f & (1u << e)) continue;
                std::uint32_t g = m.closure(f | (1u << e));
                next.push_back(g);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        by_rank[r + 1] = std::move(next);
    }
    if (by_rank[m.rank()] != std::vector<std::uint32_t>{full})
        throw Error(errc::internal, "flats_lattice: top flat is not the full ground set");

    std::vector<std::uint32_t> flats;
    std::vector<int> offset(m.rank() + 2, 0);
    for (int r = 0; r <= m.rank(); ++r) {
        offset[r + 1] = offset[r] + static_cast<int>(by_rank[r].size());
        flats.insert(flats.end(), by_rank[r].begin(), by_rank[r].end());
    }

    std::vector<std::pair<int, int>> covers;
    for (int r = 0; r < m.rank(); ++r) {
        for (std::size_t i = 0; i < by_rank[r].size(); ++i) {
            for (std::size_t j = 0; j < by_rank[r + 1].size(); ++j) {
                if ((by_rank[r][i] & ~by_rank[r + 1][j]) == 0)
                    covers.push_back({offset[r] + static_cast<int>(i),
                                      offset[r + 1] + static_cast<int>(j)});
            }
        }
    }

    std::vector<std::string> labels(flats.size());
    for (std::size_t i = 0; i < flats.size(); ++i) {
        std::ostringstream out;
        out << "{";
        bool first = true;
        for (int e = 0; e < m.ground(); ++e) {
            if (!(flats[i] & (1u << e))) continue;
            if (!first) out << ",";
            out << e;
            first = false;
        }
        out << "}";
        labels[i] = out.str();
    }

    Poset p = Poset::from_cover_relations(static_cast<int>(flats.size()), std::move(covers));
    p.set_labels(std::move(labels));
    FlatLattice lattice;
    lattice.graded = grade(std::move(p));
    lattice.flat_sets = std::move(flats);

    if (verify_geometric) {
        int atom_witness = -1;
        if (!check_atomic(lattice.graded, &atom_witness))
            throw Error(errc::internal, "flats_lattice: not atomic at element " +
                                            std::to_string(atom_witness));
        std::pair<int, int> sm_witness;
        if (!check_semimodular(lattice.graded, &sm_witness))
            throw Error(errc::internal,
                        "flats_lattice: semimodularity fails at pair (" +
                            std::to_string(sm_witness.first) + "," +
                            std::to_string(sm_witness.second) + ")");
    }
    return lattice;
}

namespace {

// Canonical form under ground-set permutations: the lexicographically
// smallest sorted basis list.
std::vector<std::uint32_t> canonical_bases(int m, const std::vector<std::uint32_t>& bases) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> mapped(bases.size());
    do {
        for (std::size_t i = 0; i < bases.size(); ++i) {
            std::uint32_t v = 0;
            for (int e = 0; e < m; ++e)
                if (bases[i] & (1u << e)) v |= 1u << perm[e];
            mapped[i] = v;
        }
        std::sort(mapped.begin(), mapped.end());
        if (best.empty() || mapped < best) best = mapped;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::vector<Matroid> spot_matroids() {
    std::vector<Matroid> out;

    // Fano plane: points 0..6, lines listed below; bases are the 3-subsets
    // that are not lines.
    const int fano_lines[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                  {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    auto triples_except = [](int m, const std::vector<std::uint32_t>& excluded) {
        std::vector<std::uint32_t> bases;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            if (__builtin_popcount(mask) != 3) continue;
            if (std::find(excluded.begin(), excluded.end(), mask) == excluded.end())
                bases.push_back(mask);
        }
        return bases;
    };
    std::vector<std::uint32_t> lines;
    for (const auto& line : fano_lines)
        lines.push_back((1u << line[0]) | (1u << line[1]) | (1u << line[2]));
    out.emplace_back(7, triples_except(7, lines), "fano");
    std::vector<std::uint32_t> nonfano_lines(lines.begin(), lines.end() - 1);
    out.emplace_back(7, triples_except(7, nonfano_lines), "nonfano");

    out.push_back(uniform_matroid(7, 3, "u_7_3"));

    // AG(3,2): points are the vectors of F_2^3 (index x + 2y + 4z); the
    // dependent 4-subsets are exactly the 14 affine planes a.v = c.
    std::vector<std::uint32_t> planes;
    for (int a = 1; a < 8; ++a) {
        for (int c = 0; c <= 1; ++c) {
            std::uint32_t plane = 0;
            for (int v = 0; v < 8; ++v) {
                int dot = __builtin_popcount(a & v) & 1;
                if (dot == c) plane |= 1u << v;
            }
            planes.push_back(plane);
        }
    }
    std::vector<std::uint32_t> ag_bases;
    for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
        if (__builtin_popcount(mask) != 4) continue;
        if (std::find(planes.begin(), planes.end(), mask) == planes.end()) ag_bases.push_back(mask);
    }
    out.emplace_back(8, std::move(ag_bases), "ag_3_2");

    out.push_back(uniform_matroid(8, 4, "u_8_4"));
    return out;
}

std::vector<Matroid> enumerate_simple_matroids(int ground) {
    if (ground < 1 || ground > 6)
        throw Error(errc::cap_exceeded, "enumerate_simple_matroids: ground set cap is 6");
    std::vector<Matroid> out;
    if (ground == 1) {
        out.push_back(uniform_matroid(1, 1));
        return out;
    }
    for (int r = 2; r <= ground; ++r) {
        // All r-subsets, indexed.
        std::vector<std::uint32_t> subsets;
        for (std::uint32_t mask = 0; mask < (1u << ground); ++mask)
            if (__builtin_popcount(mask) == r) subsets.push_back(mask);
        const int K = static_cast<int>(subsets.size());
        if (K > 30) throw Error(errc::cap_exceeded, "enumerate_simple_matroids: family too large");
        std::vector<int> index_of(1u << ground, -1);
        for (int i = 0; i < K; ++i) index_of[subsets[i]] = i;

        // For each pair of ground elements, which r-subsets contain it.
        std::vector<std::uint32_t> pair_cover;
        for (int i = 0; i < ground; ++i) {
            for (int j = i + 1; j < ground; ++j) {
                std::uint32_t cover = 0;
                for (int t = 0; t < K; ++t)
                    if ((subsets[t] & (1u << i)) && (subsets[t] & (1u << j))) cover |= 1u << t;
                pair_cover.push_back(cover);
            }
        }

        std::map<std::vector<std::uint32_t>, bool> seen;
        for (std::uint32_t family = 1; family < (1u << K); ++family) {
            bool covered = true;
            for (std::uint32_t pc : pair_cover) {
                if (!(family & pc)) {
                    covered = false;
                    break;
                }
            }
            if (!covered) continue;

            // Exchange axiom over the family.
            bool ok = true;
            for (int ai = 0; ai < K && ok; ++ai) {
                if (!(family & (1u << ai))) continue;
                for (int bi = 0; bi < K && ok; ++bi) {
                    if (ai == bi || !(family & (1u << bi))) continue;
                    std::uint32_t a = subsets[ai], b = subsets[bi];
                    std::uint32_t only_a = a & ~b, only_b = b & ~a;
                    for (int x = 0; x < ground && ok; ++x) {
                        if (!(only_a & (1u << x))) continue;
                        bool found = false;
                        for (int y = 0; y < ground && !found; ++y) {
                            if (!(only_b & (1u << y))) continue;
                            std::uint32_t cand = (a & ~(1u << x)) | (1u << y);
                            int ci = index_of[cand];
                            found = ci >= 0 && (family & (1u << ci));
                        }
                        if (!found) ok = false;
                    }
                }
            }
            if (!ok) continue;

            std::vector<std::uint32_t> bases;
            for (int t = 0; t < K; ++t)
                if (family & (1u << t)) bases.push_back(subsets[t]);
            auto canon = canonical_bases(ground, bases);
            if (seen.emplace(std::move(canon), true).second) {
                std::string name = "m" + std::to_string(ground) + "_r" + std::to_string(r) + "_" +
                                   std::to_string(seen.size() - 1);
                out.emplace_back(ground, std::move(bases), std::move(name));
            }
        }
    }
    return out;
}

}  // namespace chainpoly
