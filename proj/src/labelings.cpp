#include "chainpoly/labelings.hpp"

#include "chainpoly/parallel.hpp"

#include <algorithm>
#include <limits>

namespace chainpoly {

namespace {

int cover_index_of(const Poset& p, int lo, int hi) {
    const auto& covers = p.covers();
    auto it = std::lower_bound(covers.begin(), covers.end(), std::pair<int, int>{lo, hi});
    if (it == covers.end() || *it != std::pair<int, int>{lo, hi})
        throw Error(errc::invalid_argument, "not a cover relation");
    return static_cast<int>(it - covers.begin());
}

EdgeLabeling labeling_from_cover_info(const BuiltLattice& host) {
    EdgeLabeling l;
    l.host = &host;
    l.labels.resize(host.graded.poset.covers().size());
    for (std::size_t c = 0; c < l.labels.size(); ++c) {
        int x = host.graded.poset.covers()[c].first;
        const CoverInfo& info = host.cover_info[c];
        l.labels[c] = host.block_mins[x][info.j - 1];
    }
    return l;
}

// Adjacency with labels for chain walks: per element, (up neighbor, label).
std::vector<std::vector<std::pair<int, int>>> up_adjacency(const EdgeLabeling& l) {
    const Poset& p = l.host->graded.poset;
    std::vector<std::vector<std::pair<int, int>>> up(p.size());
    for (std::size_t c = 0; c < p.covers().size(); ++c) {
        auto [a, b] = p.covers()[c];
        up[a].push_back({b, l.labels[c]});
    }
    return up;
}

}  // namespace

EdgeLabeling gessel_labeling(const BuiltLattice& host) {
    if (host.family != Family::partition_a)
        throw Error(errc::host_mismatch, "gessel_labeling: host must be a type A partition lattice");
    return labeling_from_cover_info(host);
}

EdgeLabeling typeb_labeling(const BuiltLattice& host) {
    if (host.family != Family::partition_b)
        throw Error(errc::host_mismatch, "typeb_labeling: host must be a type B partition lattice");
    return labeling_from_cover_info(host);
}

std::optional<StrictRFailure> verify_strict_r(const EdgeLabeling& labeling, int element_cap) {
    const Graded& g = labeling.host->graded;
    if (g.size() > element_cap)
        throw Error(errc::cap_exceeded, "verify_strict_r: poset exceeds the element cap");
    auto up = up_adjacency(labeling);

    for (int x = 0; x < g.size(); ++x) {
        for (int y = 0; y < g.size(); ++y) {
            if (x == y || !g.poset.less(x, y)) continue;
            long found = 0;
            auto dfs = [&](auto&& self, int z, int last) -> void {
                if (found >= 2) return;
                if (z == y) {
                    ++found;
                    return;
                }
                for (auto [w, lab] : up[z]) {
                    if (lab > last && g.poset.leq(w, y)) self(self, w, lab);
                }
            };
            dfs(dfs, x, std::numeric_limits<int>::min());
            if (found != 1) return StrictRFailure{x, y, found};
        }
    }
    return std::nullopt;
}

FlagVector flag_from_labeling(const EdgeLabeling& labeling, int workers) {
    const Graded& g = labeling.host->graded;
    const int n = g.rank_top;
    const unsigned subsets = n >= 1 ? (1u << (n - 1)) : 1u;
    auto up = up_adjacency(labeling);

    // One accumulator per first cover step; merged in order afterwards.
    const auto& first = up[g.bottom];
    std::vector<std::vector<Int>> partial(first.size(), std::vector<Int>(subsets, 0));
    parallel_for(static_cast<int>(first.size()), workers, [&](int t) {
        auto& acc = partial[t];
        auto rec = [&](auto&& self, int z, int rank, int last, unsigned mask) -> void {
            if (z == g.top) {
                acc[mask] += 1;
                return;
            }
            for (auto [w, lab] : up[z]) {
                unsigned next_mask = mask;
                if (last >= lab) next_mask |= 1u << (rank - 1);
                self(self, w, rank + 1, lab, next_mask);
            }
        };
        rec(rec, first[t].first, 1, first[t].second, 0u);
    });

    FlagVector fv;
    fv.rank_top = n;
    fv.beta.assign(subsets, 0);
    for (const auto& acc : partial)
        for (unsigned m = 0; m < subsets; ++m) fv.beta[m] += acc[m];
    if (g.bottom == g.top) fv.beta[0] = 1;
    return fv;
}

void for_each_maximal_chain(const Graded& g,
                            const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> chain{g.bottom};
    auto rec = [&](auto&& self, int z) -> void {
        if (z == g.top) {
            fn(chain);
            return;
        }
        for (int w : g.poset.up_covers(z)) {
            chain.push_back(w);
            self(self, w);
            chain.pop_back();
        }
    };
    rec(rec, g.bottom);
}

std::vector<int> psi_word(const BuiltLattice& host, const std::vector<int>& chain) {
    if (host.family != Family::partition_a && host.family != Family::partition_b)
        throw Error(errc::host_mismatch, "psi_word: host must be a type A or B partition lattice");
    std::vector<int> word;
    word.reserve(chain.size() - 1);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        int idx = cover_index_of(host.graded.poset, chain[i], chain[i + 1]);
        word.push_back(host.cover_info[idx].j);
    }
    return word;
}

std::vector<int> descent_set_of_chain(const EdgeLabeling& labeling, const std::vector<int>& chain) {
    const Poset& p = labeling.host->graded.poset;
    std::vector<int> seq;
    seq.reserve(chain.size() - 1);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        seq.push_back(labeling.labels[cover_index_of(p, chain[i], chain[i + 1])]);
    std::vector<int> descents;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] >= seq[i + 1]) descents.push_back(static_cast<int>(i) + 1);
    return descents;
}

}  // namespace chainpoly
