#include "chainpoly.h"

#include "chainpoly/abindex.hpp"
#include "chainpoly/checks.hpp"
#include "chainpoly/eulerian.hpp"
#include "chainpoly/io.hpp"
#include "chainpoly/labelings.hpp"
#include "chainpoly/lattices.hpp"
#include "chainpoly/matroid.hpp"
#include "chainpoly/multisets.hpp"
#include "chainpoly/roots.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

using namespace chainpoly;
using nlohmann::json;

struct cp_poset {
    std::optional<BuiltLattice> built;
    std::optional<Graded> graded;
    std::optional<Poset> plain;

    const Poset& poset() const {
        if (built) return built->graded.poset;
        if (graded) return graded->poset;
        return *plain;
    }
    const Graded& require_graded() {
        if (built) return built->graded;
        if (!graded) graded = grade(*plain);
        return *graded;
    }
};

struct cp_poly {
    Polynomial value;
};

struct cp_ab {
    AbPolynomial value{0};
};

struct cp_matroid {
    Matroid value;
};

namespace {

thread_local std::string g_last_error;

cp_status map_code(errc code) {
    switch (code) {
        case errc::invalid_argument: return CP_ERR_INVALID_ARGUMENT;
        case errc::parse_error: return CP_ERR_PARSE;
        case errc::cycle_detected: return CP_ERR_CYCLE;
        case errc::not_bounded: return CP_ERR_NOT_BOUNDED;
        case errc::not_graded: return CP_ERR_NOT_GRADED;
        case errc::cap_exceeded: return CP_ERR_CAP_EXCEEDED;
        case errc::unsupported: return CP_ERR_UNSUPPORTED;
        case errc::host_mismatch: return CP_ERR_HOST_MISMATCH;
        case errc::io_error: return CP_ERR_IO;
        case errc::odd_coefficient: return CP_ERR_ODD_COEFFICIENT;
        case errc::asymmetric: return CP_ERR_ASYMMETRIC;
        case errc::internal: return CP_ERR_INTERNAL;
    }
    return CP_ERR_INTERNAL;
}

template <typename Fn>
cp_status guard(Fn&& fn) noexcept {
    try {
        fn();
        return CP_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CP_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return CP_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void need(const void* p) {
    if (!p) throw Error(errc::invalid_argument, "null argument");
}

std::optional<Rat> parse_bound(const char* text) {
    std::string s = text ? text : "";
    if (s.empty() || s == "-inf" || s == "inf" || s == "+inf") return std::nullopt;
    return rat_from_string(s);
}

LatticeCaps caps_with(int caps_override) {
    LatticeCaps caps;
    caps.override_caps = caps_override != 0;
    return caps;
}

MultisetCaps mcaps_with(int caps_override) {
    MultisetCaps caps;
    caps.override_caps = caps_override != 0;
    return caps;
}

cp_poset* wrap_built(BuiltLattice&& built) {
    auto* p = new cp_poset;
    p->built = std::move(built);
    return p;
}

WordKind parse_kind(const char* kind) {
    std::string k = kind ? kind : "";
    if (k == "A") return WordKind::A;
    if (k == "B") return WordKind::B;
    if (k == "A-star") return WordKind::AStar;
    if (k == "B-star") return WordKind::BStar;
    if (k == "A-signed") return WordKind::ASigned;
    throw Error(errc::invalid_argument, "unknown word kind: " + k);
}

std::string set_key(unsigned mask, int offset) {
    std::string key;
    for (int i = 0; mask >> i; ++i) {
        if (!(mask & (1u << i))) continue;
        if (!key.empty()) key += ",";
        key += std::to_string(i + offset);
    }
    return key;
}

}  // namespace

extern "C" {

const char* cp_version(void) { return "chainpoly 1.0.0"; }

const char* cp_last_error(void) { return g_last_error.c_str(); }

void cp_poset_free(cp_poset* p) { delete p; }
void cp_poly_free(cp_poly* p) { delete p; }
void cp_ab_free(cp_ab* p) { delete p; }
void cp_matroid_free(cp_matroid* m) { delete m; }
void cp_string_free(char* s) { std::free(s); }

/* ---- constructors ----------------------------------------------------- */

cp_status cp_poset_boolean(int n, cp_poset** out) {
    return guard([&] {
        need(out);
        *out = wrap_built(boolean_lattice(n));
    });
}

cp_status cp_poset_subspace(int n, int q, int caps_override, cp_poset** out) {
    return guard([&] {
        need(out);
        *out = wrap_built(subspace_lattice(n, q, caps_with(caps_override)));
    });
}

cp_status cp_poset_partition_a(int n, int caps_override, cp_poset** out) {
    return guard([&] {
        need(out);
        *out = wrap_built(partition_lattice(n, caps_with(caps_override)));
    });
}

cp_status cp_poset_partition_b(int n, int caps_override, cp_poset** out) {
    return guard([&] {
        need(out);
        *out = wrap_built(partition_lattice_b(n, caps_with(caps_override)));
    });
}

cp_status cp_poset_partition_d(int n, int caps_override, cp_poset** out) {
    return guard([&] {
        need(out);
        *out = wrap_built(partition_lattice_d(n, caps_with(caps_override)));
    });
}

cp_status cp_poset_uniform(int m, int n, cp_poset** out) {
    return guard([&] {
        need(out);
        *out = wrap_built(uniform_flats(m, n));
    });
}

cp_status cp_poset_near_pencil(int m, int n, cp_poset** out) {
    return guard([&] {
        need(out);
        *out = wrap_built(near_pencil_flats(m, n));
    });
}

cp_status cp_poset_simplex(int n, cp_poset** out) {
    return guard([&] {
        need(out);
        *out = wrap_built(simplex_face_lattice(n));
    });
}

cp_status cp_poset_cube(int n, cp_poset** out) {
    return guard([&] {
        need(out);
        *out = wrap_built(cube_face_lattice(n));
    });
}

/* ---- poset io and queries --------------------------------------------- */

cp_status cp_poset_read_text(const char* text, cp_poset** out) {
    return guard([&] {
        need(text);
        need(out);
        auto* p = new cp_poset;
        p->plain = poset_from_text(text);
        *out = p;
    });
}

cp_status cp_poset_read_file(const char* path, cp_poset** out) {
    return guard([&] {
        need(path);
        need(out);
        auto* p = new cp_poset;
        p->plain = poset_from_text(read_file(path));
        *out = p;
    });
}

cp_status cp_poset_read_json(const char* text, cp_poset** out) {
    return guard([&] {
        need(text);
        need(out);
        auto* p = new cp_poset;
        p->plain = poset_from_json(text);
        *out = p;
    });
}

cp_status cp_poset_write_text(const cp_poset* p, char** out) {
    return guard([&] {
        need(p);
        need(out);
        *out = dup_string(poset_to_text(p->poset()));
    });
}

cp_status cp_poset_write_json(const cp_poset* p, char** out) {
    return guard([&] {
        need(p);
        need(out);
        *out = dup_string(poset_to_json(p->poset()));
    });
}

cp_status cp_poset_size(const cp_poset* p, int* out) {
    return guard([&] {
        need(p);
        need(out);
        *out = p->poset().size();
    });
}

cp_status cp_poset_rank(cp_poset* p, int* out) {
    return guard([&] {
        need(p);
        need(out);
        *out = p->require_graded().rank_top;
    });
}

cp_status cp_poset_chain_poly(const cp_poset* p, cp_poly** out) {
    return guard([&] {
        need(p);
        need(out);
        *out = new cp_poly{p->poset().chain_polynomial()};
    });
}

cp_status cp_poset_h_poly(const cp_poset* p, cp_poly** out) {
    return guard([&] {
        need(p);
        need(out);
        *out = new cp_poly{p->poset().h_polynomial()};
    });
}

cp_status cp_poset_h_bounded(cp_poset* p, cp_poly** out) {
    return guard([&] {
        need(p);
        need(out);
        *out = new cp_poly{h_of_bounded(p->require_graded())};
    });
}

cp_status cp_poset_maximal_chains(cp_poset* p, char** out) {
    return guard([&] {
        need(p);
        need(out);
        *out = dup_string(maximal_chain_count(p->require_graded()).get_str());
    });
}

cp_status cp_poset_flags_json(cp_poset* p, const char* via, int workers, char** out) {
    return guard([&] {
        need(p);
        need(out);
        std::string route = via ? via : "rank-selection";
        FlagVector fv;
        if (route == "rank-selection") {
            fv = beta_flag(p->require_graded());
        } else if (route == "labeling") {
            if (!p->built)
                throw Error(errc::host_mismatch,
                            "labeling route requires a partition lattice handle");
            if (p->built->family == Family::partition_a) {
                fv = flag_from_labeling(gessel_labeling(*p->built), workers);
            } else if (p->built->family == Family::partition_b) {
                fv = flag_from_labeling(typeb_labeling(*p->built), workers);
            } else {
                throw Error(errc::host_mismatch,
                            "labeling route requires a type A or B partition lattice");
            }
        } else {
            throw Error(errc::invalid_argument, "via must be rank-selection or labeling");
        }
        *out = dup_string(flags_to_json(fv));
    });
}

cp_status cp_poset_pyramid(cp_poset* p, cp_poset** out) {
    return guard([&] {
        need(p);
        need(out);
        auto* r = new cp_poset;
        r->graded = pyramid_poset(p->require_graded());
        *out = r;
    });
}

cp_status cp_poset_prism(cp_poset* p, cp_poset** out) {
    return guard([&] {
        need(p);
        need(out);
        auto* r = new cp_poset;
        r->graded = prism_poset(p->require_graded());
        *out = r;
    });
}

cp_status cp_poset_dual(const cp_poset* p, cp_poset** out) {
    return guard([&] {
        need(p);
        need(out);
        auto* r = new cp_poset;
        r->plain = p->poset().dual();
        *out = r;
    });
}

cp_status cp_poset_interval(const cp_poset* p, int x, int y, cp_poset** out) {
    return guard([&] {
        need(p);
        need(out);
        auto* r = new cp_poset;
        r->plain = p->poset().interval(x, y);
        *out = r;
    });
}

cp_status cp_poset_remove_extremes(cp_poset* p, cp_poset** out) {
    return guard([&] {
        need(p);
        need(out);
        auto* r = new cp_poset;
        r->plain = remove_extremes(p->require_graded());
        *out = r;
    });
}

cp_status cp_poset_isomorphic(cp_poset* a, cp_poset* b, int* out) {
    return guard([&] {
        need(a);
        need(b);
        need(out);
        *out = graded_isomorphic(a->require_graded(), b->require_graded()) ? 1 : 0;
    });
}

cp_status cp_poset_ab_index(cp_poset* p, cp_ab** out) {
    return guard([&] {
        need(p);
        need(out);
        *out = new cp_ab{ab_index(p->require_graded())};
    });
}

cp_status cp_poset_zonotope_h(cp_poset* p, cp_poly** out) {
    return guard([&] {
        need(p);
        need(out);
        *out = new cp_poly{zonotope_h_from_flags(beta_flag(p->require_graded()))};
    });
}

/* ---- polynomials -------------------------------------------------------- */

cp_status cp_poly_from_json(const char* text, cp_poly** out) {
    return guard([&] {
        need(text);
        need(out);
        *out = new cp_poly{polynomial_from_json(text)};
    });
}

cp_status cp_poly_to_json(const cp_poly* p, char** out) {
    return guard([&] {
        need(p);
        need(out);
        *out = dup_string(polynomial_to_json(p->value));
    });
}

cp_status cp_poly_to_pretty(const cp_poly* p, char** out) {
    return guard([&] {
        need(p);
        need(out);
        *out = dup_string(p->value.to_string());
    });
}

cp_status cp_poly_degree(const cp_poly* p, int* out) {
    return guard([&] {
        need(p);
        need(out);
        *out = p->value.degree();
    });
}

cp_status cp_poly_eulerian_a(int n, cp_poly** out) {
    return guard([&] {
        need(out);
        *out = new cp_poly{eulerian_a(n)};
    });
}

cp_status cp_poly_eulerian_b(int n, cp_poly** out) {
    return guard([&] {
        need(out);
        *out = new cp_poly{eulerian_b(n)};
    });
}

cp_status cp_poly_eulerian_aq(int n, const char* q, cp_poly** out) {
    return guard([&] {
        need(q);
        need(out);
        *out = new cp_poly{eulerian_aq(n, rat_from_string(q))};
    });
}

cp_status cp_poly_is_real_rooted(const cp_poly* p, int* out) {
    return guard([&] {
        need(p);
        need(out);
        *out = is_real_rooted(p->value) ? 1 : 0;
    });
}

cp_status cp_poly_sturm_count(const cp_poly* p, const char* lo, const char* hi, long* out) {
    return guard([&] {
        need(p);
        need(out);
        *out = sturm_count(p->value, parse_bound(lo), parse_bound(hi));
    });
}

cp_status cp_poly_interlaces(const cp_poly* f, const cp_poly* g, int* out) {
    return guard([&] {
        need(f);
        need(g);
        need(out);
        *out = interlaces(f->value, g->value) ? 1 : 0;
    });
}

cp_status cp_poly_isolate_json(const cp_poly* p, const char* width, char** out) {
    return guard([&] {
        need(p);
        need(out);
        RootIsolation iso = isolate_roots(p->value);
        if (width && *width) iso.refine_to_width(rat_from_string(width));
        json arr = json::array();
        for (const auto& iv : iso.intervals()) {
            json j;
            j["lo"] = rat_to_string(iv.lo);
            j["hi"] = rat_to_string(iv.hi);
            j["multiplicity"] = iv.multiplicity;
            j["exact"] = iv.exact;
            arr.push_back(std::move(j));
        }
        *out = dup_string(arr.dump());
    });
}

cp_status cp_poly_gamma_json(const cp_poly* p, int n, char** out) {
    return guard([&] {
        need(p);
        need(out);
        GammaResult g = gamma_decompose(p->value, n);
        if (!g.symmetric)
            throw Error(errc::asymmetric, "polynomial is not symmetric with center " +
                                              std::to_string(n) + "/2 (coefficient " +
                                              std::to_string(g.bad_index) + ")");
        json arr = json::array();
        for (const Rat& v : g.gamma) arr.push_back(rat_to_string(v));
        *out = dup_string(arr.dump());
    });
}

cp_status cp_poly_pyr(const cp_poly* h, int rank, cp_poly** out) {
    return guard([&] {
        need(h);
        need(out);
        *out = new cp_poly{pyr_h(h->value, rank)};
    });
}

cp_status cp_poly_prism(const cp_poly* h, int rank, cp_poly** out) {
    return guard([&] {
        need(h);
        need(out);
        *out = new cp_poly{prism_h(h->value, rank)};
    });
}

/* ---- ab-polynomials ------------------------------------------------------ */

cp_status cp_ab_from_json(const char* text, cp_ab** out) {
    return guard([&] {
        need(text);
        need(out);
        *out = new cp_ab{ab_from_json(text)};
    });
}

cp_status cp_ab_to_json(const cp_ab* psi, char** out) {
    return guard([&] {
        need(psi);
        need(out);
        *out = dup_string(ab_to_json(psi->value));
    });
}

cp_status cp_ab_omega(const cp_ab* v, cp_ab** out) {
    return guard([&] {
        need(v);
        need(out);
        *out = new cp_ab{omega_map(v->value)};
    });
}

cp_status cp_ab_derivation(const cp_ab* v, cp_ab** out) {
    return guard([&] {
        need(v);
        need(out);
        *out = new cp_ab{derivation_d(v->value)};
    });
}

cp_status cp_ab_pyr(const cp_ab* psi, cp_ab** out) {
    return guard([&] {
        need(psi);
        need(out);
        *out = new cp_ab{pyr_ab(psi->value)};
    });
}

cp_status cp_ab_prism(const cp_ab* psi, cp_ab** out) {
    return guard([&] {
        need(psi);
        need(out);
        *out = new cp_ab{prism_ab(psi->value)};
    });
}

cp_status cp_ab_zonotope(const cp_ab* psi, cp_ab** out) {
    return guard([&] {
        need(psi);
        need(out);
        *out = new cp_ab{zonotope_ab(psi->value)};
    });
}

cp_status cp_ab_specialize(const cp_ab* psi, cp_poly** out) {
    return guard([&] {
        need(psi);
        need(out);
        *out = new cp_poly{specialize_ab(psi->value)};
    });
}

/* ---- word multisets ------------------------------------------------------ */

cp_status cp_stats_json(const char* kind, int n, const char* by, int caps_override, char** out) {
    return guard([&] {
        need(kind);
        need(by);
        need(out);
        WordKind wk = parse_kind(kind);
        MultisetCaps caps = mcaps_with(caps_override);
        std::string mode = by;
        WordMultiset ms = WordMultiset::make(wk, n, caps);
        if (mode == "set") {
            // For signed words the positions include the sentinel 0.
            std::map<std::string, Int> hist;
            if (wk == WordKind::ASigned) {
                for_each_word(ms, [&](const std::vector<int>& w, const Int& mult) {
                    unsigned mask = 0;
                    int prev = 0, idx = 0;
                    for (int v : w) {
                        if (prev > v || (prev == v && v > 0)) mask |= 1u << idx;
                        prev = v;
                        ++idx;
                    }
                    hist[set_key(mask, 0)] += mult;
                });
            } else {
                for_each_word(ms, [&](const std::vector<int>& w, const Int& mult) {
                    hist[set_key(weak_descent_mask(w), 1)] += mult;
                });
            }
            json j = json::object();
            for (const auto& [key, value] : hist) j[key] = value.get_str();
            *out = dup_string(j.dump());
        } else if (mode == "count") {
            std::vector<Int> hist(ms.length() + 1, 0);
            if (wk == WordKind::ASigned) {
                for_each_word(ms, [&](const std::vector<int>& w, const Int& mult) {
                    hist[edes_b(w)] += mult;
                });
            } else {
                for_each_word(ms, [&](const std::vector<int>& w, const Int& mult) {
                    hist[__builtin_popcount(weak_descent_mask(w))] += mult;
                });
            }
            while (hist.size() > 1 && hist.back() == 0) hist.pop_back();
            json arr = json::array();
            for (const Int& v : hist) arr.push_back(v.get_str());
            *out = dup_string(arr.dump());
        } else if (mode == "lpeak") {
            if (wk == WordKind::ASigned)
                throw Error(errc::invalid_argument, "lpeak applies to unsigned kinds");
            std::vector<Int> hist(ms.length() / 2 + 1, 0);
            for_each_word(ms, [&](const std::vector<int>& w, const Int& mult) {
                hist[lpeak_word(w)] += mult;
            });
            while (hist.size() > 1 && hist.back() == 0) hist.pop_back();
            json arr = json::array();
            for (const Int& v : hist) arr.push_back(v.get_str());
            *out = dup_string(arr.dump());
        } else {
            throw Error(errc::invalid_argument, "by must be set, count or lpeak");
        }
    });
}

cp_status cp_descent_h(const char* kind, int n, int caps_override, cp_poly** out) {
    return guard([&] {
        need(kind);
        need(out);
        *out = new cp_poly{descent_h(parse_kind(kind), n, mcaps_with(caps_override))};
    });
}

cp_status cp_hk_json(const char* kind, int n, int caps_override, char** out) {
    return guard([&] {
        need(kind);
        need(out);
        auto seq = hk_recurrence(parse_kind(kind), n, mcaps_with(caps_override));
        json arr = json::array();
        for (const Polynomial& p : seq) arr.push_back(json::parse(polynomial_to_json(p)));
        *out = dup_string(arr.dump());
    });
}

cp_status cp_sd2_json(int n, char** out, int* agree) {
    return guard([&] {
        need(out);
        json j;
        Polynomial flags_route = sd2_h(n);
        j["n"] = n;
        j["h"] = json::parse(polynomial_to_json(flags_route));
        json routes;
        routes["flags"] = json::parse(polynomial_to_json(flags_route));
        bool all_agree = true;
        if (n <= 8) {
            Polynomial words = sd2_h_words(n);
            routes["words"] = json::parse(polynomial_to_json(words));
            all_agree = all_agree && words == flags_route;
        }
        if (n <= 5) {
            Polynomial poset_route = sd2_h_poset(n);
            routes["poset"] = json::parse(polynomial_to_json(poset_route));
            all_agree = all_agree && poset_route == flags_route;
        }
        j["routes"] = std::move(routes);
        json gamma = json::array();
        for (const Int& g : sd2_gamma(n)) gamma.push_back(g.get_str());
        j["gamma"] = std::move(gamma);
        j["agree"] = all_agree;
        if (agree) *agree = all_agree ? 1 : 0;
        *out = dup_string(j.dump());
    });
}

/* ---- matroids -------------------------------------------------------------- */

cp_status cp_matroid_read_text(const char* text, const char* name, cp_matroid** out) {
    return guard([&] {
        need(text);
        need(out);
        *out = new cp_matroid{matroid_from_text(text, name ? name : "")};
    });
}

cp_status cp_matroid_read_file(const char* path, cp_matroid** out) {
    return guard([&] {
        need(path);
        need(out);
        *out = new cp_matroid{matroid_from_file(path)};
    });
}

cp_status cp_matroid_from_revlex(int ground, int rank, const char* encoding, const char* name,
                                 cp_matroid** out) {
    return guard([&] {
        need(encoding);
        need(out);
        *out = new cp_matroid{
            chainpoly::matroid_from_revlex(ground, rank, encoding, name ? name : "")};
    });
}

cp_status cp_matroid_to_text(const cp_matroid* m, char** out) {
    return guard([&] {
        need(m);
        need(out);
        *out = dup_string(matroid_to_text(m->value));
    });
}

cp_status cp_matroid_ground(const cp_matroid* m, int* out) {
    return guard([&] {
        need(m);
        need(out);
        *out = m->value.ground();
    });
}

cp_status cp_matroid_rank(const cp_matroid* m, int* out) {
    return guard([&] {
        need(m);
        need(out);
        *out = m->value.rank();
    });
}

cp_status cp_matroid_verify_exchange(const cp_matroid* m, int* ok, char** witness_json) {
    return guard([&] {
        need(m);
        need(ok);
        auto violation = verify_exchange(m->value);
        *ok = violation ? 0 : 1;
        if (witness_json) {
            if (violation) {
                json j;
                j["basis_a"] = violation->basis_a;
                j["basis_b"] = violation->basis_b;
                j["element"] = violation->element;
                *witness_json = dup_string(j.dump());
            } else {
                *witness_json = nullptr;
            }
        }
    });
}

cp_status cp_matroid_add_coloop(const cp_matroid* m, cp_matroid** out) {
    return guard([&] {
        need(m);
        need(out);
        *out = new cp_matroid{add_coloop(m->value)};
    });
}

cp_status cp_matroid_flats(const cp_matroid* m, cp_poset** out) {
    return guard([&] {
        need(m);
        need(out);
        auto* p = new cp_poset;
        p->graded = flats_lattice(m->value).graded;
        *out = p;
    });
}

cp_status cp_matroid_rank_of(const cp_matroid* m, const int* elements, int count, int* out) {
    return guard([&] {
        need(m);
        need(out);
        if (count > 0) need(elements);
        std::uint32_t mask = 0;
        for (int i = 0; i < count; ++i) {
            if (elements[i] < 0 || elements[i] >= m->value.ground())
                throw Error(errc::invalid_argument, "element out of range");
            mask |= 1u << elements[i];
        }
        *out = m->value.rank_of(mask);
    });
}

cp_status cp_matroid_closure(const cp_matroid* m, const int* elements, int count, int* out_elements,
                             int* out_count) {
    return guard([&] {
        need(m);
        need(out_elements);
        need(out_count);
        if (count > 0) need(elements);
        std::uint32_t mask = 0;
        for (int i = 0; i < count; ++i) {
            if (elements[i] < 0 || elements[i] >= m->value.ground())
                throw Error(errc::invalid_argument, "element out of range");
            mask |= 1u << elements[i];
        }
        std::uint32_t cl = m->value.closure(mask);
        int k = 0;
        for (int e = 0; e < m->value.ground(); ++e)
            if (cl & (1u << e)) out_elements[k++] = e;
        *out_count = k;
    });
}

cp_status cp_matroid_gen_corpus(const char* directory, int max_elements, int* files_written) {
    return guard([&] {
        need(directory);
        if (max_elements < 1 || max_elements > 6)
            throw Error(errc::invalid_argument, "corpus enumeration covers 1..6 ground elements");
        int written = 0;
        for (int m = 1; m <= max_elements; ++m) {
            for (const Matroid& matroid : enumerate_simple_matroids(m)) {
                write_file(std::string(directory) + "/" + matroid.name() + ".bases",
                           matroid_to_text(matroid));
                ++written;
            }
        }
        for (const Matroid& matroid : spot_matroids()) {
            write_file(std::string(directory) + "/" + matroid.name() + ".bases",
                       matroid_to_text(matroid));
            ++written;
        }
        if (files_written) *files_written = written;
    });
}

/* ---- tables, certification, batch runs ----------------------------------- */

cp_status cp_tables_json(const char* id, char** out, int* all_match) {
    return guard([&] {
        need(id);
        need(out);
        std::vector<std::string> ids;
        if (std::string(id) == "all") {
            ids = table_ids();
        } else {
            ids.push_back(id);
        }
        json tables = json::array();
        bool match = true;
        for (const std::string& table_id : ids) {
            TableResult result = run_table(table_id);
            json rows = json::array();
            for (const TableRow& row : result.rows) {
                json r;
                r["n"] = row.n;
                r["expected"] = row.expected;
                r["actual"] = json::parse(polynomial_to_json(row.actual));
                r["match"] = row.match;
                rows.push_back(std::move(r));
            }
            tables.push_back({{"id", result.id}, {"rows", rows}, {"all_match", result.all_match}});
            match = match && result.all_match;
        }
        json j;
        j["tables"] = std::move(tables);
        j["all_match"] = match;
        if (all_match) *all_match = match ? 1 : 0;
        *out = dup_string(j.dump());
    });
}

cp_status cp_check_suite_json(const char* which, int nmax, char** out, int* pass) {
    return guard([&] {
        need(which);
        need(out);
        std::string w = which;
        SuiteResult result;
        if (w == "4.2") {
            result = check_cor42(nmax);
        } else if (w == "4.5") {
            result = check_cor45(nmax);
        } else if (w == "4.3") {
            result = check_conj43(nmax);
        } else if (w == "triple") {
            result = check_triple(nmax);
        } else {
            throw Error(errc::invalid_argument, "unknown suite: " + w);
        }
        json j;
        j["name"] = result.name;
        j["nmax"] = nmax;
        j["pass"] = result.pass;
        j["lines"] = result.lines;
        if (pass) *pass = result.pass ? 1 : 0;
        *out = dup_string(j.dump());
    });
}

cp_status cp_certify_poset_json(cp_poset* p, const char* which, const char* name, int with_timing,
                                char** out, int* pass) {
    return guard([&] {
        need(p);
        need(which);
        need(out);
        Certification cert =
            certify_lattice(name ? name : "poset", p->require_graded(), which);
        if (pass) *pass = cert.pass ? 1 : 0;
        *out = dup_string(certification_to_json(cert, with_timing != 0));
    });
}

cp_status cp_batch_check_json(const char* directory, const char* which, int workers,
                              int with_timing, char** out, int* all_pass) {
    return guard([&] {
        need(directory);
        need(which);
        need(out);
        BatchResult result = batch_check(directory, which, workers);
        json entries = json::array();
        for (const BatchEntry& entry : result.entries) {
            json e;
            e["file"] = entry.file;
            if (entry.parsed) {
                e["report"] = json::parse(certification_to_json(entry.cert, with_timing != 0));
            } else {
                e["error"] = entry.error;
            }
            entries.push_back(std::move(e));
        }
        json j;
        j["entries"] = std::move(entries);
        j["passed"] = result.passed;
        j["failed"] = result.failed;
        j["parse_errors"] = result.parse_errors;
        bool ok = result.failed == 0 && result.parse_errors == 0;
        j["all_pass"] = ok;
        if (all_pass) *all_pass = ok ? 1 : 0;
        *out = dup_string(j.dump());
    });
}

}  // extern "C"
