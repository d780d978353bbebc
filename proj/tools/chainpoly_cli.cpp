// Command-line front end. Talks to the library exclusively through the
// extern-C interface in chainpoly.h; everything here is argument parsing
// and output formatting.

#include "chainpoly.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
    void operator()(char* s) const { cp_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct PosetDeleter {
    void operator()(cp_poset* p) const { cp_poset_free(p); }
};
using PosetHandle = std::unique_ptr<cp_poset, PosetDeleter>;

struct PolyDeleter {
    void operator()(cp_poly* p) const { cp_poly_free(p); }
};
using PolyHandle = std::unique_ptr<cp_poly, PolyDeleter>;

struct AbDeleter {
    void operator()(cp_ab* p) const { cp_ab_free(p); }
};
using AbHandle = std::unique_ptr<cp_ab, AbDeleter>;

struct MatroidDeleter {
    void operator()(cp_matroid* m) const { cp_matroid_free(m); }
};
using MatroidHandle = std::unique_ptr<cp_matroid, MatroidDeleter>;

[[noreturn]] void fail_api(cp_status status) {
    std::fprintf(stderr, "error: %s\n", cp_last_error());
    // API statuses signal bad input or environment, not findings.
    std::exit(status == CP_ERR_INTERNAL ? kExitFinding : kExitUsage);
}

void require_ok(cp_status status) {
    if (status != CP_OK) fail_api(status);
}

struct OutputOptions {
    std::string format = "json";  // json | tsv
    std::string path;             // empty = stdout
};

void emit(const OutputOptions& opts, const std::string& text) {
    if (opts.path.empty()) {
        std::fputs(text.c_str(), stdout);
        if (text.empty() || text.back() != '\n') std::fputc('\n', stdout);
    } else {
        std::ofstream out(opts.path, std::ios::binary);
        if (!out) {
            std::fprintf(stderr, "error: cannot write %s\n", opts.path.c_str());
            std::exit(kExitUsage);
        }
        out << text;
        if (text.empty() || text.back() != '\n') out << '\n';
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
        std::exit(kExitUsage);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int env_workers() {
    const char* env = std::getenv("CHAINPOLY_WORKERS");
    if (!env) return 1;
    int w = std::atoi(env);
    return w >= 1 ? w : 1;
}

// Family selection shared by several subcommands.
struct FamilyOptions {
    std::string family;
    int n = 0;
    int q = 2;
    int m = 0;
    bool cap_override = false;
};

void add_family_options(CLI::App* cmd, FamilyOptions& fam, bool required) {
    auto* opt = cmd->add_option("--family", fam.family,
                                "lattice family: boolean|subspace|pi|piB|piD|uniform|"
                                "nearpencil|simplex|cube");
    if (required) opt->required();
    cmd->add_option("--n", fam.n, "family size parameter");
    cmd->add_option("--q", fam.q, "field size for subspace lattices");
    cmd->add_option("--m", fam.m, "ground-set size for uniform / near-pencil");
    cmd->add_flag("--cap-override", fam.cap_override, "override the documented resource caps");
}

PosetHandle build_family(const FamilyOptions& fam) {
    cp_poset* p = nullptr;
    cp_status st;
    int override_flag = fam.cap_override ? 1 : 0;
    if (fam.family == "boolean") {
        st = cp_poset_boolean(fam.n, &p);
    } else if (fam.family == "subspace") {
        st = cp_poset_subspace(fam.n, fam.q, override_flag, &p);
    } else if (fam.family == "pi") {
        st = cp_poset_partition_a(fam.n, override_flag, &p);
    } else if (fam.family == "piB") {
        st = cp_poset_partition_b(fam.n, override_flag, &p);
    } else if (fam.family == "piD") {
        st = cp_poset_partition_d(fam.n, override_flag, &p);
    } else if (fam.family == "uniform") {
        st = cp_poset_uniform(fam.m, fam.n, &p);
    } else if (fam.family == "nearpencil") {
        st = cp_poset_near_pencil(fam.m, fam.n, &p);
    } else if (fam.family == "simplex") {
        st = cp_poset_simplex(fam.n, &p);
    } else if (fam.family == "cube") {
        st = cp_poset_cube(fam.n, &p);
    } else {
        std::fprintf(stderr, "error: unknown family '%s'\n", fam.family.c_str());
        std::exit(kExitUsage);
    }
    require_ok(st);
    return PosetHandle(p);
}

PosetHandle load_poset(const std::string& path) {
    std::string text = slurp(path);
    cp_poset* p = nullptr;
    cp_status st;
    if (!text.empty() && text.front() == '{') {
        st = cp_poset_read_json(text.c_str(), &p);
    } else {
        st = cp_poset_read_text(text.c_str(), &p);
    }
    require_ok(st);
    return PosetHandle(p);
}

PosetHandle resolve_poset(const FamilyOptions& fam, const std::string& poset_path,
                          const std::string& matroid_path) {
    int sources = !fam.family.empty() + !poset_path.empty() + !matroid_path.empty();
    if (sources != 1) {
        std::fprintf(stderr, "error: give exactly one of --family, --poset, --matroid\n");
        std::exit(kExitUsage);
    }
    if (!fam.family.empty()) return build_family(fam);
    if (!poset_path.empty()) return load_poset(poset_path);
    cp_matroid* m = nullptr;
    require_ok(cp_matroid_read_file(matroid_path.c_str(), &m));
    MatroidHandle matroid(m);
    cp_poset* p = nullptr;
    require_ok(cp_matroid_flats(matroid.get(), &p));
    return PosetHandle(p);
}

std::string poly_json(const cp_poly* p) {
    char* out = nullptr;
    require_ok(cp_poly_to_json(p, &out));
    return std::string(ApiString(out).get());
}

std::string poly_pretty(const cp_poly* p) {
    char* out = nullptr;
    require_ok(cp_poly_to_pretty(p, &out));
    return std::string(ApiString(out).get());
}

// Polynomial specs: named Eulerian polynomials (A4, B3, Aq4:2), partition
// h-polynomials (piA6, piB4), a JSON coefficient array, or @file.
PolyHandle poly_from_spec(const std::string& spec) {
    cp_poly* p = nullptr;
    auto all_digits = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    if (spec.rfind("piA", 0) == 0 && all_digits(spec.substr(3))) {
        require_ok(cp_descent_h("A", std::stoi(spec.substr(3)), 0, &p));
        return PolyHandle(p);
    }
    if (spec.rfind("piB", 0) == 0 && all_digits(spec.substr(3))) {
        require_ok(cp_descent_h("B", std::stoi(spec.substr(3)), 0, &p));
        return PolyHandle(p);
    }
    if (spec.rfind("Aq", 0) == 0) {
        auto colon = spec.find(':');
        if (colon == std::string::npos) {
            std::fprintf(stderr, "error: Aq spec is Aq<n>:<q>, e.g. Aq4:2\n");
            std::exit(kExitUsage);
        }
        require_ok(cp_poly_eulerian_aq(std::stoi(spec.substr(2, colon - 2)),
                                       spec.substr(colon + 1).c_str(), &p));
        return PolyHandle(p);
    }
    if (spec.size() >= 2 && spec[0] == 'A' && all_digits(spec.substr(1))) {
        require_ok(cp_poly_eulerian_a(std::stoi(spec.substr(1)), &p));
        return PolyHandle(p);
    }
    if (spec.size() >= 2 && spec[0] == 'B' && all_digits(spec.substr(1))) {
        require_ok(cp_poly_eulerian_b(std::stoi(spec.substr(1)), &p));
        return PolyHandle(p);
    }
    std::string text = spec;
    if (!spec.empty() && spec[0] == '@') text = slurp(spec.substr(1));
    require_ok(cp_poly_from_json(text.c_str(), &p));
    return PolyHandle(p);
}

std::string json_to_tsv(const json& j, const std::string& prefix = "") {
    std::ostringstream out;
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            std::string path = prefix.empty() ? key : prefix + "." + key;
            if (value.is_object() || value.is_array()) {
                out << json_to_tsv(value, path);
            } else {
                out << path << "\t" << (value.is_string() ? value.get<std::string>() : value.dump())
                    << "\n";
            }
        }
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& v : j)
            if (v.is_object() || v.is_array()) scalars = false;
        if (scalars) {
            out << prefix << "\t";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out << ",";
                out << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
            }
            out << "\n";
        } else {
            for (std::size_t i = 0; i < j.size(); ++i)
                out << json_to_tsv(j[i], prefix + "[" + std::to_string(i) + "]");
        }
    } else {
        out << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
    return out.str();
}

void emit_json(const OutputOptions& opts, const json& j) {
    if (opts.format == "tsv") {
        emit(opts, json_to_tsv(j));
    } else {
        emit(opts, j.dump());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chainpoly: chain polynomials, flag h-vectors and real-rootedness "
                 "certificates for finite lattices"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    OutputOptions out_opts;
    app.add_option("--out", out_opts.format, "output format: json|tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--output", out_opts.path, "write output to a file instead of stdout");
    int workers = env_workers();
    app.add_option("--workers", workers, "worker threads (env CHAINPOLY_WORKERS)");
    bool timings = false;
    app.add_flag("--timings", timings, "include wall-clock milliseconds in reports");

    int exit_code = kExitOk;

    // ---- gen ------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a lattice and print its poset file");
    FamilyOptions gen_fam;
    std::vector<std::string> gen_args;
    gen->add_option("spec", gen_args,
                    "family and parameters, e.g. `pi 4`, `subspace 3 2`, `uniform 5 3`");
    add_family_options(gen, gen_fam, false);
    std::string gen_format = "text";
    gen->add_option("--format", gen_format, "poset file format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    gen->callback([&] {
        FamilyOptions fam = gen_fam;
        if (!gen_args.empty()) {
            fam.family = gen_args[0];
            if (fam.family == "uniform" || fam.family == "nearpencil") {
                if (gen_args.size() != 3) {
                    std::fprintf(stderr, "error: %s takes m and n\n", fam.family.c_str());
                    std::exit(kExitUsage);
                }
                fam.m = std::stoi(gen_args[1]);
                fam.n = std::stoi(gen_args[2]);
            } else if (fam.family == "subspace") {
                if (gen_args.size() != 3) {
                    std::fprintf(stderr, "error: subspace takes n and q\n");
                    std::exit(kExitUsage);
                }
                fam.n = std::stoi(gen_args[1]);
                fam.q = std::stoi(gen_args[2]);
            } else {
                if (gen_args.size() != 2) {
                    std::fprintf(stderr, "error: %s takes n\n", fam.family.c_str());
                    std::exit(kExitUsage);
                }
                fam.n = std::stoi(gen_args[1]);
            }
        }
        if (fam.family.empty()) {
            std::fprintf(stderr, "error: no family given\n");
            std::exit(kExitUsage);
        }
        PosetHandle p = build_family(fam);
        char* text = nullptr;
        require_ok(gen_format == "json" ? cp_poset_write_json(p.get(), &text)
                                        : cp_poset_write_text(p.get(), &text));
        emit(out_opts, ApiString(text).get());
    });

    // ---- hpoly ------------------------------------------------------------
    auto* hpoly = app.add_subcommand("hpoly", "h-polynomial of a poset or lattice");
    FamilyOptions hpoly_fam;
    std::string hpoly_poset, hpoly_matroid, hpoly_mode = "auto";
    add_family_options(hpoly, hpoly_fam, false);
    hpoly->add_option("--poset", hpoly_poset, "poset file (text or json)");
    hpoly->add_option("--matroid", hpoly_matroid, "bases file; uses the lattice of flats");
    hpoly->add_option("--mode", hpoly_mode,
                      "bounded: h of the proper part; raw: h of the poset as given; auto: "
                      "bounded when the poset grades, raw otherwise")
        ->check(CLI::IsMember({"auto", "bounded", "raw"}));
    bool hpoly_chain = false;
    hpoly->add_flag("--chain", hpoly_chain, "include the chain polynomial");
    hpoly->callback([&] {
        PosetHandle p = resolve_poset(hpoly_fam, hpoly_poset, hpoly_matroid);
        cp_poly* h = nullptr;
        std::string route;
        if (hpoly_mode == "raw") {
            require_ok(cp_poset_h_poly(p.get(), &h));
            route = "raw";
        } else if (hpoly_mode == "bounded") {
            require_ok(cp_poset_h_bounded(p.get(), &h));
            route = "bounded";
        } else {
            cp_status st = cp_poset_h_bounded(p.get(), &h);
            if (st == CP_OK) {
                route = "bounded";
            } else if (st == CP_ERR_NOT_BOUNDED || st == CP_ERR_NOT_GRADED) {
                require_ok(cp_poset_h_poly(p.get(), &h));
                route = "raw";
            } else {
                fail_api(st);
            }
        }
        PolyHandle hh(h);
        json j;
        j["h"] = json::parse(poly_json(hh.get()));
        j["pretty"] = poly_pretty(hh.get());
        j["mode"] = route;
        if (hpoly_chain) {
            cp_poly* chain = nullptr;
            require_ok(cp_poset_chain_poly(p.get(), &chain));
            PolyHandle guard(chain);
            j["chain"] = json::parse(poly_json(guard.get()));
        }
        emit_json(out_opts, j);
    });

    // ---- flag -------------------------------------------------------------
    auto* flag = app.add_subcommand("flag", "flag h-vector as a JSON table");
    FamilyOptions flag_fam;
    std::string flag_poset, flag_via = "rank-selection";
    add_family_options(flag, flag_fam, false);
    flag->add_option("--poset", flag_poset, "poset file");
    flag->add_option("--via", flag_via, "computation route: rank-selection|labeling")
        ->check(CLI::IsMember({"rank-selection", "labeling"}));
    flag->callback([&] {
        PosetHandle p = resolve_poset(flag_fam, flag_poset, "");
        char* table = nullptr;
        require_ok(cp_poset_flags_json(p.get(), flag_via.c_str(), workers, &table));
        ApiString guard(table);
        if (out_opts.format == "tsv") {
            emit_json(out_opts, json::parse(guard.get()));
        } else {
            emit(out_opts, guard.get());
        }
    });

    // ---- abindex ------------------------------------------------------------
    auto* abx = app.add_subcommand("abindex", "ab-index of a bounded graded poset");
    FamilyOptions abx_fam;
    std::string abx_poset;
    add_family_options(abx, abx_fam, false);
    abx->add_option("--poset", abx_poset, "poset file");
    abx->callback([&] {
        PosetHandle p = resolve_poset(abx_fam, abx_poset, "");
        cp_ab* psi = nullptr;
        require_ok(cp_poset_ab_index(p.get(), &psi));
        AbHandle guard(psi);
        char* text = nullptr;
        require_ok(cp_ab_to_json(guard.get(), &text));
        emit_json(out_opts, json::parse(ApiString(text).get()));
    });

    // ---- pyr / prism ----------------------------------------------------------
    for (const char* name : {"pyr", "prism"}) {
        bool is_pyr = std::string(name) == "pyr";
        auto* cmd = app.add_subcommand(
            name, std::string(is_pyr ? "pyramid" : "prism") +
                      " of a lattice: ab-index and h-polynomial, by formula or construction");
        auto fam = std::make_shared<FamilyOptions>();
        auto poset_path = std::make_shared<std::string>();
        auto ab_json = std::make_shared<std::string>();
        auto via = std::make_shared<std::string>("formula");
        add_family_options(cmd, *fam, false);
        cmd->add_option("--poset", *poset_path, "poset file");
        cmd->add_option("--ab", *ab_json, "ab-index as JSON (formula route only)");
        cmd->add_option("--via", *via, "formula|construction")
            ->check(CLI::IsMember({"formula", "construction"}));
        cmd->callback([&, fam, poset_path, ab_json, via, is_pyr] {
            AbHandle result_ab;
            PolyHandle result_h;
            if (!ab_json->empty()) {
                cp_ab* psi = nullptr;
                require_ok(cp_ab_from_json(ab_json->c_str(), &psi));
                AbHandle input(psi);
                cp_ab* out_ab = nullptr;
                require_ok(is_pyr ? cp_ab_pyr(input.get(), &out_ab)
                                  : cp_ab_prism(input.get(), &out_ab));
                result_ab.reset(out_ab);
                cp_poly* h = nullptr;
                require_ok(cp_ab_specialize(result_ab.get(), &h));
                result_h.reset(h);
            } else {
                PosetHandle p = resolve_poset(*fam, *poset_path, "");
                if (*via == "construction") {
                    cp_poset* built = nullptr;
                    require_ok(is_pyr ? cp_poset_pyramid(p.get(), &built)
                                      : cp_poset_prism(p.get(), &built));
                    PosetHandle guard(built);
                    cp_ab* psi = nullptr;
                    require_ok(cp_poset_ab_index(guard.get(), &psi));
                    result_ab.reset(psi);
                    cp_poly* h = nullptr;
                    require_ok(cp_poset_h_bounded(guard.get(), &h));
                    result_h.reset(h);
                } else {
                    cp_ab* psi = nullptr;
                    require_ok(cp_poset_ab_index(p.get(), &psi));
                    AbHandle input(psi);
                    cp_ab* out_ab = nullptr;
                    require_ok(is_pyr ? cp_ab_pyr(input.get(), &out_ab)
                                      : cp_ab_prism(input.get(), &out_ab));
                    result_ab.reset(out_ab);
                    // Theorem routes must agree: specialization of the
                    // ab-formula versus the h-level formula.
                    cp_poly* via_ab = nullptr;
                    require_ok(cp_ab_specialize(result_ab.get(), &via_ab));
                    PolyHandle h_ab(via_ab);
                    int rank = 0;
                    require_ok(cp_poset_rank(p.get(), &rank));
                    cp_poly* h_in = nullptr;
                    require_ok(cp_poset_h_bounded(p.get(), &h_in));
                    PolyHandle h_input(h_in);
                    cp_poly* via_h = nullptr;
                    require_ok(is_pyr ? cp_poly_pyr(h_input.get(), rank, &via_h)
                                      : cp_poly_prism(h_input.get(), rank, &via_h));
                    PolyHandle h_formula(via_h);
                    if (poly_json(h_ab.get()) != poly_json(h_formula.get())) {
                        std::fprintf(stderr, "finding: ab and h formula routes disagree\n");
                        exit_code = kExitFinding;
                    }
                    result_h = std::move(h_ab);
                }
            }
            char* ab_text = nullptr;
            require_ok(cp_ab_to_json(result_ab.get(), &ab_text));
            json j;
            j["ab"] = json::parse(ApiString(ab_text).get());
            j["h"] = json::parse(poly_json(result_h.get()));
            j["pretty"] = poly_pretty(result_h.get());
            emit_json(out_opts, j);
        });
    }

    // ---- zonotope-h -------------------------------------------------------------
    auto* zono = app.add_subcommand("zonotope-h",
                                    "h of the zonotope whose lattice of flats is the input");
    FamilyOptions zono_fam;
    std::string zono_poset, zono_matroid;
    add_family_options(zono, zono_fam, false);
    zono->add_option("--poset", zono_poset, "poset file (assumed geometric)");
    zono->add_option("--matroid", zono_matroid, "bases file");
    zono->callback([&] {
        if (!zono_poset.empty())
            std::fprintf(stderr,
                         "note: geometricity of the input lattice is assumed, not verified\n");
        PosetHandle p = resolve_poset(zono_fam, zono_poset, zono_matroid);
        cp_poly* h = nullptr;
        require_ok(cp_poset_zonotope_h(p.get(), &h));
        PolyHandle flags_route(h);
        // The omega route must agree.
        cp_ab* psi = nullptr;
        require_ok(cp_poset_ab_index(p.get(), &psi));
        AbHandle psi_guard(psi);
        cp_ab* zab = nullptr;
        require_ok(cp_ab_zonotope(psi_guard.get(), &zab));
        AbHandle zab_guard(zab);
        cp_poly* via_ab = nullptr;
        require_ok(cp_ab_specialize(zab_guard.get(), &via_ab));
        PolyHandle ab_route(via_ab);
        if (poly_json(flags_route.get()) != poly_json(ab_route.get())) {
            std::fprintf(stderr, "finding: lpeak and omega routes disagree\n");
            exit_code = kExitFinding;
        }
        json j;
        j["h"] = json::parse(poly_json(flags_route.get()));
        j["pretty"] = poly_pretty(flags_route.get());
        emit_json(out_opts, j);
    });

    // ---- sd2 ------------------------------------------------------------------
    auto* sd2 = app.add_subcommand("sd2", "second barycentric subdivision of the simplex boundary");
    int sd2_n = 3;
    sd2->add_option("--n", sd2_n, "simplex parameter")->required();
    sd2->callback([&] {
        char* text = nullptr;
        int agree = 0;
        require_ok(cp_sd2_json(sd2_n, &text, &agree));
        emit_json(out_opts, json::parse(ApiString(text).get()));
        if (!agree) exit_code = kExitFinding;
    });

    // ---- stats -------------------------------------------------------------------
    auto* stats = app.add_subcommand("stats", "word multiset statistics as JSON histograms");
    std::string stats_kind, stats_by = "count";
    int stats_n = 0;
    bool stats_override = false;
    stats->add_option("--kind", stats_kind, "A|B|A-star|B-star|A-signed")->required();
    stats->add_option("--n", stats_n, "word multiset parameter")->required();
    stats->add_option("--by", stats_by, "set|count|lpeak")
        ->check(CLI::IsMember({"set", "count", "lpeak"}));
    stats->add_flag("--cap-override", stats_override, "override stream caps");
    stats->callback([&] {
        char* text = nullptr;
        require_ok(
            cp_stats_json(stats_kind.c_str(), stats_n, stats_by.c_str(), stats_override, &text));
        emit_json(out_opts, json::parse(ApiString(text).get()));
    });

    // ---- hk ----------------------------------------------------------------------
    auto* hk = app.add_subcommand("hk", "the h_{n,k} interlacing sequence, descending k");
    std::string hk_kind = "A";
    int hk_n = 0;
    bool hk_override = false;
    hk->add_option("--kind", hk_kind, "A|B")->check(CLI::IsMember({"A", "B"}));
    hk->add_option("--n", hk_n, "index n")->required();
    hk->add_flag("--cap-override", hk_override, "override the recurrence cap");
    hk->callback([&] {
        char* text = nullptr;
        require_ok(cp_hk_json(hk_kind.c_str(), hk_n, hk_override, &text));
        emit_json(out_opts, json::parse(ApiString(text).get()));
    });

    // ---- eulerian -------------------------------------------------------------------
    auto* euler = app.add_subcommand("eulerian", "Eulerian polynomials A_n, B_n, A_n(x;q)");
    std::string euler_type = "A", euler_q = "1";
    int euler_n = 0;
    euler->add_option("--type", euler_type, "A|B|Aq")->check(CLI::IsMember({"A", "B", "Aq"}));
    euler->add_option("--n", euler_n, "index")->required();
    euler->add_option("--q", euler_q, "rational q for type Aq");
    euler->callback([&] {
        cp_poly* p = nullptr;
        if (euler_type == "A") {
            require_ok(cp_poly_eulerian_a(euler_n, &p));
        } else if (euler_type == "B") {
            require_ok(cp_poly_eulerian_b(euler_n, &p));
        } else {
            require_ok(cp_poly_eulerian_aq(euler_n, euler_q.c_str(), &p));
        }
        PolyHandle guard(p);
        json j;
        j["coefficients"] = json::parse(poly_json(guard.get()));
        j["pretty"] = poly_pretty(guard.get());
        emit_json(out_opts, j);
    });

    // ---- interlace / realrooted / isolate / sturm / gamma -----------------------------
    auto* inter = app.add_subcommand("interlace", "does f interlace g?");
    std::string inter_f, inter_g;
    inter->add_option("--f", inter_f, "polynomial spec (A4, B3, Aq4:2, piA6, piB4, JSON, @file)")
        ->required();
    inter->add_option("--g", inter_g, "polynomial spec")->required();
    inter->callback([&] {
        PolyHandle f = poly_from_spec(inter_f);
        PolyHandle g = poly_from_spec(inter_g);
        int result = 0;
        require_ok(cp_poly_interlaces(f.get(), g.get(), &result));
        emit(out_opts, result ? "true" : "false");
        if (!result) exit_code = kExitFinding;
    });

    auto* rr = app.add_subcommand("realrooted", "is the polynomial real-rooted?");
    std::string rr_poly;
    rr->add_option("--poly", rr_poly, "polynomial spec")->required();
    rr->callback([&] {
        PolyHandle p = poly_from_spec(rr_poly);
        int result = 0;
        require_ok(cp_poly_is_real_rooted(p.get(), &result));
        emit(out_opts, result ? "true" : "false");
        if (!result) exit_code = kExitFinding;
    });

    auto* isolate = app.add_subcommand("isolate", "isolating intervals for the real roots");
    std::string iso_poly, iso_width;
    isolate->add_option("--poly", iso_poly, "polynomial spec")->required();
    isolate->add_option("--width", iso_width, "refine to at most this rational width");
    isolate->callback([&] {
        PolyHandle p = poly_from_spec(iso_poly);
        char* text = nullptr;
        require_ok(cp_poly_isolate_json(p.get(), iso_width.empty() ? nullptr : iso_width.c_str(),
                                        &text));
        emit_json(out_opts, json::parse(ApiString(text).get()));
    });

    auto* sturm = app.add_subcommand("sturm", "count distinct real roots in (lo, hi]");
    std::string sturm_poly, sturm_lo = "-inf", sturm_hi = "inf";
    sturm->add_option("--poly", sturm_poly, "polynomial spec")->required();
    sturm->add_option("--lo", sturm_lo, "lower bound (rational or -inf)");
    sturm->add_option("--hi", sturm_hi, "upper bound (rational or inf)");
    sturm->callback([&] {
        PolyHandle p = poly_from_spec(sturm_poly);
        long count = 0;
        require_ok(cp_poly_sturm_count(p.get(), sturm_lo.c_str(), sturm_hi.c_str(), &count));
        emit(out_opts, std::to_string(count));
    });

    auto* gamma = app.add_subcommand("gamma", "gamma expansion of a symmetric polynomial");
    std::string gamma_poly;
    int gamma_n = -1;
    gamma->add_option("--poly", gamma_poly, "polynomial spec")->required();
    gamma->add_option("--n", gamma_n, "center degree (defaults to the polynomial degree)");
    gamma->callback([&] {
        PolyHandle p = poly_from_spec(gamma_poly);
        int n = gamma_n;
        if (n < 0) require_ok(cp_poly_degree(p.get(), &n));
        char* text = nullptr;
        require_ok(cp_poly_gamma_json(p.get(), n, &text));
        emit_json(out_opts, json::parse(ApiString(text).get()));
    });

    // ---- tables -------------------------------------------------------------------------
    auto* tables = app.add_subcommand("tables", "regenerate the displayed tables and diff");
    std::string tables_id = "all";
    tables->add_option("id", tables_id, "piA|piB|piD|sd2|all");
    tables->callback([&] {
        char* text = nullptr;
        int all_match = 0;
        require_ok(cp_tables_json(tables_id.c_str(), &text, &all_match));
        json j = json::parse(ApiString(text).get());
        if (out_opts.format == "tsv") {
            std::ostringstream tsv;
            for (const auto& table : j["tables"]) {
                for (const auto& row : table["rows"]) {
                    tsv << table["id"].get<std::string>() << "\tn=" << row["n"] << "\t";
                    const auto& actual = row["actual"];
                    for (std::size_t i = 0; i < actual.size(); ++i) {
                        if (i) tsv << ",";
                        tsv << actual[i].get<std::string>();
                    }
                    tsv << "\t" << (row["match"].get<bool>() ? "ok" : "MISMATCH") << "\n";
                }
            }
            emit(out_opts, tsv.str());
        } else {
            emit(out_opts, j.dump());
        }
        if (!all_match) exit_code = kExitFinding;
    });

    // ---- check ---------------------------------------------------------------------------
    auto* check = app.add_subcommand("check", "conjecture and corollary checks");
    std::string check_which;
    FamilyOptions check_fam;  // --n doubles as the range bound for the suites
    std::string check_poset, check_matroid;
    check->add_option("--conjecture", check_which,
                      "4.2|4.3|4.5|triple (with --n) or 5.1|5.10|pencil-uniform (with a lattice)")
        ->required();
    add_family_options(check, check_fam, false);
    check->add_option("--poset", check_poset, "poset file");
    check->add_option("--matroid", check_matroid, "bases file");
    check->callback([&] {
        if (check_which == "4.2" || check_which == "4.3" || check_which == "4.5" ||
            check_which == "triple") {
            if (check_fam.n <= 0) {
                std::fprintf(stderr, "error: --n is required for suite checks\n");
                std::exit(kExitUsage);
            }
            char* text = nullptr;
            int pass = 0;
            require_ok(cp_check_suite_json(check_which.c_str(), check_fam.n, &text, &pass));
            emit_json(out_opts, json::parse(ApiString(text).get()));
            if (!pass) exit_code = kExitFinding;
            return;
        }
        std::string which = check_which;
        if (which == "5.1") which = "geom-5.1";
        if (which == "5.10") which = "zonotope-5.10";
        if (which != "geom-5.1" && which != "zonotope-5.10" && which != "pencil-uniform") {
            std::fprintf(stderr, "error: unknown conjecture '%s'\n", check_which.c_str());
            std::exit(kExitUsage);
        }
        if (!check_poset.empty())
            std::fprintf(stderr,
                         "note: Cohen-Macaulayness of the input poset is assumed, not verified\n");
        PosetHandle p = resolve_poset(check_fam, check_poset, check_matroid);
        std::string name = !check_fam.family.empty() ? check_fam.family
                           : !check_poset.empty()    ? check_poset
                                                     : check_matroid;
        char* text = nullptr;
        int pass = 0;
        require_ok(cp_certify_poset_json(p.get(), which.c_str(), name.c_str(), timings ? 1 : 0,
                                         &text, &pass));
        emit_json(out_opts, json::parse(ApiString(text).get()));
        if (!pass) exit_code = kExitFinding;
    });

    // ---- batch ------------------------------------------------------------------------------
    auto* batch = app.add_subcommand("batch", "run a conjecture check over a directory of bases files");
    std::string batch_dir, batch_which = "geom-5.1";
    batch->add_option("--dir", batch_dir, "directory of .bases files")->required();
    batch->add_option("--which", batch_which, "geom-5.1|zonotope-5.10|pencil-uniform");
    batch->callback([&] {
        char* text = nullptr;
        int all_pass = 0;
        require_ok(cp_batch_check_json(batch_dir.c_str(), batch_which.c_str(), workers,
                                       timings ? 1 : 0, &text, &all_pass));
        json j = json::parse(ApiString(text).get());
        if (out_opts.format == "tsv") {
            std::ostringstream tsv;
            for (const auto& entry : j["entries"]) {
                tsv << entry["file"].get<std::string>() << "\t";
                if (entry.contains("error")) {
                    tsv << "PARSE-ERROR\t" << entry["error"].get<std::string>();
                } else {
                    tsv << (entry["report"]["pass"].get<bool>() ? "pass" : "FAIL");
                }
                tsv << "\n";
            }
            tsv << "summary\tpassed=" << j["passed"] << " failed=" << j["failed"]
                << " parse_errors=" << j["parse_errors"] << "\n";
            emit(out_opts, tsv.str());
        } else {
            emit(out_opts, j.dump());
        }
        if (!all_pass) exit_code = kExitFinding;
    });

    // ---- matroid helpers ----------------------------------------------------------------------
    auto* mflats = app.add_subcommand("matroid-flats", "lattice of flats of a bases file");
    std::string mflats_file;
    std::string mflats_format = "text";
    mflats->add_option("--matroid", mflats_file, "bases file")->required();
    mflats->add_option("--format", mflats_format, "poset output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    mflats->callback([&] {
        cp_matroid* m = nullptr;
        require_ok(cp_matroid_read_file(mflats_file.c_str(), &m));
        MatroidHandle matroid(m);
        cp_poset* p = nullptr;
        require_ok(cp_matroid_flats(matroid.get(), &p));
        PosetHandle poset(p);
        char* text = nullptr;
        require_ok(mflats_format == "json" ? cp_poset_write_json(poset.get(), &text)
                                           : cp_poset_write_text(poset.get(), &text));
        emit(out_opts, ApiString(text).get());
    });

    auto* revlex = app.add_subcommand("revlex", "convert a revlex basis encoding to a bases file");
    int revlex_m = 0, revlex_r = 0;
    std::string revlex_enc, revlex_name;
    revlex->add_option("--m", revlex_m, "ground-set size")->required();
    revlex->add_option("--r", revlex_r, "rank")->required();
    revlex->add_option("--encoding", revlex_enc, "'*'/'0' string over revlex r-subsets")->required();
    revlex->add_option("--name", revlex_name, "matroid name");
    revlex->callback([&] {
        cp_matroid* m = nullptr;
        require_ok(cp_matroid_from_revlex(revlex_m, revlex_r, revlex_enc.c_str(),
                                          revlex_name.c_str(), &m));
        MatroidHandle matroid(m);
        char* text = nullptr;
        require_ok(cp_matroid_to_text(matroid.get(), &text));
        emit(out_opts, ApiString(text).get());
    });

    auto* corpus = app.add_subcommand("gen-corpus",
                                      "write the bundled matroid corpus (simple matroids up to 6 "
                                      "elements plus the 7-8 element spot set)");
    std::string corpus_dir;
    int corpus_max = 6;
    corpus->add_option("--dir", corpus_dir, "output directory (must exist)")->required();
    corpus->add_option("--max", corpus_max, "largest enumerated ground-set size (<= 6)");
    corpus->callback([&] {
        int written = 0;
        require_ok(cp_matroid_gen_corpus(corpus_dir.c_str(), corpus_max, &written));
        emit(out_opts, "wrote " + std::to_string(written) + " bases files");
    });

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    return exit_code;
}
