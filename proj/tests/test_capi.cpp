#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Exercises the shared-library surface exactly as an external client would:
// through the C header only.
#include "chainpoly.h"

#include <cstring>
#include <string>

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    cp_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("version and error reporting") {
    CHECK(std::strlen(cp_version()) > 0);
    cp_poset* p = nullptr;
    CHECK(cp_poset_boolean(-1, &p) == CP_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(cp_last_error()) > 0);
    CHECK(cp_poset_boolean(3, nullptr) == CP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("poset lifecycle and queries") {
    cp_poset* p = nullptr;
    REQUIRE(cp_poset_partition_a(4, 0, &p) == CP_OK);
    int size = 0, rank = 0;
    CHECK(cp_poset_size(p, &size) == CP_OK);
    CHECK(size == 15);
    CHECK(cp_poset_rank(p, &rank) == CP_OK);
    CHECK(rank == 3);

    char* chains = nullptr;
    CHECK(cp_poset_maximal_chains(p, &chains) == CP_OK);
    CHECK(take(chains) == "18");

    cp_poly* h = nullptr;
    REQUIRE(cp_poset_h_bounded(p, &h) == CP_OK);
    char* hj = nullptr;
    CHECK(cp_poly_to_json(h, &hj) == CP_OK);
    CHECK(take(hj) == "[\"1\",\"11\",\"6\"]");
    cp_poly_free(h);
    cp_poset_free(p);
}

TEST_CASE("caps are enforced and overridable") {
    cp_poset* p = nullptr;
    CHECK(cp_poset_partition_b(7, 0, &p) == CP_ERR_CAP_EXCEEDED);
    REQUIRE(cp_poset_partition_a(4, 1, &p) == CP_OK);
    cp_poset_free(p);
}

TEST_CASE("flag routes agree through the C surface") {
    cp_poset* p = nullptr;
    REQUIRE(cp_poset_partition_a(5, 0, &p) == CP_OK);
    char* via_ranks = nullptr;
    char* via_labels = nullptr;
    REQUIRE(cp_poset_flags_json(p, "rank-selection", 1, &via_ranks) == CP_OK);
    REQUIRE(cp_poset_flags_json(p, "labeling", 2, &via_labels) == CP_OK);
    CHECK(take(via_ranks) == take(via_labels));

    cp_poset* cube = nullptr;
    REQUIRE(cp_poset_cube(2, &cube) == CP_OK);
    char* nope = nullptr;
    CHECK(cp_poset_flags_json(cube, "labeling", 1, &nope) == CP_ERR_HOST_MISMATCH);
    cp_poset_free(cube);
    cp_poset_free(p);
}

TEST_CASE("poset round trip through text and json") {
    cp_poset* p = nullptr;
    REQUIRE(cp_poset_boolean(3, &p) == CP_OK);
    char* text = nullptr;
    REQUIRE(cp_poset_write_text(p, &text) == CP_OK);
    std::string file = take(text);
    cp_poset* again = nullptr;
    REQUIRE(cp_poset_read_text(file.c_str(), &again) == CP_OK);
    int iso = 0;
    CHECK(cp_poset_isomorphic(p, again, &iso) == CP_OK);
    CHECK(iso == 1);
    cp_poset_free(again);

    char* js = nullptr;
    REQUIRE(cp_poset_write_json(p, &js) == CP_OK);
    std::string json_file = take(js);
    cp_poset* from_json = nullptr;
    REQUIRE(cp_poset_read_json(json_file.c_str(), &from_json) == CP_OK);
    cp_poly* h1 = nullptr;
    cp_poly* h2 = nullptr;
    REQUIRE(cp_poset_h_bounded(p, &h1) == CP_OK);
    REQUIRE(cp_poset_h_bounded(from_json, &h2) == CP_OK);
    char* a = nullptr;
    char* b = nullptr;
    CHECK(cp_poly_to_json(h1, &a) == CP_OK);
    CHECK(cp_poly_to_json(h2, &b) == CP_OK);
    CHECK(take(a) == take(b));
    cp_poly_free(h1);
    cp_poly_free(h2);
    cp_poset_free(from_json);
    cp_poset_free(p);
}

TEST_CASE("parse errors surface with the right status") {
    cp_poset* p = nullptr;
    CHECK(cp_poset_read_text("poset 2\ncover 0 5\n", &p) == CP_ERR_PARSE);
    CHECK(cp_poset_read_text("poset 2\ncover 0 1\ncover 1 0\n", &p) == CP_ERR_CYCLE);
    REQUIRE(cp_poset_read_text("poset 2\n", &p) == CP_OK);  // antichain parses
    cp_poly* h = nullptr;
    CHECK(cp_poset_h_bounded(p, &h) == CP_ERR_NOT_BOUNDED);
    CHECK(cp_poset_h_poly(p, &h) == CP_OK);
    cp_poly_free(h);
    cp_poset_free(p);
}

TEST_CASE("polynomial surface") {
    cp_poly* a3 = nullptr;
    REQUIRE(cp_poly_eulerian_a(3, &a3) == CP_OK);
    char* pretty = nullptr;
    CHECK(cp_poly_to_pretty(a3, &pretty) == CP_OK);
    CHECK(take(pretty) == "1 + 4x + x^2");

    cp_poly* quad = nullptr;
    REQUIRE(cp_poly_from_json("[\"1\",\"6\",\"1\"]", &quad) == CP_OK);
    int rr = 0;
    CHECK(cp_poly_is_real_rooted(quad, &rr) == CP_OK);
    CHECK(rr == 1);
    long roots = 0;
    CHECK(cp_poly_sturm_count(quad, "-inf", "inf", &roots) == CP_OK);
    CHECK(roots == 2);
    CHECK(cp_poly_sturm_count(quad, "0", "inf", &roots) == CP_OK);
    CHECK(roots == 0);

    cp_poly* linear = nullptr;
    REQUIRE(cp_poly_from_json("[\"1\",\"1\"]", &linear) == CP_OK);
    int il = 0;
    CHECK(cp_poly_interlaces(linear, quad, &il) == CP_OK);
    CHECK(il == 1);
    CHECK(cp_poly_interlaces(quad, linear, &il) == CP_OK);
    CHECK(il == 0);

    char* iso = nullptr;
    CHECK(cp_poly_isolate_json(quad, "1/64", &iso) == CP_OK);
    CHECK(take(iso).find("multiplicity") != std::string::npos);

    char* gamma = nullptr;
    CHECK(cp_poly_gamma_json(quad, 2, &gamma) == CP_OK);
    CHECK(take(gamma) == "[\"1\",\"4\"]");
    cp_poly* skew = nullptr;
    REQUIRE(cp_poly_from_json("[\"1\",\"2\"]", &skew) == CP_OK);
    CHECK(cp_poly_gamma_json(skew, 1, &gamma) == CP_ERR_ASYMMETRIC);

    cp_poly* pyr = nullptr;
    REQUIRE(cp_poly_pyr(a3, 3, &pyr) == CP_OK);
    char* pyr_json = nullptr;
    CHECK(cp_poly_to_json(pyr, &pyr_json) == CP_OK);
    CHECK(take(pyr_json) == "[\"1\",\"11\",\"11\",\"1\"]");

    cp_poly_free(pyr);
    cp_poly_free(skew);
    cp_poly_free(linear);
    cp_poly_free(quad);
    cp_poly_free(a3);
}

TEST_CASE("ab surface") {
    cp_poset* b2 = nullptr;
    REQUIRE(cp_poset_boolean(2, &b2) == CP_OK);
    cp_ab* psi = nullptr;
    REQUIRE(cp_poset_ab_index(b2, &psi) == CP_OK);
    char* js = nullptr;
    CHECK(cp_ab_to_json(psi, &js) == CP_OK);
    CHECK(take(js) == "{\"a\":1,\"b\":1}");

    cp_ab* omega = nullptr;
    REQUIRE(cp_ab_from_json("{\"ab\":1}", &omega) == CP_OK);
    cp_ab* out = nullptr;
    REQUIRE(cp_ab_omega(omega, &out) == CP_OK);
    char* out_js = nullptr;
    CHECK(cp_ab_to_json(out, &out_js) == CP_OK);
    CHECK(take(out_js) == "{\"ab\":2,\"ba\":2}");

    cp_poly* spec = nullptr;
    REQUIRE(cp_ab_specialize(psi, &spec) == CP_OK);
    char* spec_js = nullptr;
    CHECK(cp_poly_to_json(spec, &spec_js) == CP_OK);
    CHECK(take(spec_js) == "[\"1\",\"1\"]");

    cp_poly_free(spec);
    cp_ab_free(out);
    cp_ab_free(omega);
    cp_ab_free(psi);
    cp_poset_free(b2);
}

TEST_CASE("multiset and sd2 surface") {
    char* stats = nullptr;
    REQUIRE(cp_stats_json("A", 3, "count", 0, &stats) == CP_OK);
    CHECK(take(stats) == "[\"1\",\"2\"]");
    REQUIRE(cp_stats_json("A-signed", 3, "count", 0, &stats) == CP_OK);
    CHECK(take(stats) == "[\"1\",\"10\",\"1\"]");
    CHECK(cp_stats_json("A-signed", 3, "lpeak", 0, &stats) == CP_ERR_INVALID_ARGUMENT);
    CHECK(cp_stats_json("A", 11, "count", 0, &stats) == CP_ERR_CAP_EXCEEDED);

    cp_poly* h = nullptr;
    REQUIRE(cp_descent_h("A", 12, 0, &h) == CP_OK);
    int deg = 0;
    CHECK(cp_poly_degree(h, &deg) == CP_OK);
    CHECK(deg == 10);
    cp_poly_free(h);

    char* hk = nullptr;
    REQUIRE(cp_hk_json("A", 3, 0, &hk) == CP_OK);
    CHECK(take(hk) == "[[\"1\"],[\"0\",\"2\"]]");

    char* sd2 = nullptr;
    int agree = 0;
    REQUIRE(cp_sd2_json(3, &sd2, &agree) == CP_OK);
    CHECK(agree == 1);
    CHECK(take(sd2).find("\"gamma\":[\"1\",\"8\"]") != std::string::npos);
}

TEST_CASE("matroid surface") {
    cp_matroid* m = nullptr;
    REQUIRE(cp_matroid_read_text("ground 4\nbasis 0 1\nbasis 0 2\nbasis 0 3\nbasis 1 2\n"
                                 "basis 1 3\nbasis 2 3\n",
                                 "u42", &m) == CP_OK);
    int ground = 0, rank = 0;
    CHECK(cp_matroid_ground(m, &ground) == CP_OK);
    CHECK(ground == 4);
    CHECK(cp_matroid_rank(m, &rank) == CP_OK);
    CHECK(rank == 2);
    int ok = 0;
    char* witness = nullptr;
    CHECK(cp_matroid_verify_exchange(m, &ok, &witness) == CP_OK);
    CHECK(ok == 1);
    CHECK(witness == nullptr);

    int elems[2] = {0, 1};
    int r = 0;
    CHECK(cp_matroid_rank_of(m, elems, 2, &r) == CP_OK);
    CHECK(r == 2);
    int closure[8], count = 0;
    CHECK(cp_matroid_closure(m, elems, 2, closure, &count) == CP_OK);
    CHECK(count == 4);

    cp_poset* flats = nullptr;
    REQUIRE(cp_matroid_flats(m, &flats) == CP_OK);
    int size = 0;
    CHECK(cp_poset_size(flats, &size) == CP_OK);
    CHECK(size == 6);  // bottom, 4 points, top

    cp_matroid* plus = nullptr;
    REQUIRE(cp_matroid_add_coloop(m, &plus) == CP_OK);
    cp_poset* plus_flats = nullptr;
    REQUIRE(cp_matroid_flats(plus, &plus_flats) == CP_OK);
    cp_poset* pyr = nullptr;
    REQUIRE(cp_poset_pyramid(flats, &pyr) == CP_OK);
    int iso = 0;
    CHECK(cp_poset_isomorphic(plus_flats, pyr, &iso) == CP_OK);
    CHECK(iso == 1);

    cp_poset_free(pyr);
    cp_poset_free(plus_flats);
    cp_matroid_free(plus);
    cp_poset_free(flats);

    cp_matroid* rl = nullptr;
    REQUIRE(cp_matroid_from_revlex(4, 2, "******", "u", &rl) == CP_OK);
    char* text = nullptr;
    CHECK(cp_matroid_to_text(rl, &text) == CP_OK);
    CHECK(take(text).find("ground 4") != std::string::npos);
    cp_matroid_free(rl);
    cp_matroid_free(m);

    CHECK(cp_matroid_read_text("ground 3\nbasis 0 5\n", "", &m) == CP_ERR_PARSE);
}

TEST_CASE("tables, suites and certification through the C surface") {
    char* tables = nullptr;
    int all_match = 0;
    REQUIRE(cp_tables_json("sd2", &tables, &all_match) == CP_OK);
    CHECK(all_match == 1);
    cp_string_free(tables);

    char* suite = nullptr;
    int pass = 0;
    REQUIRE(cp_check_suite_json("4.3", 6, &suite, &pass) == CP_OK);
    CHECK(pass == 1);
    cp_string_free(suite);

    cp_poset* pi5 = nullptr;
    REQUIRE(cp_poset_partition_a(5, 0, &pi5) == CP_OK);
    char* cert = nullptr;
    REQUIRE(cp_certify_poset_json(pi5, "geom-5.1", "pi5", 0, &cert, &pass) == CP_OK);
    CHECK(pass == 1);
    std::string body = take(cert);
    CHECK(body.find("\"real_rooted\":true") != std::string::npos);
    CHECK(body.find("\"ms\":0") != std::string::npos);  // timings off by default
    cp_poset_free(pi5);
}
