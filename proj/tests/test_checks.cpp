#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chainpoly/checks.hpp"
#include "chainpoly/lattices.hpp"

using namespace chainpoly;

TEST_CASE("table registry") {
    CHECK(table_ids().size() == 4);
    for (const std::string& id : table_ids()) {
        TableResult result = run_table(id);
        CHECK(result.all_match);
        CHECK(!result.rows.empty());
    }
    CHECK_THROWS_AS(run_table("nope"), Error);
}

TEST_CASE("certification verdicts") {
    SUBCASE("geometric lattices pass 5.1") {
        Certification cert = certify_lattice("pi5", partition_lattice(5).graded, "geom-5.1");
        CHECK(cert.real_rooted);
        CHECK(cert.interlaced);
        CHECK(cert.pass);
        CHECK(cert.reference == "A_4");
        CHECK(cert.distinct_real_roots == cert.squarefree_degree);
        CHECK(!cert.intervals.empty());
    }
    SUBCASE("uniform flats pass the zonotope question") {
        Certification cert =
            certify_lattice("u53", uniform_flats(5, 3).graded, "zonotope-5.10");
        CHECK(cert.reference == "B_2");
        CHECK(cert.pass);
    }
    SUBCASE("near-pencils need only real-rootedness") {
        Certification cert =
            certify_lattice("np", near_pencil_flats(6, 3).graded, "pencil-uniform");
        CHECK(cert.real_rooted);
        CHECK(cert.pass);
    }
    SUBCASE("unknown check rejected") {
        CHECK_THROWS_AS(certify_lattice("x", boolean_lattice(2).graded, "bogus"), Error);
    }
    SUBCASE("json carries the certificate") {
        Certification cert = certify_lattice("b3", boolean_lattice(3).graded, "geom-5.1");
        std::string body = certification_to_json(cert);
        CHECK(body.find("\"real_rooted\":true") != std::string::npos);
        CHECK(body.find("\"intervals\"") != std::string::npos);
    }
}

TEST_CASE("suites") {
    CHECK(check_cor42(8).pass);
    CHECK(check_cor45(6).pass);
    CHECK(check_conj43(8).pass);
    SuiteResult triple = check_triple(5);
    CHECK(triple.pass);
    CHECK(triple.lines.size() == 3);
}
