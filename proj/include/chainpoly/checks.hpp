#pragma once

#include "chainpoly/matroid.hpp"
#include "chainpoly/poset.hpp"

#include <string>
#include <vector>

namespace chainpoly {

// ---------------------------------------------------------------------------
// Golden tables. Expected coefficients embedded once; the table runner
// regenerates each polynomial from the lattice route and diffs.

struct TableRow {
    int n = 0;
    std::vector<long long> expected;
    Polynomial actual;
    bool match = false;
};

struct TableResult {
    std::string id;
    std::vector<TableRow> rows;
    bool all_match = false;
};

const std::vector<std::string>& table_ids();  // piA, piB, piD, sd2
TableResult run_table(const std::string& id);

// ---------------------------------------------------------------------------
// Certification: exact real-rootedness certificate plus an interlacing
// verdict against a named Eulerian reference. Failures are findings
// reported in the result, never exceptions.

struct Certification {
    std::string name;
    int elements = 0;
    int rank = 0;
    Polynomial h;
    bool real_rooted = false;
    int squarefree_degree = 0;
    long distinct_real_roots = 0;
    std::vector<std::string> intervals;  // "[lo,hi]^mult" isolating certificates
    std::string reference;               // "A_3", "B_2", or empty
    bool interlaced = false;
    bool pass = false;
    long long ms = 0;
};

// which: geom-5.1 (h_L vs A_rank; pass needs both verdicts),
//        zonotope-5.10 (zonotope h vs B_{rank-1}; pass needs both),
//        pencil-uniform (pass needs real-rootedness; the A_rank interlacing
//        verdict is reported alongside).
Certification certify_lattice(const std::string& name, const Graded& g, const std::string& which);

std::string certification_to_json(const Certification& cert, bool with_timing = false);

// ---------------------------------------------------------------------------
// Conjecture / corollary suites over the recurrence route.

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> lines;  // one human-readable line per step
};

// h_{Pi_n} real-rooted and interlacing h_{Pi_{n+1}}, n <= nmax.
SuiteResult check_cor42(int nmax);
// Type B analogue, n <= nmax.
SuiteResult check_cor45(int nmax);
// A_{n-1} interlaces h_{Pi_n}, n <= nmax.
SuiteResult check_conj43(int nmax);
// (h_{Pi_{n+1}}, h_{Pi^D_n}, h_{Pi^B_n}) interlacing for 3 <= n <= nmax;
// the type D polynomial comes from the lattice via rank selection.
SuiteResult check_triple(int nmax);

// ---------------------------------------------------------------------------
// Batch conjecture runs over a directory of bases files.

struct BatchEntry {
    std::string file;
    bool parsed = false;
    std::string error;
    Certification cert;
};

struct BatchResult {
    std::vector<BatchEntry> entries;  // input order (sorted file names)
    int passed = 0;
    int failed = 0;
    int parse_errors = 0;
};

BatchResult batch_check(const std::string& directory, const std::string& which, int workers = 1);

}  // namespace chainpoly
