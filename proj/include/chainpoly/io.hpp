#pragma once

#include "chainpoly/abindex.hpp"
#include "chainpoly/matroid.hpp"
#include "chainpoly/poset.hpp"

#include <string>

namespace chainpoly {

// Poset text format: one `poset <m>` header, optional `label <i> <text>`
// lines, one `cover <i> <j>` line per cover; `#` starts a comment.
std::string poset_to_text(const Poset& p);
Poset poset_from_text(const std::string& text);

std::string poset_to_json(const Poset& p);
Poset poset_from_json(const std::string& text);

// Polynomials serialize as JSON arrays of coefficient strings, ascending
// degree; "num" when integral, "num/den" otherwise.
std::string polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& text);

// Flag tables keyed by sorted subset strings such as "1,3"; "" is the empty
// set.
std::string flags_to_json(const FlagVector& fv);

// ab-polynomials as maps from words such as "aab" to integer coefficients.
std::string ab_to_json(const AbPolynomial& psi);
AbPolynomial ab_from_json(const std::string& text);

// Bases files: `ground <m>` then `basis <i> <j> ...` lines, 0-indexed,
// `#` comments. Parse errors carry line numbers.
Matroid matroid_from_text(const std::string& text, std::string name = "");
Matroid matroid_from_file(const std::string& path);
std::string matroid_to_text(const Matroid& m);

// Adapter for revlex-encoded basis strings: the r-subsets of [m] in
// reverse lexicographic order, one character each, '*' (or '1') marking a
// basis.
Matroid matroid_from_revlex(int ground, int rank, const std::string& encoding,
                            std::string name = "");

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace chainpoly
