#include "chainpoly/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace chainpoly {

using nlohmann::json;

namespace {

std::string subset_key(unsigned mask) {
    std::string key;
    for (int i = 0; mask >> i; ++i) {
        if (!(mask & (1u << i))) continue;
        if (!key.empty()) key += ",";
        key += std::to_string(i + 1);
    }
    return key;
}

long long int_to_ll(const Int& v, const char* what) {
    if (!v.fits_slong_p()) throw Error(errc::cap_exceeded, std::string(what) + " overflows 64 bits");
    return v.get_si();
}

}  // namespace

std::string poset_to_text(const Poset& p) {
    std::ostringstream out;
    out << "poset " << p.size() << "\n";
    if (!p.labels().empty()) {
        for (int x = 0; x < p.size(); ++x) out << "label " << x << " " << p.labels()[x] << "\n";
    }
    for (auto [a, b] : p.covers()) out << "cover " << a << " " << b << "\n";
    return out.str();
}

Poset poset_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int size = -1;
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> labels;
    bool has_labels = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::string word;
        if (!(ls >> word)) continue;
        auto fail = [&](const std::string& message) {
            throw Error(errc::parse_error,
                        "poset file line " + std::to_string(line_no) + ": " + message);
        };
        if (word == "poset") {
            if (size != -1) fail("duplicate poset header");
            if (!(ls >> size) || size < 0) fail("bad element count");
            labels.assign(size, "");
        } else if (word == "label") {
            if (size == -1) fail("label before poset header");
            int idx;
            if (!(ls >> idx) || idx < 0 || idx >= size) fail("bad label index");
            std::string rest;
            std::getline(ls, rest);
            if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
            labels[idx] = rest;
            has_labels = true;
        } else if (word == "cover") {
            if (size == -1) fail("cover before poset header");
            int a, b;
            if (!(ls >> a >> b)) fail("bad cover line");
            if (a < 0 || a >= size || b < 0 || b >= size) fail("cover index out of range");
            covers.push_back({a, b});
        } else {
            fail("unknown directive '" + word + "'");
        }
    }
    if (size == -1) throw Error(errc::parse_error, "poset file: missing poset header");
    std::vector<std::pair<int, int>> dropped;
    Poset p = Poset::from_cover_relations(size, std::move(covers), &dropped);
    for (auto [a, b] : dropped)
        std::cerr << "warning: pair (" << a << ", " << b << ") is not a cover; dropped\n";
    if (has_labels) p.set_labels(std::move(labels));
    return p;
}

std::string poset_to_json(const Poset& p) {
    json j;
    j["size"] = p.size();
    json covers = json::array();
    for (auto [a, b] : p.covers()) covers.push_back({a, b});
    j["covers"] = std::move(covers);
    if (!p.labels().empty()) j["labels"] = p.labels();
    return j.dump();
}

Poset poset_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(errc::parse_error, std::string("poset json: ") + e.what());
    }
    if (!j.contains("size") || !j["size"].is_number_integer())
        throw Error(errc::parse_error, "poset json: missing size");
    int size = j["size"].get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& pair : j.value("covers", json::array())) {
        if (!pair.is_array() || pair.size() != 2)
            throw Error(errc::parse_error, "poset json: bad cover entry");
        covers.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    Poset p = Poset::from_cover_relations(size, std::move(covers));
    if (j.contains("labels")) p.set_labels(j["labels"].get<std::vector<std::string>>());
    return p;
}

std::string polynomial_to_json(const Polynomial& p) {
    json arr = json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(rat_to_string(c));
    return arr.dump();
}

Polynomial polynomial_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(errc::parse_error, std::string("polynomial json: ") + e.what());
    }
    if (!j.is_array()) throw Error(errc::parse_error, "polynomial json: expected an array");
    std::vector<Rat> coeffs;
    for (const auto& entry : j) {
        if (entry.is_number_integer()) {
            coeffs.push_back(rat_from_string(entry.dump()));
        } else if (entry.is_string()) {
            coeffs.push_back(rat_from_string(entry.get<std::string>()));
        } else {
            throw Error(errc::parse_error, "polynomial json: coefficients must be strings");
        }
    }
    return Polynomial(std::move(coeffs));
}

std::string flags_to_json(const FlagVector& fv) {
    json j = json::object();
    for (std::size_t mask = 0; mask < fv.beta.size(); ++mask)
        j[subset_key(static_cast<unsigned>(mask))] = int_to_ll(fv.beta[mask], "flag value");
    return j.dump();
}

std::string ab_to_json(const AbPolynomial& psi) {
    json j = json::object();
    for (const auto& [mask, coeff] : psi.terms())
        j[psi.word_string(mask)] = int_to_ll(coeff, "ab coefficient");
    if (j.empty()) j["length"] = psi.length();  // keep the length recoverable for zero
    return j.dump();
}

AbPolynomial ab_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(errc::parse_error, std::string("ab json: ") + e.what());
    }
    if (!j.is_object()) throw Error(errc::parse_error, "ab json: expected an object");
    int length = -1;
    for (const auto& [word, coeff] : j.items()) {
        if (word == "length") continue;
        if (length == -1) length = static_cast<int>(word.size());
        if (static_cast<int>(word.size()) != length)
            throw Error(errc::parse_error, "ab json: words of unequal length");
    }
    if (length == -1) length = j.value("length", 0);
    AbPolynomial psi(length);
    for (const auto& [word, coeff] : j.items()) {
        if (word == "length") continue;
        psi.add_term(AbPolynomial::mask_of_word(word), Int(coeff.dump()));
    }
    return psi;
}

Matroid matroid_from_text(const std::string& text, std::string name) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int ground = -1;
    std::vector<std::uint32_t> bases;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::string word;
        if (!(ls >> word)) continue;
        auto fail = [&](const std::string& message) {
            throw Error(errc::parse_error,
                        "bases file line " + std::to_string(line_no) + ": " + message);
        };
        if (word == "ground") {
            if (ground != -1) fail("duplicate ground header");
            if (!(ls >> ground) || ground < 1 || ground > 20) fail("bad ground size");
        } else if (word == "basis") {
            if (ground == -1) fail("basis before ground header");
            std::uint32_t mask = 0;
            int e;
            while (ls >> e) {
                if (e < 0 || e >= ground) fail("basis element out of range");
                if (mask & (1u << e)) fail("repeated element in basis");
                mask |= 1u << e;
            }
            if (mask == 0) fail("empty basis");
            bases.push_back(mask);
        } else if (word == "name") {
            std::string rest;
            std::getline(ls, rest);
            if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
            if (name.empty()) name = rest;
        } else {
            fail("unknown directive '" + word + "'");
        }
    }
    if (ground == -1) throw Error(errc::parse_error, "bases file: missing ground header");
    if (bases.empty()) throw Error(errc::parse_error, "bases file: no bases");
    try {
        return Matroid(ground, std::move(bases), std::move(name));
    } catch (const Error& e) {
        throw Error(errc::parse_error, std::string("bases file: ") + e.what());
    }
}

Matroid matroid_from_file(const std::string& path) {
    std::string name = path;
    auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    auto dot = name.find_last_of('.');
    if (dot != std::string::npos) name = name.substr(0, dot);
    return matroid_from_text(read_file(path), name);
}

std::string matroid_to_text(const Matroid& m) {
    std::ostringstream out;
    if (!m.name().empty()) out << "name " << m.name() << "\n";
    out << "ground " << m.ground() << "\n";
    for (std::uint32_t b : m.bases()) {
        out << "basis";
        for (int e = 0; e < m.ground(); ++e)
            if (b & (1u << e)) out << " " << e;
        out << "\n";
    }
    return out.str();
}

Matroid matroid_from_revlex(int ground, int rank, const std::string& encoding, std::string name) {
    if (ground < 1 || ground > 20 || rank < 1 || rank > ground)
        throw Error(errc::invalid_argument, "matroid_from_revlex: bad parameters");
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == rank) {
            subsets.push_back(cur);
            return;
        }
        for (int e = next; e < ground; ++e) {
            cur.push_back(e);
            self(self, e + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    });
    if (encoding.size() != subsets.size())
        throw Error(errc::parse_error, "matroid_from_revlex: encoding length must be C(m, r) = " +
                                           std::to_string(subsets.size()));
    std::vector<std::uint32_t> bases;
    for (std::size_t i = 0; i < encoding.size(); ++i) {
        char c = encoding[i];
        if (c == '*' || c == '1') {
            std::uint32_t mask = 0;
            for (int e : subsets[i]) mask |= 1u << e;
            bases.push_back(mask);
        } else if (c != '0') {
            throw Error(errc::parse_error, "matroid_from_revlex: characters must be '*', '1' or '0'");
        }
    }
    if (bases.empty()) throw Error(errc::parse_error, "matroid_from_revlex: no bases marked");
    return Matroid(ground, std::move(bases), std::move(name));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::io_error, "cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(errc::io_error, "cannot write " + path);
    out << content;
}

}  // namespace chainpoly
