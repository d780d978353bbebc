#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chainpoly/labelings.hpp"
#include "chainpoly/multisets.hpp"
#include "chainpoly/roots.hpp"

#include <map>

using namespace chainpoly;

namespace {

// Oracle: descent polynomial by full streaming.
Polynomial descent_h_brute(WordKind kind, int n) {
    WordMultiset ms = WordMultiset::make(kind, n);
    std::vector<Rat> coeffs(ms.length() + 1, Rat(0));
    for_each_word(ms, [&](const std::vector<int>& w, const Int& mult) {
        coeffs[__builtin_popcount(weak_descent_mask(w))] += Rat(mult);
    });
    return Polynomial(std::move(coeffs));
}

std::map<std::vector<int>, Int> word_histogram(WordKind kind, int n) {
    std::map<std::vector<int>, Int> hist;
    for_each_word(WordMultiset::make(kind, n),
                  [&](const std::vector<int>& w, const Int& mult) { hist[w] += mult; });
    return hist;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("word multiset generation") {
    SUBCASE("A_3 by hand") {
        auto hist = word_histogram(WordKind::A, 3);
        REQUIRE(hist.size() == 2);
        CHECK(hist[{1, 1}] == 2);
        CHECK(hist[{1, 2}] == 1);
    }
    SUBCASE("totals match the product formulas") {
        for (int n = 1; n <= 6; ++n) {
            Int expected = factorial(n) * factorial(n - 1);
            for (int i = 0; i < n - 1; ++i) expected /= 2;
            CHECK(WordMultiset::make(WordKind::A, n).total() == expected);
            CHECK(WordMultiset::make(WordKind::AStar, n).total() == expected);
        }
        for (int n = 1; n <= 6; ++n) {
            CHECK(WordMultiset::make(WordKind::B, n).total() == factorial(n) * factorial(n));
            CHECK(WordMultiset::make(WordKind::BStar, n).total() == factorial(n) * factorial(n));
        }
        CHECK(WordMultiset::make(WordKind::ASigned, 3).total() == 12);
    }
    SUBCASE("caps") {
        CHECK_THROWS_AS(WordMultiset::make(WordKind::A, 9), Error);
        MultisetCaps forced;
        forced.override_caps = true;
        CHECK(WordMultiset::make(WordKind::A, 9, forced).length() == 8);
    }
    SUBCASE("star kinds match the displayed factors") {
        // First factor of A*_n holds u-1 copies of u for u in 2..n.
        WordMultiset star = WordMultiset::make(WordKind::AStar, 4);
        REQUIRE(star.factors[0].size() == 3);
        for (auto [value, mult] : star.factors[0]) CHECK(mult == value - 1);
        CHECK(star.factors.back() == std::vector<std::pair<int, Int>>{{2, Int(1)}});
        // k-th factor of B*_n holds 2u-1 copies of u for u in [n-k+1].
        WordMultiset bstar = WordMultiset::make(WordKind::BStar, 3);
        for (auto [value, mult] : bstar.factors[0]) CHECK(mult == 2 * value - 1);
        CHECK(bstar.factors.back() == std::vector<std::pair<int, Int>>{{1, Int(1)}});
    }
}

TEST_CASE("descent polynomials") {
    CHECK(descent_h(WordKind::A, 2) == Polynomial::one());
    CHECK(descent_h(WordKind::A, 5) == Polynomial::from_ints({1, 47, 108, 24}));
    CHECK(descent_h(WordKind::B, 4) == Polynomial::from_ints({1, 111, 359, 105}));
    for (int n = 1; n <= 8; ++n) CHECK(descent_h(WordKind::A, n) == descent_h_brute(WordKind::A, n));
    for (int n = 1; n <= 6; ++n) CHECK(descent_h(WordKind::B, n) == descent_h_brute(WordKind::B, n));
    CHECK_THROWS_AS(descent_h(WordKind::AStar, 3), Error);
}

TEST_CASE("recurrence matches the lattice route at Pi_8") {
    CHECK(descent_h(WordKind::A, 8) ==
          h_of_bounded(partition_lattice(8).graded));
}

TEST_CASE("h_{n,k} recurrence") {
    SUBCASE("base cases by hand") {
        auto a3 = hk_recurrence(WordKind::A, 3);
        REQUIRE(a3.size() == 2);
        CHECK(a3[0] == Polynomial::one());            // h_{3,2}
        CHECK(a3[1] == Polynomial::from_ints({0, 2}));  // h_{3,1}
        auto b2 = hk_recurrence(WordKind::B, 2);
        REQUIRE(b2.size() == 2);
        CHECK(b2[0] == Polynomial::one());
        CHECK(b2[1] == Polynomial::from_ints({0, 3}));
    }
    SUBCASE("sums equal descent_h up to n = 10") {
        MultisetCaps caps;
        for (int n = 2; n <= 10; ++n) {
            Polynomial sum;
            for (const auto& p : hk_recurrence(WordKind::A, n, caps)) sum += p;
            CHECK(sum == descent_h(WordKind::A, n, caps));
        }
        for (int n = 1; n <= 10; ++n) {
            Polynomial sum;
            for (const auto& p : hk_recurrence(WordKind::B, n, caps)) sum += p;
            CHECK(sum == descent_h(WordKind::B, n, caps));
        }
    }
    SUBCASE("the sequences interlace") {
        for (int n = 2; n <= 10; ++n) CHECK(is_interlacing_sequence(hk_recurrence(WordKind::A, n)));
        for (int n = 1; n <= 9; ++n) CHECK(is_interlacing_sequence(hk_recurrence(WordKind::B, n)));
    }
}

TEST_CASE("descent extremes") {
    for (int n = 2; n <= 8; ++n) {
        WordMultiset ms = WordMultiset::make(WordKind::A, n);
        Int empty_count = 0, full_count = 0;
        unsigned full = ms.length() >= 1 ? (1u << (ms.length() - 1)) - 1 : 0;
        for_each_word(ms, [&](const std::vector<int>& w, const Int& mult) {
            unsigned mask = weak_descent_mask(w);
            if (mask == 0) empty_count += mult;
            if (mask == full) full_count += mult;
        });
        CHECK(empty_count == 1);
        CHECK(full_count == factorial(n - 1));
    }
    for (int n = 1; n <= 6; ++n) {
        WordMultiset ms = WordMultiset::make(WordKind::B, n);
        Int empty_count = 0, full_count = 0;
        unsigned full = (1u << (n - 1)) - 1;
        for_each_word(ms, [&](const std::vector<int>& w, const Int& mult) {
            unsigned mask = weak_descent_mask(w);
            if (mask == 0) empty_count += mult;
            if (mask == full) full_count += mult;
        });
        CHECK(empty_count == 1);
        Int double_fact = 1;
        for (int i = 2 * n - 1; i >= 1; i -= 2) double_fact *= i;
        CHECK(full_count == double_fact);
    }
}

TEST_CASE("beta_match") {
    for (int n = 2; n <= 5; ++n) CHECK(beta_match(WordKind::A, n));
    for (int n = 1; n <= 4; ++n) CHECK(beta_match(WordKind::B, n));
}

TEST_CASE("psi word multisets equal the starred multisets") {
    for (int n = 3; n <= 6; ++n) {
        BuiltLattice pi = partition_lattice(n);
        std::map<std::vector<int>, Int> chain_hist;
        for_each_maximal_chain(pi.graded, [&](const std::vector<int>& chain) {
            chain_hist[psi_word(pi, chain)] += 1;
        });
        CHECK(chain_hist == word_histogram(WordKind::AStar, n));
    }
    for (int n = 2; n <= 4; ++n) {
        BuiltLattice pib = partition_lattice_b(n);
        std::map<std::vector<int>, Int> chain_hist;
        for_each_maximal_chain(pib.graded, [&](const std::vector<int>& chain) {
            chain_hist[psi_word(pib, chain)] += 1;
        });
        CHECK(chain_hist == word_histogram(WordKind::BStar, n));
    }
}

TEST_CASE("lpeak") {
    CHECK(lpeak_set(0b011, 4) == 1);  // S = {1,2}
    CHECK(lpeak_set(0b101, 4) == 2);  // S = {1,3}
    CHECK(lpeak_word({1, 1, 2}) == 1);
    CHECK(lpeak_word({1, 2}) == 0);
    CHECK(lpeak_word({1, 1}) == 1);
    // Set and word versions agree on descent sets.
    for_each_word(WordMultiset::make(WordKind::A, 6), [&](const std::vector<int>& w, const Int&) {
        CHECK(lpeak_word(w) == lpeak_set(weak_descent_mask(w), static_cast<int>(w.size())));
    });
}

TEST_CASE("edes_B") {
    CHECK(edes_b({-1, -1}) == 1);
    CHECK(edes_b({1, 1}) == 1);
    CHECK(edes_b({1, 2}) == 0);
    CHECK(edes_b({-1, -2}) == 2);
    SUBCASE("signed counts for n = 3") {
        Polynomial h = signed_edesb_h(3);
        CHECK(h == Polynomial::from_ints({1, 10, 1}));
    }
}

TEST_CASE("per-word signed identity") {
    CHECK(per_word_identity({1, 1}));
    CHECK(per_word_identity({1, 2}));
    for (int n = 3; n <= 5; ++n) {
        for_each_word(WordMultiset::make(WordKind::A, n),
                      [&](const std::vector<int>& w, const Int&) { CHECK(per_word_identity(w)); });
    }
}

TEST_CASE("interlacing of the partition h-polynomials") {
    for (int n = 2; n <= 9; ++n) {
        Polynomial prev = descent_h(WordKind::A, n - 1);
        Polynomial cur = descent_h(WordKind::A, n);
        CHECK(is_real_rooted(cur));
        CHECK(interlaces(prev, cur));
    }
    for (int n = 2; n <= 8; ++n)
        CHECK(interlaces(descent_h(WordKind::B, n - 1), descent_h(WordKind::B, n)));
}

TEST_CASE("recurrence route reaches n = 14") {
    Polynomial h14 = descent_h(WordKind::A, 14);
    CHECK(h14.degree() == 12);
    for (const Rat& c : h14.coeffs()) CHECK(c > 0);
    CHECK_THROWS_AS(descent_h(WordKind::A, 15), Error);
}

TEST_CASE("lpeak gamma values") {
    auto g3 = lpeak_gamma(3);
    REQUIRE(g3.size() == 2);
    CHECK(g3[0] == 1);
    CHECK(g3[1] == 8);
}
