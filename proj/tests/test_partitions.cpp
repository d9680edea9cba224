#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liecomb/partitions.hpp"

#include <random>

using namespace liecomb;

namespace {

// Test-side oracle: the dominance-maximal valid partition below p, found by
// exhaustive search. Checks uniqueness of the maximum along the way.
Partition collapse_by_search(const LieType& t, const Partition& p) {
    std::vector<Partition> candidates;
    for (const Partition& q : all_partitions(p.size()))
        if (is_valid_orbit(t, q) && dominance_leq(q, p)) candidates.push_back(q);
    REQUIRE(!candidates.empty());
    std::vector<Partition> maximal;
    for (const Partition& q : candidates) {
        bool dominated = false;
        for (const Partition& r : candidates)
            if (r != q && dominance_leq(q, r)) dominated = true;
        if (!dominated) maximal.push_back(q);
    }
    REQUIRE(maximal.size() == 1);
    return maximal[0];
}

Partition random_partition(std::mt19937_64& rng, int n) {
    std::vector<int> parts;
    int rest = n;
    int maxpart = n;
    while (rest > 0) {
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(rest, maxpart)));
        parts.push_back(k);
        maxpart = k;
        rest -= k;
    }
    return Partition(std::move(parts));
}

}  // namespace

TEST_CASE("partition invariants") {
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition({3, 2, 2}).size() == 7);
    CHECK(Partition::from_unsorted({0, 2, 0, 3, 1}) == Partition({3, 2, 1}));
}

TEST_CASE("transpose") {
    CHECK(transpose(Partition({2, 2})) == Partition({2, 2}));
    CHECK(transpose(Partition({5, 5, 1})) == Partition({3, 2, 2, 2, 2}));
    CHECK(transpose(Partition({6})) == Partition({1, 1, 1, 1, 1, 1}));
    CHECK(transpose(Partition()) == Partition());
}

TEST_CASE("transpose is an involution") {
    std::mt19937_64 rng(31);
    for (int n = 1; n <= 20; ++n)
        for (int it = 0; it < 5; ++it) {
            const Partition p = random_partition(rng, n);
            CHECK(transpose(transpose(p)) == p);
        }
}

TEST_CASE("orbit validity") {
    CHECK(is_valid_orbit(LieType(Family::C, 3), Partition({2, 2, 2})));
    CHECK(!is_valid_orbit(LieType(Family::C, 2), Partition({3, 1})));
    CHECK(is_valid_orbit(LieType(Family::B, 2), Partition({2, 2, 1})));
    CHECK(!is_valid_orbit(LieType(Family::B, 2), Partition({4, 1})));
    CHECK(is_valid_orbit(LieType(Family::A, 3), Partition({3, 1})));
    CHECK(is_valid_orbit(LieType(Family::D, 2), Partition({3, 1})));
    CHECK_THROWS_AS(is_valid_orbit(LieType(Family::C, 2), Partition({3, 3})), std::invalid_argument);
}

TEST_CASE("dominance") {
    CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
    CHECK(dominance_leq(Partition({3, 1}), Partition({3, 1})));
    CHECK(!dominance_leq(Partition({3, 1}), Partition({2, 2})));
    CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("collapse examples") {
    CHECK(collapse(LieType(Family::C, 2), Partition({3, 1})) == Partition({2, 2}));
    CHECK(collapse(LieType(Family::C, 3), Partition({2, 2, 2})) == Partition({2, 2, 2}));
    CHECK(collapse(LieType(Family::C, 3), Partition({3, 2, 1})) == Partition({2, 2, 2}));
    CHECK(collapse(LieType(Family::B, 2), Partition({3, 2})) == Partition({3, 1, 1}));
    CHECK(collapse(LieType(Family::B, 2), Partition({4, 1})) == Partition({3, 1, 1}));
    CHECK(collapse(LieType(Family::D, 3), Partition({5, 1})) == Partition({5, 1}));
    CHECK(collapse(LieType(Family::D, 3), Partition({4, 2})) == Partition({3, 3}));
}

TEST_CASE("collapse agrees with exhaustive search through size 12") {
    for (int n = 2; n <= 12; ++n) {
        std::vector<LieType> types;
        if (n % 2 == 0) {
            types.push_back(LieType(Family::C, n / 2));
            if (n >= 4) types.push_back(LieType(Family::D, n / 2));
        } else {
            types.push_back(LieType(Family::B, (n - 1) / 2));
        }
        for (const LieType& t : types)
            for (const Partition& p : all_partitions(n)) {
                const Partition got = collapse(t, p);
                CHECK(is_valid_orbit(t, got));
                CHECK(dominance_leq(got, p));
                CHECK(got == collapse_by_search(t, p));
            }
    }
}

TEST_CASE("collapse is idempotent") {
    for (int n : {6, 8, 10}) {
        const LieType t(Family::C, n / 2);
        for (const Partition& p : all_partitions(n)) {
            const Partition c = collapse(t, p);
            CHECK(collapse(t, c) == c);
        }
    }
}

TEST_CASE("h weight examples") {
    CHECK(h_weight(LieType(Family::B, 2), Partition({5})) ==
          make_weight({Rational(4), Rational(2)}));
    CHECK(h_weight(LieType(Family::C, 3), Partition({1, 1, 1, 1, 1, 1})) ==
          make_weight({Rational(0), Rational(0), Rational(0)}));
    CHECK(h_weight(LieType(Family::B, 2), Partition({2, 2, 1})) ==
          make_weight({Rational(1), Rational(1)}));
    CHECK_THROWS_AS(h_weight(LieType(Family::C, 2), Partition({3, 1})), std::invalid_argument);
}

TEST_CASE("principal h weight halves to dual rho") {
    for (int n = 1; n <= 6; ++n) {
        Weight h = h_weight(LieType(Family::B, n), Partition({2 * n + 1}));
        for (Index i = 0; i < h.size(); ++i) h(i) *= Rational(1, 2);
        CHECK(h == rho(LieType(Family::C, n)));
    }
}
