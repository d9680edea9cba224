#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liecomb/root_systems.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace liecomb;

namespace {

Weight w_of(std::initializer_list<Rational> cs) { return make_weight(cs); }

// Test-side oracle: the full Weyl group as explicit coordinate actions.
// A: all permutations; B/C: signed permutations; D: evenly-signed
// permutations.
std::vector<Weight> weyl_orbit_by_enumeration(const LieType& t, const Weight& w) {
    const int d = t.coord_dim();
    std::vector<int> perm(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) perm[static_cast<size_t>(i)] = i;
    std::vector<Weight> orbit;
    auto push = [&](const Weight& v) {
        for (const Weight& o : orbit)
            if (o == v) return;
        orbit.push_back(v);
    };
    do {
        const int signpatterns = (t.family == Family::A) ? 1 : (1 << d);
        for (int s = 0; s < signpatterns; ++s) {
            if (t.family == Family::D) {
                int bits = 0;
                for (int i = 0; i < d; ++i)
                    if (s & (1 << i)) ++bits;
                if (bits % 2 != 0) continue;
            }
            Weight v(d);
            for (int i = 0; i < d; ++i) {
                Rational c = w(perm[static_cast<size_t>(i)]);
                if (s & (1 << i)) c = -c;
                v(i) = c;
            }
            push(v);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return orbit;
}

Weight random_weight(std::mt19937_64& rng, int d) {
    Weight w(d);
    for (int i = 0; i < d; ++i)
        w(i) = Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    return w;
}

}  // namespace

TEST_CASE("positive root counts and C2 system") {
    const auto c2 = positive_roots(LieType(Family::C, 2));
    CHECK(c2.size() == 4);  // e1-e2, e1+e2, 2e1, 2e2
    CHECK(positive_roots(LieType(Family::C, 3)).size() == 9);
    CHECK(positive_roots(LieType(Family::A, 1)).size() == 1);
    CHECK(positive_roots(LieType(Family::B, 3)).size() == 9);
    CHECK(positive_roots(LieType(Family::D, 4)).size() == 12);

    const Weight e1me2 = w_of({Rational(1), Rational(-1)});
    const Weight e1pe2 = w_of({Rational(1), Rational(1)});
    const Weight twoe1 = w_of({Rational(2), Rational(0)});
    const Weight twoe2 = w_of({Rational(0), Rational(2)});
    for (const Weight& r : {e1me2, e1pe2, twoe1, twoe2})
        CHECK(std::find(c2.begin(), c2.end(), r) != c2.end());
}

TEST_CASE("A1 in embedded coordinates") {
    const auto a1 = positive_roots(LieType(Family::A, 1));
    CHECK(a1[0] == w_of({Rational(1), Rational(-1)}));
}

TEST_CASE("coroot pairing") {
    const LieType c2(Family::C, 2);
    CHECK(coroot_pairing(w_of({Rational(1), Rational(0)}), w_of({Rational(2), Rational(0)}), c2) ==
          Rational(1));
    CHECK(coroot_pairing(rho(c2), w_of({Rational(1), Rational(-1)}), c2) == Rational(1));
    CHECK(coroot_pairing(w_of({Rational(-1, 2), Rational(1, 2)}),
                         w_of({Rational(1), Rational(1)}), c2) == Rational(0));
    CHECK_THROWS_AS(coroot_pairing(rho(c2), w_of({Rational(1), Rational(2)}), c2),
                    std::invalid_argument);
}

TEST_CASE("rho closed forms") {
    CHECK(rho(LieType(Family::C, 2)) == w_of({Rational(2), Rational(1)}));
    CHECK(rho(LieType(Family::C, 5)) ==
          w_of({Rational(5), Rational(4), Rational(3), Rational(2), Rational(1)}));
    CHECK(rho(LieType(Family::C, 1)) == w_of({Rational(1)}));
    CHECK(rho(LieType(Family::B, 2)) == w_of({Rational(3, 2), Rational(1, 2)}));
    CHECK(rho(LieType(Family::D, 3)) == w_of({Rational(2), Rational(1), Rational(0)}));
}

TEST_CASE("rho pairs to 1 with every simple coroot") {
    for (const LieType& t : {LieType(Family::A, 3), LieType(Family::B, 3), LieType(Family::C, 4),
                             LieType(Family::D, 4)}) {
        const Weight r = rho(t);
        for (const Weight& a : simple_roots(t)) CHECK(coroot_pairing(r, a, t) == Rational(1));
    }
}

TEST_CASE("weyl equivalence examples") {
    const LieType c2(Family::C, 2);
    CHECK(weyl_equivalent(c2, w_of({Rational(-1, 2), Rational(1, 2)}),
                          w_of({Rational(1, 2), Rational(-1, 2)})));
    CHECK(weyl_equivalent(c2, rho(c2), rho(c2)));
    CHECK(!weyl_equivalent(c2, w_of({Rational(1), Rational(0)}), w_of({Rational(0), Rational(2)})));
}

TEST_CASE("weyl equivalence agrees with full enumeration at rank <= 3") {
    std::mt19937_64 rng(2024);
    for (const LieType& t : {LieType(Family::A, 2), LieType(Family::B, 2), LieType(Family::C, 3),
                             LieType(Family::D, 3)}) {
        for (int it = 0; it < 6; ++it) {
            const Weight w = random_weight(rng, t.coord_dim());
            const auto orbit = weyl_orbit_by_enumeration(t, w);
            for (const Weight& v : orbit) CHECK(weyl_equivalent(t, w, v));
            // A weight off the orbit must not test equivalent.
            Weight off = w;
            off(0) += Rational(1, 7);
            bool in_orbit = false;
            for (const Weight& v : orbit)
                if (v == off) in_orbit = true;
            if (!in_orbit) CHECK(!weyl_equivalent(t, w, off));
        }
    }
}

TEST_CASE("weyl equivalence is an equivalence relation") {
    std::mt19937_64 rng(99);
    // Random group elements: a permutation plus a family-legal sign pattern.
    auto random_image = [&](const LieType& t, const Weight& w) {
        const int d = t.coord_dim();
        std::vector<int> perm(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) perm[static_cast<size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        int signs = 0;
        if (t.family != Family::A) {
            signs = static_cast<int>(rng() % (1u << d));
            if (t.family == Family::D) {
                int bits = 0;
                for (int i = 0; i < d; ++i)
                    if (signs & (1 << i)) ++bits;
                if (bits % 2 != 0) signs ^= 1;
            }
        }
        Weight v(d);
        for (int i = 0; i < d; ++i) {
            Rational c = w(perm[static_cast<size_t>(i)]);
            if (signs & (1 << i)) c = -c;
            v(i) = c;
        }
        return v;
    };
    for (const LieType& t : {LieType(Family::A, 3), LieType(Family::B, 4), LieType(Family::C, 4),
                             LieType(Family::D, 4)}) {
        for (int it = 0; it < 20; ++it) {
            const Weight a = random_weight(rng, t.coord_dim());
            const Weight b = random_image(t, a);
            const Weight c = random_image(t, b);
            CHECK(weyl_equivalent(t, a, a));
            CHECK(weyl_equivalent(t, a, b));
            CHECK(weyl_equivalent(t, b, a));
            CHECK((weyl_equivalent(t, a, b) && weyl_equivalent(t, b, c) &&
                   weyl_equivalent(t, a, c)));
        }
    }
}

TEST_CASE("D parity rule") {
    const LieType d2(Family::D, 2);
    // (1,1) and (1,-1) lie in different W(D2) orbits: no zero coordinate and
    // opposite sign product.
    CHECK(!weyl_equivalent(d2, w_of({Rational(1), Rational(1)}), w_of({Rational(1), Rational(-1)})));
    // With a zero coordinate sign flips are unconstrained.
    const LieType d3(Family::D, 3);
    CHECK(weyl_equivalent(d3, w_of({Rational(1), Rational(0), Rational(2)}),
                          w_of({Rational(-1), Rational(2), Rational(0)})));
}

TEST_CASE("antidominance") {
    const LieType c2(Family::C, 2);
    const auto all = positive_roots(c2);
    const Weight zero = rat_zero_vec(2);
    CHECK(is_antidominant(zero, all, false));
    CHECK(!is_antidominant(zero, all, true));
    CHECK(is_antidominant(w_of({Rational(-2), Rational(-1)}), all, true));
}

TEST_CASE("norm_sq") {
    CHECK(norm_sq(w_of({Rational(1), Rational(0)})) == Rational(1));
    CHECK(norm_sq(rho(LieType(Family::C, 2))) == Rational(5));
    CHECK(norm_sq(w_of({Rational(1, 2), Rational(1, 2)})) == Rational(1, 2));
}

TEST_CASE("norm_sq is Weyl invariant") {
    std::mt19937_64 rng(5);
    for (const LieType& t : {LieType(Family::B, 3), LieType(Family::C, 3), LieType(Family::D, 3)}) {
        for (int it = 0; it < 10; ++it) {
            const Weight w = random_weight(rng, t.coord_dim());
            for (const Weight& v : weyl_orbit_by_enumeration(t, w)) {
                CHECK(norm_sq(v) == norm_sq(w));
            }
        }
    }
}

TEST_CASE("lie type invariants") {
    CHECK_THROWS_AS(LieType(Family::C, 0), std::invalid_argument);
    CHECK_THROWS_AS(LieType(Family::D, 1), std::invalid_argument);
    CHECK(LieType(Family::A, 2).coord_dim() == 3);
    CHECK(LieType(Family::B, 2).defining_dim() == 5);
    CHECK(LieType(Family::C, 3).defining_dim() == 6);
}
