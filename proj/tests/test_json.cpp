#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liecomb/json_io.hpp"

#include <random>

using namespace liecomb;

TEST_CASE("weight round trip") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 30; ++it) {
        const int d = 1 + static_cast<int>(rng() % 5);
        Weight w(d);
        for (int i = 0; i < d; ++i)
            w(i) = Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4));
        CHECK(weight_from_json(weight_to_json(w)) == w);
    }
    CHECK(weight_to_json(make_weight({Rational(3, 2)}))[0] == "3/2");
    CHECK(weight_from_json(json::parse("[1, \"1/2\"]")) == make_weight({Rational(1), Rational(1, 2)}));
    CHECK_THROWS_AS(weight_from_json(json::parse("{}")), std::invalid_argument);
}

TEST_CASE("lie type round trip") {
    for (const LieType& t : {LieType(Family::A, 2), LieType(Family::B, 3), LieType(Family::C, 5),
                             LieType(Family::D, 4)})
        CHECK(lietype_from_json(lietype_to_json(t)) == t);
    CHECK_THROWS_AS(lietype_from_json(json::parse("{\"family\":\"E\",\"rank\":8}")),
                    std::invalid_argument);
}

TEST_CASE("partition round trip") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 30; ++it) {
        std::vector<int> parts;
        int rest = 1 + static_cast<int>(rng() % 14), maxpart = rest;
        while (rest > 0) {
            const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(rest, maxpart)));
            parts.push_back(k);
            maxpart = k;
            rest -= k;
        }
        const Partition p(parts);
        CHECK(partition_from_json(partition_to_json(p)) == p);
    }
    CHECK_THROWS_AS(partition_from_json(json::parse("[2,3]")), std::invalid_argument);
}

TEST_CASE("algebra round trip") {
    const FinDimAlgebra m2 = FinDimAlgebra::matrix_algebra(2);
    const FinDimAlgebra back = algebra_from_json(algebra_to_json(m2));
    CHECK(back.dim() == m2.dim());
    CHECK(back.unit() == m2.unit());
    for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < 4; ++j)
            for (Index k = 0; k < 4; ++k)
                CHECK(back.structure_constant(i, j, k) == m2.structure_constant(i, j, k));
}

TEST_CASE("module round trip") {
    AlgebraModule col;
    col.dim = 2;
    for (Index r = 0; r < 2; ++r)
        for (Index s = 0; s < 2; ++s) {
            RatMatrix act = rat_zero(2, 2);
            act(r, s) = Rational(1);
            col.action.push_back(act);
        }
    const AlgebraModule back = module_from_json(module_to_json(col));
    CHECK(back.dim == col.dim);
    REQUIRE(back.action.size() == col.action.size());
    for (size_t i = 0; i < col.action.size(); ++i) CHECK(back.action[i] == col.action[i]);
}

TEST_CASE("report serializers") {
    const ParabolicDatum p = build_parabolic(siegel_composition(2));
    const json pj = parabolic_to_json(p);
    CHECK(weight_from_json(pj.at("rho_u")) == p.rho_u);
    CHECK(pj.at("gl_blocks") == json::array({2}));

    const HypothesisReport rep = check_theorem_hypotheses(p, p.rho_u);
    const json rj = hypothesis_report_to_json(rep);
    CHECK(rj.at("arth_member").get<bool>());
    CHECK(rj.at("antidominant").get<bool>());
    CHECK(rj.at("birational").get<bool>());

    const HypothesisReport unchecked =
        check_theorem_hypotheses(build_parabolic(LeviComposition(LieType(Family::C, 3), {1}, 2)),
                                 rho(LieType(Family::C, 3)));
    CHECK(hypothesis_report_to_json(unchecked).at("birational") == "unchecked");
}

TEST_CASE("arth character serializer") {
    const auto set = arth_set(LieType(Family::C, 2), Partition({2, 2}));
    REQUIRE(!set.empty());
    const json j = arth_character_to_json(set[0]);
    CHECK(partition_from_json(j.at("orbit_dual")) == set[0].orbit_dual);
    CHECK(weight_from_json(j.at("character")) == set[0].character);
}
