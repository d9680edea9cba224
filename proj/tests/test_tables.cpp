#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liecomb/ktheory.hpp"

#include <fstream>
#include <set>
#include <sstream>

using namespace liecomb;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(LIECOMB_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DecompositionTable bundled(const std::string& name) { return parse_table(slurp(name)); }

}  // namespace

TEST_CASE("bundled table shapes") {
    const DecompositionTable sp4 = bundled("sp4.json");
    CHECK(sp4.unipotents.size() == 2);
    CHECK(sp4.degenerates.size() == 2);

    const DecompositionTable sp6 = bundled("sp6.json");
    CHECK(sp6.unipotents.size() == 7);
    CHECK(sp6.degenerates.size() == 16);
    int zero_rows = 0;
    for (const DegenerateRecord& d : sp6.degenerates) {
        bool all_zero = true;
        for (long c : d.coeffs)
            if (c != 0) all_zero = false;
        if (all_zero) ++zero_rows;
    }
    CHECK(zero_rows == 1);

    const DecompositionTable sp10 = bundled("sp10.json");
    CHECK(sp10.unipotents.size() == 11);
    CHECK(sp10.degenerates.size() == 38);
    zero_rows = 0;
    for (const DegenerateRecord& d : sp10.degenerates) {
        bool all_zero = true;
        for (long c : d.coeffs)
            if (c != 0) all_zero = false;
        if (all_zero) ++zero_rows;
    }
    CHECK(zero_rows == 3);
}

TEST_CASE("span and matching hold for every bundled table") {
    for (const char* name : {"sp4.json", "sp6.json", "sp10.json"}) {
        const DecompositionTable t = bundled(name);
        CHECK(span_equal(t));
        const auto match = find_triangular_matching(t);
        REQUIRE(match.has_value());
        const IntMatrix sub = matching_submatrix(t, *match);
        for (Index p = 0; p < sub.rows(); ++p) {
            CHECK((sub(p, p) == 1 || sub(p, p) == -1));
            for (Index q = 0; q < p; ++q) CHECK(sub(p, q) == 0);
        }
        // Unimodularity cross-check: the inverse is integral with det +-1.
        RatMatrix rsub(sub.rows(), sub.cols());
        for (Index i = 0; i < sub.rows(); ++i)
            for (Index j = 0; j < sub.cols(); ++j) rsub(i, j) = Rational(sub(i, j));
        const Rational det = determinant(rsub);
        CHECK((det == Rational(1) || det == Rational(-1)));
        const auto inv = inverse(rsub);
        REQUIRE(inv.has_value());
        for (Index i = 0; i < inv->rows(); ++i)
            for (Index j = 0; j < inv->cols(); ++j) CHECK((*inv)(i, j).is_integer());
    }
}

TEST_CASE("sp4 matching uses the two unit rows") {
    const DecompositionTable t = bundled("sp4.json");
    const auto match = find_triangular_matching(t);
    REQUIRE(match.has_value());
    CHECK(match->diagonal_signs == std::vector<int>{1, 1});
    const std::set<int> rows(match->degenerate_rows.begin(), match->degenerate_rows.end());
    CHECK(rows == std::set<int>{0, 1});
}

TEST_CASE("identity table matches trivially") {
    DecompositionTable t;
    t.group = LieType(Family::C, 3);
    for (int i = 1; i <= 3; ++i) {
        UnipotentRecord u;
        u.id = i;
        u.orbits = {{3, 0}};
        u.bundles = {"0"};
        t.unipotents.push_back(u);
    }
    for (int i = 0; i < 3; ++i) {
        DegenerateRecord d;
        d.kgb = i;
        d.coeffs = {0, 0, 0};
        d.coeffs[static_cast<size_t>(i)] = 1;
        t.degenerates.push_back(d);
    }
    CHECK(span_equal(t));
    const auto match = find_triangular_matching(t);
    REQUIRE(match.has_value());
    CHECK(match->diagonal_signs == std::vector<int>{1, 1, 1});
}

TEST_CASE("index-two sublattice fails the span check") {
    DecompositionTable t;
    t.group = LieType(Family::C, 2);
    for (int i = 1; i <= 2; ++i) {
        UnipotentRecord u;
        u.id = i;
        u.orbits = {{2, 0}};
        u.bundles = {"0"};
        t.unipotents.push_back(u);
    }
    DegenerateRecord d1;
    d1.kgb = 0;
    d1.coeffs = {2, 0};
    DegenerateRecord d2;
    d2.kgb = 1;
    d2.coeffs = {0, 1};
    t.degenerates = {d1, d2};
    CHECK(!span_equal(t));
    std::string trace;
    CHECK(!find_triangular_matching(t, &trace).has_value());
    CHECK(!trace.empty());
}

TEST_CASE("row deduplication changes neither span nor matching") {
    for (const char* name : {"sp6.json", "sp10.json"}) {
        DecompositionTable t = bundled(name);
        std::vector<DegenerateRecord> unique_rows;
        std::set<std::vector<long>> seen;
        for (const DegenerateRecord& d : t.degenerates)
            if (seen.insert(d.coeffs).second) unique_rows.push_back(d);
        CHECK(unique_rows.size() < t.degenerates.size());
        t.degenerates = unique_rows;
        CHECK(span_equal(t));
        CHECK(find_triangular_matching(t).has_value());
    }
}

TEST_CASE("unipotent orbit data is consistent with the K-orbit enumeration") {
    for (const char* name : {"sp4.json", "sp6.json", "sp10.json"}) {
        const DecompositionTable t = bundled(name);
        const int n = t.group.rank;
        const auto korbits = korbit_enumerate(n);
        for (const UnipotentRecord& u : t.unipotents)
            for (size_t k = 0; k < u.orbits.size(); ++k) {
                bool found = false;
                for (const KOrbit& ko : korbits)
                    if (ko.a == u.orbits[k].first && ko.b == u.orbits[k].second) {
                        found = true;
                        const auto& legal = ko.bundles;
                        CHECK(std::find(legal.begin(), legal.end(), u.bundles[k]) != legal.end());
                    }
                CHECK(found);
            }
    }
}

TEST_CASE("korbit enumeration") {
    const auto n2 = korbit_enumerate(2);
    REQUIRE(n2.size() == 3);
    CHECK(n2[0].a == 2);
    CHECK(n2[0].bundles.size() == 2);
    CHECK(n2[1].bundles.size() == 4);
    CHECK(n2[2].bundles.size() == 2);

    const auto n1 = korbit_enumerate(1);
    REQUIRE(n1.size() == 2);
    CHECK(n1[0].bundles.size() == 2);
    CHECK(n1[1].bundles.size() == 2);

    CHECK(korbit_enumerate(5).size() == 6);
    CHECK_THROWS_AS(korbit_enumerate(0), std::invalid_argument);
}

TEST_CASE("parse diagnostics") {
    CHECK_THROWS_WITH_AS(parse_table("{"), doctest::Contains("table:"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_table("{\"group\":{\"family\":\"C\",\"rank\":2}}"),
                         doctest::Contains("expected"), std::invalid_argument);

    // Orbit pair with a+b != n.
    const char* bad_orbit = R"({"group":{"family":"C","rank":2},
        "unipotents":[{"id":1,"orbits":[[2,1]],"bundles":["00"]}],
        "degenerates":[]})";
    CHECK_THROWS_WITH_AS(parse_table(bad_orbit), doctest::Contains("a+b"), std::invalid_argument);

    // Illegal bundle label for a boundary orbit.
    const char* bad_bundle = R"({"group":{"family":"C","rank":2},
        "unipotents":[{"id":1,"orbits":[[2,0]],"bundles":["00"]}],
        "degenerates":[]})";
    CHECK_THROWS_WITH_AS(parse_table(bad_bundle), doctest::Contains("not legal"),
                         std::invalid_argument);

    // Coefficient referencing a nonexistent unipotent.
    const char* bad_ref = R"({"group":{"family":"C","rank":2},
        "unipotents":[{"id":1,"orbits":[[2,0]],"bundles":["0"]}],
        "degenerates":[{"kgb":3,"coeffs":{"2":1}}]})";
    CHECK_THROWS_WITH_AS(parse_table(bad_ref), doctest::Contains("out of range"),
                         std::invalid_argument);

    // Non-consecutive ids.
    const char* bad_ids = R"({"group":{"family":"C","rank":2},
        "unipotents":[{"id":2,"orbits":[[2,0]],"bundles":["0"]}],
        "degenerates":[]})";
    CHECK_THROWS_WITH_AS(parse_table(bad_ids), doctest::Contains("consecutive"),
                         std::invalid_argument);
}

TEST_CASE("verify_table aggregates the checks") {
    const TableReport rep = verify_table(bundled("sp6.json"));
    CHECK(rep.unipotent_count == 7);
    CHECK(rep.degenerate_count == 16);
    CHECK(rep.span);
    CHECK(rep.matching_found);
    CHECK(rep.ok());
    CHECK(rep.diagonal_signs.size() == 7);
    const json j = table_report_to_json(rep);
    CHECK(j.at("ok").get<bool>());
}
