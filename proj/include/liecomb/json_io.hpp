#pragma once

// JSON encodings of the library's value types. Weights serialize as arrays
// of exact "p/q" strings; partitions as arrays of integers; algebras as
// sparse structure-constant lists.

#include "liecomb/orbits.hpp"
#include "liecomb/parabolics.hpp"
#include "liecomb/partitions.hpp"
#include "liecomb/peirce.hpp"
#include "liecomb/rational.hpp"
#include "liecomb/root_systems.hpp"

#include <json.hpp>

#include <string>
#include <tuple>
#include <vector>

namespace liecomb {

using nlohmann::json;

inline json weight_to_json(const Weight& w) {
    json arr = json::array();
    for (Index i = 0; i < w.size(); ++i) arr.push_back(w(i).str());
    return arr;
}

inline Weight weight_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("weight: expected a JSON array");
    Weight w(static_cast<Index>(j.size()));
    Index i = 0;
    for (const json& c : j) {
        if (c.is_string())
            w(i) = Rational(c.get<std::string>());
        else if (c.is_number_integer())
            w(i) = Rational(c.get<long>());
        else
            throw std::invalid_argument("weight: entries must be \"p/q\" strings or integers");
        ++i;
    }
    return w;
}

inline json lietype_to_json(const LieType& t) {
    return json{{"family", std::string(1, family_letter(t.family))}, {"rank", t.rank}};
}

inline LieType lietype_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j.contains("rank"))
        throw std::invalid_argument("lie type: expected {\"family\":...,\"rank\":...}");
    const std::string fam = j.at("family").get<std::string>();
    if (fam.size() != 1) throw std::invalid_argument("lie type: family must be one letter");
    return LieType(family_from_letter(fam[0]), j.at("rank").get<int>());
}

inline json partition_to_json(const Partition& p) {
    json arr = json::array();
    for (int v : p.parts()) arr.push_back(v);
    return arr;
}

inline Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected a JSON array");
    std::vector<int> parts;
    for (const json& c : j) {
        if (!c.is_number_integer()) throw std::invalid_argument("partition: entries must be integers");
        parts.push_back(c.get<int>());
    }
    return Partition(std::move(parts));
}

inline json algebra_to_json(const FinDimAlgebra& a) {
    json mult = json::array();
    for (Index i = 0; i < a.dim(); ++i)
        for (Index j = 0; j < a.dim(); ++j)
            for (Index k = 0; k < a.dim(); ++k) {
                const Rational c = a.structure_constant(i, j, k);
                if (!c.is_zero()) mult.push_back(json::array({i, j, k, c.str()}));
            }
    json unit = json::array();
    for (Index i = 0; i < a.dim(); ++i) unit.push_back(a.unit()(i).str());
    return json{{"dim", a.dim()}, {"unit", unit}, {"mult", mult}};
}

inline FinDimAlgebra algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("unit") || !j.contains("mult"))
        throw std::invalid_argument("algebra: expected {\"dim\",\"unit\",\"mult\"}");
    const Index dim = j.at("dim").get<Index>();
    RatVector unit = weight_from_json(j.at("unit"));
    std::vector<std::tuple<Index, Index, Index, Rational>> sc;
    for (const json& e : j.at("mult")) {
        if (!e.is_array() || e.size() != 4)
            throw std::invalid_argument("algebra: mult entries are [i,j,k,\"p/q\"]");
        Rational c = e[3].is_string() ? Rational(e[3].get<std::string>()) : Rational(e[3].get<long>());
        sc.emplace_back(e[0].get<Index>(), e[1].get<Index>(), e[2].get<Index>(), std::move(c));
    }
    return FinDimAlgebra::from_structure_constants(dim, sc, std::move(unit));
}

inline json matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

inline RatMatrix matrix_from_json(const json& j, Index rows, Index cols) {
    if (!j.is_array() || static_cast<Index>(j.size()) != rows)
        throw std::invalid_argument("matrix: wrong row count");
    RatMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        const json& row = j[static_cast<size_t>(r)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            throw std::invalid_argument("matrix: wrong column count");
        for (Index c = 0; c < cols; ++c) {
            const json& e = row[static_cast<size_t>(c)];
            m(r, c) = e.is_string() ? Rational(e.get<std::string>()) : Rational(e.get<long>());
        }
    }
    return m;
}

inline json module_to_json(const AlgebraModule& m) {
    json action = json::array();
    for (const RatMatrix& act : m.action) action.push_back(matrix_to_json(act));
    return json{{"dim", m.dim}, {"action", action}};
}

inline AlgebraModule module_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("action"))
        throw std::invalid_argument("module: expected {\"dim\",\"action\"}");
    AlgebraModule m;
    m.dim = j.at("dim").get<Index>();
    for (const json& act : j.at("action")) m.action.push_back(matrix_from_json(act, m.dim, m.dim));
    return m;
}

inline json arth_character_to_json(const ArthCharacter& a) {
    return json{{"orbit_dual", partition_to_json(a.orbit_dual)},
                {"character", weight_to_json(a.character)}};
}

inline json parabolic_to_json(const ParabolicDatum& p) {
    return json{{"type", lietype_to_json(p.levi.ambient)},
                {"gl_blocks", p.levi.gl_blocks},
                {"residual_rank", p.levi.residual_rank},
                {"rho_l", weight_to_json(p.rho_l)},
                {"rho_u", weight_to_json(p.rho_u)},
                {"rho_g", weight_to_json(p.rho_g)}};
}

inline json hypothesis_report_to_json(const HypothesisReport& r) {
    json j{{"arth_member", r.arth_member},
           {"antidominant", r.antidominant},
           {"induced_orbit", partition_to_json(r.induced_orbit)},
           {"character", weight_to_json(r.character)},
           {"note", "arth membership is a sufficient criterion for unipotence, "
                    "not a refutation: arth(O) is contained in unip(O)"}};
    if (r.birational == TriState::Unchecked)
        j["birational"] = "unchecked";
    else
        j["birational"] = (r.birational == TriState::True);
    return j;
}

}  // namespace liecomb
