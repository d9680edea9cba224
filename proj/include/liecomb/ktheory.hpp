#pragma once

// Integer-lattice verification of decomposition tables: unipotent classes
// as a basis, degenerate rows as integer combinations, equality of spans by
// Hermite normal form, and the triangular matching between the two bases.
// Also the Sp(2n,R) K-orbit and line-bundle enumeration the table labels
// refer to.

#include "liecomb/hnf.hpp"
#include "liecomb/json_io.hpp"
#include "liecomb/linalg.hpp"
#include "liecomb/root_systems.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace liecomb {

struct KOrbit {
    int a, b;
    std::vector<std::string> bundles;
};

inline std::vector<std::string> legal_bundle_labels(int a, int b) {
    if (a >= 1 && b >= 1) return {"00", "01", "10", "11"};
    return {"0", "1"};
}

// The n+1 K-orbit pairs (a, b), a+b = n, with their equivariant line-bundle
// labels: four when both a and b are positive, two otherwise.
inline std::vector<KOrbit> korbit_enumerate(int n) {
    if (n < 1) throw std::invalid_argument("korbit_enumerate: n must be >= 1");
    std::vector<KOrbit> out;
    for (int a = n; a >= 0; --a) out.push_back(KOrbit{a, n - a, legal_bundle_labels(a, n - a)});
    return out;
}

struct UnipotentRecord {
    int id = 0;
    std::vector<std::pair<int, int>> orbits;
    std::vector<std::string> bundles;  // one label per orbit
};

struct DegenerateRecord {
    long kgb = 0;
    std::vector<long> coeffs;  // dense over unipotent ids 1..n
};

struct DecompositionTable {
    LieType group{Family::C, 1};
    std::vector<UnipotentRecord> unipotents;
    std::vector<DegenerateRecord> degenerates;

    IntMatrix coefficient_matrix() const {
        IntMatrix m(static_cast<Index>(degenerates.size()), static_cast<Index>(unipotents.size()));
        for (size_t r = 0; r < degenerates.size(); ++r)
            for (size_t c = 0; c < unipotents.size(); ++c)
                m(static_cast<Index>(r), static_cast<Index>(c)) = degenerates[r].coeffs[c];
        return m;
    }
};

// Parses and validates a table. Diagnostics name the offending record and
// field. Duplicate and zero degenerate rows are preserved.
inline DecompositionTable parse_table(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("table: ") + e.what());
    }
    if (!j.is_object() || !j.contains("group") || !j.contains("unipotents") || !j.contains("degenerates"))
        throw std::invalid_argument("table: expected {\"group\",\"unipotents\",\"degenerates\"}");
    DecompositionTable t;
    t.group = lietype_from_json(j.at("group"));
    const int n = t.group.rank;

    int expect_id = 1;
    for (const json& u : j.at("unipotents")) {
        const std::string where = "unipotents[" + std::to_string(expect_id - 1) + "]";
        if (!u.is_object() || !u.contains("id") || !u.contains("orbits") || !u.contains("bundles"))
            throw std::invalid_argument("table: " + where + ": expected {\"id\",\"orbits\",\"bundles\"}");
        UnipotentRecord rec;
        rec.id = u.at("id").get<int>();
        if (rec.id != expect_id)
            throw std::invalid_argument("table: " + where + ": ids must be consecutive from 1, got " +
                                        std::to_string(rec.id));
        for (const json& o : u.at("orbits")) {
            if (!o.is_array() || o.size() != 2)
                throw std::invalid_argument("table: " + where + ".orbits: entries are [a,b] pairs");
            const int a = o[0].get<int>(), b = o[1].get<int>();
            if (a < 0 || b < 0 || a + b != n)
                throw std::invalid_argument("table: " + where + ".orbits: pair (" + std::to_string(a) +
                                            "," + std::to_string(b) + ") must have a+b = " +
                                            std::to_string(n));
            rec.orbits.emplace_back(a, b);
        }
        for (const json& bl : u.at("bundles")) rec.bundles.push_back(bl.get<std::string>());
        if (rec.bundles.size() != rec.orbits.size())
            throw std::invalid_argument("table: " + where + ": one bundle label per orbit required");
        for (size_t k = 0; k < rec.orbits.size(); ++k) {
            const auto legal = legal_bundle_labels(rec.orbits[k].first, rec.orbits[k].second);
            if (std::find(legal.begin(), legal.end(), rec.bundles[k]) == legal.end())
                throw std::invalid_argument("table: " + where + ".bundles[" + std::to_string(k) +
                                            "]: label '" + rec.bundles[k] + "' is not legal for pair (" +
                                            std::to_string(rec.orbits[k].first) + "," +
                                            std::to_string(rec.orbits[k].second) + ")");
        }
        t.unipotents.push_back(std::move(rec));
        ++expect_id;
    }

    const size_t nu = t.unipotents.size();
    size_t row = 0;
    for (const json& d : j.at("degenerates")) {
        const std::string where = "degenerates[" + std::to_string(row) + "]";
        if (!d.is_object() || !d.contains("kgb") || !d.contains("coeffs"))
            throw std::invalid_argument("table: " + where + ": expected {\"kgb\",\"coeffs\"}");
        DegenerateRecord rec;
        rec.kgb = d.at("kgb").get<long>();
        rec.coeffs.assign(nu, 0);
        for (const auto& [key, val] : d.at("coeffs").items()) {
            int id = 0;
            try {
                id = std::stoi(key);
            } catch (...) {
                throw std::invalid_argument("table: " + where + ".coeffs: key '" + key +
                                            "' is not a unipotent id");
            }
            if (id < 1 || id > static_cast<int>(nu))
                throw std::invalid_argument("table: " + where + ".coeffs: unipotent id " + key +
                                            " out of range 1.." + std::to_string(nu));
            if (!val.is_number_integer())
                throw std::invalid_argument("table: " + where + ".coeffs[" + key +
                                            "]: coefficient must be an integer");
            rec.coeffs[static_cast<size_t>(id - 1)] = val.get<long>();
        }
        t.degenerates.push_back(std::move(rec));
        ++row;
    }
    return t;
}

// True iff the degenerate rows generate exactly Z^n over the unipotent
// basis.
inline bool span_equal(const DecompositionTable& t) {
    if (t.unipotents.empty()) return false;
    return spans_standard_lattice(t.coefficient_matrix());
}

struct TriangularMatching {
    // Position p of the triangular ordering uses unipotent column
    // unipotent_order[p] and degenerate row degenerate_rows[p]; the selected
    // square submatrix is upper triangular with diagonal_signs on the
    // diagonal.
    std::vector<int> unipotent_order;
    std::vector<int> degenerate_rows;
    std::vector<int> diagonal_signs;
};

// Backtracking peel: repeatedly select a row whose support among the
// remaining columns is a single entry of value +-1, preferring forced
// columns; failed states are memoized. Returns the ordering, or a search
// trace on failure.
inline std::optional<TriangularMatching> find_triangular_matching(const DecompositionTable& t,
                                                                  std::string* trace = nullptr) {
    const int ncols = static_cast<int>(t.unipotents.size());
    const int nrows = static_cast<int>(t.degenerates.size());
    if (ncols > 31 || nrows > 63)
        throw std::invalid_argument("find_triangular_matching: table too large for the search mask");
    const IntMatrix m = t.coefficient_matrix();

    std::vector<std::pair<int, int>> peel;  // (row, col), bottom of the ordering first
    std::set<std::pair<std::uint32_t, std::uint64_t>> failed;

    auto rec = [&](auto&& self, std::uint32_t cols_left, std::uint64_t rows_used) -> bool {
        if (cols_left == 0) return true;
        if (failed.count({cols_left, rows_used})) return false;
        // Candidate rows per remaining column.
        std::vector<std::vector<int>> cand(static_cast<size_t>(ncols));
        for (int r = 0; r < nrows; ++r) {
            if (rows_used & (1ULL << r)) continue;
            int support_col = -1;
            bool ok = true;
            for (int c = 0; c < ncols && ok; ++c) {
                if (!(cols_left & (1U << c)) || m(r, c) == 0) continue;
                if (support_col >= 0)
                    ok = false;
                else
                    support_col = c;
            }
            if (ok && support_col >= 0 && (m(r, support_col) == 1 || m(r, support_col) == -1))
                cand[static_cast<size_t>(support_col)].push_back(r);
        }
        int best_col = -1;
        for (int c = 0; c < ncols; ++c) {
            if (!(cols_left & (1U << c)) || cand[static_cast<size_t>(c)].empty()) continue;
            if (best_col < 0 ||
                cand[static_cast<size_t>(c)].size() < cand[static_cast<size_t>(best_col)].size())
                best_col = c;
        }
        if (best_col < 0) {
            if (trace) {
                *trace += "no remaining row is a unit vector on the unpeeled unipotents {";
                for (int c = 0; c < ncols; ++c)
                    if (cols_left & (1U << c)) *trace += " " + std::to_string(c + 1);
                *trace += " }\n";
            }
            failed.insert({cols_left, rows_used});
            return false;
        }
        for (int r : cand[static_cast<size_t>(best_col)]) {
            peel.emplace_back(r, best_col);
            if (self(self, cols_left & ~(1U << best_col), rows_used | (1ULL << r))) return true;
            peel.pop_back();
        }
        if (trace)
            *trace += "exhausted candidates for unipotent " + std::to_string(best_col + 1) + "\n";
        failed.insert({cols_left, rows_used});
        return false;
    };

    const std::uint32_t all_cols = (ncols == 31) ? 0x7fffffffU : ((1U << ncols) - 1);
    if (!rec(rec, all_cols, 0)) return std::nullopt;

    TriangularMatching out;
    for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
        out.degenerate_rows.push_back(it->first);
        out.unipotent_order.push_back(it->second);
        out.diagonal_signs.push_back(static_cast<int>(m(it->first, it->second)));
    }
    return out;
}

// The selected square submatrix in the matching's ordering; upper triangular
// with +-1 diagonal by construction.
inline IntMatrix matching_submatrix(const DecompositionTable& t, const TriangularMatching& match) {
    const int n = static_cast<int>(match.unipotent_order.size());
    const IntMatrix m = t.coefficient_matrix();
    IntMatrix sub(n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            sub(p, q) = m(match.degenerate_rows[static_cast<size_t>(p)],
                          match.unipotent_order[static_cast<size_t>(q)]);
    return sub;
}

struct TableReport {
    int unipotent_count = 0;
    int degenerate_count = 0;
    bool span = false;
    bool matching_found = false;
    std::vector<int> diagonal_signs;
    std::string matching_trace;

    bool ok() const { return span && matching_found; }
};

inline TableReport verify_table(const DecompositionTable& t) {
    TableReport rep;
    rep.unipotent_count = static_cast<int>(t.unipotents.size());
    rep.degenerate_count = static_cast<int>(t.degenerates.size());
    rep.span = span_equal(t);
    if (auto match = find_triangular_matching(t, &rep.matching_trace)) {
        rep.matching_found = true;
        rep.diagonal_signs = match->diagonal_signs;
        rep.matching_trace.clear();
    }
    return rep;
}

inline json table_report_to_json(const TableReport& r) {
    json j{{"unipotents", r.unipotent_count},
           {"degenerates", r.degenerate_count},
           {"span_equal", r.span},
           {"matching_found", r.matching_found},
           {"ok", r.ok()}};
    if (r.matching_found) j["diagonal_signs"] = r.diagonal_signs;
    if (!r.matching_trace.empty()) j["matching_trace"] = r.matching_trace;
    return j;
}

}  // namespace liecomb
