#pragma once

// Induction of nilpotent orbits, Spaltenstein duality, arth infinitesimal-
// character sets, and the birationality criterion for the Siegel case.
//
// The induction and duality recipes are combinatorial; both are certified
// against independent oracles in the test suite (explicit matrix Jordan
// types for induction, order-reversal and extreme-orbit constraints for
// duality).

#include "liecomb/linalg.hpp"
#include "liecomb/partitions.hpp"
#include "liecomb/root_systems.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace liecomb {

struct LeviComposition {
    LieType ambient;
    std::vector<int> gl_blocks;
    int residual_rank;

    LeviComposition(LieType amb, std::vector<int> blocks, int residual)
        : ambient(amb), gl_blocks(std::move(blocks)), residual_rank(residual) {
        if (ambient.family == Family::A)
            throw std::invalid_argument("LeviComposition: family A is not supported");
        int sum = 0;
        for (int b : gl_blocks) {
            if (b <= 0) throw std::invalid_argument("LeviComposition: blocks must be positive");
            sum += b;
        }
        if (residual_rank < 0 || sum + residual_rank != ambient.rank)
            throw std::invalid_argument("LeviComposition: blocks plus residual must equal the rank");
    }

    bool is_siegel() const {
        return ambient.family == Family::C && gl_blocks.size() == 1 &&
               gl_blocks[0] == ambient.rank && residual_rank == 0;
    }

    // Dimension of the space the residual factor acts on.
    int residual_dim() const {
        return ambient.family == Family::B ? 2 * residual_rank + 1 : 2 * residual_rank;
    }
};

inline LeviComposition siegel_composition(int n) {
    return LeviComposition(LieType(Family::C, n), {n}, 0);
}

namespace detail {

inline Partition zero_orbit(int dim) { return Partition(std::vector<int>(static_cast<size_t>(dim), 1)); }

// Normalizes the orbit list to one partition per gl block plus one for the
// residual factor. An empty list means all zero orbits; a missing residual
// entry defaults to its zero orbit.
inline std::vector<Partition> normalize_levi_orbits(const LeviComposition& l,
                                                    std::vector<Partition> orbits) {
    const size_t k = l.gl_blocks.size();
    if (orbits.empty())
        for (int b : l.gl_blocks) orbits.push_back(zero_orbit(b));
    if (orbits.size() == k) orbits.push_back(zero_orbit(l.residual_dim()));
    if (orbits.size() != k + 1)
        throw std::invalid_argument("levi orbits: expected one partition per gl block plus the residual");
    for (size_t i = 0; i < k; ++i)
        if (orbits[i].size() != l.gl_blocks[i])
            throw std::invalid_argument("levi orbits: block " + std::to_string(i) + " needs size " +
                                        std::to_string(l.gl_blocks[i]) + ", got " + orbits[i].str());
    const Partition& res = orbits[k];
    if (res.size() != l.residual_dim())
        throw std::invalid_argument("levi orbits: residual needs size " +
                                    std::to_string(l.residual_dim()) + ", got " + res.str());
    if (l.residual_rank >= 1 &&
        !is_valid_orbit(LieType(l.ambient.family, l.residual_rank), res))
        throw std::invalid_argument("levi orbits: residual " + res.str() + " is not a valid orbit");
    return orbits;
}

}  // namespace detail

// Lusztig-Spaltenstein induction in partition form: each gl-block orbit is
// embedded twice (the block and its pairing under the form), the residual
// orbit once; the coordinatewise sum is collapsed for the ambient family.
inline Partition induce_orbit(const LeviComposition& l, std::vector<Partition> levi_orbits) {
    levi_orbits = detail::normalize_levi_orbits(l, std::move(levi_orbits));
    const int dim = l.ambient.defining_dim();
    std::vector<int> sum(static_cast<size_t>(dim), 0);
    for (size_t i = 0; i < l.gl_blocks.size(); ++i)
        for (int j = 0; j < levi_orbits[i].length(); ++j)
            sum[static_cast<size_t>(j)] += 2 * levi_orbits[i].part(j);
    const Partition& res = levi_orbits.back();
    for (int j = 0; j < res.length(); ++j) sum[static_cast<size_t>(j)] += res.part(j);
    return collapse(l.ambient, Partition::from_unsorted(std::move(sum)));
}

inline Partition induce_richardson(const LeviComposition& l) {
    std::vector<Partition> zeros;
    for (int b : l.gl_blocks) zeros.push_back(detail::zero_orbit(b));
    zeros.push_back(detail::zero_orbit(l.residual_dim()));
    return induce_orbit(l, std::move(zeros));
}

// ---------------------------------------------------------------------------
// Explicit matrix model. Coordinates 1..N with the form antidiagonal; for
// family C the pairing carries signs (+1 on the first half), for B/D it is
// symmetric. A parabolic with Levi composition (a_1,...,a_k; r) is block
// upper triangular for the symmetric block sizes (a_1,...,a_k, R, a_k,...,a_1).

inline constexpr std::uint64_t kDefaultOracleSeed = 424242;

namespace detail {

struct MatrixModel {
    Family family;
    int n;       // rank
    int dim;     // matrix size
    std::vector<int> block_of;  // 0-based block index per 0-based coordinate

    explicit MatrixModel(const LeviComposition& l)
        : family(l.ambient.family), n(l.ambient.rank), dim(l.ambient.defining_dim()) {
        std::vector<int> sizes(l.gl_blocks.begin(), l.gl_blocks.end());
        sizes.push_back(l.residual_dim());
        for (auto it = l.gl_blocks.rbegin(); it != l.gl_blocks.rend(); ++it) sizes.push_back(*it);
        block_of.reserve(static_cast<size_t>(dim));
        for (size_t b = 0; b < sizes.size(); ++b)
            for (int c = 0; c < sizes[b]; ++c) block_of.push_back(static_cast<int>(b));
    }

    int mirror(int a) const { return dim - 1 - a; }  // 0-based

    int eps(int a) const {
        if (family != Family::C) return 1;
        return (a < dim / 2) ? 1 : -1;
    }

    // Sets entry (a,b) and its partner under the form. Self-paired positions
    // exist only in family C (the long-root entries) and are set once.
    void set_entry(RatMatrix& m, int a, int b, const Rational& v) const {
        const int bm = mirror(b), am = mirror(a);
        if (bm == a && am == b) {
            if (family != Family::C)
                throw std::logic_error("matrix model: antidiagonal entry is forced to zero");
            m(a, b) += v;
            return;
        }
        m(a, b) += v;
        m(bm, am) += Rational(-eps(a) * eps(b)) * v;
    }

    // Jordan chains of type q placed inside a gl block at offset o; the
    // mirrored copy gives the paired block, so the contribution is q + q.
    void place_gl_jordan(RatMatrix& m, int o, const Partition& q) const {
        int pos = o;
        for (int part : q.parts()) {
            for (int j = 0; j + 1 < part; ++j) set_entry(m, pos + j, pos + j + 1, Rational(1));
            pos += part;
        }
    }
};

// Embeds a valid residual orbit as nested shells of the middle block:
// pairs of equal parts go in through gl(v), remaining single parts through
// the rank-preserving regular nilpotent of the small factor. At most one
// single odd part is representable (it takes the center); other shapes
// throw.
inline void place_residual_orbit(const MatrixModel& mm, RatMatrix& m, int offset, int rdim,
                                 const Partition& orbit) {
    // Group parts by value.
    std::vector<std::pair<int, int>> groups;  // (value, multiplicity)
    for (int v : orbit.parts()) {
        if (!groups.empty() && groups.back().first == v)
            ++groups.back().second;
        else
            groups.emplace_back(v, 1);
    }
    std::vector<int> pair_values;   // embedded via gl(v), size 2v each
    std::vector<int> single_values; // embedded via the small factor, size v each
    for (auto [v, mult] : groups) {
        const bool paired_parity = (mm.family == Family::C) ? (v % 2 == 1) : (v % 2 == 0);
        if (paired_parity) {
            for (int i = 0; i < mult / 2; ++i) pair_values.push_back(v);
        } else {
            if (mm.family == Family::C) {
                for (int i = 0; i < mult; ++i) single_values.push_back(v);
            } else {
                for (int i = 0; i < mult / 2; ++i) pair_values.push_back(v);
                if (mult % 2 != 0) single_values.push_back(v);
            }
        }
    }
    int odd_singles = 0;
    for (int v : single_values)
        if (v % 2 != 0) ++odd_singles;
    if (odd_singles > 1 || (odd_singles == 1 && rdim % 2 == 0))
        throw std::invalid_argument("matrix oracle: residual orbit " + orbit.str() +
                                    " has no shell embedding");

    int lo = 0, hi = rdim - 1;  // local coordinates, 0-based
    auto local_slot = [&](const std::vector<int>& slots, int i) { return offset + slots[static_cast<size_t>(i)]; };
    auto take_shell = [&](int t) {
        std::vector<int> slots;
        for (int i = 0; i < t; ++i) slots.push_back(lo + i);
        for (int i = t - 1; i >= 0; --i) slots.push_back(hi - i);
        lo += t;
        hi -= t;
        return slots;
    };
    for (int v : pair_values) {
        std::vector<int> slots = take_shell(v);  // 2v slots, Jordan chain on the first v
        for (int j = 0; j + 1 < v; ++j)
            mm.set_entry(m, local_slot(slots, j), local_slot(slots, j + 1), Rational(1));
    }
    std::sort(single_values.begin(), single_values.end(), [](int a, int b) { return a > b; });
    for (int v : single_values) {
        std::vector<int> slots;
        if (v % 2 == 0) {
            slots = take_shell(v / 2);
        } else {
            // The center window, including the middle coordinate.
            for (int i = 0; i < v; ++i) slots.push_back(lo + i);
            lo += v;
            hi -= v;
        }
        for (int a = 0; a < v / 2; ++a)
            mm.set_entry(m, local_slot(slots, a), local_slot(slots, a + 1), Rational(1));
    }
}

inline int draw_range(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace detail

// Jordan type of a nilpotent matrix via exact ranks of powers.
inline Partition jordan_type(const RatMatrix& m) {
    const Index n = m.rows();
    std::vector<int> ranks;  // ranks[k] = rank(m^{k+1})
    RatMatrix p = m;
    for (Index k = 0; k < n; ++k) {
        const int r = static_cast<int>(rank(p));
        ranks.push_back(r);
        if (r == 0) break;
        p = RatMatrix(p * m);
    }
    if (ranks.empty() || ranks.back() != 0)
        throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    std::vector<int> diffs;
    int prev = static_cast<int>(n);
    for (int r : ranks) {
        if (prev - r <= 0) break;
        diffs.push_back(prev - r);
        prev = r;
    }
    return transpose(Partition(std::move(diffs)));
}

// Samples explicit Levi nilpotents plus random nilradical elements and
// reports the dominance-greatest Jordan type observed. Entries are drawn
// from {-3,...,3}; the seed makes runs reproducible.
inline Partition induce_orbit_matrix_oracle(const LeviComposition& l,
                                            std::vector<Partition> levi_orbits, int trials = 8,
                                            std::uint64_t seed = kDefaultOracleSeed) {
    if (trials < 1) throw std::invalid_argument("matrix oracle: trials must be >= 1");
    levi_orbits = detail::normalize_levi_orbits(l, std::move(levi_orbits));
    const detail::MatrixModel mm(l);

    RatMatrix levi = rat_zero(mm.dim, mm.dim);
    int off = 0;
    for (size_t i = 0; i < l.gl_blocks.size(); ++i) {
        mm.place_gl_jordan(levi, off, levi_orbits[i]);
        off += l.gl_blocks[i];
    }
    if (l.residual_dim() > 0) detail::place_residual_orbit(mm, levi, off, l.residual_dim(), levi_orbits.back());

    // Canonical representatives of the nilradical entry pairs.
    std::vector<std::pair<int, int>> rad;
    for (int a = 0; a < mm.dim; ++a)
        for (int b = 0; b < mm.dim; ++b) {
            if (mm.block_of[static_cast<size_t>(a)] >= mm.block_of[static_cast<size_t>(b)]) continue;
            const int bm = mm.mirror(b), am = mm.mirror(a);
            if (mm.family != Family::C && bm == a && am == b) continue;  // forced zero
            if (std::make_pair(bm, am) < std::make_pair(a, b)) continue; // partner already listed
            rad.emplace_back(a, b);
        }

    std::mt19937_64 rng(seed);
    std::vector<Partition> seen;
    for (int t = 0; t < trials; ++t) {
        RatMatrix e = levi;
        for (auto [a, b] : rad)
            mm.set_entry(e, a, b, Rational(detail::draw_range(rng, -3, 3)));
        seen.push_back(jordan_type(e));
    }
    // Partial sums give a total order refining dominance, so the largest is
    // a dominance-maximal element of the sample.
    auto sums = [](const Partition& p) {
        std::vector<int> s;
        int acc = 0;
        for (int v : p.parts()) s.push_back(acc += v);
        return s;
    };
    Partition best = seen.front();
    for (const Partition& p : seen)
        if (sums(p) > sums(best)) best = p;
    return best;
}

// ---------------------------------------------------------------------------
// Duality and arth sets.

inline LieType langlands_dual(const LieType& t) {
    switch (t.family) {
        case Family::B: return LieType(Family::C, t.rank);
        case Family::C: return LieType(Family::B, t.rank);
        default: return t;
    }
}

// psi: orbits of the dual algebra -> orbits of g. Transpose, match the
// defining size of g by moving one box on the first part (B <-> C), re-sort,
// collapse for the family of g.
inline Partition spaltenstein_dual(const LieType& g_type, const Partition& dual_orbit) {
    const LieType dt = langlands_dual(g_type);
    if (!is_valid_orbit(dt, dual_orbit))
        throw std::invalid_argument("spaltenstein_dual: " + dual_orbit.str() +
                                    " is not a valid orbit for the dual type " + dt.str());
    std::vector<int> parts = transpose(dual_orbit).parts();
    const int target = g_type.defining_dim();
    const int cur = dual_orbit.size();
    if (cur == target + 1) {
        --parts[0];
    } else if (cur == target - 1) {
        ++parts[0];
    } else if (cur != target) {
        throw std::logic_error("spaltenstein_dual: size mismatch");
    }
    return collapse(g_type, Partition::from_unsorted(std::move(parts)));
}

struct ArthCharacter {
    Partition orbit_dual;  // orbit of the dual algebra
    Weight character;      // half the h-weight, in dominant form

    friend bool operator<(const ArthCharacter& a, const ArthCharacter& b) {
        return a.orbit_dual < b.orbit_dual;
    }
};

// All infinitesimal characters gamma attached to duals of the given orbit:
// enumerate the valid dual-type partitions, keep those mapping to the orbit
// under psi, halve their h-weights, deduplicate up to Weyl equivalence.
inline std::vector<ArthCharacter> arth_set(const LieType& g_type, const Partition& orbit) {
    if (!is_valid_orbit(g_type, orbit))
        throw std::invalid_argument("arth_set: " + orbit.str() + " is not a valid orbit for " +
                                    g_type.str());
    const LieType dt = langlands_dual(g_type);
    const Rational half(1, 2);
    std::vector<ArthCharacter> out;
    for (const Partition& dual : valid_orbit_partitions(dt)) {
        if (spaltenstein_dual(g_type, dual) != orbit) continue;
        Weight ch = h_weight(dt, dual);
        for (Index i = 0; i < ch.size(); ++i) ch(i) *= half;
        ch = weyl_canonical(g_type, ch);
        bool dup = false;
        for (const ArthCharacter& a : out)
            if (a.character == ch) { dup = true; break; }
        if (!dup) out.push_back(ArthCharacter{dual, ch});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Birationality of the Siegel moment map. Elements of the Siegel nilradical
// square to zero, so im(e) <= ker(e) always; the subspaces coincide exactly
// when rank(e) = n, and then the Lagrangian fixed by a fiber parabolic is
// unique and the generic fiber of the moment map is a point.

inline bool siegel_birationality_check(int n, int trials = 8,
                                       std::uint64_t seed = kDefaultOracleSeed) {
    if (n < 1) throw std::invalid_argument("siegel_birationality_check: n must be >= 1");
    if (trials < 1) throw std::invalid_argument("siegel_birationality_check: trials must be >= 1");
    const LeviComposition l = siegel_composition(n);
    const detail::MatrixModel mm(l);
    std::vector<std::pair<int, int>> rad;
    for (int a = 0; a < mm.dim; ++a)
        for (int b = 0; b < mm.dim; ++b) {
            if (mm.block_of[static_cast<size_t>(a)] >= mm.block_of[static_cast<size_t>(b)]) continue;
            if (std::make_pair(mm.mirror(b), mm.mirror(a)) < std::make_pair(a, b)) continue;
            rad.emplace_back(a, b);
        }
    std::mt19937_64 rng(seed);
    Index best = 0;
    for (int t = 0; t < trials; ++t) {
        RatMatrix e = rat_zero(mm.dim, mm.dim);
        for (auto [a, b] : rad)
            mm.set_entry(e, a, b, Rational(detail::draw_range(rng, -3, 3)));
        if (!is_zero(RatMatrix(e * e)))
            throw std::logic_error("siegel_birationality_check: nilradical element with e^2 != 0");
        best = std::max(best, rank(e));
    }
    return best == n;
}

}  // namespace liecomb
