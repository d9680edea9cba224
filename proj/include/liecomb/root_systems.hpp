#pragma once

// Classical root systems in standard e_i coordinates, with exact rational
// weights: positive systems, rho vectors, coroot pairings, and Weyl-orbit
// equivalence of infinitesimal characters via canonical forms.
//
// Coordinate conventions: families B, C, D of rank n live in n coordinates;
// family A of rank n lives in n+1 coordinates (no quotient by the trace is
// taken).

#include "liecomb/linalg.hpp"
#include "liecomb/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace liecomb {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

inline char family_letter(Family f) { return static_cast<char>(f); }

inline Family family_from_letter(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        default: throw std::invalid_argument(std::string("unknown family '") + c + "'");
    }
}

struct LieType {
    Family family;
    int rank;

    LieType(Family f, int r) : family(f), rank(r) {
        if (r < 1) throw std::invalid_argument("LieType: rank must be positive");
        if (f == Family::D && r < 2) throw std::invalid_argument("LieType: D requires rank >= 2");
    }

    // Dimension of the coordinate space carrying weights.
    int coord_dim() const { return family == Family::A ? rank + 1 : rank; }

    // Dimension of the defining representation (partition size for orbits).
    int defining_dim() const {
        switch (family) {
            case Family::A: return rank + 1;
            case Family::B: return 2 * rank + 1;
            case Family::C: return 2 * rank;
            case Family::D: return 2 * rank;
        }
        return 0;
    }

    std::string str() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

    friend bool operator==(const LieType& a, const LieType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend bool operator!=(const LieType& a, const LieType& b) { return !(a == b); }
};

// Weights are exact rational coordinate vectors in h^*.
using Weight = RatVector;

inline Weight make_weight(std::initializer_list<Rational> cs) {
    Weight w(static_cast<Index>(cs.size()));
    Index i = 0;
    for (const Rational& c : cs) w(i++) = c;
    return w;
}

inline void check_rank(const LieType& t, const Weight& w, const char* who) {
    if (w.size() != t.coord_dim())
        throw std::invalid_argument(std::string(who) + ": weight length " +
                                    std::to_string(w.size()) + " does not match " + t.str());
}

inline std::vector<Weight> positive_roots(const LieType& t) {
    const int d = t.coord_dim();
    std::vector<Weight> roots;
    auto unit = [&](int i, const Rational& v) {
        Weight w = rat_zero_vec(d);
        w(i) = v;
        return w;
    };
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Weight w = unit(i, Rational(1));
            w(j) = Rational(-1);
            roots.push_back(w);  // e_i - e_j
        }
    if (t.family == Family::B || t.family == Family::C || t.family == Family::D) {
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                Weight w = unit(i, Rational(1));
                w(j) = Rational(1);
                roots.push_back(w);  // e_i + e_j
            }
        if (t.family == Family::B)
            for (int i = 0; i < d; ++i) roots.push_back(unit(i, Rational(1)));  // e_i
        if (t.family == Family::C)
            for (int i = 0; i < d; ++i) roots.push_back(unit(i, Rational(2)));  // 2 e_i
    }
    return roots;
}

inline std::vector<Weight> simple_roots(const LieType& t) {
    const int d = t.coord_dim();
    std::vector<Weight> roots;
    for (int i = 0; i + 1 < d; ++i) {
        Weight w = rat_zero_vec(d);
        w(i) = Rational(1);
        w(i + 1) = Rational(-1);
        roots.push_back(w);
    }
    Weight last = rat_zero_vec(d);
    switch (t.family) {
        case Family::A: break;
        case Family::B: last(d - 1) = Rational(1); roots.push_back(last); break;
        case Family::C: last(d - 1) = Rational(2); roots.push_back(last); break;
        case Family::D:
            last(d - 2) = Rational(1);
            last(d - 1) = Rational(1);
            roots.push_back(last);
            break;
    }
    return roots;
}

inline Rational inner(const Weight& a, const Weight& b) {
    Rational s(0);
    for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
    return s;
}

inline Rational norm_sq(const Weight& w) { return inner(w, w); }

// <lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha).
// alpha must be a root of t.
inline Rational coroot_pairing(const Weight& lambda, const Weight& alpha, const LieType& t) {
    check_rank(t, lambda, "coroot_pairing");
    check_rank(t, alpha, "coroot_pairing");
    bool is_root = false;
    for (const Weight& r : positive_roots(t)) {
        if (r == alpha || Weight(-r) == alpha) {
            is_root = true;
            break;
        }
    }
    if (!is_root)
        throw std::invalid_argument("coroot_pairing: alpha is not a root of " + t.str());
    return Rational(2) * inner(lambda, alpha) / inner(alpha, alpha);
}

inline Weight rho(const LieType& t) {
    Weight r = rat_zero_vec(t.coord_dim());
    for (const Weight& a : positive_roots(t)) r += a;
    const Rational half(1, 2);
    for (Index i = 0; i < r.size(); ++i) r(i) *= half;
    return r;
}

// Canonical W-orbit representative:
//   A: coordinates sorted descending;
//   B/C: absolute values sorted descending;
//   D: absolute values sorted descending, and when no coordinate vanishes a
//      negative sign product is carried on the last (smallest) entry.
inline Weight weyl_canonical(const LieType& t, const Weight& w) {
    check_rank(t, w, "weyl_canonical");
    std::vector<Rational> cs(static_cast<size_t>(w.size()));
    for (Index i = 0; i < w.size(); ++i) cs[static_cast<size_t>(i)] = w(i);
    if (t.family == Family::A) {
        std::sort(cs.begin(), cs.end(), [](const Rational& a, const Rational& b) { return b < a; });
    } else {
        int neg = 0;
        bool has_zero = false;
        for (Rational& c : cs) {
            if (c.sign() < 0) { c = -c; ++neg; }
            if (c.is_zero()) has_zero = true;
        }
        std::sort(cs.begin(), cs.end(), [](const Rational& a, const Rational& b) { return b < a; });
        if (t.family == Family::D && !has_zero && (neg % 2 != 0)) cs.back() = -cs.back();
    }
    Weight out(w.size());
    for (Index i = 0; i < w.size(); ++i) out(i) = cs[static_cast<size_t>(i)];
    return out;
}

inline bool weyl_equivalent(const LieType& t, const Weight& a, const Weight& b) {
    check_rank(t, a, "weyl_equivalent");
    check_rank(t, b, "weyl_equivalent");
    return weyl_canonical(t, a) == weyl_canonical(t, b);
}

// <lambda, alpha^vee> <= 0 (strict: < 0) for every listed root.
inline bool is_antidominant(const Weight& lambda, const std::vector<Weight>& roots, bool strict) {
    for (const Weight& a : roots) {
        const Rational p = Rational(2) * inner(lambda, a) / inner(a, a);
        if (strict ? !(p < Rational(0)) : p > Rational(0)) return false;
    }
    return true;
}

}  // namespace liecomb
