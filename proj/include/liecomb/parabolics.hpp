#pragma once

// rho-bookkeeping for parabolic subalgebras of the classical families and
// the checkable hypotheses of the upper-triangularity theorem for the
// Richardson case.

#include "liecomb/orbits.hpp"
#include "liecomb/root_systems.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace liecomb {

struct ParabolicDatum {
    LeviComposition levi;
    Weight rho_g;
    Weight rho_l;
    Weight rho_u;
};

// Positive roots of the Levi factor, in the ambient coordinates: gl blocks
// occupy consecutive coordinate slots in order, the residual factor the
// trailing slots.
inline std::vector<Weight> levi_positive_roots(const LeviComposition& l) {
    const int n = l.ambient.coord_dim();
    std::vector<Weight> roots;
    auto root2 = [&](int i, const Rational& vi, int j, const Rational& vj) {
        Weight w = rat_zero_vec(n);
        w(i) = vi;
        if (j >= 0) w(j) += vj;
        return w;
    };
    int off = 0;
    for (int b : l.gl_blocks) {
        for (int i = off; i < off + b; ++i)
            for (int j = i + 1; j < off + b; ++j) roots.push_back(root2(i, Rational(1), j, Rational(-1)));
        off += b;
    }
    const int r = l.residual_rank;
    for (int i = off; i < off + r; ++i)
        for (int j = i + 1; j < off + r; ++j) {
            roots.push_back(root2(i, Rational(1), j, Rational(-1)));
            roots.push_back(root2(i, Rational(1), j, Rational(1)));
        }
    if (l.ambient.family == Family::B)
        for (int i = off; i < off + r; ++i) roots.push_back(root2(i, Rational(1), -1, Rational(0)));
    if (l.ambient.family == Family::C)
        for (int i = off; i < off + r; ++i) roots.push_back(root2(i, Rational(2), -1, Rational(0)));
    return roots;
}

// Positive roots of the nilradical: the ambient positive system minus the
// Levi's.
inline std::vector<Weight> nilradical_roots(const LeviComposition& l) {
    const std::vector<Weight> levi = levi_positive_roots(l);
    std::vector<Weight> out;
    for (const Weight& a : positive_roots(l.ambient)) {
        bool in_levi = false;
        for (const Weight& b : levi)
            if (a == b) { in_levi = true; break; }
        if (!in_levi) out.push_back(a);
    }
    return out;
}

inline ParabolicDatum build_parabolic(const LeviComposition& l) {
    Weight rg = rho(l.ambient);
    Weight rl = rat_zero_vec(l.ambient.coord_dim());
    for (const Weight& a : levi_positive_roots(l)) rl += a;
    const Rational half(1, 2);
    for (Index i = 0; i < rl.size(); ++i) rl(i) *= half;
    Weight ru = rg - rl;
    return ParabolicDatum{l, std::move(rg), std::move(rl), std::move(ru)};
}

// Infinitesimal character of a module induced from one with character
// gamma_lambda: gamma_{lambda + rho(u)}.
inline Weight induced_inf_char(const Weight& lambda, const ParabolicDatum& p) {
    check_rank(p.levi.ambient, lambda, "induced_inf_char");
    return lambda + p.rho_u;
}

enum class TriState { False, True, Unchecked };

inline const char* tristate_str(TriState t) {
    switch (t) {
        case TriState::False: return "false";
        case TriState::True: return "true";
        case TriState::Unchecked: return "unchecked";
    }
    return "unchecked";
}

// Hypothesis report for the zero Levi orbit. Membership of the induced
// character is tested against the arth set of the induced orbit; since
// arth(O) is contained in unip(O) this is a sufficient criterion, never a
// refutation, and the report says so.
struct HypothesisReport {
    bool arth_member;      // gamma_{lambda - rho_g} lies in arth(induced orbit)
    bool antidominant;     // lambda - rho(u) weakly antidominant for the nilradical
    TriState birational;   // moment map birationality, when decidable
    Partition induced_orbit;
    Weight character;      // canonical form of lambda - rho_g

    bool all_true() const {
        return arth_member && antidominant && birational == TriState::True;
    }
};

inline HypothesisReport check_theorem_hypotheses(const ParabolicDatum& p, const Weight& lambda) {
    check_rank(p.levi.ambient, lambda, "check_theorem_hypotheses");
    const LieType& t = p.levi.ambient;
    HypothesisReport rep{};
    rep.induced_orbit = induce_richardson(p.levi);
    rep.character = weyl_canonical(t, Weight(lambda - p.rho_g));
    rep.arth_member = false;
    for (const ArthCharacter& a : arth_set(t, rep.induced_orbit))
        if (weyl_equivalent(t, rep.character, a.character)) { rep.arth_member = true; break; }
    rep.antidominant = is_antidominant(Weight(lambda - p.rho_u), nilradical_roots(p.levi), false);
    rep.birational = p.levi.is_siegel()
                         ? (siegel_birationality_check(t.rank) ? TriState::True : TriState::False)
                         : TriState::Unchecked;
    return rep;
}

}  // namespace liecomb
