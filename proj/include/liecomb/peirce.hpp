#pragma once

// Finite-dimensional structure-constant algebras over the rationals with
// Peirce decompositions, corner and induced-module functors, unique simple
// quotients, spectral idempotents of central elements, and translation
// functors on B tensor End(F).

#include "liecomb/linalg.hpp"
#include "liecomb/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace liecomb {

class FinDimAlgebra {
public:
    // left_mult[i] is the matrix of left multiplication by basis element i;
    // its column j holds the structure constants c[i][j][.].
    FinDimAlgebra(std::vector<RatMatrix> left_mult, RatVector unit)
        : FinDimAlgebra(std::move(left_mult), std::move(unit), true) {}

    static FinDimAlgebra from_structure_constants(
        Index dim, const std::vector<std::tuple<Index, Index, Index, Rational>>& entries,
        RatVector unit) {
        std::vector<RatMatrix> lm(static_cast<size_t>(dim), rat_zero(dim, dim));
        for (const auto& [i, j, k, c] : entries) {
            if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
                throw std::invalid_argument("FinDimAlgebra: structure constant index out of range");
            lm[static_cast<size_t>(i)](k, j) += c;
        }
        return FinDimAlgebra(std::move(lm), std::move(unit));
    }

    // Full matrix algebra M_f with the matrix-unit basis E_{rs} at index r*f+s.
    static FinDimAlgebra matrix_algebra(Index f) {
        const Index d = f * f;
        std::vector<std::tuple<Index, Index, Index, Rational>> sc;
        for (Index r = 0; r < f; ++r)
            for (Index s = 0; s < f; ++s)
                for (Index u = 0; u < f; ++u)
                    sc.emplace_back(r * f + s, s * f + u, r * f + u, Rational(1));
        RatVector unit = rat_zero_vec(d);
        for (Index r = 0; r < f; ++r) unit(r * f + r) = Rational(1);
        return from_structure_constants(d, sc, std::move(unit));
    }

    Index dim() const { return dim_; }
    const RatVector& unit() const { return unit_; }
    const RatMatrix& basis_left_mult(Index i) const { return left_mult_[static_cast<size_t>(i)]; }

    RatMatrix left_mult(const RatVector& x) const {
        RatMatrix m = rat_zero(dim_, dim_);
        for (Index i = 0; i < dim_; ++i)
            if (!x(i).is_zero()) m += x(i) * left_mult_[static_cast<size_t>(i)];
        return m;
    }

    RatMatrix right_mult(const RatVector& y) const {
        RatMatrix m(dim_, dim_);
        for (Index j = 0; j < dim_; ++j) m.col(j) = left_mult_[static_cast<size_t>(j)] * y;
        return m;
    }

    RatVector product(const RatVector& x, const RatVector& y) const {
        return left_mult(x) * y;
    }

    Rational structure_constant(Index i, Index j, Index k) const {
        return left_mult_[static_cast<size_t>(i)](k, j);
    }

    bool is_central(const RatVector& z) const {
        for (Index b = 0; b < dim_; ++b) {
            RatVector eb = rat_zero_vec(dim_);
            eb(b) = Rational(1);
            if (RatVector(product(z, eb)) != RatVector(product(eb, z))) return false;
        }
        return true;
    }

private:
    FinDimAlgebra(std::vector<RatMatrix> left_mult, RatVector unit, bool check)
        : left_mult_(std::move(left_mult)), unit_(std::move(unit)) {
        dim_ = static_cast<Index>(left_mult_.size());
        if (dim_ <= 0) throw std::invalid_argument("FinDimAlgebra: dimension must be positive");
        if (unit_.size() != dim_) throw std::invalid_argument("FinDimAlgebra: unit has wrong length");
        for (const RatMatrix& l : left_mult_)
            if (l.rows() != dim_ || l.cols() != dim_)
                throw std::invalid_argument("FinDimAlgebra: multiplication table shape mismatch");
        if (check) validate();
    }

    void validate() const {
        for (Index i = 0; i < dim_; ++i)
            for (Index j = 0; j < dim_; ++j) {
                const RatMatrix lhs = left_mult(left_mult_[static_cast<size_t>(i)].col(j));
                const RatMatrix rhs = left_mult_[static_cast<size_t>(i)] * left_mult_[static_cast<size_t>(j)];
                if (lhs != rhs)
                    throw std::invalid_argument("FinDimAlgebra: associativity fails on basis pair (" +
                                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
        if (left_mult(unit_) != rat_identity(dim_) || right_mult(unit_) != rat_identity(dim_))
            throw std::invalid_argument("FinDimAlgebra: unit is not a two-sided identity");
    }

    // tensor_end output is associative by construction; it skips the
    // quadratic-in-dim revalidation.
    friend FinDimAlgebra tensor_end(const FinDimAlgebra&, Index);

    Index dim_;
    std::vector<RatMatrix> left_mult_;
    RatVector unit_;
};

struct IdempotentFamily {
    std::vector<RatVector> elements;

    void validate(const FinDimAlgebra& a) const {
        if (elements.empty()) throw std::invalid_argument("idempotent family: empty");
        RatVector sum = rat_zero_vec(a.dim());
        for (size_t i = 0; i < elements.size(); ++i) {
            const RatVector& e = elements[i];
            if (e.size() != a.dim()) throw std::invalid_argument("idempotent family: length mismatch");
            if (RatVector(a.product(e, e)) != e)
                throw std::invalid_argument("idempotent family: idempotency fails at element " +
                                            std::to_string(i));
            sum += e;
        }
        for (size_t i = 0; i < elements.size(); ++i)
            for (size_t j = 0; j < elements.size(); ++j) {
                if (i == j) continue;
                if (!is_zero(RatMatrix(a.product(elements[i], elements[j]))))
                    throw std::invalid_argument("idempotent family: orthogonality fails at pair (" +
                                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
        if (sum != a.unit())
            throw std::invalid_argument("idempotent family: completeness fails (sum is not the unit)");
    }

    size_t size() const { return elements.size(); }
};

struct PeirceBlock {
    int i, j;
    RatMatrix basis;  // columns in algebra coordinates, spanning e_i A e_j
};

// Bases of all blocks e_i A e_j, in row-major (i,j) order. Their dimensions
// add up to dim A.
inline std::vector<PeirceBlock> peirce_decompose(const FinDimAlgebra& a, const IdempotentFamily& fam) {
    fam.validate(a);
    const Index d = a.dim();
    std::vector<PeirceBlock> blocks;
    Index total = 0;
    for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = 0; j < fam.size(); ++j) {
            const RatMatrix proj = a.left_mult(fam.elements[i]) * a.right_mult(fam.elements[j]);
            RatMatrix basis = column_space_basis(proj);
            total += basis.cols();
            blocks.push_back(PeirceBlock{static_cast<int>(i), static_cast<int>(j), std::move(basis)});
        }
    if (total != d) throw std::logic_error("peirce_decompose: block dimensions do not sum to dim A");
    return blocks;
}

// Containment A_{ij} A_{kl} <= delta_{jk} A_{il} on all block basis pairs.
inline bool peirce_multiplication_check(const FinDimAlgebra& a, const std::vector<PeirceBlock>& blocks) {
    int m = 0;
    for (const PeirceBlock& b : blocks) m = std::max(m, std::max(b.i, b.j) + 1);
    auto block_at = [&](int i, int j) -> const PeirceBlock& {
        return blocks[static_cast<size_t>(i * m + j)];
    };
    for (const PeirceBlock& p : blocks)
        for (const PeirceBlock& q : blocks)
            for (Index u = 0; u < p.basis.cols(); ++u)
                for (Index v = 0; v < q.basis.cols(); ++v) {
                    const RatVector w = a.product(p.basis.col(u), q.basis.col(v));
                    if (p.j != q.i) {
                        if (!is_zero(RatMatrix(w))) return false;
                    } else if (!in_column_span(block_at(p.i, q.j).basis, w)) {
                        return false;
                    }
                }
    return true;
}

// The corner ring e_i A e_i with its own unit e_i, together with the basis
// embedding into A.
struct CornerAlgebra {
    FinDimAlgebra algebra;
    RatMatrix basis;  // columns in A coordinates
    RatVector idempotent;
    int index;
};

inline CornerAlgebra corner_algebra(const FinDimAlgebra& a, const IdempotentFamily& fam, int i) {
    fam.validate(a);
    const RatVector& e = fam.elements[static_cast<size_t>(i)];
    const RatMatrix proj = a.left_mult(e) * a.right_mult(e);
    const RatMatrix basis = column_space_basis(proj);
    const Index t = basis.cols();
    std::vector<std::tuple<Index, Index, Index, Rational>> sc;
    for (Index x = 0; x < t; ++x)
        for (Index y = 0; y < t; ++y) {
            const RatVector prod = a.product(basis.col(x), basis.col(y));
            const auto coords = solve(basis, prod);
            if (!coords) throw std::logic_error("corner_algebra: product left the corner");
            for (Index k = 0; k < t; ++k)
                if (!(*coords)(k).is_zero()) sc.emplace_back(x, y, k, (*coords)(k));
        }
    auto unit_coords = solve(basis, e);
    if (!unit_coords) throw std::logic_error("corner_algebra: idempotent not in the corner");
    return CornerAlgebra{FinDimAlgebra::from_structure_constants(t, sc, *unit_coords), basis, e,
                         i};
}

struct AlgebraModule {
    Index dim = 0;
    std::vector<RatMatrix> action;  // one matrix per algebra basis element

    RatMatrix apply(const RatVector& x) const {
        RatMatrix m = rat_zero(dim, dim);
        for (size_t b = 0; b < action.size(); ++b)
            if (!x(static_cast<Index>(b)).is_zero()) m += x(static_cast<Index>(b)) * action[b];
        return m;
    }
};

inline void validate_module(const FinDimAlgebra& a, const AlgebraModule& m) {
    if (static_cast<Index>(m.action.size()) != a.dim())
        throw std::invalid_argument("module: one action matrix per algebra basis element required");
    for (const RatMatrix& mat : m.action)
        if (mat.rows() != m.dim || mat.cols() != m.dim)
            throw std::invalid_argument("module: action matrix shape mismatch");
    if (m.dim == 0) return;
    for (Index i = 0; i < a.dim(); ++i)
        for (Index j = 0; j < a.dim(); ++j) {
            const RatMatrix lhs = m.apply(a.basis_left_mult(i).col(j));
            if (lhs != RatMatrix(m.action[static_cast<size_t>(i)] * m.action[static_cast<size_t>(j)]))
                throw std::invalid_argument("module: action does not respect multiplication at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    if (m.apply(a.unit()) != rat_identity(m.dim))
        throw std::invalid_argument("module: unit does not act as the identity");
}

// Restricts a module along a change of basis: columns of `full` are the new
// basis, the returned action is the block on rows/cols [from, from+size).
namespace detail {

inline AlgebraModule conjugated_block(const std::vector<RatMatrix>& action, const RatMatrix& full,
                                      Index from, Index size) {
    const auto inv = inverse(full);
    if (!inv) throw std::logic_error("module transform: basis is singular");
    AlgebraModule out;
    out.dim = size;
    for (const RatMatrix& m : action)
        out.action.push_back(RatMatrix((*inv * m * full).block(from, from, size, size)));
    return out;
}

}  // namespace detail

// Quotient of m by an action-stable subspace (columns).
inline AlgebraModule quotient_module(const AlgebraModule& m, const RatMatrix& sub) {
    const RatMatrix subbasis = column_space_basis(sub);
    const RatMatrix full = extend_to_basis(subbasis);
    return detail::conjugated_block(m.action, full, subbasis.cols(), m.dim - subbasis.cols());
}

// Submodule of m spanned by the action closure of the seed columns, as
// columns of the ambient space.
inline RatMatrix generated_submodule(const AlgebraModule& m, const RatMatrix& seed) {
    RatMatrix span = column_space_basis(seed);
    while (true) {
        RatMatrix bigger(m.dim, span.cols() * (static_cast<Index>(m.action.size()) + 1));
        bigger.leftCols(span.cols()) = span;
        Index at = span.cols();
        for (const RatMatrix& act : m.action) {
            bigger.middleCols(at, span.cols()) = act * span;
            at += span.cols();
        }
        RatMatrix next = column_space_basis(bigger);
        if (next.cols() == span.cols()) return span;
        span = std::move(next);
    }
}

// Restriction of m to the subspace spanned by an action-stable set of
// columns, in the coordinates of that basis.
inline AlgebraModule restricted_module(const AlgebraModule& m, const RatMatrix& subbasis) {
    const RatMatrix full = extend_to_basis(subbasis);
    // Stability makes the top-left block the restriction.
    const auto inv = inverse(full);
    if (!inv) throw std::logic_error("restricted_module: basis is singular");
    AlgebraModule out;
    out.dim = subbasis.cols();
    for (const RatMatrix& act : m.action)
        out.action.push_back(RatMatrix((*inv * act * full).block(0, 0, out.dim, out.dim)));
    return out;
}

// P_i: the subspace e_i M as a module over the corner algebra.
inline AlgebraModule corner_module(const FinDimAlgebra& a, const AlgebraModule& m,
                                   const CornerAlgebra& corner) {
    const RatMatrix proj = m.apply(corner.idempotent);
    const RatMatrix basis = column_space_basis(proj);
    const RatMatrix full = extend_to_basis(basis);
    const auto inv = inverse(full);
    if (!inv) throw std::logic_error("corner_module: basis is singular");
    AlgebraModule out;
    out.dim = basis.cols();
    for (Index b = 0; b < corner.basis.cols(); ++b) {
        const RatMatrix act = m.apply(corner.basis.col(b));
        out.action.push_back(RatMatrix((*inv * act * full).block(0, 0, out.dim, out.dim)));
    }
    return out;
}

// Q_i: A e_i tensored over the corner ring with N, with the A-action.
inline AlgebraModule induced_module(const FinDimAlgebra& a, const CornerAlgebra& corner,
                                    const AlgebraModule& n) {
    validate_module(corner.algebra, n);
    const RatMatrix aei = column_space_basis(a.right_mult(corner.idempotent));
    const Index s = aei.cols();
    const Index mdim = n.dim;
    const Index fdim = s * mdim;
    auto idx = [&](Index alpha, Index u) { return alpha * mdim + u; };

    // Coordinates in the A e_i basis of (x * y) for x a basis column of A e_i
    // and y a corner basis column.
    std::vector<std::vector<RatVector>> mix(static_cast<size_t>(s));
    for (Index alpha = 0; alpha < s; ++alpha)
        for (Index beta = 0; beta < corner.basis.cols(); ++beta) {
            const auto c = solve(aei, a.product(aei.col(alpha), corner.basis.col(beta)));
            if (!c) throw std::logic_error("induced_module: product left A e_i");
            mix[static_cast<size_t>(alpha)].push_back(*c);
        }

    std::vector<RatVector> rel_cols;
    for (Index alpha = 0; alpha < s; ++alpha)
        for (Index beta = 0; beta < corner.basis.cols(); ++beta)
            for (Index u = 0; u < mdim; ++u) {
                RatVector rel = rat_zero_vec(fdim);
                const RatVector& z = mix[static_cast<size_t>(alpha)][static_cast<size_t>(beta)];
                for (Index gamma = 0; gamma < s; ++gamma)
                    if (!z(gamma).is_zero()) rel(idx(gamma, u)) += z(gamma);
                const RatMatrix& nb = n.action[static_cast<size_t>(beta)];
                for (Index w = 0; w < mdim; ++w)
                    if (!nb(w, u).is_zero()) rel(idx(alpha, w)) -= nb(w, u);
                rel_cols.push_back(std::move(rel));
            }
    RatMatrix rel = rat_zero(fdim, static_cast<Index>(rel_cols.size()));
    for (size_t c = 0; c < rel_cols.size(); ++c) rel.col(static_cast<Index>(c)) = rel_cols[c];

    // A-action on A e_i tensor N before the quotient.
    std::vector<RatMatrix> action;
    for (Index b = 0; b < a.dim(); ++b) {
        RatVector eb = rat_zero_vec(a.dim());
        eb(b) = Rational(1);
        RatMatrix act = rat_zero(fdim, fdim);
        for (Index alpha = 0; alpha < s; ++alpha) {
            const auto c = solve(aei, a.product(eb, aei.col(alpha)));
            if (!c) throw std::logic_error("induced_module: action left A e_i");
            for (Index gamma = 0; gamma < s; ++gamma)
                if (!(*c)(gamma).is_zero())
                    for (Index u = 0; u < mdim; ++u) act(idx(gamma, u), idx(alpha, u)) = (*c)(gamma);
        }
        action.push_back(std::move(act));
    }

    const RatMatrix sub = column_space_basis(rel);
    const RatMatrix full = extend_to_basis(sub);
    AlgebraModule out = detail::conjugated_block(action, full, sub.cols(), fdim - sub.cols());
    validate_module(a, out);
    return out;
}

// Largest submodule of q killed by left multiplication with e_i: the
// solution space of { v : e_i a v = 0 for every basis a }.
inline RatMatrix corner_annihilated_radical(const FinDimAlgebra& a, const CornerAlgebra& corner,
                                            const AlgebraModule& q) {
    const RatMatrix si = q.apply(corner.idempotent);
    RatMatrix stacked(q.dim * a.dim(), q.dim);
    for (Index b = 0; b < a.dim(); ++b)
        stacked.middleRows(b * q.dim, q.dim) = si * q.action[static_cast<size_t>(b)];
    return kernel_basis(stacked);
}

// Unique simple quotient of an induced module Q_i N for simple N. Throws
// when q is not generated by its i-corner.
inline AlgebraModule simple_quotient(const FinDimAlgebra& a, const CornerAlgebra& corner,
                                     const AlgebraModule& q) {
    const RatMatrix cornered = column_space_basis(q.apply(corner.idempotent));
    if (generated_submodule(q, cornered).cols() != q.dim)
        throw std::invalid_argument("simple_quotient: module is not generated by its i-corner");
    const RatMatrix j = corner_annihilated_radical(a, corner, q);
    return quotient_module(q, j);
}

// dim Hom over the given algebra, as the solution space of the intertwiner
// equations.
inline Index hom_dimension(const AlgebraModule& m1, const AlgebraModule& m2) {
    if (m1.dim == 0 || m2.dim == 0) return 0;
    const Index vars = m2.dim * m1.dim;  // T(r, c), r < m2.dim, c < m1.dim
    const Index nb = static_cast<Index>(m1.action.size());
    RatMatrix sys = rat_zero(nb * m2.dim * m1.dim, vars);
    Index row = 0;
    auto var = [&](Index r, Index c) { return r * m1.dim + c; };
    for (Index b = 0; b < nb; ++b) {
        const RatMatrix& r1 = m1.action[static_cast<size_t>(b)];
        const RatMatrix& r2 = m2.action[static_cast<size_t>(b)];
        for (Index r = 0; r < m2.dim; ++r)
            for (Index c = 0; c < m1.dim; ++c) {
                // (T r1 - r2 T)(r, c) = 0
                for (Index k = 0; k < m1.dim; ++k)
                    if (!r1(k, c).is_zero()) sys(row, var(r, k)) += r1(k, c);
                for (Index k = 0; k < m2.dim; ++k)
                    if (!r2(r, k).is_zero()) sys(row, var(k, c)) -= r2(r, k);
                ++row;
            }
    }
    return kernel_basis(sys).cols();
}

// An invertible intertwiner between modules of equal dimension, when one is
// found among the basis solutions of the intertwiner equations.
inline std::optional<RatMatrix> module_isomorphism(const AlgebraModule& m1, const AlgebraModule& m2) {
    if (m1.dim != m2.dim) return std::nullopt;
    if (m1.dim == 0) return rat_zero(0, 0);
    const Index nb = static_cast<Index>(m1.action.size());
    const Index vars = m2.dim * m1.dim;
    RatMatrix sys = rat_zero(nb * m2.dim * m1.dim, vars);
    Index row = 0;
    auto var = [&](Index r, Index c) { return r * m1.dim + c; };
    for (Index b = 0; b < nb; ++b) {
        const RatMatrix& r1 = m1.action[static_cast<size_t>(b)];
        const RatMatrix& r2 = m2.action[static_cast<size_t>(b)];
        for (Index r = 0; r < m2.dim; ++r)
            for (Index c = 0; c < m1.dim; ++c) {
                for (Index k = 0; k < m1.dim; ++k)
                    if (!r1(k, c).is_zero()) sys(row, var(r, k)) += r1(k, c);
                for (Index k = 0; k < m2.dim; ++k)
                    if (!r2(r, k).is_zero()) sys(row, var(k, c)) -= r2(r, k);
                ++row;
            }
    }
    const RatMatrix sols = kernel_basis(sys);
    for (Index c = 0; c < sols.cols(); ++c) {
        RatMatrix t(m2.dim, m1.dim);
        for (Index r = 0; r < m2.dim; ++r)
            for (Index cc = 0; cc < m1.dim; ++cc) t(r, cc) = sols(var(r, cc), c);
        if (inverse(t)) return t;
    }
    return std::nullopt;
}

// Jacobson radical of the algebra: the kernel of the trace form of the
// regular representation (Dickson's criterion in characteristic zero).
inline RatMatrix jacobson_radical(const FinDimAlgebra& a) {
    const Index d = a.dim();
    RatMatrix gram(d, d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) {
            const RatMatrix prod = a.basis_left_mult(i) * a.basis_left_mult(j);
            Rational tr(0);
            for (Index k = 0; k < d; ++k) tr += prod(k, k);
            gram(i, j) = tr;
        }
    return kernel_basis(gram);
}

// Simplicity certificate: the radical must annihilate the module and every
// nonzero vector must generate it. Small modules are swept over a grid of
// rational coordinate vectors; for larger ones the basis sweep is combined
// with scalar endomorphisms (the split case, which covers every algebra
// this library builds).
inline bool is_simple_module(const FinDimAlgebra& a, const AlgebraModule& m) {
    if (m.dim == 0) return false;
    const RatMatrix rad = jacobson_radical(a);
    for (Index c = 0; c < rad.cols(); ++c)
        if (!is_zero(m.apply(rad.col(c)))) return false;
    if (m.dim <= 4) {
        std::vector<int> coeff(static_cast<size_t>(m.dim), -2);
        while (true) {
            bool nonzero = false;
            for (int v : coeff)
                if (v != 0) nonzero = true;
            if (nonzero) {
                RatVector v(m.dim);
                for (Index i = 0; i < m.dim; ++i) v(i) = Rational(coeff[static_cast<size_t>(i)]);
                if (generated_submodule(m, RatMatrix(v)).cols() != m.dim) return false;
            }
            Index pos = 0;
            while (pos < m.dim && coeff[static_cast<size_t>(pos)] == 2) coeff[static_cast<size_t>(pos++)] = -2;
            if (pos == m.dim) break;
            ++coeff[static_cast<size_t>(pos)];
        }
        return true;
    }
    for (Index i = 0; i < m.dim; ++i) {
        RatVector v = rat_zero_vec(m.dim);
        v(i) = Rational(1);
        if (generated_submodule(m, RatMatrix(v)).cols() != m.dim) return false;
    }
    return hom_dimension(m, m) == 1;
}

// ---------------------------------------------------------------------------
// B tensor End(F) and translation functors.

// Structure constants of B tensor M_f; basis element (b, r, s) sits at index
// b*f*f + r*f + s.
inline FinDimAlgebra tensor_end(const FinDimAlgebra& b, Index f) {
    if (f <= 0) throw std::invalid_argument("tensor_end: f must be positive");
    const Index db = b.dim();
    const Index d = db * f * f;
    auto at = [&](Index bb, Index r, Index s) { return bb * f * f + r * f + s; };
    std::vector<RatMatrix> lm(static_cast<size_t>(d), rat_zero(d, d));
    for (Index b1 = 0; b1 < db; ++b1)
        for (Index r1 = 0; r1 < f; ++r1)
            for (Index s1 = 0; s1 < f; ++s1) {
                RatMatrix& l = lm[static_cast<size_t>(at(b1, r1, s1))];
                for (Index b2 = 0; b2 < db; ++b2)
                    for (Index s2 = 0; s2 < f; ++s2)
                        for (Index k = 0; k < db; ++k) {
                            const Rational c = b.structure_constant(b1, b2, k);
                            if (!c.is_zero()) l(at(k, r1, s2), at(b2, s1, s2)) += c;
                        }
            }
    RatVector unit = rat_zero_vec(d);
    for (Index bb = 0; bb < db; ++bb)
        for (Index r = 0; r < f; ++r) unit(at(bb, r, r)) = b.unit()(bb);
    return FinDimAlgebra(std::move(lm), std::move(unit), false);
}

// t_F: M -> M tensor F as a module over tensor_end(B, f); index (u, x) at
// u*f + x.
inline AlgebraModule tensor_module(const FinDimAlgebra& b, const AlgebraModule& m, Index f) {
    AlgebraModule out;
    out.dim = m.dim * f;
    for (Index bb = 0; bb < b.dim(); ++bb)
        for (Index r = 0; r < f; ++r)
            for (Index s = 0; s < f; ++s) {
                RatMatrix act = rat_zero(out.dim, out.dim);
                const RatMatrix& rho = m.action[static_cast<size_t>(bb)];
                for (Index u = 0; u < m.dim; ++u)
                    for (Index v = 0; v < m.dim; ++v)
                        if (!rho(u, v).is_zero()) act(u * f + r, v * f + s) = rho(u, v);
                out.action.push_back(std::move(act));
            }
    return out;
}

// T_{F,i} = P_i after t_F.
inline AlgebraModule translation_functor(const FinDimAlgebra& b, const AlgebraModule& m, Index f,
                                         const CornerAlgebra& corner) {
    return corner_module(tensor_end(b, f), tensor_module(b, m, f), corner);
}

// ---------------------------------------------------------------------------
// Spectral idempotents of a central element.

namespace detail {

// Monic minimal polynomial of a square matrix, low degree first.
inline std::vector<Rational> minimal_polynomial(const RatMatrix& l) {
    const Index d = l.rows();
    std::vector<RatMatrix> powers{rat_identity(d)};
    while (true) {
        const Index k = static_cast<Index>(powers.size());
        RatMatrix stack(d * d, k);
        for (Index p = 0; p < k; ++p)
            for (Index c = 0; c < d; ++c)
                for (Index r = 0; r < d; ++r) stack(c * d + r, p) = powers[static_cast<size_t>(p)](r, c);
        const RatMatrix next = powers.back() * l;
        RatVector rhs(d * d);
        for (Index c = 0; c < d; ++c)
            for (Index r = 0; r < d; ++r) rhs(c * d + r) = next(r, c);
        if (auto coef = solve(stack, rhs)) {
            std::vector<Rational> poly;  // p(x) = x^k - sum coef_j x^j
            for (Index j = 0; j < k; ++j) poly.push_back(-(*coef)(j));
            poly.push_back(Rational(1));
            return poly;
        }
        powers.push_back(next);
        if (k > d) throw std::logic_error("minimal_polynomial: no relation found");
    }
}

inline std::vector<Rational> deflate(const std::vector<Rational>& poly, const Rational& root) {
    // Synthetic division by (x - root); remainder must vanish.
    std::vector<Rational> out(poly.size() - 1, Rational(0));
    Rational carry(0);
    for (size_t j = poly.size(); j-- > 1;) {
        carry = poly[j] + root * carry;
        out[j - 1] = carry;
    }
    return out;
}

inline Rational eval_poly(const std::vector<Rational>& poly, const Rational& x) {
    Rational acc(0);
    for (size_t j = poly.size(); j-- > 0;) acc = acc * x + poly[j];
    return acc;
}

// All rational roots with multiplicity; throws when an irrational factor
// remains.
inline std::vector<std::pair<Rational, int>> rational_roots_complete(std::vector<Rational> poly) {
    std::vector<std::pair<Rational, int>> roots;
    auto record = [&](const Rational& r) {
        int mult = 0;
        while (poly.size() > 1 && eval_poly(poly, r).is_zero()) {
            poly = deflate(poly, r);
            ++mult;
        }
        if (mult > 0) roots.emplace_back(r, mult);
        return mult > 0;
    };
    record(Rational(0));
    while (poly.size() > 1) {
        // Clear denominators: candidates p/q with p | a0, q | lead.
        mpz_class lcm = 1;
        for (const Rational& c : poly) {
            const mpz_class den = c.denominator();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        mpz_class a0 = poly.front().numerator() * (lcm / poly.front().denominator());
        mpz_class lead = poly.back().numerator() * (lcm / poly.back().denominator());
        a0 = abs(a0);
        lead = abs(lead);
        if (a0 == 0) throw std::logic_error("rational_roots: zero constant after extraction");
        bool found = false;
        std::vector<mpz_class> ps, qs;
        auto divisors = [](const mpz_class& n) {
            std::vector<mpz_class> out;
            for (mpz_class d = 1; d * d <= n; ++d)
                if (n % d == 0) {
                    out.push_back(d);
                    if (d * d != n) out.push_back(n / d);
                }
            return out;
        };
        for (const mpz_class& p : divisors(a0)) {
            for (const mpz_class& q : divisors(lead)) {
                for (int sign : {1, -1}) {
                    const Rational cand(sign * p, q);
                    if (eval_poly(poly, cand).is_zero()) {
                        record(cand);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) throw std::domain_error("central_idempotents: spectrum not rational");
    }
    return roots;
}

}  // namespace detail

// Spectral idempotents of a central element z: the decomposition of the unit
// along the generalized eigenspaces of left multiplication by z. Refuses
// non-central z and irrational spectra.
inline IdempotentFamily central_idempotents(const FinDimAlgebra& a, const RatVector& z) {
    if (z.size() != a.dim()) throw std::invalid_argument("central_idempotents: length mismatch");
    if (!a.is_central(z)) throw std::invalid_argument("central_idempotents: element is not central");
    const RatMatrix l = a.left_mult(z);
    auto roots = detail::rational_roots_complete(detail::minimal_polynomial(l));
    std::sort(roots.begin(), roots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<RatMatrix> spaces;
    Index total = 0;
    for (const auto& [lambda, mult] : roots) {
        RatMatrix shifted = l;
        for (Index i = 0; i < a.dim(); ++i) shifted(i, i) -= lambda;
        RatMatrix power = rat_identity(a.dim());
        for (int k = 0; k < mult; ++k) power = RatMatrix(power * shifted);
        spaces.push_back(kernel_basis(power));
        total += spaces.back().cols();
    }
    if (total != a.dim()) throw std::logic_error("central_idempotents: eigenspaces do not fill A");
    RatMatrix joint(a.dim(), total);
    Index at = 0;
    for (const RatMatrix& s : spaces) {
        joint.middleCols(at, s.cols()) = s;
        at += s.cols();
    }
    const auto coords = solve(joint, a.unit());
    if (!coords) throw std::logic_error("central_idempotents: unit not decomposable");
    IdempotentFamily fam;
    at = 0;
    for (const RatMatrix& s : spaces) {
        RatVector e = rat_zero_vec(a.dim());
        for (Index c = 0; c < s.cols(); ++c) e += (*coords)(at + c) * s.col(c);
        fam.elements.push_back(std::move(e));
        at += s.cols();
    }
    fam.validate(a);
    return fam;
}

}  // namespace liecomb
