#pragma once

// Dense exact linear algebra over the rationals: Eigen matrices with the
// Rational scalar plus the elimination kernels the rest of the library is
// built on (rank, solve, kernels, span arithmetic). Everything here is a
// pure function; no numerical thresholds exist.

#include "liecomb/rational.hpp"

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<liecomb::Rational> : GenericNumTraits<liecomb::Rational> {
    typedef liecomb::Rational Real;
    typedef liecomb::Rational NonInteger;
    typedef liecomb::Rational Nested;
    typedef liecomb::Rational Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 60
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace liecomb {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

inline RatMatrix rat_identity(Index n) {
    RatMatrix id = RatMatrix::Constant(n, n, Rational(0));
    for (Index i = 0; i < n; ++i) id(i, i) = Rational(1);
    return id;
}

inline RatMatrix rat_zero(Index r, Index c) {
    return RatMatrix::Constant(r, c, Rational(0));
}

inline RatVector rat_zero_vec(Index n) {
    return RatVector::Constant(n, Rational(0));
}

inline RatVector make_vec(std::initializer_list<long> vs) {
    RatVector v(static_cast<Index>(vs.size()));
    Index i = 0;
    for (long x : vs) v(i++) = Rational(x);
    return v;
}

inline bool is_zero(const RatMatrix& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

namespace detail {

// In-place fraction Gaussian elimination to reduced row echelon form.
// Returns the pivot columns.
inline std::vector<Index> rref(RatMatrix& m) {
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index p = -1;
        for (Index i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != row) m.row(p).swap(m.row(row));
        const Rational inv = Rational(1) / m(row, col);
        for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rational f = m(i, col);
            for (Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

inline Index rank(RatMatrix m) { return static_cast<Index>(detail::rref(m).size()); }

// Basis of the column space: the subset of input columns sitting at the
// pivot positions of the row echelon form.
inline RatMatrix column_space_basis(const RatMatrix& m) {
    RatMatrix r = m;
    std::vector<Index> piv = detail::rref(r);
    RatMatrix basis(m.rows(), static_cast<Index>(piv.size()));
    for (Index k = 0; k < basis.cols(); ++k) basis.col(k) = m.col(piv[static_cast<size_t>(k)]);
    return basis;
}

// Kernel of m, returned as columns spanning {x : m x = 0}.
inline RatMatrix kernel_basis(const RatMatrix& m) {
    RatMatrix r = m;
    std::vector<Index> piv = detail::rref(r);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (Index c : piv) is_pivot[static_cast<size_t>(c)] = true;
    const Index nfree = m.cols() - static_cast<Index>(piv.size());
    RatMatrix ker = rat_zero(m.cols(), nfree);
    Index k = 0;
    for (Index c = 0; c < m.cols(); ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        ker(c, k) = Rational(1);
        for (size_t pi = 0; pi < piv.size(); ++pi)
            ker(piv[pi], k) = -r(static_cast<Index>(pi), c);
        ++k;
    }
    return ker;
}

// Solves a x = b exactly; empty when inconsistent.
inline std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
    RatMatrix aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    std::vector<Index> piv = detail::rref(aug);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    RatVector x = rat_zero_vec(a.cols());
    for (size_t i = 0; i < piv.size(); ++i) x(piv[i]) = aug(static_cast<Index>(i), a.cols());
    return x;
}

inline bool in_column_span(const RatMatrix& a, const RatVector& v) {
    return solve(a, v).has_value();
}

inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    RatMatrix aug(a.rows(), 2 * a.cols());
    aug.leftCols(a.cols()) = a;
    aug.rightCols(a.cols()) = rat_identity(a.rows());
    std::vector<Index> piv = detail::rref(aug);
    if (static_cast<Index>(piv.size()) != a.rows() || (!piv.empty() && piv.back() >= a.cols()))
        return std::nullopt;
    return RatMatrix(aug.rightCols(a.cols()));
}

inline Rational determinant(RatMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    Rational det(1);
    for (Index col = 0; col < m.cols(); ++col) {
        Index p = -1;
        for (Index i = col; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) { p = i; break; }
        if (p < 0) return Rational(0);
        if (p != col) {
            m.row(p).swap(m.row(col));
            det = -det;
        }
        det *= m(col, col);
        const Rational inv = Rational(1) / m(col, col);
        for (Index i = col + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            const Rational f = m(i, col) * inv;
            for (Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

// Extends the (independent) columns of `basis` to a basis of the full space
// by appending standard vectors; returns the square invertible matrix.
inline RatMatrix extend_to_basis(const RatMatrix& basis) {
    const Index n = basis.rows();
    RatMatrix cand(n, basis.cols() + n);
    cand.leftCols(basis.cols()) = basis;
    cand.rightCols(n) = rat_identity(n);
    RatMatrix r = cand;
    std::vector<Index> piv = detail::rref(r);
    RatMatrix full(n, n);
    for (Index k = 0; k < n; ++k) full.col(k) = cand.col(piv[static_cast<size_t>(k)]);
    return full;
}

}  // namespace liecomb
