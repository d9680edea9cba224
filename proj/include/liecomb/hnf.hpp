#pragma once

// Row-style Hermite normal form over the integers. Two row sets span the
// same lattice iff their forms agree, so this is the span test used by the
// table verifier.

#include <gmpxx.h>

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace liecomb {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Hermite normal form of the row lattice of m: zero rows dropped, pivots
// positive, entries above each pivot reduced into [0, pivot).
inline IntMatrix hermite_normal_form(const IntMatrix& m) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    std::vector<std::vector<mpz_class>> a(static_cast<size_t>(rows),
                                          std::vector<mpz_class>(static_cast<size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j);

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Reduce column c below row r to a single nonzero entry via gcd steps.
        while (true) {
            int p = -1;
            for (int i = r; i < rows; ++i)
                if (a[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                    if (p < 0 || mpz_cmpabs(a[static_cast<size_t>(i)][static_cast<size_t>(c)].get_mpz_t(),
                                            a[static_cast<size_t>(p)][static_cast<size_t>(c)].get_mpz_t()) < 0)
                        p = i;
                }
            if (p < 0) break;
            std::swap(a[static_cast<size_t>(p)], a[static_cast<size_t>(r)]);
            bool cleared = true;
            for (int i = r + 1; i < rows; ++i) {
                mpz_class& head = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
                if (head == 0) continue;
                mpz_class q = head / a[static_cast<size_t>(r)][static_cast<size_t>(c)];
                if (q != 0)
                    for (int j = 0; j < cols; ++j)
                        a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                            q * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
                if (head != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a[static_cast<size_t>(r)][static_cast<size_t>(c)] == 0) continue;
        if (a[static_cast<size_t>(r)][static_cast<size_t>(c)] < 0)
            for (int j = 0; j < cols; ++j) a[static_cast<size_t>(r)][static_cast<size_t>(j)] = -a[static_cast<size_t>(r)][static_cast<size_t>(j)];
        // Reduce the entries above the pivot into [0, pivot).
        for (int i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a[static_cast<size_t>(i)][static_cast<size_t>(c)].get_mpz_t(),
                       a[static_cast<size_t>(r)][static_cast<size_t>(c)].get_mpz_t());
            if (q != 0)
                for (int j = 0; j < cols; ++j)
                    a[static_cast<size_t>(i)][static_cast<size_t>(j)] -= q * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        ++r;
    }

    IntMatrix out(r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) {
            const mpz_class& z = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (!z.fits_slong_p()) throw std::overflow_error("hermite_normal_form: entry exceeds int64");
            out(i, j) = z.get_si();
        }
    return out;
}

// True iff the rows of m span exactly Z^cols.
inline bool spans_standard_lattice(const IntMatrix& m) {
    const IntMatrix h = hermite_normal_form(m);
    if (h.rows() != m.cols()) return false;
    for (Eigen::Index i = 0; i < h.rows(); ++i)
        for (Eigen::Index j = 0; j < h.cols(); ++j)
            if (h(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

}  // namespace liecomb
