#ifndef EPDA_LINALG_HPP
#define EPDA_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "epda/errors.hpp"

namespace epda {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Unconjugated product a^T b; the channel model pairs vectors this way.
inline Complex bilinear_dot(const CVector& a, const CVector& b) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

/// Hermitian inner product <a, b> = sum a_i * conj(b_i).
inline Complex hdot(const CVector& a, const CVector& b) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
    return acc;
}

inline double norm2(const CVector& a) { return std::sqrt(std::abs(hdot(a, a))); }

namespace detail {

/// Subtracts from v its projections onto the orthonormal set basis.
inline void project_out(CVector& v, const std::vector<CVector>& basis) {
    for (const CVector& q : basis) {
        const Complex coeff = hdot(v, q);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= coeff * q[i];
    }
}

}  // namespace detail

/// Deterministic unit vector v with constraint^T v = 0 for every constraint
/// row.  The conjugated constraints are orthonormalized (modified
/// Gram-Schmidt with one re-orthogonalization pass) and the basis is
/// extended by the first canonical direction whose residual survives;
/// that residual, normalized, is v.  Throws DegenerateChannel when the
/// constraints are numerically dependent or already span the whole space.
inline CVector nullspace_direction(const std::vector<CVector>& constraints, int dim,
                                   double eps_rank = 1e-8) {
    std::vector<CVector> basis;
    basis.reserve(constraints.size());
    for (const CVector& h : constraints) {
        CVector c(dim);
        for (int i = 0; i < dim; ++i) c[i] = std::conj(h[i]);
        const double scale = norm2(c);
        detail::project_out(c, basis);
        detail::project_out(c, basis);
        const double nrm = norm2(c);
        if (nrm <= eps_rank * (scale > 0.0 ? scale : 1.0))
            throw DegenerateChannel("interfering channel rows are numerically dependent");
        for (Complex& x : c) x /= nrm;
        basis.push_back(std::move(c));
    }
    if (static_cast<int>(basis.size()) >= dim)
        throw DegenerateChannel("no nullspace direction left: constraints span the whole space");

    for (int j = 0; j < dim; ++j) {
        CVector v(dim, Complex{0.0, 0.0});
        v[j] = Complex{1.0, 0.0};
        detail::project_out(v, basis);
        detail::project_out(v, basis);
        const double nrm = norm2(v);
        if (nrm > eps_rank) {
            for (Complex& x : v) x /= nrm;
            return v;
        }
    }
    throw DegenerateChannel("no canonical direction extends the constraint basis");
}

/// Rank of the given rows (each of length dim) by Gaussian elimination with
/// partial pivoting.  A pivot counts while its magnitude stays above
/// tol * (largest entry magnitude of the input).
inline int rank_of_rows(std::vector<CVector> rows, int dim, double tol = 1e-8) {
    double scale = 0.0;
    for (const CVector& r : rows)
        for (const Complex& x : r) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) return 0;
    const double threshold = tol * scale;

    const int m = static_cast<int>(rows.size());
    int rank = 0;
    for (int col = 0; col < dim && rank < m; ++col) {
        int pivot = -1;
        double best = threshold;
        for (int r = rank; r < m; ++r) {
            const double mag = std::abs(rows[r][col]);
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const Complex inv = Complex{1.0, 0.0} / rows[rank][col];
        for (int r = rank + 1; r < m; ++r) {
            const Complex factor = rows[r][col] * inv;
            if (factor == Complex{0.0, 0.0}) continue;
            for (int c = col; c < dim; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace epda

#endif
