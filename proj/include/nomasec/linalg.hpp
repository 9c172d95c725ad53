// SPDX-License-Identifier: Apache-2.0
//
// nomasec: secrecy-rate regions for relay-assisted downlink NOMA
// Copyright (C) 2026 The nomasec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NOMASEC_LINALG_HPP
#define NOMASEC_LINALG_HPP

// Small dense complex kernels used by the relay beamformer designs.
//
// Conventions shared by every routine here:
//   * returned eigenvectors have unit norm and their largest-magnitude entry
//     (lowest index on ties) is real and nonnegative;
//   * when the leading eigenvalue is repeated, the returned vector is the
//     projection of the first coordinate axis (lowest index with a nonzero
//     projection) onto the leading eigenspace, so the choice is deterministic.

#include "nomasec/channel.hpp"
#include "nomasec/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>

namespace nomasec::linalg {

inline constexpr double hermitian_tol = 1e-12;
inline constexpr double residual_tol = 1e-9;
// Relative gap under which two eigenvalues count as tied.
inline constexpr double tie_tol = 1e-12;

struct EigenPair {
    cvec vector;
    double value = 0.0;
};

inline bool is_hermitian(const cmat& m, double tol = hermitian_tol)
{
    if (m.rows() != m.cols()) return false;
    const double scale = std::max(m.norm(), 1e-300);
    return (m - m.adjoint()).norm() <= tol * scale;
}

// Rotates v so its largest-magnitude entry is real and nonnegative.
inline void fix_phase(cvec& v)
{
    if (v.size() == 0) return;
    Eigen::Index best = 0;
    double best_mag = std::abs(v[0]);
    for (Eigen::Index i = 1; i < v.size(); ++i) {
        const double mag = std::abs(v[i]);
        if (mag > best_mag * (1.0 + 1e-12)) {
            best = i;
            best_mag = mag;
        }
    }
    if (best_mag == 0.0) return;
    v *= std::conj(v[best]) / best_mag;
}

// I - M (M^H M)^{-1} M^H: orthogonal projector onto the complement of span(M).
inline cmat orth_projector(const cmat& m)
{
    const Eigen::Index k = m.rows();
    if (m.cols() == 0) return cmat::Identity(k, k);
    const cmat gram = m.adjoint() * m;
    Eigen::SelfAdjointEigenSolver<cmat> es(gram, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (!(hi > 0.0) || lo <= 1e-12 * hi)
        throw singularity_error("orth_projector: columns are linearly dependent");
    cmat p = cmat::Identity(k, k) - m * gram.ldlt().solve(m.adjoint());
    return 0.5 * (p + p.adjoint());
}

inline cmat orth_projector(const cvec& v)
{
    return orth_projector(cmat(v));
}

// Orthonormal basis (columns) of the range of an orthogonal projector.
inline cmat range_basis(const cmat& projector)
{
    Eigen::SelfAdjointEigenSolver<cmat> es(projector);
    const auto& w = es.eigenvalues();
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < w.size(); ++i)
        if (w[i] > 0.5) ++rank;
    // Eigenvalues are ascending, so the unit ones are the trailing columns.
    cmat q = es.eigenvectors().rightCols(rank);
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        cvec col = q.col(j);
        fix_phase(col);
        q.col(j) = col;
    }
    return q;
}

namespace detail {

inline EigenPair leading_of(const Eigen::SelfAdjointEigenSolver<cmat>& es, double scale)
{
    const auto& w = es.eigenvalues();
    const auto& v = es.eigenvectors();
    const Eigen::Index n = w.size();
    const double top = w[n - 1];
    Eigen::Index first_tied = n - 1;
    while (first_tied > 0 && top - w[first_tied - 1] <= tie_tol * scale) --first_tied;

    cvec out;
    if (first_tied == n - 1) {
        out = v.col(n - 1);
    } else {
        const cmat space = v.middleCols(first_tied, n - first_tied);
        for (Eigen::Index axis = 0; axis < n; ++axis) {
            cvec e = cvec::Zero(n);
            e[axis] = 1.0;
            cvec proj = space * (space.adjoint() * e);
            if (proj.norm() > 1e-8) {
                out = proj;
                break;
            }
        }
    }
    out.normalize();
    fix_phase(out);
    return {out, top};
}

} // namespace detail

// Unit vector maximizing v^H H v over the sphere, with its eigenvalue.
inline EigenPair leading_eigvec(const cmat& h)
{
    if (h.rows() == 0 || !is_hermitian(h))
        throw domain_error("leading_eigvec: input must be a nonempty Hermitian matrix");
    const cmat sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<cmat> es(sym);
    if (es.info() != Eigen::Success) throw domain_error("leading_eigvec: eigensolver failed");
    const double scale = std::max(es.eigenvalues().cwiseAbs().maxCoeff(), 1e-300);
    return detail::leading_of(es, scale);
}

// Maximizer of the generalized Rayleigh quotient v^H A v / v^H B v.
//
// With a basis Q (orthonormal columns) the search is restricted to range(Q):
// the pencil is reduced to (Q^H A Q, Q^H B Q), which only needs B to be
// positive definite on that subspace. The returned vector lies in range(Q)
// and has unit norm; `value` is the attained quotient.
inline EigenPair leading_gen_eigvec(const cmat& a, const cmat& b,
                                    const std::optional<cmat>& range = std::nullopt)
{
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw domain_error("leading_gen_eigvec: dimension mismatch");
    if (range && range->rows() != a.rows())
        throw domain_error("leading_gen_eigvec: basis dimension mismatch");
    if (!is_hermitian(a) || !is_hermitian(b))
        throw domain_error("leading_gen_eigvec: pencil matrices must be Hermitian");

    cmat ar = range ? cmat(range->adjoint() * a * *range) : a;
    cmat br = range ? cmat(range->adjoint() * b * *range) : b;
    ar = 0.5 * (ar + ar.adjoint());
    br = 0.5 * (br + br.adjoint());
    if (br.rows() == 0) throw deflation_error("leading_gen_eigvec: empty subspace");

    Eigen::LLT<cmat> llt(br);
    if (llt.info() != Eigen::Success)
        throw deflation_error("leading_gen_eigvec: denominator is not positive definite on the subspace");
    const cmat l = llt.matrixL();
    const auto ldiag = l.diagonal().real();
    if (ldiag.minCoeff() <= 1e-7 * ldiag.maxCoeff())
        throw deflation_error("leading_gen_eigvec: denominator is numerically singular on the subspace");

    // L^{-1} A L^{-H}
    const cmat linv_a = l.triangularView<Eigen::Lower>().solve(ar);
    cmat c = l.triangularView<Eigen::Lower>().solve(cmat(linv_a.adjoint())).adjoint();
    c = 0.5 * (c + c.adjoint());
    Eigen::SelfAdjointEigenSolver<cmat> es(c);
    const double scale = std::max(es.eigenvalues().cwiseAbs().maxCoeff(), 1e-300);
    const EigenPair lead = detail::leading_of(es, scale);

    cvec x = l.adjoint().triangularView<Eigen::Upper>().solve(lead.vector);
    cvec out = range ? cvec(*range * x) : x;
    out.normalize();
    fix_phase(out);
    return {out, lead.value};
}

inline double rayleigh(const cmat& m, const cvec& v)
{
    return v.dot(m * v).real();
}

} // namespace nomasec::linalg

#endif
