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

#ifndef NOMASEC_TESTS_ORACLES_HPP
#define NOMASEC_TESTS_ORACLES_HPP

// Brute-force references used by the tests. Nothing here calls into the
// eigen/pencil code paths it is used to check.

#include "nomasec/channel.hpp"
#include "nomasec/noma.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace nomasec::oracle {

using rng_t = std::mt19937_64;

inline cvec gaussian_vector(Eigen::Index n, rng_t& rng)
{
    std::normal_distribution<double> nd(0.0, 1.0);
    cvec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = complex(nd(rng), nd(rng));
    return v;
}

// Uniform on the unit sphere of C^n.
inline cvec random_unit(Eigen::Index n, rng_t& rng)
{
    cvec v = gaussian_vector(n, rng);
    return v / v.norm();
}

inline cmat random_psd(Eigen::Index n, rng_t& rng, bool definite)
{
    cmat m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) m.col(j) = gaussian_vector(n, rng);
    cmat p = m * m.adjoint();
    if (definite) p += 0.1 * cmat::Identity(n, n);
    return 0.5 * (p + p.adjoint());
}

inline double quotient(const cmat& a, const cmat& b, const cvec& v)
{
    return v.dot(a * v).real() / v.dot(b * v).real();
}

// Best v^H A v / v^H B v over `samples` random directions in range(basis)
// (whole space when basis has zero columns).
inline double sampled_max_quotient(const cmat& a, const cmat& b, const cmat& basis, int samples, rng_t& rng)
{
    double best = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        const cvec v = basis.cols() == 0 ? random_unit(a.rows(), rng)
                                         : cvec(basis * random_unit(basis.cols(), rng));
        best = std::max(best, quotient(a, b, v));
    }
    return best;
}

// Orthonormal basis of the orthogonal complement of span(cols), by
// Gram-Schmidt on the standard axes.
inline cmat complement_basis(const cmat& cols)
{
    const Eigen::Index n = cols.rows();
    cmat q(n, 0);
    auto append = [&q](cvec v) {
        for (Eigen::Index j = 0; j < q.cols(); ++j) v -= q.col(j) * q.col(j).dot(v);
        for (Eigen::Index j = 0; j < q.cols(); ++j) v -= q.col(j) * q.col(j).dot(v);
        if (v.norm() < 1e-8) return false;
        q.conservativeResize(Eigen::NoChange, q.cols() + 1);
        q.col(q.cols() - 1) = v / v.norm();
        return true;
    };
    for (Eigen::Index j = 0; j < cols.cols(); ++j) append(cols.col(j));
    const Eigen::Index used = q.cols();
    for (Eigen::Index i = 0; i < n; ++i) {
        cvec e = cvec::Zero(n);
        e[i] = 1.0;
        append(e);
    }
    return q.rightCols(q.cols() - used);
}

// Dense tensor grid: n points per axis on [lo, hi], maximum of f.
inline double dense_max_1d(double lo, double hi, long n, const std::function<double(double)>& f)
{
    double best = -std::numeric_limits<double>::infinity();
    for (long i = 0; i < n; ++i) best = std::max(best, f(lo + (hi - lo) * static_cast<double>(i) / (n - 1)));
    return best;
}

} // namespace nomasec::oracle

#endif
