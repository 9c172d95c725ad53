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

#ifndef NOMASEC_TRUSTED_HPP
#define NOMASEC_TRUSTED_HPP

// Secrecy rates for K trusted half-duplex relays fighting an external
// eavesdropper: cooperative jamming (single phase), decode-and-forward and
// amplify-and-forward (two equal phases, hence the factor 1/2).
//
// Each scheme comes as a small class that does the per-realization work once
// (projectors, beamformers) so the optimizer can sweep power splits cheaply,
// plus a free function for one-off evaluations.

#include "nomasec/channel.hpp"
#include "nomasec/errors.hpp"
#include "nomasec/linalg.hpp"
#include "nomasec/noma.hpp"

#include <cmath>
#include <string>

namespace nomasec {

// Null steering towards two users plus a nonzero eavesdropper gain needs K >= 3.
inline constexpr int min_relays = 3;

namespace detail {

inline void require_relays(const TrustedChannels& ch, const char* scheme)
{
    if (ch.relays() < min_relays)
        throw configuration_error(std::string(scheme) + ": needs at least 3 relays");
    if (ch.g1.size() != ch.hr.size() || ch.g2.size() != ch.hr.size() || ch.ge.size() != ch.hr.size())
        throw domain_error(std::string(scheme) + ": relay channel vectors differ in length");
}

inline void require_no_user_jamming(const PowerSplit& split, double total)
{
    split.validate(total);
    require(split.delta == 0.0, "trusted schemes have no user jamming power (delta must be 0)");
}

inline cmat user_columns(const TrustedChannels& ch)
{
    cmat g(ch.relays(), 2);
    g.col(0) = ch.g1;
    g.col(1) = ch.g2;
    return g;
}

inline cmat projector_or_degenerate(const cmat& m, const char* what)
{
    try {
        return linalg::orth_projector(m);
    } catch (const singularity_error&) {
        throw degenerate_realization(what);
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Cooperative jamming

class CooperativeJamming {
public:
    explicit CooperativeJamming(const TrustedChannels& ch) : ch_(ch)
    {
        detail::require_relays(ch, "cooperative jamming");
        const cmat proj = detail::projector_or_degenerate(
            detail::user_columns(ch), "cooperative jamming: g1 and g2 are collinear");
        steered_ = proj * ch.ge;
        jam_gain_ = steered_.squaredNorm();  // g_e^H P g_e, P idempotent
    }

    // g_e^H P_perp(G) g_e
    double jam_gain() const { return jam_gain_; }

    // Unit-gain-at-the-users jammer of power `jam_power` aligned with the
    // projected eavesdropper channel.
    cvec beamformer(double jam_power) const
    {
        detail::require(jam_power >= 0.0, "cj_beamformer: jamming power must be nonnegative");
        const Eigen::Index k = steered_.size();
        if (jam_power == 0.0) return cvec::Zero(k);
        const double norm = steered_.norm();
        if (norm <= 1e-12 * ch_.ge.norm())
            throw degenerate_realization("cj_beamformer: eavesdropper channel lies in span(g1, g2)");
        return steered_ / norm * std::sqrt(jam_power);
    }

    RatePair rates(const PowerSplit& split, double total) const
    {
        detail::require_no_user_jamming(split, total);
        const double gamma = jam_gain_ * (total - split.pbar);
        return detail::wiretap_pair(std::norm(ch_.h1), std::norm(ch_.h2), std::norm(ch_.he),
                                    split.alpha, split.pbar, gamma);
    }

private:
    TrustedChannels ch_;
    cvec steered_;
    double jam_gain_ = 0.0;
};

inline cvec cj_beamformer(const TrustedChannels& ch, double jam_power)
{
    return CooperativeJamming(ch).beamformer(jam_power);
}

inline RatePair cj_secrecy_rates(const TrustedChannels& ch, const PowerSplit& split, double total)
{
    return CooperativeJamming(ch).rates(split, total);
}

// ---------------------------------------------------------------------------
// Decode-and-forward

// Unit-norm relay beamformer orthogonal to g_e maximizing
// beta |g1^H d|^2 + (1 - beta) |g2^H d|^2.
inline cvec df_beamformer(const TrustedChannels& ch, double beta)
{
    detail::require_relays(ch, "decode-and-forward");
    detail::require(beta >= 0.0 && beta <= 1.0, "df_beamformer: beta must lie in [0, 1]");
    const cmat proj = detail::projector_or_degenerate(cmat(ch.ge), "decode-and-forward: g_e is zero");
    const cmat mix = beta * ch.g1 * ch.g1.adjoint() + (1.0 - beta) * ch.g2 * ch.g2.adjoint();
    const linalg::EigenPair lead = linalg::leading_eigvec(proj * mix * proj);
    if (!(lead.value > 0.0))
        throw degenerate_realization("decode-and-forward: users are unreachable orthogonally to g_e");
    cvec d = proj * lead.vector;
    d.normalize();
    return d;
}

// Rates before the secrecy bracket, kept for bottleneck checks.
struct DecodeForwardRates {
    double r1 = 0.0, r2 = 0.0;              // combined rates (after the min)
    double relay_r1 = 0.0, relay_r2 = 0.0;  // min_k of the relays' decoding rates
};

class DecodeForward {
public:
    DecodeForward(const TrustedChannels& ch, double beta)
        : ch_(ch), d_(df_beamformer(ch, beta))
    {
        gain1_ = std::norm(ch.g1.dot(d_));
        gain2_ = std::norm(ch.g2.dot(d_));
        weakest_relay_ = ch.hr.cwiseAbs2().minCoeff();
    }

    const cvec& beamformer() const { return d_; }
    double strong_gain() const { return gain1_; }
    double weak_gain() const { return gain2_; }

    DecodeForwardRates combined(const PowerSplit& split, double total) const
    {
        detail::require_no_user_jamming(split, total);
        const double a = split.alpha, pb = split.pbar, pr = total - split.pbar;
        DecodeForwardRates out;
        // Both relay rates increase with |h_{r,k}|^2, so the weakest relay is the bottleneck.
        out.relay_r1 = detail::strong_rate(weakest_relay_, a, pb);
        out.relay_r2 = detail::weak_rate(weakest_relay_, a, pb);
        out.r1 = std::min(detail::strong_rate(std::norm(ch_.h1), a, pb) + detail::strong_rate(gain1_, a, pr),
                          out.relay_r1);
        out.r2 = std::min(detail::weak_rate(std::norm(ch_.h2), a, pb) + detail::weak_rate(gain2_, a, pr),
                          out.relay_r2);
        return out;
    }

    RatePair rates(const PowerSplit& split, double total) const
    {
        const DecodeForwardRates r = combined(split, total);
        const double xe = std::norm(ch_.he);
        return {0.5 * positive_part(r.r1 - detail::leaked_strong(xe, split.alpha, split.pbar, 0.0)),
                0.5 * positive_part(r.r2 - detail::leaked_weak(xe, split.alpha, split.pbar, 0.0))};
    }

    // |g1^H d|^2 >= |g2^H d|^2, needed for SIC at the strong user.
    bool sic_ordered() const { return gain1_ >= gain2_; }

private:
    TrustedChannels ch_;
    cvec d_;
    double gain1_ = 0.0, gain2_ = 0.0, weakest_relay_ = 0.0;
};

inline RatePair df_secrecy_rates(const TrustedChannels& ch, const PowerSplit& split, double total, double beta)
{
    return DecodeForward(ch, beta).rates(split, total);
}

// ---------------------------------------------------------------------------
// Amplify-and-forward

// Numerator and denominator of one user's generalized Rayleigh quotient.
struct Pencil {
    cmat num;
    cmat den;
};

class AmplifyForward {
public:
    explicit AmplifyForward(const TrustedChannels& ch) : ch_(ch)
    {
        detail::require_relays(ch, "amplify-and-forward");
        const Eigen::Index k = ch.relays();
        // Eavesdropper's second-phase gain is g_e^H diag(h_r) a = (diag(conj h_r) g_e)^H a.
        leak_dir_ = ch.hr.conjugate().cwiseProduct(ch.ge);
        filter_ = detail::projector_or_degenerate(cmat(leak_dir_), "amplify-and-forward: diag(h_r) g_e is zero");
        basis_ = linalg::range_basis(filter_);

        const cvec u1 = ch.hr.conjugate().cwiseProduct(ch.g1);
        const cvec u2 = ch.hr.conjugate().cwiseProduct(ch.g2);
        g1r_ = u1 * u1.adjoint();
        g2r_ = u2 * u2.adjoint();
        g1_ = ch.g1.cwiseAbs2().cast<complex>().asDiagonal();
        g2_ = ch.g2.cwiseAbs2().cast<complex>().asDiagonal();
        hr_power_ = ch.hr.cwiseAbs2().cast<complex>().asDiagonal();
        eye_ = cmat::Identity(k, k);
    }

    const cmat& filter() const { return filter_; }

    // Relay transmit power a^H A a with A = diag(|h_r|^2) pbar + I.
    double relay_power(const cvec& a, double pbar) const
    {
        return linalg::rayleigh(power_matrix(pbar), a);
    }

    // |g_e^H diag(h_r) a|
    double leakage(const cvec& a) const { return std::abs(leak_dir_.dot(a)); }

    Pencil pencil(int user, const PowerSplit& split, double total) const
    {
        require_interior(split, total);
        const double relay = total - split.pbar;
        const cmat base = power_matrix(split.pbar) / relay;
        if (user == 1) return {g1r_, base + g1_};
        detail::require(user == 2, "amplify-and-forward: user index must be 1 or 2");
        return {g2r_, base + g2_ + g2r_ * (split.alpha * split.pbar)};
    }

    // Per-user optimum a_o^(j), scaled to the relay power budget.
    cvec pencil_solution(int user, const PowerSplit& split, double total) const
    {
        const Pencil p = pencil(user, split, total);
        cvec v;
        try {
            v = linalg::leading_gen_eigvec(p.num, p.den, basis_).vector;
        } catch (const deflation_error& e) {
            throw degenerate_realization(e.what());
        }
        return scaled(v, split.pbar, total - split.pbar);
    }

    // beta a^(1) + (1 - beta) a^(2), rescaled back onto a^H A a = P - pbar.
    cvec beamformer(const PowerSplit& split, double total, double beta) const
    {
        detail::require(beta >= 0.0 && beta <= 1.0, "af_beamformer: beta must lie in [0, 1]");
        const cvec a1 = pencil_solution(1, split, total);
        const cvec a2 = pencil_solution(2, split, total);
        const cvec mix = beta * a1 + (1.0 - beta) * a2;
        const double relay = total - split.pbar;
        if (mix.norm() <= 1e-12 * std::max(a1.norm(), a2.norm())) return beta >= 0.5 ? a1 : a2;
        return scaled(mix, split.pbar, relay);
    }

    // Secrecy rates for an arbitrary relay vector `a` (assumed feasible).
    RatePair rates_for(const cvec& a, const PowerSplit& split) const
    {
        const double al = split.alpha, pb = split.pbar;
        const double q1r = linalg::rayleigh(g1r_, a), q1 = linalg::rayleigh(g1_, a);
        const double q2r = linalg::rayleigh(g2r_, a), q2 = linalg::rayleigh(g2_, a);
        const double r1 = std::log1p(std::norm(ch_.h1) * al * pb + q1r / (1.0 + q1) * al * pb);
        const double r2 = std::log1p(std::norm(ch_.h2) * (1.0 - al) * pb / (1.0 + std::norm(ch_.h2) * al * pb) +
                                     q2r * (1.0 - al) * pb / (1.0 + q2 + q2r * al * pb));
        const double xe = std::norm(ch_.he);
        return {0.5 * positive_part(r1 - detail::leaked_strong(xe, al, pb, 0.0)),
                0.5 * positive_part(r2 - detail::leaked_weak(xe, al, pb, 0.0))};
    }

    RatePair rates(const PowerSplit& split, double total, double beta) const
    {
        return rates_for(beamformer(split, total, beta), split);
    }

    // Relay-path SINR ordering that SIC at the strong user relies on.
    bool sic_ordered(const cvec& a, const PowerSplit& split) const
    {
        const double al = split.alpha, pb = split.pbar;
        auto relayed = [&](const cmat& gr, const cmat& g) {
            const double qr = linalg::rayleigh(gr, a);
            return qr * (1.0 - al) * pb / (1.0 + linalg::rayleigh(g, a) + qr * al * pb);
        };
        return relayed(g1r_, g1_) >= relayed(g2r_, g2_) * (1.0 - 1e-12);
    }

private:
    static void require_interior(const PowerSplit& split, double total)
    {
        detail::require_no_user_jamming(split, total);
        if (!(split.pbar < total))
            throw boundary_error("amplify-and-forward: pbar = P leaves the relays without power");
    }

    cmat power_matrix(double pbar) const { return hr_power_ * pbar + eye_; }

    cvec scaled(const cvec& v, double pbar, double relay) const
    {
        return v * std::sqrt(relay / relay_power(v, pbar));
    }

    TrustedChannels ch_;
    cvec leak_dir_;
    cmat filter_, basis_, g1r_, g2r_, g1_, g2_, hr_power_, eye_;
};

inline cvec af_beamformer(const TrustedChannels& ch, const PowerSplit& split, double total, double beta)
{
    return AmplifyForward(ch).beamformer(split, total, beta);
}

inline RatePair af_secrecy_rates(const TrustedChannels& ch, const PowerSplit& split, double total, double beta)
{
    return AmplifyForward(ch).rates(split, total, beta);
}

} // namespace nomasec

#endif
