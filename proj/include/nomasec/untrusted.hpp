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

#ifndef NOMASEC_UNTRUSTED_HPP
#define NOMASEC_UNTRUSTED_HPP

// Secrecy rates with a single honest-but-curious relay.
//
// Passive users hear the BS directly and the relay's forwarded signal.
// Active users jam the relay during the first phase and therefore rely on the
// relayed signal only (no direct link, even at zero jamming power).
// The budget splits as pbar (BS), delta (users' jamming), P - pbar - delta (relay).

#include "nomasec/channel.hpp"
#include "nomasec/errors.hpp"
#include "nomasec/noma.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace nomasec {

using UntrustedSplit = PowerSplit;

namespace detail {

struct UntrustedPowers {
    double h1, h2, hr, g1, g2;

    explicit UntrustedPowers(const UntrustedChannels& ch)
        : h1(std::norm(ch.h1)), h2(std::norm(ch.h2)), hr(std::norm(ch.hr)), g1(std::norm(ch.g1)),
          g2(std::norm(ch.g2))
    {
        require_ordered(h1, h2, "untrusted relay: requires |h1|^2 >= |h2|^2");
        require_ordered(g1, g2, "untrusted relay: requires |g1|^2 >= |g2|^2");
    }

    double jam_gain() const { return g1 + g2; }  // ||g||^2
};

inline void require_passive(const PowerSplit& split, double total)
{
    split.validate(total);
    require(split.delta == 0.0, "passive mode: users do not jam (delta must be 0)");
}

// What the relay itself can decode, with `jam` units of interference at the relay.
inline RatePair relay_leak(const UntrustedPowers& x, double alpha, double pbar, double jam)
{
    return {leaked_strong(x.hr, alpha, pbar, jam), leaked_weak(x.hr, alpha, pbar, jam)};
}

inline RatePair half_bracket(double r1, double r2, const RatePair& leak)
{
    return {0.5 * positive_part(r1 - leak.rs1), 0.5 * positive_part(r2 - leak.rs2)};
}

} // namespace detail

// Treat the relay as an external eavesdropper, BS at full power.
inline RatePair untrusted_baseline(const UntrustedChannels& ch, double alpha, double total)
{
    return wiretap_secrecy_rates(ch.h1, ch.h2, ch.hr, alpha, total);
}

// Smallest quantization noise that lets a user with direct gain `direct`
// and relay gain `forward` decode the compressed signal.
inline double cf_decodability_bound(double direct, double relay_gain, double forward, double pbar,
                                    double relay_power)
{
    return ((relay_gain + direct) * pbar + 1.0) / (forward * relay_power * (direct * pbar + 1.0));
}

// sigma_Q^2 for passive compress-and-forward; the weak user's bound dominates
// because |h1|^2 >= |h2|^2 and |g1|^2 >= |g2|^2.
inline double cf_passive_quantization_noise(const UntrustedChannels& ch, double pbar, double total)
{
    const detail::UntrustedPowers x(ch);
    return cf_decodability_bound(x.h2, x.hr, x.g2, pbar, total - pbar);
}

// Passive compress-and-forward rates (before the secrecy bracket) at an explicit sigma_Q^2.
inline NomaRates cf_passive_link_rates(const UntrustedChannels& ch, const PowerSplit& split, double sigma_q2)
{
    const detail::UntrustedPowers x(ch);
    const double a = split.alpha, pb = split.pbar, ab = 1.0 - a;
    return {std::log1p(x.h1 * a * pb + x.hr * a * pb / (1.0 + sigma_q2)),
            std::log1p(x.h2 * ab * pb / (1.0 + x.h2 * a * pb) + x.hr * ab * pb / (1.0 + x.hr * a * pb + sigma_q2))};
}

inline RatePair cf_passive_at_noise(const UntrustedChannels& ch, const PowerSplit& split, double sigma_q2)
{
    const detail::UntrustedPowers x(ch);
    const NomaRates r = cf_passive_link_rates(ch, split, sigma_q2);
    return detail::half_bracket(r.r1, r.r2, detail::relay_leak(x, split.alpha, split.pbar, 0.0));
}

inline RatePair cf_passive(const UntrustedChannels& ch, const PowerSplit& split, double total)
{
    detail::require_passive(split, total);
    if (!(split.pbar < total)) throw boundary_error("cf_passive: pbar = P leaves the relay without power");
    return cf_passive_at_noise(ch, split, cf_passive_quantization_noise(ch, split.pbar, total));
}

// Amplification gain beta^2 meeting the relay power budget.
inline double af_gain(double hr, double pbar, double relay_power)
{
    return relay_power / (1.0 + hr * pbar);
}

inline NomaRates af_passive_link_rates(const UntrustedChannels& ch, const PowerSplit& split, double total)
{
    detail::require_passive(split, total);
    const detail::UntrustedPowers x(ch);
    const double a = split.alpha, pb = split.pbar, ab = 1.0 - a;
    const double b2 = af_gain(x.hr, pb, total - pb);
    return {std::log1p(x.h1 * a * pb + x.g1 * b2 * x.hr * a * pb / (1.0 + x.g1 * b2)),
            std::log1p(x.h2 * ab * pb / (1.0 + x.h2 * a * pb) +
                       x.g2 * b2 * x.hr * ab * pb / (1.0 + x.g2 * b2 * (1.0 + x.hr * a * pb)))};
}

inline RatePair af_passive(const UntrustedChannels& ch, const PowerSplit& split, double total)
{
    const NomaRates r = af_passive_link_rates(ch, split, total);
    const detail::UntrustedPowers x(ch);
    return detail::half_bracket(r.r1, r.r2, detail::relay_leak(x, split.alpha, split.pbar, 0.0));
}

// Users' jamming beamformer g / ||g|| * sqrt(delta), g = [g1 g2].
inline Eigen::Vector2cd active_jammer(const UntrustedChannels& ch, double delta)
{
    detail::require(delta >= 0.0, "active_jammer: delta must be nonnegative");
    const Eigen::Vector2cd g(ch.g1, ch.g2);
    if (delta == 0.0) return Eigen::Vector2cd::Zero();
    const double norm = g.norm();
    if (!(norm > 0.0)) throw degenerate_realization("active_jammer: relay-to-user channels are zero");
    return g / norm * std::sqrt(delta);
}

namespace detail {

inline void require_active(const PowerSplit& split, double total)
{
    split.validate(total);
}

} // namespace detail

inline double cf_active_quantization_noise(const UntrustedChannels& ch, const PowerSplit& split, double total)
{
    const detail::UntrustedPowers x(ch);
    return cf_decodability_bound(0.0, x.hr, x.g2, split.pbar, split.relay_power(total));
}

// Relayed-only rates of the active mode, before the secrecy bracket.
inline NomaRates cf_active_link_rates(const UntrustedChannels& ch, const PowerSplit& split, double total)
{
    detail::require_active(split, total);
    if (!(split.relay_power(total) > 0.0))
        throw boundary_error("cf_active: pbar + delta = P leaves the relay without power");
    const detail::UntrustedPowers x(ch);
    const double a = split.alpha, pb = split.pbar, ab = 1.0 - a;
    const double sq = cf_active_quantization_noise(ch, split, total);
    return {std::log1p(x.hr * a * pb / (1.0 + sq)), std::log1p(x.hr * ab * pb / (1.0 + x.hr * a * pb + sq))};
}

inline NomaRates af_active_link_rates(const UntrustedChannels& ch, const PowerSplit& split, double total)
{
    detail::require_active(split, total);
    const detail::UntrustedPowers x(ch);
    const double a = split.alpha, pb = split.pbar, ab = 1.0 - a;
    const double b2 = af_gain(x.hr, pb, std::max(split.relay_power(total), 0.0));
    return {std::log1p(x.g1 * b2 * x.hr * a * pb / (1.0 + x.g1 * b2)),
            std::log1p(x.g2 * b2 * x.hr * ab * pb / (1.0 + x.g2 * b2 * (1.0 + x.hr * a * pb)))};
}

namespace detail {

inline RatePair active_bracket(const UntrustedChannels& ch, const NomaRates& r, const PowerSplit& split)
{
    const UntrustedPowers x(ch);
    return half_bracket(r.r1, r.r2, relay_leak(x, split.alpha, split.pbar, x.jam_gain() * split.delta));
}

} // namespace detail

inline RatePair cf_active(const UntrustedChannels& ch, const PowerSplit& split, double total)
{
    return detail::active_bracket(ch, cf_active_link_rates(ch, split, total), split);
}

inline RatePair af_active(const UntrustedChannels& ch, const PowerSplit& split, double total)
{
    return detail::active_bracket(ch, af_active_link_rates(ch, split, total), split);
}

} // namespace nomasec

#endif
