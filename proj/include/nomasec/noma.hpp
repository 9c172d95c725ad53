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

#ifndef NOMASEC_NOMA_HPP
#define NOMASEC_NOMA_HPP

// Two-user superposition-coding rates and their multi-receiver wiretap
// secrecy counterparts. All rates are in nats per channel use.

#include "nomasec/channel.hpp"
#include "nomasec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace nomasec {

// Decision variables of one scheme evaluation.
//   alpha : strong user's share of the superposed power
//   pbar  : BS transmit power
//   delta : users' jamming power (active untrusted mode only)
// Whatever remains of the total budget P goes to the relay(s).
struct PowerSplit {
    double alpha = 0.0;
    double pbar = 0.0;
    double delta = 0.0;

    double relay_power(double total) const { return total - pbar - delta; }

    void validate(double total) const
    {
        using detail::require;
        require(alpha >= 0.0 && alpha <= 1.0, "power split: alpha must lie in [0, 1]");
        require(pbar >= 0.0 && pbar <= total, "power split: pbar must lie in [0, P]");
        require(delta >= 0.0 && delta <= total - pbar, "power split: delta must lie in [0, P - pbar]");
    }
};

struct RatePair {
    double rs1 = 0.0;  // strong user
    double rs2 = 0.0;  // weak user

    double sum() const { return rs1 + rs2; }
    double weighted(double mu) const { return mu * rs1 + (1.0 - mu) * rs2; }
};

inline double positive_part(double x) { return x > 0.0 ? x : 0.0; }

namespace detail {

inline double power_of(complex h) { return std::norm(h); }

inline void require_ordered(double strong, double weak, const char* what)
{
    // Equal distances may give an ulp-level inversion after the polar round trip.
    if (strong < weak * (1.0 - 1e-12)) throw domain_error(what);
}

// Rate of the strong user after SIC: log(1 + x alpha p).
inline double strong_rate(double x, double alpha, double p)
{
    return std::log1p(x * alpha * p);
}

// Weak-user rate treating the strong user's layer (plus `extra` noise) as noise.
inline double weak_rate(double x, double alpha, double p, double extra = 0.0)
{
    return std::log1p(x * (1.0 - alpha) * p / (1.0 + x * alpha * p + extra));
}

// Eavesdropper's strong-layer rate when it also sees `jam` units of interference.
inline double leaked_strong(double xe, double alpha, double p, double jam)
{
    return std::log1p(xe * alpha * p / (1.0 + jam));
}

inline double leaked_weak(double xe, double alpha, double p, double jam)
{
    return weak_rate(xe, alpha, p, jam);
}

// Wiretap pair on squared gains, with an interference term at the eavesdropper.
inline RatePair wiretap_pair(double x1, double x2, double xe, double alpha, double p, double jam = 0.0)
{
    return {positive_part(strong_rate(x1, alpha, p) - leaked_strong(xe, alpha, p, jam)),
            positive_part(weak_rate(x2, alpha, p) - leaked_weak(xe, alpha, p, jam))};
}

} // namespace detail

struct NomaRates {
    double r1 = 0.0;
    double r2 = 0.0;
};

inline NomaRates noma_rates(complex h1, complex h2, double alpha, double p)
{
    const double x1 = detail::power_of(h1), x2 = detail::power_of(h2);
    detail::require_ordered(x1, x2, "noma_rates: requires |h1|^2 >= |h2|^2");
    detail::require(alpha >= 0.0 && alpha <= 1.0, "noma_rates: alpha must lie in [0, 1]");
    detail::require(p >= 0.0, "noma_rates: power must be nonnegative");
    return {detail::strong_rate(x1, alpha, p), detail::weak_rate(x2, alpha, p)};
}

inline RatePair wiretap_secrecy_rates(complex h1, complex h2, complex he, double alpha, double p)
{
    const double x1 = detail::power_of(h1), x2 = detail::power_of(h2);
    detail::require_ordered(x1, x2, "wiretap_secrecy_rates: requires |h1|^2 >= |h2|^2");
    detail::require(alpha >= 0.0 && alpha <= 1.0, "wiretap_secrecy_rates: alpha must lie in [0, 1]");
    detail::require(p >= 0.0, "wiretap_secrecy_rates: power must be nonnegative");
    return detail::wiretap_pair(x1, x2, detail::power_of(he), alpha, p);
}

} // namespace nomasec

#endif
