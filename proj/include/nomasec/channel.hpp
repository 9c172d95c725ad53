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

#ifndef NOMASEC_CHANNEL_HPP
#define NOMASEC_CHANNEL_HPP

#include "nomasec/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace nomasec {

using complex = std::complex<double>;
using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;

// Phase generator. std::mt19937_64 is fully specified by the standard, and the
// uniform mapping below is done by hand, so draws are identical across
// standard library implementations.
using phase_engine = std::mt19937_64;

enum class Scenario { trusted, untrusted };

// One-dimensional layout: BS at the origin, every other node on the same ray.
struct ScenarioGeometry {
    double l1_m = 30.0;  // BS -> strong user
    double l2_m = 40.0;  // BS -> weak user
    double le_m = 50.0;  // BS -> eavesdropper (trusted scenario only)
    double lr_m = 15.0;  // BS -> relay(s)
    int relays = 5;      // K; forced to 1 for the untrusted scenario
    double gamma = 3.5;  // path-loss exponent

    double relay_to(double node_m) const { return std::abs(node_m - lr_m); }

    void validate(Scenario scenario) const
    {
        using detail::require;
        require(l1_m > 0 && l2_m > 0 && lr_m > 0, "geometry: distances must be positive");
        require(gamma > 0, "geometry: path-loss exponent must be positive");
        require(l1_m <= l2_m, "geometry: strong user must not be farther than the weak user (l1 <= l2)");
        require(relay_to(l1_m) > 0 && relay_to(l2_m) > 0, "geometry: relay coincides with a user");
        require(relay_to(l1_m) <= relay_to(l2_m),
                "geometry: relay must be at least as close to the strong user as to the weak user");
        if (scenario == Scenario::trusted) {
            require(le_m > 0, "geometry: eavesdropper distance must be positive");
            require(relay_to(le_m) > 0, "geometry: relay coincides with the eavesdropper");
            require(relays >= 1, "geometry: need at least one relay");
        }
    }
};

struct TrustedChannels {
    complex h1, h2, he;
    cvec hr, g1, g2, ge;

    int relays() const { return static_cast<int>(hr.size()); }
};

struct UntrustedChannels {
    complex h1, h2, hr, g1, g2;
};

// sqrt(1 / l^gamma)
inline double path_gain_magnitude(double distance_m, double gamma)
{
    detail::require(distance_m > 0, "path_gain_magnitude: distance must be positive");
    return std::sqrt(std::pow(distance_m, -gamma));
}

// Uniform phase on [0, 2pi) from the top 53 bits of one engine output.
inline double draw_phase(phase_engine& rng)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 * two_pi;
}

inline complex draw_channel(double distance_m, double gamma, phase_engine& rng)
{
    return std::polar(path_gain_magnitude(distance_m, gamma), draw_phase(rng));
}

namespace detail {

inline cvec draw_vector(int n, double distance_m, double gamma, phase_engine& rng)
{
    cvec v(n);
    for (int k = 0; k < n; ++k) v[k] = draw_channel(distance_m, gamma, rng);
    return v;
}

} // namespace detail

// Draw order is fixed: h1, h2, he, hr[K], g1[K], g2[K], ge[K].
inline TrustedChannels draw_trusted(const ScenarioGeometry& geo, phase_engine& rng)
{
    geo.validate(Scenario::trusted);
    const double g = geo.gamma;
    TrustedChannels ch;
    ch.h1 = draw_channel(geo.l1_m, g, rng);
    ch.h2 = draw_channel(geo.l2_m, g, rng);
    ch.he = draw_channel(geo.le_m, g, rng);
    ch.hr = detail::draw_vector(geo.relays, geo.lr_m, g, rng);
    ch.g1 = detail::draw_vector(geo.relays, geo.relay_to(geo.l1_m), g, rng);
    ch.g2 = detail::draw_vector(geo.relays, geo.relay_to(geo.l2_m), g, rng);
    ch.ge = detail::draw_vector(geo.relays, geo.relay_to(geo.le_m), g, rng);
    return ch;
}

// Draw order: h1, h2, hr, g1, g2.
inline UntrustedChannels draw_untrusted(const ScenarioGeometry& geo, phase_engine& rng)
{
    geo.validate(Scenario::untrusted);
    const double g = geo.gamma;
    UntrustedChannels ch;
    ch.h1 = draw_channel(geo.l1_m, g, rng);
    ch.h2 = draw_channel(geo.l2_m, g, rng);
    ch.hr = draw_channel(geo.lr_m, g, rng);
    ch.g1 = draw_channel(geo.relay_to(geo.l1_m), g, rng);
    ch.g2 = draw_channel(geo.relay_to(geo.l2_m), g, rng);
    return ch;
}

inline double dbm_to_linear(double p_dbm) { return std::pow(10.0, p_dbm / 10.0); }

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Child seed for trial `index` of a run seeded with `master`. Depends only on
// (master, index), never on scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    return mix64(mix64(master) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

inline phase_engine trial_engine(std::uint64_t master, std::uint64_t index)
{
    return phase_engine(derive_seed(master, index));
}

} // namespace nomasec

#endif
