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

#ifndef NOMASEC_OPTIMIZER_HPP
#define NOMASEC_OPTIMIZER_HPP

// Boundary of a scheme's secrecy-rate region by weighted-sum scalarization:
// for each weight mu, maximize mu rs1 + (1 - mu) rs2 over the scheme's power
// split with a refined grid search, then average the optimal pairs over
// Monte Carlo trials.

#include "nomasec/channel.hpp"
#include "nomasec/errors.hpp"
#include "nomasec/noma.hpp"
#include "nomasec/trusted.hpp"
#include "nomasec/untrusted.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

namespace nomasec {

enum class SchemeId {
    direct,
    cj,
    df,
    af_trusted,
    baseline_untrusted,
    cf_passive,
    af_passive,
    cf_active,
    af_active,
};

inline constexpr std::array all_schemes = {
    SchemeId::direct,     SchemeId::cj,         SchemeId::df,        SchemeId::af_trusted, SchemeId::baseline_untrusted,
    SchemeId::cf_passive, SchemeId::af_passive, SchemeId::cf_active, SchemeId::af_active,
};

inline std::string_view to_string(SchemeId id)
{
    switch (id) {
    case SchemeId::direct: return "DIRECT";
    case SchemeId::cj: return "CJ";
    case SchemeId::df: return "DF";
    case SchemeId::af_trusted: return "AF_TRUSTED";
    case SchemeId::baseline_untrusted: return "BASELINE_UNTRUSTED";
    case SchemeId::cf_passive: return "CF_PASSIVE";
    case SchemeId::af_passive: return "AF_PASSIVE";
    case SchemeId::cf_active: return "CF_ACTIVE";
    case SchemeId::af_active: return "AF_ACTIVE";
    }
    return "?";
}

inline std::optional<SchemeId> parse_scheme(std::string_view name)
{
    for (SchemeId id : all_schemes)
        if (to_string(id) == name) return id;
    return std::nullopt;
}

inline Scenario scenario_of(SchemeId id)
{
    switch (id) {
    case SchemeId::direct:
    case SchemeId::cj:
    case SchemeId::df:
    case SchemeId::af_trusted: return Scenario::trusted;
    default: return Scenario::untrusted;
    }
}

inline bool uses_jamming_power(SchemeId id)
{
    return id == SchemeId::cf_active || id == SchemeId::af_active;
}

// Schemes whose BS transmits at full power (only alpha is searched).
inline bool full_power_only(SchemeId id)
{
    return id == SchemeId::direct || id == SchemeId::baseline_untrusted;
}

// Coarse uniform grid per dimension followed by local refinement passes that
// halve the step around the incumbent, keeping the same point count.
struct SearchGrid {
    int points = 33;
    int refinements = 2;
    double margin = 1e-3;  // relative to P; keeps relay power away from zero

    void validate() const
    {
        detail::require(points >= 2, "search grid: need at least 2 points per dimension");
        detail::require(refinements >= 0, "search grid: refinement passes must be >= 0");
        detail::require(margin > 0.0 && margin < 0.5, "search grid: margin must lie in (0, 0.5)");
    }
};

using Realization = std::variant<TrustedChannels, UntrustedChannels>;

struct BoundaryPoint {
    double mu = 0.0;
    RatePair rates;
    PowerSplit split;
    double objective = 0.0;
    bool sic_ordered = true;  // relay-path SIC ordering held at the optimum (DF/AF trusted)
};

struct RegionCurve {
    SchemeId scheme = SchemeId::direct;
    std::vector<BoundaryPoint> points;  // ordered by mu; rates and splits are trial means
    int trials = 0;
    std::uint64_t seed = 0;
    long redraws = 0;          // degenerate realizations rejected and redrawn
    long sic_violations = 0;   // (trial, mu) optima where the SIC ordering failed
};

// Thrown when a trial keeps drawing degenerate realizations.
class retries_exhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int max_redraws_per_trial = 100;

inline std::vector<double> mu_grid(int points)
{
    detail::require(points >= 1, "mu grid: need at least one point");
    if (points == 1) return {0.5};
    std::vector<double> out(points);
    for (int i = 0; i < points; ++i) out[i] = static_cast<double>(i) / (points - 1);
    return out;
}

namespace detail {

struct Axis {
    double lo = 0.0, hi = 0.0;
};

// Scheme objective bound to one realization and weight.
class Objective {
public:
    Objective(SchemeId scheme, const Realization& ch, double mu, double total) : scheme_(scheme), total_(total)
    {
        const bool trusted = std::holds_alternative<TrustedChannels>(ch);
        if (trusted != (scenario_of(scheme) == Scenario::trusted))
            throw domain_error("boundary_point: scheme " + std::string(to_string(scheme)) +
                               " does not match the realization's scenario");
        switch (scheme) {
        case SchemeId::direct: {
            const auto& t = std::get<TrustedChannels>(ch);
            eval_ = [t, total](const PowerSplit& s) { return wiretap_secrecy_rates(t.h1, t.h2, t.he, s.alpha, total); };
            break;
        }
        case SchemeId::cj: {
            CooperativeJamming cj(std::get<TrustedChannels>(ch));
            eval_ = [cj, total](const PowerSplit& s) { return cj.rates(s, total); };
            break;
        }
        case SchemeId::df: {
            DecodeForward df(std::get<TrustedChannels>(ch), mu);
            sic_ = df.sic_ordered();
            eval_ = [df, total](const PowerSplit& s) { return df.rates(s, total); };
            break;
        }
        case SchemeId::af_trusted: {
            af_.emplace(std::get<TrustedChannels>(ch));
            eval_ = [this, total, mu](const PowerSplit& s) { return af_->rates(s, total, mu); };
            break;
        }
        case SchemeId::baseline_untrusted: {
            const auto& u = std::get<UntrustedChannels>(ch);
            eval_ = [u, total](const PowerSplit& s) { return untrusted_baseline(u, s.alpha, total); };
            break;
        }
        case SchemeId::cf_passive: {
            const auto& u = std::get<UntrustedChannels>(ch);
            eval_ = [u, total](const PowerSplit& s) { return cf_passive(u, s, total); };
            break;
        }
        case SchemeId::af_passive: {
            const auto& u = std::get<UntrustedChannels>(ch);
            eval_ = [u, total](const PowerSplit& s) { return af_passive(u, s, total); };
            break;
        }
        case SchemeId::cf_active: {
            const auto& u = std::get<UntrustedChannels>(ch);
            eval_ = [u, total](const PowerSplit& s) { return cf_active(u, s, total); };
            break;
        }
        case SchemeId::af_active: {
            const auto& u = std::get<UntrustedChannels>(ch);
            eval_ = [u, total](const PowerSplit& s) { return af_active(u, s, total); };
            break;
        }
        }
        mu_ = mu;
    }

    Objective(const Objective&) = delete;
    Objective& operator=(const Objective&) = delete;

    RatePair rates(const PowerSplit& s) const { return eval_(s); }

    // Search box in (alpha, pbar, delta-fraction) coordinates.
    Axis alpha_axis() const { return {0.0, 1.0}; }
    std::optional<Axis> pbar_axis(double margin) const
    {
        if (full_power_only(scheme_)) return std::nullopt;
        const double hi = scheme_ == SchemeId::cj ? total_ : total_ * (1.0 - margin);
        return Axis{total_ * margin, hi};
    }
    bool has_delta() const { return uses_jamming_power(scheme_); }

    PowerSplit split_at(double alpha, double pbar, double frac, double margin) const
    {
        PowerSplit s{alpha, full_power_only(scheme_) ? total_ : pbar, 0.0};
        if (has_delta()) s.delta = frac * std::max(total_ - pbar - margin * total_, 0.0);
        return s;
    }

    bool sic_ordered_at(const PowerSplit& s) const
    {
        if (scheme_ == SchemeId::af_trusted) return af_->sic_ordered(af_->beamformer(s, total_, mu_), s);
        return sic_;
    }

private:
    SchemeId scheme_;
    double total_;
    double mu_ = 0.0;
    bool sic_ = true;
    std::optional<AmplifyForward> af_;
    std::function<RatePair(const PowerSplit&)> eval_;
};

// `points` grid values with spacing `step`, centered on `center` and shifted to fit the axis.
inline std::vector<double> window(const Axis& axis, double center, double step, int points)
{
    const double span = step * (points - 1);
    double lo = center - 0.5 * span;
    lo = std::clamp(lo, axis.lo, std::max(axis.lo, axis.hi - span));
    std::vector<double> out(points);
    for (int i = 0; i < points; ++i) out[i] = std::min(lo + step * i, axis.hi);
    if (axis.hi - out.back() <= 1e-12 * std::max(1.0, std::abs(axis.hi))) out.back() = axis.hi;
    return out;
}

} // namespace detail

// Grid-refined maximizer of mu rs1 + (1 - mu) rs2 for one realization.
// Ties go to smaller pbar, then smaller alpha, then smaller delta. DF and
// AF_TRUSTED design their beamformer with beta = mu.
inline BoundaryPoint boundary_point(SchemeId scheme, const Realization& ch, double mu, double total,
                                    const SearchGrid& grid = {})
{
    detail::require(mu >= 0.0 && mu <= 1.0, "boundary_point: mu must lie in [0, 1]");
    detail::require(total > 0.0, "boundary_point: total power must be positive");
    grid.validate();
    const detail::Objective objective(scheme, ch, mu, total);

    const detail::Axis a_axis = objective.alpha_axis();
    const std::optional<detail::Axis> p_axis = objective.pbar_axis(grid.margin);
    const detail::Axis d_axis{0.0, 1.0};
    const int n = grid.points;

    BoundaryPoint best;
    best.mu = mu;
    best.objective = -1.0;
    double best_a = 0.0, best_p = p_axis ? p_axis->lo : total, best_d = 0.0;

    double step_a = (a_axis.hi - a_axis.lo) / (n - 1);
    double step_p = p_axis ? (p_axis->hi - p_axis->lo) / (n - 1) : 0.0;
    double step_d = (d_axis.hi - d_axis.lo) / (n - 1);

    for (int pass = 0; pass <= grid.refinements; ++pass) {
        std::vector<double> as, ps{best_p}, ds{0.0};
        if (pass == 0) {
            as = detail::window(a_axis, 0.5 * (a_axis.lo + a_axis.hi), step_a, n);
            if (p_axis) ps = detail::window(*p_axis, 0.5 * (p_axis->lo + p_axis->hi), step_p, n);
            if (objective.has_delta()) ds = detail::window(d_axis, 0.5, step_d, n);
        } else {
            step_a *= 0.5;
            step_p *= 0.5;
            step_d *= 0.5;
            as = detail::window(a_axis, best_a, step_a, n);
            if (p_axis) ps = detail::window(*p_axis, best_p, step_p, n);
            if (objective.has_delta()) ds = detail::window(d_axis, best_d, step_d, n);
        }
        for (double p : ps)
            for (double a : as)
                for (double d : ds) {
                    const PowerSplit s = objective.split_at(a, p, d, grid.margin);
                    const RatePair r = objective.rates(s);
                    const double value = r.weighted(mu);
                    if (value > best.objective) {
                        best.objective = value;
                        best.rates = r;
                        best.split = s;
                        best_a = a;
                        best_p = p;
                        best_d = d;
                    }
                }
    }
    best.sic_ordered = objective.sic_ordered_at(best.split);
    return best;
}

inline Realization draw_realization(Scenario scenario, const ScenarioGeometry& geo, phase_engine& rng)
{
    if (scenario == Scenario::trusted) return draw_trusted(geo, rng);
    return draw_untrusted(geo, rng);
}

// Per-trial boundary points for every mu. Degenerate realizations are redrawn
// from the trial's own stream; `redraws` counts them.
inline std::vector<BoundaryPoint> trial_boundary(SchemeId scheme, const ScenarioGeometry& geo, double total,
                                                 const std::vector<double>& mus, std::uint64_t seed,
                                                 std::uint64_t trial, const SearchGrid& grid, long& redraws)
{
    phase_engine rng = trial_engine(seed, trial);
    for (int attempt = 0;; ++attempt) {
        const Realization ch = draw_realization(scenario_of(scheme), geo, rng);
        try {
            std::vector<BoundaryPoint> out;
            out.reserve(mus.size());
            for (double mu : mus) out.push_back(boundary_point(scheme, ch, mu, total, grid));
            return out;
        } catch (const degenerate_realization&) {
            ++redraws;
            if (attempt + 1 >= max_redraws_per_trial)
                throw retries_exhausted("trial " + std::to_string(trial) + ": too many degenerate realizations");
        }
    }
}

namespace detail {

// Runs work(i) for i in [0, count) on up to `threads` workers. The first
// exception (by index) is rethrown after all workers finish.
template <typename Work>
void parallel_for(int count, int threads, Work&& work)
{
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    work(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace detail

inline int default_threads()
{
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Averages the per-trial optimal rate pairs (and argmax splits) for every mu.
// Results depend only on (inputs, seed), never on `threads`.
inline RegionCurve trace_region(SchemeId scheme, const ScenarioGeometry& geo, double total,
                                const std::vector<double>& mus, int trials, std::uint64_t seed,
                                const SearchGrid& grid = {}, int threads = 1)
{
    detail::require(trials >= 1, "trace_region: need at least one trial");
    detail::require(!mus.empty(), "trace_region: mu grid is empty");
    geo.validate(scenario_of(scheme));
    grid.validate();

    std::vector<std::vector<BoundaryPoint>> per_trial(trials);
    std::vector<long> redraws(trials, 0);
    detail::parallel_for(trials, threads, [&](int i) {
        per_trial[i] = trial_boundary(scheme, geo, total, mus, seed, static_cast<std::uint64_t>(i), grid, redraws[i]);
    });

    RegionCurve curve;
    curve.scheme = scheme;
    curve.trials = trials;
    curve.seed = seed;
    curve.points.resize(mus.size());
    for (std::size_t m = 0; m < mus.size(); ++m) {
        BoundaryPoint& acc = curve.points[m];
        acc.mu = mus[m];
        for (int i = 0; i < trials; ++i) {
            const BoundaryPoint& p = per_trial[i][m];
            acc.rates.rs1 += p.rates.rs1;
            acc.rates.rs2 += p.rates.rs2;
            acc.split.alpha += p.split.alpha;
            acc.split.pbar += p.split.pbar;
            acc.split.delta += p.split.delta;
            if (!p.sic_ordered) ++curve.sic_violations;
        }
        const double inv = 1.0 / trials;
        acc.rates.rs1 *= inv;
        acc.rates.rs2 *= inv;
        acc.split.alpha *= inv;
        acc.split.pbar *= inv;
        acc.split.delta *= inv;
        acc.objective = acc.rates.weighted(acc.mu);
        acc.sic_ordered = true;
    }
    for (long r : redraws) curve.redraws += r;
    return curve;
}

// Mean of rs1 + rs2 at the mu = 1/2 optimum.
inline double secrecy_sum_rate(SchemeId scheme, const ScenarioGeometry& geo, double total, int trials,
                               std::uint64_t seed, const SearchGrid& grid = {}, int threads = 1)
{
    return trace_region(scheme, geo, total, {0.5}, trials, seed, grid, threads).points.front().rates.sum();
}

} // namespace nomasec

#endif
