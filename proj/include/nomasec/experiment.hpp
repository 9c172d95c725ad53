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

#ifndef NOMASEC_EXPERIMENT_HPP
#define NOMASEC_EXPERIMENT_HPP

// Experiment front end shared by the CLI and the tests: config files, the
// region / sweep / point runs, CSV rendering and the run manifest.
//
// Config format: one `key = value` per line, `#` starts a comment, lists are
// comma separated. Unknown or repeated keys are errors.

#include "nomasec/channel.hpp"
#include "nomasec/errors.hpp"
#include "nomasec/optimizer.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace nomasec {

inline constexpr const char* tool_version = "1.0.0";

// Bad or inconsistent experiment configuration (CLI exit code 2).
class config_error : public configuration_error {
public:
    using configuration_error::configuration_error;
};

enum class SweepParameter { relay_count, relay_distance, eav_distance };

inline const char* to_string(SweepParameter p)
{
    switch (p) {
    case SweepParameter::relay_count: return "relay_count";
    case SweepParameter::relay_distance: return "relay_distance";
    case SweepParameter::eav_distance: return "eav_distance";
    }
    return "?";
}

struct Sweep {
    SweepParameter parameter = SweepParameter::relay_distance;
    std::vector<double> values;
};

struct ExperimentConfig {
    Scenario scenario = Scenario::trusted;
    ScenarioGeometry geometry;
    double p_dbm = 90.0;
    double noise_dbm = 30.0;  // noise reference: unit noise power = 1 W
    int trials = 1000;
    std::uint64_t seed = 1;
    std::vector<SchemeId> schemes;
    int mu_points = 41;
    SearchGrid grid;
    std::optional<Sweep> sweep;
    std::string output_path;
    std::vector<std::uint64_t> point_seeds;

    // Noise-normalized total power budget (also the SNR).
    double total_power() const { return dbm_to_linear(p_dbm - noise_dbm); }

    ScenarioGeometry effective_geometry() const
    {
        ScenarioGeometry g = geometry;
        if (scenario == Scenario::untrusted) g.relays = 1;
        return g;
    }

    void validate() const
    {
        auto fail = [](const std::string& what) { throw config_error(what); };
        if (schemes.empty()) fail("config: no schemes selected");
        for (SchemeId s : schemes)
            if (scenario_of(s) != scenario)
                fail("config: scheme " + std::string(to_string(s)) + " does not belong to this scenario");
        if (trials < 1) fail("config: trials must be >= 1");
        if (mu_points < 2) fail("config: mu_points must be >= 2");
        try {
            grid.validate();
            effective_geometry().validate(scenario);
            for (const ScenarioGeometry& g : sweep_geometries()) g.validate(scenario);
        } catch (const domain_error& e) {
            fail(std::string("config: ") + e.what());
        }
        const bool relaying = std::any_of(schemes.begin(), schemes.end(), [](SchemeId s) {
            return s == SchemeId::cj || s == SchemeId::df || s == SchemeId::af_trusted;
        });
        if (relaying) {
            std::vector<ScenarioGeometry> all = sweep_geometries();
            all.push_back(effective_geometry());
            for (const ScenarioGeometry& g : all)
                if (g.relays < min_relays) fail("config: CJ, DF and AF_TRUSTED need at least 3 relays");
        }
        if (sweep) {
            if (sweep->values.empty()) fail("config: sweep_values is empty");
            for (double v : sweep->values)
                if (!(v > 0)) fail("config: sweep values must be positive");
            if (scenario == Scenario::untrusted && sweep->parameter != SweepParameter::relay_distance)
                fail("config: the untrusted scenario only sweeps relay_distance");
            if (sweep->parameter == SweepParameter::relay_count)
                for (double v : sweep->values)
                    if (v != static_cast<int>(v)) fail("config: relay_count values must be integers");
        }
    }

    std::vector<ScenarioGeometry> sweep_geometries() const
    {
        std::vector<ScenarioGeometry> out;
        if (!sweep) return out;
        for (double v : sweep->values) {
            ScenarioGeometry g = effective_geometry();
            switch (sweep->parameter) {
            case SweepParameter::relay_count: g.relays = static_cast<int>(v); break;
            case SweepParameter::relay_distance: g.lr_m = v; break;
            case SweepParameter::eav_distance: g.le_m = v; break;
            }
            out.push_back(g);
        }
        return out;
    }
};

namespace detail {

inline std::string trim(std::string s)
{
    auto sp = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && sp(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && sp(s[i])) ++i;
    return s.substr(i);
}

inline std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

inline double parse_double(const std::string& key, const std::string& v)
{
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used == v.size()) return x;
    } catch (const std::exception&) {
    }
    throw config_error("config: " + key + ": not a number: '" + v + "'");
}

inline std::uint64_t parse_u64(const std::string& key, const std::string& v)
{
    std::uint64_t x = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw config_error("config: " + key + ": not an unsigned integer: '" + v + "'");
    return x;
}

inline int parse_int(const std::string& key, const std::string& v)
{
    const std::uint64_t x = parse_u64(key, v);
    if (x > 1000000000ULL) throw config_error("config: " + key + ": value too large");
    return static_cast<int>(x);
}

} // namespace detail

inline ExperimentConfig parse_config(std::istream& in)
{
    using namespace detail;
    ExperimentConfig c;
    std::set<std::string> seen;
    std::optional<SweepParameter> sweep_param;
    std::optional<std::vector<double>> sweep_values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!seen.insert(key).second) throw config_error("config: duplicate key '" + key + "'");

        if (key == "scenario") {
            if (val == "trusted") c.scenario = Scenario::trusted;
            else if (val == "untrusted") c.scenario = Scenario::untrusted;
            else throw config_error("config: scenario must be trusted or untrusted");
        } else if (key == "l1_m") c.geometry.l1_m = parse_double(key, val);
        else if (key == "l2_m") c.geometry.l2_m = parse_double(key, val);
        else if (key == "le_m") c.geometry.le_m = parse_double(key, val);
        else if (key == "lr_m") c.geometry.lr_m = parse_double(key, val);
        else if (key == "relays") c.geometry.relays = parse_int(key, val);
        else if (key == "gamma") c.geometry.gamma = parse_double(key, val);
        else if (key == "p_dbm") c.p_dbm = parse_double(key, val);
        else if (key == "noise_dbm") c.noise_dbm = parse_double(key, val);
        else if (key == "trials") c.trials = parse_int(key, val);
        else if (key == "seed") c.seed = parse_u64(key, val);
        else if (key == "mu_points") c.mu_points = parse_int(key, val);
        else if (key == "grid_points") c.grid.points = parse_int(key, val);
        else if (key == "grid_refinements") c.grid.refinements = parse_int(key, val);
        else if (key == "grid_margin") c.grid.margin = parse_double(key, val);
        else if (key == "output_path") c.output_path = val;
        else if (key == "schemes") {
            for (const std::string& name : split_list(val)) {
                const auto id = parse_scheme(name);
                if (!id) throw config_error("config: unknown scheme '" + name + "'");
                c.schemes.push_back(*id);
            }
        } else if (key == "sweep_parameter") {
            if (val == "relay_count") sweep_param = SweepParameter::relay_count;
            else if (val == "relay_distance") sweep_param = SweepParameter::relay_distance;
            else if (val == "eav_distance") sweep_param = SweepParameter::eav_distance;
            else throw config_error("config: sweep_parameter must be relay_count, relay_distance or eav_distance");
        } else if (key == "sweep_values") {
            sweep_values.emplace();
            for (const std::string& v : split_list(val)) sweep_values->push_back(parse_double(key, v));
        } else if (key == "point_seeds") {
            for (const std::string& v : split_list(val)) c.point_seeds.push_back(parse_u64(key, v));
        } else {
            throw config_error("config: unknown key '" + key + "'");
        }
    }
    if (sweep_param.has_value() != sweep_values.has_value())
        throw config_error("config: sweep_parameter and sweep_values must be given together");
    if (sweep_param) c.sweep = Sweep{*sweep_param, *sweep_values};
    return c;
}

inline ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw config_error("config: cannot open '" + path + "'");
    return parse_config(in);
}

struct OutputOptions {
    bool bits = false;  // display rates in bits instead of nats
    int threads = 1;    // never changes results
};

struct RunOutput {
    std::string csv;
    nlohmann::json manifest;
};

namespace detail {

inline std::string fmt9(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

inline double display_rate(double nats, bool bits) { return bits ? nats / std::numbers::ln2 : nats; }

inline const char* unit(bool bits) { return bits ? "bits" : "nats"; }

inline nlohmann::json config_json(const ExperimentConfig& c)
{
    const ScenarioGeometry g = c.effective_geometry();
    nlohmann::json j;
    j["scenario"] = c.scenario == Scenario::trusted ? "trusted" : "untrusted";
    j["l1_m"] = g.l1_m;
    j["l2_m"] = g.l2_m;
    if (c.scenario == Scenario::trusted) j["le_m"] = g.le_m;
    j["lr_m"] = g.lr_m;
    j["relays"] = g.relays;
    j["gamma"] = g.gamma;
    j["p_dbm"] = c.p_dbm;
    j["noise_dbm"] = c.noise_dbm;
    j["total_power_linear"] = c.total_power();
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    std::vector<std::string> names;
    for (SchemeId s : c.schemes) names.emplace_back(to_string(s));
    j["schemes"] = names;
    j["mu_points"] = c.mu_points;
    j["grid"] = {{"points", c.grid.points}, {"refinements", c.grid.refinements}, {"margin", c.grid.margin}};
    if (c.sweep) j["sweep"] = {{"parameter", to_string(c.sweep->parameter)}, {"values", c.sweep->values}};
    return j;
}

inline nlohmann::json base_manifest(const char* command, const ExperimentConfig& c, const OutputOptions& opt)
{
    nlohmann::json m;
    m["tool"] = "nomasec";
    m["version"] = tool_version;
    m["command"] = command;
    m["config"] = config_json(c);
    m["rate_unit"] = unit(opt.bits);
    m["beamformer_weight"] = "beta = mu (DF, AF_TRUSTED)";
    m["phase_rng"] = "mt19937_64, top 53 bits -> [0, 2pi), trial seed = derive_seed(seed, trial)";
    return m;
}

} // namespace detail

inline RunOutput run_region(const ExperimentConfig& c, const OutputOptions& opt = {})
{
    c.validate();
    const std::string u = detail::unit(opt.bits);
    std::string csv = "scheme,mu,rs1_" + u + ",rs2_" + u + ",alpha_star,pbar_star,delta_star,trials\n";
    RunOutput out;
    out.manifest = detail::base_manifest("region", c, opt);
    const std::vector<double> mus = mu_grid(c.mu_points);
    for (SchemeId s : c.schemes) {
        const RegionCurve curve =
            trace_region(s, c.effective_geometry(), c.total_power(), mus, c.trials, c.seed, c.grid, opt.threads);
        for (const BoundaryPoint& p : curve.points) {
            csv += std::string(to_string(s)) + ',' + detail::fmt9(p.mu) + ',' +
                   detail::fmt9(detail::display_rate(p.rates.rs1, opt.bits)) + ',' +
                   detail::fmt9(detail::display_rate(p.rates.rs2, opt.bits)) + ',' + detail::fmt9(p.split.alpha) +
                   ',' + detail::fmt9(p.split.pbar) + ',' + detail::fmt9(p.split.delta) + ',' +
                   std::to_string(curve.trials) + '\n';
        }
        out.manifest["redraws"][std::string(to_string(s))] = curve.redraws;
        out.manifest["sic_violations"][std::string(to_string(s))] = curve.sic_violations;
    }
    out.csv = std::move(csv);
    return out;
}

inline RunOutput run_sweep(const ExperimentConfig& c, const OutputOptions& opt = {})
{
    c.validate();
    if (!c.sweep) throw config_error("config: sweep requires sweep_parameter and sweep_values");
    const std::string u = detail::unit(opt.bits);
    std::string csv = "scheme,parameter,value,sum_rate_" + u + ",rs1_" + u + ",rs2_" + u +
                      ",alpha_star,pbar_star,delta_star,trials\n";
    RunOutput out;
    out.manifest = detail::base_manifest("sweep", c, opt);
    const std::vector<ScenarioGeometry> geos = c.sweep_geometries();
    for (SchemeId s : c.schemes) {
        long redraws = 0;
        for (std::size_t v = 0; v < geos.size(); ++v) {
            const RegionCurve curve =
                trace_region(s, geos[v], c.total_power(), {0.5}, c.trials, c.seed, c.grid, opt.threads);
            const BoundaryPoint& p = curve.points.front();
            redraws += curve.redraws;
            csv += std::string(to_string(s)) + ',' + to_string(c.sweep->parameter) + ',' +
                   detail::fmt9(c.sweep->values[v]) + ',' +
                   detail::fmt9(detail::display_rate(p.rates.sum(), opt.bits)) + ',' +
                   detail::fmt9(detail::display_rate(p.rates.rs1, opt.bits)) + ',' +
                   detail::fmt9(detail::display_rate(p.rates.rs2, opt.bits)) + ',' + detail::fmt9(p.split.alpha) +
                   ',' + detail::fmt9(p.split.pbar) + ',' + detail::fmt9(p.split.delta) + ',' +
                   std::to_string(curve.trials) + '\n';
        }
        out.manifest["redraws"][std::string(to_string(s))] = redraws;
    }
    out.csv = std::move(csv);
    return out;
}

// Rates of every configured scheme at one fixed split, one realization per
// seed (the realization a trace with that master seed uses for trial 0).
// DIRECT and BASELINE_UNTRUSTED always transmit at full power; delta only
// applies to the active schemes.
inline RunOutput run_point(const ExperimentConfig& c, const PowerSplit& split, double beta,
                           const OutputOptions& opt = {})
{
    c.validate();
    const double total = c.total_power();
    try {
        split.validate(total);
    } catch (const domain_error& e) {
        throw config_error(std::string("point: ") + e.what());
    }
    if (!(beta >= 0.0 && beta <= 1.0)) throw config_error("point: beta must lie in [0, 1]");

    const std::vector<std::uint64_t> seeds = c.point_seeds.empty() ? std::vector{c.seed} : c.point_seeds;
    const std::string u = detail::unit(opt.bits);
    std::string csv = "scheme,seed,alpha,pbar,delta,rs1_" + u + ",rs2_" + u + "\n";
    const ScenarioGeometry geo = c.effective_geometry();
    for (SchemeId s : c.schemes) {
        PowerSplit sp = split;
        if (full_power_only(s)) sp.pbar = total;
        if (!uses_jamming_power(s)) sp.delta = 0.0;
        for (std::uint64_t seed : seeds) {
            phase_engine rng = trial_engine(seed, 0);
            const Realization ch = draw_realization(c.scenario, geo, rng);
            RatePair r;
            try {
                switch (s) {
                case SchemeId::direct: {
                    const auto& t = std::get<TrustedChannels>(ch);
                    r = wiretap_secrecy_rates(t.h1, t.h2, t.he, sp.alpha, total);
                    break;
                }
                case SchemeId::cj: r = cj_secrecy_rates(std::get<TrustedChannels>(ch), sp, total); break;
                case SchemeId::df: r = df_secrecy_rates(std::get<TrustedChannels>(ch), sp, total, beta); break;
                case SchemeId::af_trusted: r = af_secrecy_rates(std::get<TrustedChannels>(ch), sp, total, beta); break;
                case SchemeId::baseline_untrusted:
                    r = untrusted_baseline(std::get<UntrustedChannels>(ch), sp.alpha, total);
                    break;
                case SchemeId::cf_passive: r = cf_passive(std::get<UntrustedChannels>(ch), sp, total); break;
                case SchemeId::af_passive: r = af_passive(std::get<UntrustedChannels>(ch), sp, total); break;
                case SchemeId::cf_active: r = cf_active(std::get<UntrustedChannels>(ch), sp, total); break;
                case SchemeId::af_active: r = af_active(std::get<UntrustedChannels>(ch), sp, total); break;
                }
            } catch (const boundary_error& e) {
                throw config_error(std::string("point: ") + e.what());
            } catch (const configuration_error& e) {
                throw config_error(std::string("point: ") + e.what());
            } catch (const domain_error& e) {
                throw config_error(std::string("point: ") + e.what());
            }
            csv += std::string(to_string(s)) + ',' + std::to_string(seed) + ',' + detail::fmt9(sp.alpha) + ',' +
                   detail::fmt9(sp.pbar) + ',' + detail::fmt9(sp.delta) + ',' +
                   detail::fmt9(detail::display_rate(r.rs1, opt.bits)) + ',' +
                   detail::fmt9(detail::display_rate(r.rs2, opt.bits)) + '\n';
        }
    }
    RunOutput out;
    out.csv = std::move(csv);
    out.manifest = detail::base_manifest("point", c, opt);
    out.manifest["point"] = {{"alpha", split.alpha}, {"pbar", split.pbar}, {"delta", split.delta}, {"beta", beta},
                             {"seeds", seeds}};
    return out;
}

} // namespace nomasec

#endif
