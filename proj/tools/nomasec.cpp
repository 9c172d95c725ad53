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

// nomasec command line: region curves, parameter sweeps and single-point
// evaluations of the secrecy-rate schemes. Writes a CSV and a JSON manifest
// (<output>.manifest.json). Exit codes: 0 ok, 2 config error, 3 numerical
// degeneracy (retries exhausted), 1 anything else.

#include "nomasec/experiment.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

constexpr int exit_config = 2;
constexpr int exit_degenerate = 3;

void write_atomically(const std::string& path, const std::string& text)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw nomasec::config_error("cannot open output '" + tmp + "'");
        out << text;
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Secrecy-rate regions for relay-assisted two-user downlink NOMA"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::string output;
    bool bits = false;
    int threads = nomasec::default_threads();
    double alpha = 0.5, pbar = 0.0, delta = 0.0, beta = 0.5;
    bool pbar_set = false;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "Scenario config file (key = value)")->required();
        sub->add_option("--seed", seed, "Master seed (overrides config)");
        sub->add_option("--trials", trials, "Monte Carlo trials (overrides config)")->check(CLI::PositiveNumber);
        sub->add_option("--output", output, "Output CSV path (overrides config)");
        sub->add_flag("--bits", bits, "Report rates in bits instead of nats");
        sub->add_option("--threads", threads, "Worker threads (results do not depend on it)")
            ->check(CLI::PositiveNumber);
    };
    CLI::App* region = app.add_subcommand("region", "Trace secrecy-rate region boundaries over the mu grid");
    CLI::App* sweep = app.add_subcommand("sweep", "Secrecy sum rate (mu = 0.5) across a parameter sweep");
    CLI::App* point = app.add_subcommand("point", "Evaluate every scheme at one fixed power split");
    common(region);
    common(sweep);
    common(point);
    point->add_option("--alpha", alpha, "Strong user's power fraction")->check(CLI::Range(0.0, 1.0));
    point->add_option("--pbar", pbar, "BS transmit power (linear, noise-normalized); default P/2")
        ->each([&](const std::string&) { pbar_set = true; });
    point->add_option("--delta", delta, "Users' jamming power (linear), active schemes only");
    point->add_option("--beta", beta, "Beamformer weight for DF / AF_TRUSTED")->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the parse error
        return code == 0 ? 0 : exit_config;
    }

    try {
        nomasec::ExperimentConfig cfg = nomasec::load_config(config_path);
        if (seed) cfg.seed = *seed;
        if (trials) cfg.trials = *trials;
        if (!output.empty()) cfg.output_path = output;
        if (cfg.output_path.empty()) throw nomasec::config_error("no output path (set output_path or --output)");
        const nomasec::OutputOptions opt{bits, threads};

        nomasec::RunOutput result;
        if (region->parsed()) {
            result = nomasec::run_region(cfg, opt);
        } else if (sweep->parsed()) {
            result = nomasec::run_sweep(cfg, opt);
        } else {
            if (!pbar_set) pbar = 0.5 * cfg.total_power();
            result = nomasec::run_point(cfg, {alpha, pbar, delta}, beta, opt);
        }
        write_atomically(cfg.output_path, result.csv);
        write_atomically(cfg.output_path + ".manifest.json", result.manifest.dump(2) + "\n");
        return 0;
    } catch (const nomasec::configuration_error& e) {
        std::cerr << "nomasec: " << e.what() << '\n';
        return exit_config;
    } catch (const nomasec::domain_error& e) {
        std::cerr << "nomasec: " << e.what() << '\n';
        return exit_config;
    } catch (const nomasec::retries_exhausted& e) {
        std::cerr << "nomasec: " << e.what() << '\n';
        return exit_degenerate;
    } catch (const nomasec::degenerate_realization& e) {
        std::cerr << "nomasec: " << e.what() << '\n';
        return exit_degenerate;
    } catch (const std::exception& e) {
        std::cerr << "nomasec: " << e.what() << '\n';
        return 1;
    }
}
