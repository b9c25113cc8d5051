// SPDX-License-Identifier: Apache-2.0
//
// risesr - secrecy-rate optimization for RIS-assisted MISO wiretap links
// Copyright (C) 2026 The risesr authors
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

// Experiment runner: figure sweeps, convergence traces and single solves.
//
//   risesr <command> [--config file] [--seed s] [--realizations k] [--threads t]
//                    [--esr-base two|natural] [--set key=value ...] [--out file.csv]
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "risesr/errors.hpp"
#include "risesr/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> realizations;
    std::optional<int> threads;
    std::optional<std::string> esr_base;
    std::vector<std::string> settings;
    std::string out;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw risesr::ConfigError(0, "cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw risesr::ConfigError(0, "cannot write '" + path + "'");
    out << text;
}

risesr::RunConfig build_config(risesr::Command cmd, const Options& opt)
{
    risesr::RunConfig cfg = risesr::default_config(cmd);
    if (!opt.config_path.empty()) {
        try {
            risesr::apply_config_text(cfg, read_file(opt.config_path));
        } catch (const risesr::ConfigError& e) {
            throw risesr::ConfigError(0, opt.config_path + ": " + e.what());
        }
    }
    for (const auto& kv : opt.settings) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw risesr::ConfigError(0, "--set expects key=value, got '" + kv + "'");
        risesr::apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (opt.seed) risesr::apply_setting(cfg, "seed", std::to_string(*opt.seed));
    if (opt.realizations) risesr::apply_setting(cfg, "realizations", std::to_string(*opt.realizations));
    if (opt.threads) risesr::apply_setting(cfg, "threads", std::to_string(*opt.threads));
    if (opt.esr_base) risesr::apply_setting(cfg, "esr_base", *opt.esr_base);
    return cfg;
}

int run(risesr::Command cmd, const Options& opt)
{
    const risesr::RunConfig cfg = build_config(cmd, opt);

    std::string body;
    switch (cmd) {
    case risesr::Command::kConvergence: {
        const auto run = risesr::run_convergence(cfg);
        body = risesr::convergence_csv(run.rows);
        std::cerr << "median iterations: " << run.median_iterations << '\n';
        break;
    }
    case risesr::Command::kDistanceSweep: body = risesr::sweep_csv(risesr::run_distance_sweep(cfg)); break;
    case risesr::Command::kQosSweep: body = risesr::sweep_csv(risesr::run_qos_sweep(cfg)); break;
    case risesr::Command::kNrisSweep: body = risesr::sweep_csv(risesr::run_nris_sweep(cfg)); break;
    case risesr::Command::kSolveOne: body = risesr::solve_one_report(risesr::run_solve_one(cfg)); break;
    }

    const std::string manifest = risesr::run_manifest(cmd, cfg, opt.out);
    if (opt.out.empty()) {
        std::cout << body;
        std::cerr << manifest;
    } else {
        write_file(opt.out, body);
        write_file(opt.out + ".manifest.json", manifest);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Secrecy-rate optimization and effective-rate sweeps for RIS-assisted MISO wiretap links"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::pair<const char*, const char*>> commands = {
        {"convergence", "per-iteration secrecy rate traces"},
        {"distance-sweep", "ESR vs Alice-Bob horizontal distance"},
        {"qos-sweep", "ESR vs QoS exponent for several antenna counts"},
        {"nris-sweep", "ESR vs number of RIS elements"},
        {"solve-one", "solve a single channel realization and print w, theta, f, R_s"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", opt.config_path, "key = value config file or run manifest");
        sub->add_option("--seed", opt.seed, "master seed");
        sub->add_option("--realizations", opt.realizations, "channel realizations per point");
        sub->add_option("--threads", opt.threads, "worker threads");
        sub->add_option("--esr-base", opt.esr_base, "exponential base of the ESR estimator")
            ->check(CLI::IsMember({"two", "natural"}));
        sub->add_option("--set", opt.settings, "override a config key (key=value), repeatable");
        sub->add_option("--out", opt.out, "output file (a .manifest.json is written next to it)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        const risesr::Command cmd = risesr::parse_command(app.get_subcommands().front()->get_name());
        return run(cmd, opt);
    } catch (const risesr::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const risesr::DomainError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const risesr::FailureBudgetExceeded& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const risesr::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}
