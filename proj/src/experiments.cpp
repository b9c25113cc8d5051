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

#include "risesr/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "risesr/parallel.hpp"

namespace risesr {

namespace {

RateSamples rates_for(const RunConfig& cfg, int n, int n_ris, double d_ab_h)
{
    return simulate_rates(cfg.monte_carlo(n, n_ris, d_ab_h));
}

SweepRow make_row(double sweep_var, std::string variant, double a, const RunConfig& cfg,
                  const std::vector<double>& rates)
{
    const QosParams qos = a > 0.0 ? QosParams::with_exponent(a, cfg.esr_base) : QosParams::asr();
    const EsrEstimate est = summarize_rates(rates, qos);
    return {sweep_var, std::move(variant), a, est.esr, est.asr, est.std_error_asr,
            est.n_realizations, cfg.seed};
}

} // namespace

ConvergenceRun run_convergence(const RunConfig& cfg)
{
    const auto k = static_cast<std::size_t>(cfg.realizations);
    std::vector<SolveResult> results(k);
    parallel_for(k, cfg.threads, [&](std::size_t i) {
        Rng rng = make_stream(cfg.seed, i, 0, StreamPurpose::kChannels);
        const ChannelSet ch = sample_channels(cfg.geom, cfg.n, cfg.n_ris, cfg.noise_watts(),
                                              cfg.noise_watts(), rng);
        SolverConfig sc = cfg.solver;
        sc.seed = derive_seed(cfg.seed, i, 0, StreamPurpose::kSolverStarts);
        results[i] = bcam_solve(normalize(ch), cfg.power_watts(), sc);
    });

    ConvergenceRun run;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& trace = results[i].objective_trace;
        for (std::size_t t = 0; t < trace.size(); ++t)
            run.rows.push_back({static_cast<int>(i), static_cast<int>(t + 1), trace[t], std::log2(trace[t])});
        run.iterations.push_back(results[i].iterations);
        run.converged.push_back(results[i].converged);
    }
    std::vector<int> sorted = run.iterations;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    run.median_iterations = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    return run;
}

std::vector<SweepRow> run_distance_sweep(const RunConfig& cfg)
{
    std::vector<SweepRow> rows;
    for (double d : cfg.distances) {
        const RateSamples with = rates_for(cfg, cfg.n, cfg.n_ris, d);
        const RateSamples without = rates_for(cfg, cfg.n, 0, d);
        for (const auto& [variant, samples] : {std::pair{"ris", &with}, std::pair{"noris", &without}}) {
            rows.push_back(make_row(d, variant, 0.0, cfg, samples->rates));
            for (double a : cfg.qos_exponents) rows.push_back(make_row(d, variant, a, cfg, samples->rates));
        }
    }
    return rows;
}

std::vector<SweepRow> run_qos_sweep(const RunConfig& cfg)
{
    std::vector<SweepRow> rows;
    for (int n : cfg.antennas) {
        const RateSamples with = rates_for(cfg, n, cfg.n_ris, cfg.geom.d_ab_h);
        const RateSamples without = rates_for(cfg, n, 0, cfg.geom.d_ab_h);
        const std::string suffix = "_n" + std::to_string(n);
        for (double a : cfg.qos_exponents) rows.push_back(make_row(a, "ris" + suffix, a, cfg, with.rates));
        for (double a : cfg.qos_exponents) rows.push_back(make_row(a, "noris" + suffix, a, cfg, without.rates));
    }
    return rows;
}

std::vector<SweepRow> run_nris_sweep(const RunConfig& cfg)
{
    std::vector<SweepRow> rows;
    const RateSamples without = rates_for(cfg, cfg.n, 0, cfg.geom.d_ab_h);
    for (int n_ris : cfg.nris_values) {
        const RateSamples with = rates_for(cfg, cfg.n, n_ris, cfg.geom.d_ab_h);
        for (double a : cfg.qos_exponents) rows.push_back(make_row(n_ris, "ris", a, cfg, with.rates));
        for (double a : cfg.qos_exponents) rows.push_back(make_row(n_ris, "noris", a, cfg, without.rates));
    }
    return rows;
}

SingleSolve run_solve_one(const RunConfig& cfg)
{
    SingleSolve s;
    Rng rng = make_stream(cfg.seed, 0, 0, StreamPurpose::kChannels);
    s.channels = sample_channels(cfg.geom, cfg.n, cfg.n_ris, cfg.noise_watts(), cfg.noise_watts(), rng);
    SolverConfig sc = cfg.solver;
    sc.seed = derive_seed(cfg.seed, 0, 0, StreamPurpose::kSolverStarts);
    const NormalizedChannels nc = normalize(s.channels);
    s.result = bcam_solve(nc, cfg.power_watts(), sc);
    const EffectivePair pair = effective_channels(nc, s.result.theta);
    s.objective = objective_f(pair, s.result.w);
    s.secrecy_rate = secrecy_rate(pair, s.result.w);
    return s;
}

std::string sweep_csv(const std::vector<SweepRow>& rows)
{
    std::ostringstream out;
    out << "sweep_var,variant,qos_exponent,esr,asr,std_error,n_realizations,seed\n";
    for (const auto& r : rows) {
        out << format_number(r.sweep_var) << ',' << r.variant << ',' << format_number(r.qos_exponent) << ','
            << format_number(r.esr) << ',' << format_number(r.asr) << ',' << format_number(r.std_error) << ','
            << r.n_realizations << ',' << r.seed << '\n';
    }
    return out.str();
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows)
{
    std::ostringstream out;
    out << "realization,iteration,objective,secrecy_rate\n";
    for (const auto& r : rows) {
        out << r.realization << ',' << r.iteration << ',' << format_number(r.objective) << ','
            << format_number(r.secrecy_rate) << '\n';
    }
    return out.str();
}

std::string solve_one_report(const SingleSolve& s)
{
    auto cplx_str = [](cplx z) { return format_number(z.real()) + (z.imag() < 0 ? "" : "+") + format_number(z.imag()) + "j"; };
    std::ostringstream out;
    out << "n = " << s.channels.n() << ", n_ris = " << s.channels.n_ris() << '\n';
    out << "objective f = " << format_number(s.objective) << '\n';
    out << "secrecy rate = " << format_number(s.secrecy_rate) << " bps/Hz\n";
    out << "iterations = " << s.result.iterations << (s.result.converged ? " (converged)" : " (iteration cap)") << '\n';
    out << "w:\n";
    for (Eigen::Index k = 0; k < s.result.w.size(); ++k) out << "  " << cplx_str(s.result.w.w()[k]) << '\n';
    out << "theta (phase, rad):\n";
    for (Eigen::Index l = 0; l < s.result.theta.size(); ++l) {
        double phi = std::arg(s.result.theta[l]);
        if (phi < 0.0) phi += 2.0 * std::numbers::pi;
        out << "  " << format_number(phi) << '\n';
    }
    return out.str();
}

std::string run_manifest(Command cmd, const RunConfig& cfg, const std::string& output_path)
{
    nlohmann::ordered_json j;
    j["command"] = std::string(command_name(cmd));
    j["version"] = RISESR_VERSION;
    j["output"] = output_path;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    for (const auto& [key, value] : config_entries(cfg)) config[key] = value;
    j["config"] = std::move(config);
    return j.dump(2) + "\n";
}

} // namespace risesr
