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

#include "risesr/esr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "risesr/errors.hpp"
#include "risesr/parallel.hpp"

namespace risesr {

namespace {

// Neumaier summation; the running value is sum + compensation.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v)
    {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

} // namespace

void QosParams::validate() const
{
    if (!asr_mode && !(qos_exponent_a > 0.0 && std::isfinite(qos_exponent_a)))
        throw DomainError("QoS exponent must be positive unless in ASR mode");
}

double compensated_mean(std::span<const double> values)
{
    if (values.empty()) throw DomainError("mean of an empty sample");
    CompensatedSum s;
    for (double v : values) s.add(v);
    return s.value() / static_cast<double>(values.size());
}

double esr_from_rates(std::span<const double> rates, double a, ExpBase base)
{
    if (rates.empty()) throw DomainError("esr_from_rates: empty rate list");
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("esr_from_rates: exponent must be > 0");

    // base^(-a R) = exp(-k R) with k = a ln(base); shift by the smallest rate.
    const double k = base == ExpBase::kTwo ? a * std::numbers::ln2 : a;
    const double r_min = *std::min_element(rates.begin(), rates.end());
    CompensatedSum s;
    for (double r : rates) s.add(std::exp(-k * (r - r_min)));
    const double log_mean = std::log(s.value() / static_cast<double>(rates.size()));
    return r_min - log_mean / k;
}

EsrEstimate summarize_rates(std::span<const double> rates, const QosParams& qos, bool keep_rates)
{
    qos.validate();
    EsrEstimate est;
    est.n_realizations = static_cast<int>(rates.size());
    est.asr = compensated_mean(rates);
    est.esr = qos.asr_mode ? est.asr : esr_from_rates(rates, qos.qos_exponent_a, qos.base);

    if (rates.size() > 1) {
        CompensatedSum ss;
        for (double r : rates) ss.add((r - est.asr) * (r - est.asr));
        const double var = ss.value() / static_cast<double>(rates.size() - 1);
        est.std_error_asr = std::sqrt(var / static_cast<double>(rates.size()));
    }
    if (keep_rates) est.per_realization_rates.assign(rates.begin(), rates.end());
    return est;
}

double bcam_rate(const NormalizedChannels& nc, double power, const SolverConfig& cfg)
{
    const SolveResult res = bcam_solve(nc, power, cfg);
    return secrecy_rate(effective_channels(nc, res.theta), res.w);
}

RateSamples simulate_rates(const MonteCarloSetup& setup, const RealizationSolver& solve)
{
    if (setup.n_realizations < 1) throw DomainError("need at least one realization");
    setup.geom.validate();
    setup.solver.validate();

    const auto k = static_cast<std::size_t>(setup.n_realizations);
    const int budget = static_cast<int>(std::ceil(0.01 * static_cast<double>(k)));

    std::vector<double> rates(k, 0.0);
    std::vector<int> retries(k, 0);
    parallel_for(k, setup.threads, [&](std::size_t i) {
        for (int attempt = 0;; ++attempt) {
            Rng rng = make_stream(setup.seed, i, static_cast<std::uint64_t>(attempt),
                                  StreamPurpose::kChannels);
            const ChannelSet ch =
                sample_channels(setup.geom, setup.n, setup.n_ris, setup.sigma2_b, setup.sigma2_e, rng);
            SolverConfig cfg = setup.solver;
            cfg.seed = derive_seed(setup.seed, i, static_cast<std::uint64_t>(attempt),
                                   StreamPurpose::kSolverStarts);
            try {
                rates[i] = std::max(solve(normalize(ch), setup.power, cfg), 0.0);
                return;
            } catch (const NumericalError&) {
                retries[i] = attempt + 1;
                if (retries[i] > budget)
                    throw FailureBudgetExceeded("realization " + std::to_string(i) +
                                                " exceeded the solver failure budget");
            }
        }
    });

    RateSamples out;
    out.rates = std::move(rates);
    for (int r : retries) out.resampled += r;
    if (out.resampled > budget)
        throw FailureBudgetExceeded(std::to_string(out.resampled) + " solver failures exceed budget of " +
                                    std::to_string(budget));
    return out;
}

EsrEstimate estimate_esr(const MonteCarloSetup& setup, const QosParams& qos)
{
    qos.validate();
    const RateSamples samples = simulate_rates(setup, bcam_rate);
    EsrEstimate est = summarize_rates(samples.rates, qos, true);
    est.resampled = samples.resampled;
    return est;
}

} // namespace risesr
