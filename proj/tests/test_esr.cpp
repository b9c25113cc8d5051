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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "risesr/errors.hpp"
#include "risesr/esr.hpp"
#include "risesr/rng.hpp"

using namespace risesr;
using Catch::Approx;

TEST_CASE("effective rate of frozen samples", "[esr]")
{
    const std::vector<double> zeros{0.0, 0.0, 0.0};
    CHECK(esr_from_rates(zeros, 5.0) == 0.0);

    const std::vector<double> one{2.7};
    CHECK(esr_from_rates(one, 13.0) == Approx(2.7).epsilon(1e-15));

    const std::vector<double> pair{0.0, 2.0};
    CHECK(esr_from_rates(pair, 1.0) == Approx(0.6780719051126377).epsilon(1e-14));

    const std::vector<double> odd{1.0, 3.0};
    CHECK(esr_from_rates(odd, 2.0) == Approx(1.4562685793748302).epsilon(1e-14));
}

TEST_CASE("effective rate rejects bad input", "[esr]")
{
    const std::vector<double> none;
    const std::vector<double> some{1.0};
    CHECK_THROWS_AS(esr_from_rates(none, 1.0), DomainError);
    CHECK_THROWS_AS(esr_from_rates(some, 0.0), DomainError);
    CHECK_THROWS_AS(esr_from_rates(some, -1.0), DomainError);
    CHECK_THROWS_AS(esr_from_rates(some, std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK_THROWS_AS(QosParams::with_exponent(0.0).validate(), DomainError);
    CHECK_NOTHROW(QosParams::asr().validate());
}

TEST_CASE("effective rate is decreasing in a and bounded by the mean", "[esr][property]")
{
    Rng rng(31);
    std::exponential_distribution<double> ex(0.4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> rates(200);
        for (double& r : rates) r = ex(rng);
        const double mean = compensated_mean(rates);
        const double minimum = *std::min_element(rates.begin(), rates.end());
        double prev = mean;
        for (double a : {1e-6, 1e-3, 0.1, 1.0, 5.0, 20.0, 100.0, 1e4}) {
            const double e = esr_from_rates(rates, a);
            CHECK(e <= prev + 1e-12);
            CHECK(e >= minimum - 1e-12);
            prev = e;
        }
        CHECK(std::abs(esr_from_rates(rates, 1e-6) - mean) <= 1e-3);
    }
}

TEST_CASE("effective rate survives exponents that underflow naively", "[esr]")
{
    const std::vector<double> rates{10.0, 12.0, 20.0};
    const double e = esr_from_rates(rates, 500.0);
    CHECK(std::isfinite(e));
    // Dominated by the smallest rate: 10 + log2(3)/500.
    CHECK(e == Approx(10.0 + std::log2(3.0) / 500.0).epsilon(1e-12));
}

TEST_CASE("natural base equals base two with a rescaled exponent", "[esr]")
{
    const std::vector<double> rates{0.3, 1.7, 2.2, 5.0};
    for (double a : {0.5, 2.0, 10.0}) {
        CHECK(esr_from_rates(rates, a, ExpBase::kNatural) ==
              Approx(esr_from_rates(rates, a / std::log(2.0))).epsilon(1e-13));
        CHECK(esr_from_rates(rates, a, ExpBase::kNatural) < esr_from_rates(rates, a));
    }
}

TEST_CASE("estimator converges at the Monte-Carlo rate", "[esr][property]")
{
    // Uniform(0, 4) rates, a = 1: E[2^-R] = (1 - 2^-4) / (4 ln 2).
    const double moment = (1.0 - 1.0 / 16.0) / (4.0 * std::log(2.0));
    const double truth = -std::log2(moment);
    Rng rng(32);
    std::uniform_real_distribution<double> u(0.0, 4.0);
    for (int k : {1000, 10000, 100000}) {
        std::vector<double> rates(static_cast<std::size_t>(k));
        for (double& r : rates) r = u(rng);
        const double second = (1.0 - std::pow(2.0, -8.0)) / (8.0 * std::log(2.0));
        const double sd = std::sqrt(second - moment * moment) / (moment * std::log(2.0));
        CHECK(std::abs(esr_from_rates(rates, 1.0) - truth) <= 5.0 * sd / std::sqrt(static_cast<double>(k)));
    }
}

TEST_CASE("summaries report mean and standard error", "[esr]")
{
    const std::vector<double> rates{1.0, 2.0, 3.0, 4.0};
    const EsrEstimate asr = summarize_rates(rates, QosParams::asr(), true);
    CHECK(asr.esr == 2.5);
    CHECK(asr.asr == 2.5);
    CHECK(asr.n_realizations == 4);
    CHECK(asr.std_error_asr == Approx(std::sqrt(5.0 / 3.0 / 4.0)).epsilon(1e-14));
    CHECK(asr.per_realization_rates == rates);
    const EsrEstimate esr = summarize_rates(rates, QosParams::with_exponent(1.0));
    CHECK(esr.esr < esr.asr);
    CHECK(esr.per_realization_rates.empty());
}

namespace {

MonteCarloSetup small_setup()
{
    MonteCarloSetup s;
    s.n = 3;
    s.n_ris = 8;
    s.n_realizations = 60;
    s.seed = 7;
    return s;
}

} // namespace

TEST_CASE("simulated rates are deterministic and thread independent", "[esr][simulate]")
{
    MonteCarloSetup s = small_setup();
    const RateSamples a = simulate_rates(s);
    const RateSamples b = simulate_rates(s);
    s.threads = 4;
    const RateSamples c = simulate_rates(s);
    CHECK(a.rates == b.rates);
    CHECK(a.rates == c.rates);
    CHECK(a.resampled == 0);
    for (double r : a.rates) CHECK(r >= 0.0);

    s.seed = 8;
    CHECK(simulate_rates(s).rates != a.rates);
}

TEST_CASE("negative secrecy rates are clamped to zero", "[esr][simulate]")
{
    const MonteCarloSetup s = small_setup();
    const RateSamples r = simulate_rates(s, [](const NormalizedChannels&, double, const SolverConfig&) {
        return -0.5;
    });
    for (double v : r.rates) CHECK(v == 0.0);
}

TEST_CASE("failed solves are redrawn within the budget", "[esr][simulate]")
{
    MonteCarloSetup s = small_setup();
    s.n_realizations = 200;  // budget of 2
    const std::uint64_t bad5 = derive_seed(s.seed, 5, 0, StreamPurpose::kSolverStarts);
    const std::uint64_t bad9 = derive_seed(s.seed, 9, 0, StreamPurpose::kSolverStarts);
    const std::uint64_t bad11 = derive_seed(s.seed, 11, 0, StreamPurpose::kSolverStarts);

    auto flaky = [&](std::vector<std::uint64_t> bad) {
        return [bad](const NormalizedChannels& nc, double p, const SolverConfig& cfg) {
            if (std::find(bad.begin(), bad.end(), cfg.seed) != bad.end())
                throw NumericalError("injected", 1000, 1.0);
            return bcam_rate(nc, p, cfg);
        };
    };

    const RateSamples clean = simulate_rates(s);
    const RateSamples two = simulate_rates(s, flaky({bad5, bad9}));
    CHECK(two.resampled == 2);
    CHECK(two.rates[5] != clean.rates[5]);
    CHECK(two.rates[6] == clean.rates[6]);
    s.threads = 3;
    CHECK(simulate_rates(s, flaky({bad5, bad9})).rates == two.rates);

    CHECK_THROWS_AS(simulate_rates(s, flaky({bad5, bad9, bad11})), FailureBudgetExceeded);
    CHECK_THROWS_AS(simulate_rates(s, [](const NormalizedChannels&, double, const SolverConfig&) -> double {
                        throw NumericalError("always", 0, 0.0);
                    }),
                    FailureBudgetExceeded);
}

TEST_CASE("the surface does not hurt the average secrecy rate", "[esr][simulate]")
{
    MonteCarloSetup with;
    with.n_realizations = 1000;
    with.geom.d_ab_h = 50.0;
    MonteCarloSetup without = with;
    without.n_ris = 0;
    const EsrEstimate r = estimate_esr(with, QosParams::asr());
    const EsrEstimate n = estimate_esr(without, QosParams::asr());
    CHECK(r.asr >= n.asr);
    CHECK(r.n_realizations == 1000);
}
