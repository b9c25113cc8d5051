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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "risesr/solver.hpp"

namespace risesr {

// Base of the exponential inside the effective-rate log-moment. With kTwo the
// a -> 0 limit is the average rate in bps/Hz; kNatural is the same estimator
// with the exponent rescaled by ln 2.
enum class ExpBase { kTwo, kNatural };

struct QosParams {
    double qos_exponent_a = 0.0;  // product of delay exponent, frame length and bandwidth
    bool asr_mode = true;         // a -> 0
    ExpBase base = ExpBase::kTwo;

    static QosParams asr() { return {}; }
    static QosParams with_exponent(double a, ExpBase base = ExpBase::kTwo) { return {a, false, base}; }

    void validate() const;
};

struct EsrEstimate {
    double esr = 0.0;
    double asr = 0.0;
    int n_realizations = 0;
    double std_error_asr = 0.0;
    int resampled = 0;  // realizations redrawn after a solver failure
    std::vector<double> per_realization_rates;
};

// Neumaier-compensated mean.
double compensated_mean(std::span<const double> values);

// -(1/a) log_base( mean_i base^(-a R_i) ), evaluated with a max shift so that
// large a R does not underflow. Throws DomainError on empty input or a <= 0.
double esr_from_rates(std::span<const double> rates, double a, ExpBase base = ExpBase::kTwo);

EsrEstimate summarize_rates(std::span<const double> rates, const QosParams& qos,
                            bool keep_rates = false);

struct MonteCarloSetup {
    SystemGeometry geom;
    int n = 4;
    int n_ris = 32;
    double sigma2_b = 3.1622776601683795e-08;  // -75 dBW
    double sigma2_e = 3.1622776601683795e-08;
    double power = 31.622776601683793;         // 15 dBW
    SolverConfig solver;
    int n_realizations = 1000;
    std::uint64_t seed = 1;
    int threads = 1;
};

// Optimized secrecy rate for one realization; may throw NumericalError.
using RealizationSolver = std::function<double(const NormalizedChannels&, double power,
                                               const SolverConfig&)>;

double bcam_rate(const NormalizedChannels& nc, double power, const SolverConfig& cfg);

struct RateSamples {
    std::vector<double> rates;  // max(R_s, 0) per realization, in index order
    int resampled = 0;          // realizations that needed a fresh channel draw
};

// Realization i draws its channels from stream (seed, i, attempt) and seeds
// its solver from (seed, i, attempt). A failed solve is retried with the
// next attempt; more than ceil(1% of K) retries throws FailureBudgetExceeded.
RateSamples simulate_rates(const MonteCarloSetup& setup, const RealizationSolver& solve = bcam_rate);

EsrEstimate estimate_esr(const MonteCarloSetup& setup, const QosParams& qos);

} // namespace risesr
