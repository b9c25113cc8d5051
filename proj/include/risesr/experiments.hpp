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
#include <string>
#include <vector>

#include "risesr/config.hpp"

namespace risesr {

struct SweepRow {
    double sweep_var = 0.0;
    std::string variant;
    double qos_exponent = 0.0;  // 0 marks the a -> 0 (average secrecy rate) row
    double esr = 0.0;
    double asr = 0.0;
    double std_error = 0.0;
    int n_realizations = 0;
    std::uint64_t seed = 0;
};

struct ConvergenceRow {
    int realization = 0;
    int iteration = 0;
    double objective = 1.0;
    double secrecy_rate = 0.0;
};

struct ConvergenceRun {
    std::vector<ConvergenceRow> rows;
    std::vector<int> iterations;  // per realization
    std::vector<bool> converged;
    double median_iterations = 0.0;
};

// Per-iteration secrecy rate for cfg.realizations channel draws at cfg.geom.
ConvergenceRun run_convergence(const RunConfig& cfg);

// ESR vs d_ab_h, with (variant "ris") and without ("noris") the surface.
std::vector<SweepRow> run_distance_sweep(const RunConfig& cfg);

// ESR vs the QoS exponent for each antenna count ("ris_n4", "noris_n4", ...).
std::vector<SweepRow> run_qos_sweep(const RunConfig& cfg);

// ESR vs N_ris, plus the surface-free reference repeated at each N_ris.
std::vector<SweepRow> run_nris_sweep(const RunConfig& cfg);

struct SingleSolve {
    ChannelSet channels;
    SolveResult result;
    double objective = 1.0;
    double secrecy_rate = 0.0;
};

SingleSolve run_solve_one(const RunConfig& cfg);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);
std::string solve_one_report(const SingleSolve& s);

// JSON manifest: command, version, and every config entry.
std::string run_manifest(Command cmd, const RunConfig& cfg, const std::string& output_path);

} // namespace risesr
