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
#include <string_view>
#include <utility>
#include <vector>

#include "risesr/esr.hpp"

namespace risesr {

enum class Command { kConvergence, kDistanceSweep, kQosSweep, kNrisSweep, kSolveOne };

Command parse_command(std::string_view name);
std::string_view command_name(Command cmd);

// Everything a run depends on. Defaults are the reference deployment; the
// sweep lists and realization count depend on the command.
struct RunConfig {
    SystemGeometry geom;
    double power_dbw = 15.0;
    double noise_dbw = -75.0;
    int n = 4;
    int n_ris = 32;
    int realizations = 1000;
    std::uint64_t seed = 1;
    int threads = 1;
    SolverConfig solver;
    ExpBase esr_base = ExpBase::kTwo;

    std::vector<double> distances;
    std::vector<double> qos_exponents;
    std::vector<int> antennas;
    std::vector<int> nris_values;

    double power_watts() const;
    double noise_watts() const;
    MonteCarloSetup monte_carlo(int n_antennas, int n_elements, double d_ab_h) const;
};

RunConfig default_config(Command cmd);

// Sets one key; throws ConfigError(line, ...) on unknown keys or bad values.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value, int line = 0);

// Flat "key = value" text, '#' starts a comment. A JSON run manifest is also
// accepted, in which case its "config" object is applied.
void apply_config_text(RunConfig& cfg, std::string_view text);

// Every key with its effective value, in a fixed order. Feeding these back
// through apply_setting reproduces cfg exactly.
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg);

// Shortest round-trip decimal form of a double.
std::string format_number(double v);

} // namespace risesr
