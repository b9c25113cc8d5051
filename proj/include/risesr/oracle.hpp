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

#include <cstddef>

#include "risesr/solver.hpp"

// Brute-force reference computations for tests and acceptance runs. Nothing
// here is used by the solver, and none of it shares the solver's numerics:
// the phase oracle evaluates g from its defining ratio, the beamformer oracle
// goes through Cholesky whitening and a Hermitian eigensolver.
namespace risesr::oracle {

struct GridPhaseResult {
    double phi = 0.0;
    double g = 0.0;
};

// Best of g over a uniform grid on [0, 2 pi). With refine, the best cell is
// polished by bisection on the quotient-rule derivative.
GridPhaseResult grid_phase_oracle(const PhaseCoefficients& c, std::size_t grid_points,
                                  bool refine = false);

// Dense (P Z_e + I)^{-1} (P Z_b + I) through an LU solve.
CMatrix dense_ratio_matrix(const EffectivePair& pair, double power);

struct RayleighQuotientResult {
    double f = 1.0;
    CVector w;  // ||w||^2 = P
};

// Largest generalized eigenvalue of (P Z_b + I, P Z_e + I). N <= 8.
RayleighQuotientResult rayleigh_quotient_oracle(const EffectivePair& pair, double power);

// Max over a product phase grid (N_ris <= 3, grid <= 720) of the optimal-w
// objective.
double joint_grid_oracle(const NormalizedChannels& nc, double power, int phase_grid);

} // namespace risesr::oracle
