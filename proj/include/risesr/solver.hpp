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
#include <optional>
#include <vector>

#include "risesr/core.hpp"

namespace risesr {

enum class InitMode { kAllOnes, kSeededRandom };

struct SolverConfig {
    int max_iters = 100;
    double rel_tol = 1e-4;  // on the relative change of f between outer iterations
    InitMode init_mode = InitMode::kAllOnes;
    int multi_start = 1;    // starts beyond the first always use a seeded random theta
    std::uint64_t seed = 0;

    void validate() const;
};

// Coefficients of the single-element subproblem
//     maximize (Re{conj(alpha_b) theta_l} + beta_b) / (Re{conj(alpha_e) theta_l} + beta_e).
struct PhaseCoefficients {
    cplx alpha_b;
    cplx alpha_e;
    double beta_b = 1.0;
    double beta_e = 1.0;
};

// The w-dependent vectors of the quadratic forms
//     1 + |z_b w|^2 = 1 + theta^H a_b a_b^H theta + 2 Re{b_b^H theta} + c_b
// and the Eve analogue.
struct QuadraticForms {
    CVector a_b;
    CVector b_b;
    CVector a_e;
    CVector b_e;
    double c_b = 0.0;
    double c_e = 0.0;
};

QuadraticForms quadratic_forms(const NormalizedChannels& nc, const Beamformer& w);

// s_a* = sum_m conj(a_m) theta_m and s_b* = sum_m conj(b_m) theta_m over all m.
struct RunningSums {
    cplx s_ab;
    cplx s_bb;
    cplx s_ae;
    cplx s_be;
};

RunningSums running_sums(const QuadraticForms& forms, const PhaseVector& theta);

// O(1): excludes the l-th term from the running sums before forming alpha, beta.
PhaseCoefficients phase_coefficients(Eigen::Index l, const PhaseVector& theta,
                                     const QuadraticForms& forms, const RunningSums& sums);

// g(phi) = (r_b cos(phi - phi_b) + beta_b) / (r_e cos(phi - phi_e) + beta_e).
double phase_objective(const PhaseCoefficients& c, double phi);

// Sinusoidal-combination form of g'(phi) (numerator K - r_l sin(phi + varphi)).
double phase_objective_derivative(const PhaseCoefficients& c, double phi);

struct PhaseUpdate {
    cplx theta{1.0, 0.0};
    double phi = 0.0;
    // |r_b r_e sin(phi_b - phi_e)| > r_l: no stationary point; theta = 1 was returned.
    bool no_stationary_branch = false;
};

PhaseUpdate optimal_phase(const PhaseCoefficients& c);

struct SweepStats {
    int no_stationary_branch = 0;
};

using ElementCallback = std::function<void(Eigen::Index, const PhaseVector&)>;

// One ascending pass over all elements, each set to its closed-form optimum
// given w and the other elements. on_update fires after every element.
PhaseVector sweep_phases(const Beamformer& w, const PhaseVector& theta,
                         const NormalizedChannels& nc, SweepStats* stats = nullptr,
                         const ElementCallback& on_update = {});

// (P Z_e + I)^{-1} (P Z_b + I) assembled from the Woodbury form of the
// inverse as identity plus two rank-one terms, O(N^2), no inversion.
CMatrix build_ratio_matrix(const EffectivePair& pair, double power);

struct PowerIterationOptions {
    int max_iterations = 1000;
    double tolerance = 1e-10;  // ||M x - mu x|| <= tol * max(1, |mu|), ||x|| = 1
};

struct EigenPair {
    CVector vector;  // unit norm
    cplx value;
    int iterations = 0;
    double residual = 0.0;
};

// Power iteration on (M - shift I). The shift must lie below the spectrum
// for the dominant eigenvalue of M to stay dominant. Throws NumericalError
// when the iteration cap is reached.
EigenPair dominant_eigenpair(const CMatrix& m, const CVector& start, double shift,
                             const PowerIterationOptions& opts = {});

struct BeamformerSolution {
    Beamformer w;
    double objective = 1.0;
    int iterations = 0;
    double residual = 0.0;
};

// w = sqrt(P) u_max of the ratio matrix. A warm start is projected onto the
// span of conj(z_b), conj(z_e), which contains u_max and never lowers f.
BeamformerSolution solve_beamformer(const EffectivePair& pair, double power,
                                    const CVector* warm_start = nullptr,
                                    const PowerIterationOptions& opts = {});

Beamformer optimal_beamformer(const EffectivePair& pair, double power);

enum class BlockKind { kInitial, kBeamformer, kPhase };

struct BlockEvent {
    int start = 0;
    int iteration = 0;  // 1-based outer iteration; 0 for kInitial
    BlockKind kind = BlockKind::kInitial;
    Eigen::Index element = -1;
    const Beamformer& w;
    const PhaseVector& theta;
};

using BlockObserver = std::function<void(const BlockEvent&)>;

struct SolveDiagnostics {
    int no_stationary_branch = 0;
    int max_power_iterations = 0;
    int starts = 0;
};

struct SolveResult {
    Beamformer w;
    PhaseVector theta;
    std::vector<double> objective_trace;  // f after each outer iteration
    double initial_objective = 1.0;       // f(w0, theta0) for the chosen start
    int iterations = 0;
    bool converged = false;
    int best_start = 0;
    SolveDiagnostics diagnostics;

    double objective() const { return objective_trace.empty() ? initial_objective : objective_trace.back(); }
};

// Block coordinate ascent: alternate the closed-form w update and one phase
// sweep until the relative change of f drops below rel_tol.
SolveResult bcam_solve(const NormalizedChannels& nc, double power, const SolverConfig& cfg,
                       const BlockObserver& observer = {});

// Single start from a caller-provided theta0 (multi_start is ignored).
SolveResult bcam_solve_from(const NormalizedChannels& nc, double power, const SolverConfig& cfg,
                            const PhaseVector& theta0, const BlockObserver& observer = {});

} // namespace risesr
