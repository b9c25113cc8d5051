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

#include <span>

#include "risesr/channel.hpp"

namespace risesr {

inline constexpr double kUnitModulusTol = 1e-12;
inline constexpr double kPowerBudgetSlack = 1e-10;

// RIS reflection coefficients theta_l = exp(j phi_l), each of unit modulus.
class PhaseVector {
public:
    PhaseVector() = default;

    // Throws DomainError if any entry violates | |theta_l| - 1 | <= 1e-12.
    explicit PhaseVector(CVector theta);

    static PhaseVector ones(Eigen::Index n_ris);
    static PhaseVector from_angles(std::span<const double> phi);
    static PhaseVector random(Eigen::Index n_ris, Rng& rng);

    Eigen::Index size() const { return theta_.size(); }
    const CVector& values() const { return theta_; }
    cplx operator[](Eigen::Index l) const { return theta_[l]; }

    void set(Eigen::Index l, cplx value);
    double max_modulus_error() const;

private:
    CVector theta_;
};

// Transmit beamformer w with its power budget; ||w||^2 <= P (1 + 1e-10).
class Beamformer {
public:
    Beamformer() = default;
    Beamformer(CVector w, double p_budget);

    static Beamformer zero(Eigen::Index n, double p_budget);

    const CVector& w() const { return w_; }
    double p_budget() const { return p_budget_; }
    double power() const { return w_.squaredNorm(); }
    Eigen::Index size() const { return w_.size(); }

private:
    CVector w_;
    double p_budget_ = 0.0;
};

// Composite direct-plus-reflected channels z_b(theta), z_e(theta).
struct EffectivePair {
    CVector z_b;
    CVector z_e;
};

// z_b = hat_h_ib diag(theta) H_ai + hat_h_ab, likewise for Eve.
EffectivePair effective_channels(const NormalizedChannels& nc, const PhaseVector& theta);

// (1 + |z_b w|^2) / (1 + |z_e w|^2); always > 0.
double objective_f(const EffectivePair& pair, const Beamformer& w);

// log2 of objective_f, evaluated as a difference of log1p terms. May be
// negative; clamping is left to the rate estimators.
double secrecy_rate(const EffectivePair& pair, const Beamformer& w);

} // namespace risesr
