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

#include "risesr/core.hpp"

#include <cmath>
#include <numbers>

#include "risesr/errors.hpp"

namespace risesr {

PhaseVector::PhaseVector(CVector theta) : theta_(std::move(theta))
{
    if (max_modulus_error() > kUnitModulusTol)
        throw DomainError("phase vector entries must have unit modulus");
}

PhaseVector PhaseVector::ones(Eigen::Index n_ris)
{
    return PhaseVector(CVector::Ones(n_ris));
}

PhaseVector PhaseVector::from_angles(std::span<const double> phi)
{
    CVector t(static_cast<Eigen::Index>(phi.size()));
    for (std::size_t l = 0; l < phi.size(); ++l) t[Eigen::Index(l)] = std::polar(1.0, phi[l]);
    return PhaseVector(std::move(t));
}

PhaseVector PhaseVector::random(Eigen::Index n_ris, Rng& rng)
{
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    CVector t(n_ris);
    for (Eigen::Index l = 0; l < n_ris; ++l) t[l] = std::polar(1.0, angle(rng));
    return PhaseVector(std::move(t));
}

void PhaseVector::set(Eigen::Index l, cplx value)
{
    if (std::abs(std::abs(value) - 1.0) > kUnitModulusTol)
        throw DomainError("phase entry must have unit modulus");
    theta_[l] = value;
}

double PhaseVector::max_modulus_error() const
{
    double worst = 0.0;
    for (Eigen::Index l = 0; l < theta_.size(); ++l)
        worst = std::max(worst, std::abs(std::abs(theta_[l]) - 1.0));
    return worst;
}

Beamformer::Beamformer(CVector w, double p_budget) : w_(std::move(w)), p_budget_(p_budget)
{
    if (!(p_budget_ >= 0.0) || !std::isfinite(p_budget_))
        throw DomainError("power budget must be non-negative and finite");
    if (w_.squaredNorm() > p_budget_ * (1.0 + kPowerBudgetSlack))
        throw DomainError("beamformer exceeds its power budget");
}

Beamformer Beamformer::zero(Eigen::Index n, double p_budget)
{
    return Beamformer(CVector::Zero(n), p_budget);
}

EffectivePair effective_channels(const NormalizedChannels& nc, const PhaseVector& theta)
{
    const auto n = nc.hat_h_ab.size();
    const auto n_ris = nc.hat_h_ib.size();
    if (nc.hat_h_ae.size() != n || nc.hat_h_ie.size() != n_ris || theta.size() != n_ris ||
        nc.H_ai.rows() != n_ris || (n_ris > 0 && nc.H_ai.cols() != n))
        throw DimensionError("effective_channels: inconsistent dimensions");

    EffectivePair pair{nc.hat_h_ab, nc.hat_h_ae};
    if (n_ris > 0) {
        // hat_h diag(theta) H_ai as a row vector is H_ai^T (hat_h .* theta).
        pair.z_b.noalias() += nc.H_ai.transpose() * nc.hat_h_ib.cwiseProduct(theta.values());
        pair.z_e.noalias() += nc.H_ai.transpose() * nc.hat_h_ie.cwiseProduct(theta.values());
    }
    return pair;
}

double objective_f(const EffectivePair& pair, const Beamformer& w)
{
    if (pair.z_b.size() != w.size() || pair.z_e.size() != w.size())
        throw DimensionError("objective_f: beamformer length mismatch");
    const double gb = std::norm(row_times(pair.z_b, w.w()));
    const double ge = std::norm(row_times(pair.z_e, w.w()));
    return (1.0 + gb) / (1.0 + ge);
}

double secrecy_rate(const EffectivePair& pair, const Beamformer& w)
{
    if (pair.z_b.size() != w.size() || pair.z_e.size() != w.size())
        throw DimensionError("secrecy_rate: beamformer length mismatch");
    const double gb = std::norm(row_times(pair.z_b, w.w()));
    const double ge = std::norm(row_times(pair.z_e, w.w()));
    return (std::log1p(gb) - std::log1p(ge)) / std::numbers::ln2;
}

} // namespace risesr
