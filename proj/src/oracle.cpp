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

#include "risesr/oracle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "risesr/errors.hpp"

namespace risesr::oracle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct PolarCoefficients {
    double r_b, phi_b, beta_b;
    double r_e, phi_e, beta_e;

    explicit PolarCoefficients(const PhaseCoefficients& c)
        : r_b(std::abs(c.alpha_b)), phi_b(std::arg(c.alpha_b)), beta_b(c.beta_b),
          r_e(std::abs(c.alpha_e)), phi_e(std::arg(c.alpha_e)), beta_e(c.beta_e) {}

    double g(double phi) const
    {
        return (r_b * std::cos(phi - phi_b) + beta_b) / (r_e * std::cos(phi - phi_e) + beta_e);
    }

    // Quotient rule, kept separate from the solver's sinusoid form.
    double dg(double phi) const
    {
        const double num = r_b * std::cos(phi - phi_b) + beta_b;
        const double den = r_e * std::cos(phi - phi_e) + beta_e;
        const double dnum = -r_b * std::sin(phi - phi_b);
        const double dden = -r_e * std::sin(phi - phi_e);
        return (dnum * den - num * dden) / (den * den);
    }
};

CMatrix pencil_matrix(const CVector& z, double power)
{
    const auto n = z.size();
    CMatrix m = CMatrix::Identity(n, n);
    m += power * z.conjugate() * z.transpose();
    return m;
}

} // namespace

GridPhaseResult grid_phase_oracle(const PhaseCoefficients& c, std::size_t grid_points, bool refine)
{
    if (grid_points < 2) throw DomainError("grid_phase_oracle: need at least 2 grid points");
    const PolarCoefficients pc(c);
    const double step = kTwoPi / static_cast<double>(grid_points);

    GridPhaseResult best{0.0, pc.g(0.0)};
    std::size_t best_index = 0;
    for (std::size_t i = 1; i < grid_points; ++i) {
        const double phi = step * static_cast<double>(i);
        const double g = pc.g(phi);
        if (g > best.g) {
            best = {phi, g};
            best_index = i;
        }
    }
    if (!refine) return best;

    const double center = step * static_cast<double>(best_index);
    for (double lo : {center - step, center}) {
        double a = lo;
        double b = lo + step;
        double da = pc.dg(a);
        const double db = pc.dg(b);
        if (!(da > 0.0 && db < 0.0)) continue;
        for (int k = 0; k < 100; ++k) {
            const double mid = 0.5 * (a + b);
            const double dm = pc.dg(mid);
            if (dm > 0.0) {
                a = mid;
                da = dm;
            } else {
                b = mid;
            }
        }
        const double phi = 0.5 * (a + b);
        const double g = pc.g(phi);
        if (g > best.g) {
            double wrapped = std::fmod(phi, kTwoPi);
            if (wrapped < 0.0) wrapped += kTwoPi;
            best = {wrapped, g};
        }
    }
    return best;
}

CMatrix dense_ratio_matrix(const EffectivePair& pair, double power)
{
    const CMatrix a = pencil_matrix(pair.z_b, power);
    const CMatrix b = pencil_matrix(pair.z_e, power);
    return b.partialPivLu().solve(a);
}

RayleighQuotientResult rayleigh_quotient_oracle(const EffectivePair& pair, double power)
{
    const auto n = pair.z_b.size();
    if (n > 8) throw OracleRefusal("rayleigh_quotient_oracle: N must be <= 8");
    if (pair.z_e.size() != n) throw DimensionError("rayleigh_quotient_oracle: size mismatch");

    const CMatrix a = pencil_matrix(pair.z_b, power);
    const CMatrix b = pencil_matrix(pair.z_e, power);

    // Whiten with B = L L^H: C = L^{-1} A L^{-H} is Hermitian with the pencil's eigenvalues.
    const Eigen::LLT<CMatrix> llt(b);
    const auto l = llt.matrixL();
    const CMatrix x = l.solve(a);
    const CMatrix c_adj = l.solve(CMatrix(x.adjoint()));
    CMatrix c = c_adj.adjoint();
    c = 0.5 * (c + CMatrix(c.adjoint()));

    const Eigen::SelfAdjointEigenSolver<CMatrix> eig(c);
    const auto top = n - 1;
    RayleighQuotientResult res;
    res.f = eig.eigenvalues()[top];
    CVector w = llt.matrixU().solve(CVector(eig.eigenvectors().col(top)));
    res.w = std::sqrt(power) * w / w.norm();
    return res;
}

double joint_grid_oracle(const NormalizedChannels& nc, double power, int phase_grid)
{
    const auto n_ris = nc.n_ris();
    if (n_ris > 3) throw OracleRefusal("joint_grid_oracle: N_ris must be <= 3");
    if (phase_grid < 1 || phase_grid > 720)
        throw OracleRefusal("joint_grid_oracle: phase grid must be in [1, 720]");

    const double step = kTwoPi / phase_grid;
    std::vector<int> idx(static_cast<std::size_t>(n_ris), 0);
    std::vector<double> angles(static_cast<std::size_t>(n_ris), 0.0);
    double best = -1.0;
    for (;;) {
        for (std::size_t l = 0; l < idx.size(); ++l) angles[l] = step * idx[l];
        const PhaseVector theta = PhaseVector::from_angles(angles);
        best = std::max(best, rayleigh_quotient_oracle(effective_channels(nc, theta), power).f);

        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == phase_grid) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return best;
}

} // namespace risesr::oracle
