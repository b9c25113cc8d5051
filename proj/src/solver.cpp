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

#include "risesr/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "risesr/errors.hpp"

namespace risesr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double phi)
{
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod can land exactly on 2 pi after the correction above.
    return r >= kTwoPi ? 0.0 : r;
}

void require_power(double power)
{
    if (!(power > 0.0) || !std::isfinite(power))
        throw DomainError("power budget must be positive and finite");
}

// Beamformer used to report f before the first update: full-power MRT toward
// Bob's direct link.
Beamformer mrt_toward_bob(const NormalizedChannels& nc, double power)
{
    const double norm = nc.hat_h_ab.norm();
    if (norm == 0.0) return Beamformer::zero(nc.n(), power);
    return Beamformer(std::sqrt(power) * nc.hat_h_ab.conjugate() / norm, power);
}

// Unit-norm projection of v onto span{u1, u2}; empty if it vanishes.
CVector project_onto_span(const CVector& v, const CVector& u1, const CVector& u2)
{
    CMatrix basis(v.size(), 2);
    basis.col(0) = u1;
    basis.col(1) = u2;
    Eigen::ColPivHouseholderQR<CMatrix> qr(basis);
    const auto rank = qr.rank();
    if (rank == 0) return {};
    const CMatrix q = CMatrix(qr.householderQ()).leftCols(rank);
    CVector p = q * (q.adjoint() * v);
    const double pn = p.norm();
    if (!(pn > 1e-12 * v.norm())) return {};
    return p / pn;
}

} // namespace

void SolverConfig::validate() const
{
    if (max_iters < 1) throw DomainError("max_iters must be >= 1");
    if (!(rel_tol > 0.0)) throw DomainError("rel_tol must be > 0");
    if (multi_start < 1) throw DomainError("multi_start must be >= 1");
}

QuadraticForms quadratic_forms(const NormalizedChannels& nc, const Beamformer& w)
{
    if (w.size() != nc.n()) throw DimensionError("quadratic_forms: beamformer length mismatch");
    QuadraticForms q;
    const cplx d_b = row_times(nc.hat_h_ab, w.w());
    const cplx d_e = row_times(nc.hat_h_ae, w.w());
    q.c_b = std::norm(d_b);
    q.c_e = std::norm(d_e);
    if (nc.n_ris() == 0) {
        q.a_b = q.b_b = q.a_e = q.b_e = CVector(0);
        return q;
    }
    const CVector hw = nc.H_ai * w.w();
    q.a_b = nc.hat_h_ib.cwiseProduct(hw).conjugate();
    q.a_e = nc.hat_h_ie.cwiseProduct(hw).conjugate();
    q.b_b = q.a_b * d_b;
    q.b_e = q.a_e * d_e;
    return q;
}

RunningSums running_sums(const QuadraticForms& forms, const PhaseVector& theta)
{
    if (forms.a_b.size() != theta.size())
        throw DimensionError("running_sums: phase vector length mismatch");
    const CVector& t = theta.values();
    // Eigen's dot conjugates its left operand.
    return {forms.a_b.dot(t), forms.b_b.dot(t), forms.a_e.dot(t), forms.b_e.dot(t)};
}

PhaseCoefficients phase_coefficients(Eigen::Index l, const PhaseVector& theta,
                                     const QuadraticForms& forms, const RunningSums& sums)
{
    const cplx t = theta[l];
    const cplx a_b = forms.a_b[l];
    const cplx a_e = forms.a_e[l];
    const cplx b_b = forms.b_b[l];
    const cplx b_e = forms.b_e[l];

    const cplx sa_b = sums.s_ab - std::conj(a_b) * t;
    const cplx sb_b = sums.s_bb - std::conj(b_b) * t;
    const cplx sa_e = sums.s_ae - std::conj(a_e) * t;
    const cplx sb_e = sums.s_be - std::conj(b_e) * t;

    PhaseCoefficients c;
    c.alpha_b = 2.0 * (a_b * sa_b + b_b);
    c.alpha_e = 2.0 * (a_e * sa_e + b_e);
    c.beta_b = std::norm(a_b) + std::norm(sa_b) + 2.0 * sb_b.real() + forms.c_b + 1.0;
    c.beta_e = std::norm(a_e) + std::norm(sa_e) + 2.0 * sb_e.real() + forms.c_e + 1.0;
    return c;
}

double phase_objective(const PhaseCoefficients& c, double phi)
{
    const cplx e = std::polar(1.0, phi);
    const double num = (std::conj(c.alpha_b) * e).real() + c.beta_b;
    const double den = (std::conj(c.alpha_e) * e).real() + c.beta_e;
    return num / den;
}

namespace {

// r_l and varphi from beta_e conj(alpha_b) - beta_b conj(alpha_e) = r_l e^{j varphi},
// so that r_b beta_e sin(phi - phi_b) - r_e beta_b sin(phi - phi_e) = r_l sin(phi + varphi).
struct SinusoidForm {
    double r_l;
    double varphi;
    double k;  // r_b r_e sin(phi_b - phi_e)
};

SinusoidForm sinusoid_form(const PhaseCoefficients& c)
{
    const cplx combo = c.beta_e * std::conj(c.alpha_b) - c.beta_b * std::conj(c.alpha_e);
    return {std::abs(combo), std::atan2(combo.imag(), combo.real()),
            (c.alpha_b * std::conj(c.alpha_e)).imag()};
}

} // namespace

double phase_objective_derivative(const PhaseCoefficients& c, double phi)
{
    const SinusoidForm s = sinusoid_form(c);
    const double den = (std::conj(c.alpha_e) * std::polar(1.0, phi)).real() + c.beta_e;
    return (s.k - s.r_l * std::sin(phi + s.varphi)) / (den * den);
}

PhaseUpdate optimal_phase(const PhaseCoefficients& c)
{
    const SinusoidForm s = sinusoid_form(c);
    const double scale = c.beta_e * std::abs(c.alpha_b) + c.beta_b * std::abs(c.alpha_e);

    PhaseUpdate best;
    // g is constant in phi: both alphas vanish or alpha/beta agree between Bob and Eve.
    if (scale == 0.0 || s.r_l <= 1e-15 * scale) return best;

    double ratio = s.k / s.r_l;
    if (std::abs(ratio) > 1.0) {
        if (std::abs(ratio) > 1.0 + 1e-12) {
            best.no_stationary_branch = true;
            return best;
        }
        ratio = std::clamp(ratio, -1.0, 1.0);
    }

    const double root = std::asin(ratio);
    const double candidates[] = {wrap_angle(root - s.varphi),
                                 wrap_angle(std::numbers::pi - root - s.varphi)};
    double best_g = phase_objective(c, 0.0);
    for (double phi : candidates) {
        const double g = phase_objective(c, phi);
        if (g > best_g) {
            best_g = g;
            best.phi = phi;
        }
    }
    best.theta = std::polar(1.0, best.phi);
    return best;
}

PhaseVector sweep_phases(const Beamformer& w, const PhaseVector& theta,
                         const NormalizedChannels& nc, SweepStats* stats,
                         const ElementCallback& on_update)
{
    if (theta.size() != nc.n_ris()) throw DimensionError("sweep_phases: phase vector length mismatch");
    PhaseVector out = theta;
    if (out.size() == 0) return out;

    const QuadraticForms forms = quadratic_forms(nc, w);
    RunningSums sums = running_sums(forms, out);
    for (Eigen::Index l = 0; l < out.size(); ++l) {
        const PhaseUpdate upd = optimal_phase(phase_coefficients(l, out, forms, sums));
        if (upd.no_stationary_branch && stats) ++stats->no_stationary_branch;

        const cplx delta = upd.theta - out[l];
        sums.s_ab += std::conj(forms.a_b[l]) * delta;
        sums.s_bb += std::conj(forms.b_b[l]) * delta;
        sums.s_ae += std::conj(forms.a_e[l]) * delta;
        sums.s_be += std::conj(forms.b_e[l]) * delta;
        out.set(l, upd.theta);
        if (on_update) on_update(l, out);
    }
    return out;
}

CMatrix build_ratio_matrix(const EffectivePair& pair, double power)
{
    require_power(power);
    const auto n = pair.z_b.size();
    if (pair.z_e.size() != n) throw DimensionError("build_ratio_matrix: z_b and z_e differ in length");

    // (P Z_e + I)^{-1} = I - c P z_e^H z_e with c = 1 / (1 + P ||z_e||^2), hence
    // M = I + P z_b^H z_b - c P z_e^H (z_e + P (z_e z_b^H) z_b).
    const double c = 1.0 / (1.0 + power * pair.z_e.squaredNorm());
    const cplx cross = pair.z_b.dot(pair.z_e);  // z_e z_b^H
    const CVector right = pair.z_e + power * cross * pair.z_b;

    CMatrix m = CMatrix::Identity(n, n);
    m.noalias() += power * pair.z_b.conjugate() * pair.z_b.transpose();
    m.noalias() -= (c * power) * pair.z_e.conjugate() * right.transpose();
    return m;
}

EigenPair dominant_eigenpair(const CMatrix& m, const CVector& start, double shift,
                             const PowerIterationOptions& opts)
{
    if (m.rows() != m.cols() || start.size() != m.rows())
        throw DimensionError("dominant_eigenpair: size mismatch");
    const double start_norm = start.norm();
    if (!(start_norm > 0.0)) throw DomainError("dominant_eigenpair: zero start vector");

    CVector x = start / start_norm;
    CVector mx(x.size());
    double residual = 0.0;
    for (int it = 0;; ++it) {
        mx.noalias() = m * x;
        const cplx mu = x.dot(mx);
        residual = (mx - mu * x).norm();
        if (residual <= opts.tolerance * std::max(1.0, std::abs(mu)))
            return {x, mu, it, residual};
        if (it == opts.max_iterations) break;

        CVector y = mx - shift * x;
        const double ny = y.norm();
        if (!(ny > 0.0) || !std::isfinite(ny)) break;
        x = y / ny;
    }
    throw NumericalError("power iteration did not converge", opts.max_iterations, residual);
}

BeamformerSolution solve_beamformer(const EffectivePair& pair, double power,
                                    const CVector* warm_start, const PowerIterationOptions& opts)
{
    require_power(power);
    const auto n = pair.z_b.size();
    const CMatrix m = build_ratio_matrix(pair, power);

    auto direction_value = [&](const CVector& x) {
        return objective_f(pair, Beamformer(std::sqrt(power) * x / x.norm(), power));
    };

    CVector start = pair.z_b.conjugate();
    if (!(start.norm() > 0.0)) start = CVector::Unit(n, 0);
    start.normalize();
    if (warm_start && warm_start->size() == n && warm_start->norm() > 0.0 && n > 1) {
        const CVector projected =
            project_onto_span(*warm_start, pair.z_b.conjugate(), pair.z_e.conjugate());
        if (projected.size() == n && direction_value(projected) > direction_value(start))
            start = projected;
    }

    // Every eigenvalue of the pencil is at least 1 / (1 + P ||z_e||^2).
    const double shift = 1.0 / (1.0 + power * pair.z_e.squaredNorm());
    const EigenPair ep = dominant_eigenpair(m, start, shift, opts);

    BeamformerSolution sol;
    sol.w = Beamformer(std::sqrt(power) * ep.vector, power);
    sol.objective = objective_f(pair, sol.w);
    sol.iterations = ep.iterations;
    sol.residual = ep.residual;
    return sol;
}

Beamformer optimal_beamformer(const EffectivePair& pair, double power)
{
    return solve_beamformer(pair, power).w;
}

namespace {

SolveResult run_single_start(const NormalizedChannels& nc, double power, const SolverConfig& cfg,
                             const PhaseVector& theta0, int start_index,
                             const BlockObserver& observer)
{
    SolveResult res;
    res.theta = theta0;
    res.w = mrt_toward_bob(nc, power);
    res.initial_objective = objective_f(effective_channels(nc, res.theta), res.w);
    if (observer) observer({start_index, 0, BlockKind::kInitial, -1, res.w, res.theta});

    SweepStats stats;
    for (int it = 1; it <= cfg.max_iters; ++it) {
        const CVector warm = res.w.w();
        const BeamformerSolution sol =
            solve_beamformer(effective_channels(nc, res.theta), power, &warm);
        res.w = sol.w;
        res.diagnostics.max_power_iterations =
            std::max(res.diagnostics.max_power_iterations, sol.iterations);
        if (observer) observer({start_index, it, BlockKind::kBeamformer, -1, res.w, res.theta});

        ElementCallback on_element;
        if (observer) {
            on_element = [&](Eigen::Index l, const PhaseVector& th) {
                observer({start_index, it, BlockKind::kPhase, l, res.w, th});
            };
        }
        res.theta = sweep_phases(res.w, res.theta, nc, &stats, on_element);

        const double f = objective_f(effective_channels(nc, res.theta), res.w);
        res.objective_trace.push_back(f);
        res.iterations = it;

        if (nc.n_ris() == 0) {
            // Empty phase block: the first w update is already the optimum.
            res.converged = true;
            break;
        }
        if (it >= 2) {
            const double prev = res.objective_trace[res.objective_trace.size() - 2];
            if (std::abs(f - prev) <= cfg.rel_tol * prev) {
                res.converged = true;
                break;
            }
        }
    }
    res.diagnostics.no_stationary_branch = stats.no_stationary_branch;
    res.diagnostics.starts = 1;
    res.best_start = start_index;
    return res;
}

} // namespace

SolveResult bcam_solve(const NormalizedChannels& nc, double power, const SolverConfig& cfg,
                       const BlockObserver& observer)
{
    cfg.validate();
    require_power(power);

    SolveResult best;
    SolveDiagnostics total;
    for (int k = 0; k < cfg.multi_start; ++k) {
        PhaseVector theta0;
        if (k == 0 && cfg.init_mode == InitMode::kAllOnes) {
            theta0 = PhaseVector::ones(nc.n_ris());
        } else {
            Rng rng = make_stream(cfg.seed, static_cast<std::uint64_t>(k), 0,
                                  StreamPurpose::kSolverStarts);
            theta0 = PhaseVector::random(nc.n_ris(), rng);
        }
        SolveResult r = run_single_start(nc, power, cfg, theta0, k, observer);
        total.no_stationary_branch += r.diagnostics.no_stationary_branch;
        total.max_power_iterations =
            std::max(total.max_power_iterations, r.diagnostics.max_power_iterations);
        if (k == 0 || r.objective() > best.objective()) best = std::move(r);
    }
    total.starts = cfg.multi_start;
    best.diagnostics = total;
    return best;
}

SolveResult bcam_solve_from(const NormalizedChannels& nc, double power, const SolverConfig& cfg,
                            const PhaseVector& theta0, const BlockObserver& observer)
{
    cfg.validate();
    require_power(power);
    if (theta0.size() != nc.n_ris()) throw DimensionError("bcam_solve_from: theta0 length mismatch");
    return run_single_start(nc, power, cfg, theta0, 0, observer);
}

} // namespace risesr
