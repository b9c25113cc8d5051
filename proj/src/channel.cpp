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

#include "risesr/channel.hpp"

#include <cmath>
#include <string>

#include "risesr/errors.hpp"

namespace risesr {

namespace {

void require_positive(double v, const char* name)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(name) + " must be positive and finite");
}

CVector draw_cn(Eigen::Index size, double gain, Rng& rng)
{
    // CN(0, 1): independent N(0, 1/2) real and imaginary parts.
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    const double amp = std::sqrt(gain);
    CVector v(size);
    for (Eigen::Index i = 0; i < size; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v[i] = amp * cplx(re, im);
    }
    return v;
}

bool all_finite(const CMatrix& m)
{
    return m.array().isFinite().all();
}

} // namespace

void SystemGeometry::validate() const
{
    require_positive(d_ai, "d_ai");
    if (!(d_ab_h >= 0.0) || !std::isfinite(d_ab_h)) throw DomainError("d_ab_h must be >= 0 and finite");
    if (!(d_ae_h >= 0.0) || !std::isfinite(d_ae_h)) throw DomainError("d_ae_h must be >= 0 and finite");
    // The sign of d_v only selects the side of the Alice-RIS line.
    if (d_v == 0.0 || !std::isfinite(d_v)) throw DomainError("d_v must be non-zero and finite");
    require_positive(xi_ai, "xi_ai");
    require_positive(xi_ib, "xi_ib");
    require_positive(xi_ie, "xi_ie");
    require_positive(xi_ab, "xi_ab");
    require_positive(xi_ae, "xi_ae");
    require_positive(d_ref, "d_ref");
    if (!std::isfinite(pl_ref_db)) throw DomainError("pl_ref_db must be finite");
}

void ChannelSet::validate() const
{
    const auto n_tx = h_ab.size();
    const auto n_el = h_ib.size();
    if (n_tx < 1) throw DimensionError("channel set needs at least one transmit antenna");
    if (h_ae.size() != n_tx) throw DimensionError("h_ae length differs from h_ab");
    if (h_ie.size() != n_el) throw DimensionError("h_ie length differs from h_ib");
    if (H_ai.rows() != n_el || (n_el > 0 && H_ai.cols() != n_tx))
        throw DimensionError("H_ai must be n_ris x n");
    require_positive(sigma2_b, "sigma2_b");
    require_positive(sigma2_e, "sigma2_e");
    if (!all_finite(H_ai) || !all_finite(h_ab) || !all_finite(h_ae) || !all_finite(h_ib) ||
        !all_finite(h_ie))
        throw DomainError("channel entries must be finite");
}

double path_loss_linear(double d, double xi, double pl_ref_db, double d_ref)
{
    require_positive(d, "distance");
    require_positive(d_ref, "reference distance");
    const double pl_db = pl_ref_db - 10.0 * xi * std::log10(d / d_ref);
    return std::pow(10.0, pl_db / 10.0);
}

LinkDistances derive_distances(const SystemGeometry& geom)
{
    geom.validate();
    LinkDistances d;
    d.ai = geom.d_ai;
    d.ab = std::hypot(geom.d_ab_h, geom.d_v);
    d.ae = std::hypot(geom.d_ae_h, geom.d_v);
    d.ib = std::hypot(geom.d_ai - geom.d_ab_h, geom.d_v);
    d.ie = std::hypot(geom.d_ai - geom.d_ae_h, geom.d_v);
    return d;
}

ChannelSet sample_channels(const SystemGeometry& geom, int n, int n_ris, double sigma2_b,
                           double sigma2_e, Rng& rng)
{
    if (n < 1) throw DomainError("antenna count must be >= 1");
    if (n_ris < 0) throw DomainError("element count must be >= 0");
    require_positive(sigma2_b, "sigma2_b");
    require_positive(sigma2_e, "sigma2_e");

    const LinkDistances d = derive_distances(geom);
    auto pl = [&](double dist, double xi) {
        return path_loss_linear(dist, xi, geom.pl_ref_db, geom.d_ref);
    };

    ChannelSet ch;
    ch.sigma2_b = sigma2_b;
    ch.sigma2_e = sigma2_e;
    ch.h_ab = draw_cn(n, pl(d.ab, geom.xi_ab), rng);
    ch.h_ae = draw_cn(n, pl(d.ae, geom.xi_ae), rng);

    const CVector flat = draw_cn(Eigen::Index(n_ris) * n, pl(d.ai, geom.xi_ai), rng);
    ch.H_ai.resize(n_ris, n_ris > 0 ? n : 0);
    for (int l = 0; l < n_ris; ++l)
        for (int k = 0; k < n; ++k) ch.H_ai(l, k) = flat[Eigen::Index(l) * n + k];

    ch.h_ib = draw_cn(n_ris, pl(d.ib, geom.xi_ib), rng);
    ch.h_ie = draw_cn(n_ris, pl(d.ie, geom.xi_ie), rng);
    return ch;
}

NormalizedChannels normalize(const ChannelSet& ch)
{
    ch.validate();
    const double sb = std::sqrt(ch.sigma2_b);
    const double se = std::sqrt(ch.sigma2_e);
    NormalizedChannels nc;
    nc.H_ai = ch.H_ai;
    nc.hat_h_ab = ch.h_ab / sb;
    nc.hat_h_ib = ch.h_ib / sb;
    nc.hat_h_ae = ch.h_ae / se;
    nc.hat_h_ie = ch.h_ie / se;
    return nc;
}

} // namespace risesr
