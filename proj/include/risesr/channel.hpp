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

#include "risesr/linalg.hpp"
#include "risesr/rng.hpp"

namespace risesr {

// Node placement and path-loss parameters for the five links.
//
// Layout: Alice at the origin, the RIS at (d_ai, 0), Bob at (d_ab_h, -d_v)
// and Eve at (d_ae_h, -d_v). Defaults are the reference deployment.
struct SystemGeometry {
    double d_ai = 50.0;
    double d_ab_h = 10.0;
    double d_ae_h = 44.0;
    double d_v = 2.0;

    double xi_ai = 2.2;
    double xi_ib = 2.5;
    double xi_ie = 2.5;
    double xi_ab = 3.5;
    double xi_ae = 3.5;

    double pl_ref_db = -30.0;
    double d_ref = 1.0;

    // Throws DomainError unless d_ai, d_ref and the exponents are positive,
    // the horizontal offsets are non-negative and d_v is non-zero.
    void validate() const;
};

struct LinkDistances {
    double ai = 0.0;
    double ab = 0.0;
    double ae = 0.0;
    double ib = 0.0;
    double ie = 0.0;
};

// One fading realization. Channel "row vectors" are stored as column vectors.
struct ChannelSet {
    CMatrix H_ai;  // n_ris x n
    CVector h_ab;  // n
    CVector h_ae;  // n
    CVector h_ib;  // n_ris
    CVector h_ie;  // n_ris
    double sigma2_b = 1.0;
    double sigma2_e = 1.0;

    Eigen::Index n() const { return h_ab.size(); }
    Eigen::Index n_ris() const { return h_ib.size(); }

    // Throws DimensionError / DomainError on inconsistent sizes, non-positive
    // noise powers or non-finite entries.
    void validate() const;
};

// Noise-normalized channels; H_ai is carried unnormalized.
struct NormalizedChannels {
    CMatrix H_ai;
    CVector hat_h_ab;
    CVector hat_h_ae;
    CVector hat_h_ib;
    CVector hat_h_ie;

    Eigen::Index n() const { return hat_h_ab.size(); }
    Eigen::Index n_ris() const { return hat_h_ib.size(); }
};

// 10^(PL_dB/10) with PL_dB = pl_ref_db - 10 xi log10(d / d_ref).
double path_loss_linear(double d, double xi, double pl_ref_db, double d_ref);

LinkDistances derive_distances(const SystemGeometry& geom);

// Entries are sqrt(PL_link) * g with g ~ CN(0, 1) i.i.d. Draw order is
// h_ab, h_ae, H_ai (row-major), h_ib, h_ie, so two calls on equal streams
// with different n_ris share their direct links. n_ris = 0 gives the
// system without a surface.
ChannelSet sample_channels(const SystemGeometry& geom, int n, int n_ris, double sigma2_b,
                           double sigma2_e, Rng& rng);

NormalizedChannels normalize(const ChannelSet& ch);

} // namespace risesr
