// Copyright 2026 The rydqw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "rydqw/common.hpp"
#include "rydqw/walk.hpp"

namespace rydqw::topology {

using Mat2 = Eigen::Matrix2cd;

// ── momentum-space building blocks (odd/even basis) ─────────────────────────

/// Fourier intra-cell Hamiltonian, off-diagonal e^{+i k abar1} (row o, col e).
Mat2 bloch_h0(double k, double abar1);
/// Fourier inter-cell Hamiltonian, off-diagonal e^{-i k (1 - abar1)}.
Mat2 bloch_h1(double k, double abar1);

/// exp(i theta H) for an involutory H (H^2 = 1): cos(theta) I + i sin(theta) H.
Mat2 exp_ih(double theta, const Mat2& h);

enum class Frame { Symmetric0, Symmetric1, Plain };

/// One-period momentum operator of the 1D coinless walk in the given time
/// frame. Symmetric frames obey sigma_z W sigma_z = W^dag; the plain frame
/// generally does not.
Mat2 floquet_operator(double k, double theta0, double theta1, double abar1, Frame frame);

/// Quasi-energy band E(k) in [0, pi]:
/// cos E = cos(theta0) cos(theta1) - sin(theta0) sin(theta1) cos(k).
double quasienergy(double theta0, double theta1, double k);

/// Min/max of E(k) over a k-grid that includes the extremal points k = 0, pi.
struct BandExtremes {
    double e_min;
    double e_max;
};
BandExtremes band_extremes(double theta0, double theta1, int k_points = 257);

/// Quantization axis n(k) of the effective Hamiltonian E(k) n(k).sigma for a
/// symmetric-frame operator; n_z = 0 everywhere. Throws gap_closed_error
/// where sin E vanishes.
std::array<double, 3> bloch_vector(double k, double theta0, double theta1, double abar1,
                                   Frame frame = Frame::Symmetric0);

/// n(k) extracted from -i log W for any 2x2 unitary with eigenphases +-E.
std::array<double, 3> bloch_vector_numeric(const Mat2& w);

/// Eigenphases of a 2x2 unitary in (-pi, pi].
std::array<double, 2> eigenphases(const Mat2& w);

// ── invariants ──────────────────────────────────────────────────────────────

struct WindingResult {
    int nu;
    double raw;  // trapezoid value of the winding integral before rounding
};

/// Winding number of n(k) across the Brillouin zone for one time frame.
/// Integer-quantized in the periodic gauge abar1 = 0; a nonzero abar1 shifts
/// the raw value by exactly -abar1 per frame (pure gauge). Throws
/// gap_closed_error when either gap is closed at tolerance `gap_tol`.
WindingResult winding_number(double theta0, double theta1, double abar1, Frame frame,
                             int k_points = 2048, double gap_tol = 1e-3);

struct InvariantPair {
    int nu0;
    int nu_pi;
};

/// nu0 = (nu + nu')/2, nu_pi = (nu - nu')/2 from the two symmetric frames.
InvariantPair invariant_pair(double theta0, double theta1, int k_points = 2048,
                             double gap_tol = 1e-3);

// ── multi-dimensional momentum backend ──────────────────────────────────────

/// One-period momentum operator built from the same step descriptors as the
/// real-space programs. Coin and tessellation steps map to exp(i theta H~);
/// shift steps map to the bare conditional-translation phases
/// diag(e^{-i k.d}, e^{+i k.d}) (the global phase of the physical pi/2-pulse
/// composition is dropped). Only uniform angle policies are representable.
Mat2 momentum_operator(const std::vector<walk::StepDesc>& steps, const std::array<double, 3>& k,
                       double abar1 = 0.0);

struct GapPair {
    double gap0;
    double gap_pi;
};

/// min_k of |E| and of pi - |E| over a dim-dimensional k-grid.
GapPair band_gaps(const std::vector<walk::StepDesc>& steps, int dim, int k_points = 64,
                  double abar1 = 0.0);

/// Chern number of one band (band 0: eigenphase in (0, pi); band 1: in
/// (-pi, 0)) on a 2D Brillouin-zone grid, via U(1) link plaquette field
/// strengths. Throws gap_closed_error if a grid point has |E| or pi - |E|
/// below `gap_tol`.
struct ChernResult {
    int c;
    double raw;
};
ChernResult chern_number(const std::vector<walk::StepDesc>& steps, int band, int grid = 128,
                         double abar1 = 0.0, double gap_tol = 1e-4);

/// Direct Riemann sum of the Berry curvature n.(d_kx n x d_ky n)/(4 pi) with
/// finite differences; cross-check for the plaquette method.
double chern_riemann(const std::vector<walk::StepDesc>& steps, int band, int grid = 128,
                     double abar1 = 0.0);

/// Dense one-period operator of a compiled real-space program (for spectral
/// cross-checks against the momentum backend).
Eigen::MatrixXcd dense_period_operator(const walk::CompiledProgram& program);

}  // namespace rydqw::topology
