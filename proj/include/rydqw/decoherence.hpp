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
#include <iosfwd>
#include <optional>
#include <vector>

#include "rydqw/common.hpp"
#include "rydqw/walk.hpp"

namespace rydqw::decoherence {

using DensityMatrix = Eigen::MatrixXcd;

DensityMatrix density_from_state(const walk::WalkerState& psi);

/// Stroboscopic dephasing channel applied after one tessellation step:
/// rho -> (1 - p_s) U rho U^dag + p_s diag(U rho U^dag),
/// i.e. conjugate by the exact pair rotations, then scale every off-diagonal
/// element by (1 - p_s). Trace and Hermiticity are preserved.
void channel_step(DensityMatrix& rho, const walk::Tessellation& t, double p_s);

enum class ChannelPer { TessellationStep, Period };

/// Runs `periods` periods of the compiled program on a density matrix.
/// By default the channel acts after every tessellation entry; the
/// alternative applies it once per full period.
class DensityEvolver {
  public:
    DensityEvolver(const walk::CompiledProgram& program, double p_s,
                   ChannelPer per = ChannelPer::TessellationStep);

    void step_period(DensityMatrix& rho) const;
    /// Apply a single tessellation step followed by the channel (step mode).
    void step_once(DensityMatrix& rho, std::size_t tess_index) const;
    int steps_per_period() const { return static_cast<int>(program_->tessellations().size()); }
    double p_s() const { return p_s_; }

  private:
    const walk::CompiledProgram* program_;
    double p_s_;
    ChannelPer per_;
};

double mean_square_displacement(const DensityMatrix& rho, int center_site);

/// Coherence length from the decay of anti-diagonal elements relative to the
/// noiseless run: |rho(c+d, c-d)| = |rho0(c+d, c-d)| exp(-|d|/l_co).
struct CoherenceFit {
    double l_co = 0.0;       // in sites
    bool unbounded = false;  // p_s = 0 limit: ratio is identically one
    bool fit_failed = false; // fewer than 3 usable anti-diagonal points
    int points_used = 0;
};

CoherenceFit coherence_length(const DensityMatrix& rho, const DensityMatrix& rho_ideal,
                              int center_site, double support_floor = 1e-8);

/// Power-law fit of mean-square displacement against gamma*t = step * p_s,
/// split at gamma*t = 1. The ballistic coefficient is the least-squares c in
/// msd = c (gamma t)^2 over the ballistic branch.
struct TransportFit {
    double ballistic_exponent = 0.0;
    double diffusive_exponent = 0.0;
    double ballistic_coefficient = 0.0;
    int ballistic_points = 0;
    int diffusive_points = 0;
};

TransportFit transport_fit(const std::vector<std::pair<double, double>>& series);

void write_abs_matrix_csv(const DensityMatrix& rho, std::ostream& out);

}  // namespace rydqw::decoherence
