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

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "rydqw/common.hpp"
#include "rydqw/lattice.hpp"

namespace rydqw::walk {

using lattice::BoundaryTopology;
using lattice::PairSet;
using lattice::SiteTable;
using lattice::Tess;

/// Walker amplitudes over lattice sites (single-excitation subspace).
struct WalkerState {
    std::vector<cxd> amp;

    int size() const { return static_cast<int>(amp.size()); }
    double norm_sq() const;

    static WalkerState basis(int n_sites, int site);
    /// Normalized superposition of basis states with the given amplitudes.
    static WalkerState superposition(int n_sites, const std::vector<std::pair<int, cxd>>& terms);
};

/// One coupling tessellation with per-pair hopping angles.
/// exp(i theta H) on a matching is exact per 2x2 block:
///   (u, v) -> (cos t * u + i sin t * v, i sin t * u + cos t * v)
class Tessellation {
  public:
    Tessellation(PairSet pairs, double uniform_angle);
    Tessellation(PairSet pairs, std::vector<double> per_pair_angles);

    const PairSet& pairs() const { return pairs_; }
    const std::vector<double>& angles() const { return angles_; }
    void apply(WalkerState& state) const;
    void apply_inverse(WalkerState& state) const;

  private:
    void validate(int max_known_site = -1) const;  // rejects overlapping pairs
    PairSet pairs_;
    std::vector<double> angles_;
    std::vector<double> cos_;
    std::vector<double> sin_;
};

WalkerState apply_tessellation(const WalkerState& state, const Tessellation& t);

/// Coin rotation: intra-dimer (x0) rotation of the parity populations.
WalkerState coin_rotation(const WalkerState& state, const SiteTable& table, double theta,
                          const BoundaryTopology& topo = BoundaryTopology::open());

enum class Transition { T, Tx, Ty, Tz, Txy, Txz, Txyz };

/// Coined transition operators, composed as a pi/2 coin rotation followed by
/// the kind's pi/2 inter swap (inter x for T/Tx; the intra-gap diagonal for
/// Ty/Tz; the inter-gap diagonal for Txy/Txz/Txyz). Equals the conditional
/// translation permutation up to a global phase of -1.
WalkerState transition_operator(const WalkerState& state, const SiteTable& table,
                                const BoundaryTopology& topo, Transition kind);

/// Rotation across seam pairs only; empty seam is the identity.
WalkerState boundary_step(const WalkerState& state, const PairSet& seam, double theta);

// ── step programs ───────────────────────────────────────────────────────────

/// Spatial hopping-angle policies, sampled at the midpoint of each pair.
struct UniformAngle {
    double theta;
};
/// tanh domain wall along an axis, positions in um relative to `center_um`.
struct TanhAngle {
    int axis;
    double theta_minus;
    double theta_plus;
    double width_um;
    double center_um;
};
/// Two-region stripe in cell coordinates: `theta_in` where
/// lo < midpoint-cell <= hi, else `theta_out`.
struct StripeAngle {
    int axis;
    double lo;
    double hi;
    double theta_in;
    double theta_out;
};
using AnglePolicy = std::variant<UniformAngle, TanhAngle, StripeAngle>;

double angle_for_pair(const AnglePolicy& policy, const SiteTable& table, const lattice::SitePair& p);

struct TessStep {
    Tess kind;
    AnglePolicy angle;
};
struct CoinStep {
    AnglePolicy angle;
};
struct ShiftStep {
    Transition kind;
};
struct BoundaryStepDesc {
    int axis;
    double theta;
};
using StepDesc = std::variant<TessStep, CoinStep, ShiftStep, BoundaryStepDesc>;

/// A program compiled against a concrete lattice: a concrete sequence of
/// tessellations, one period worth. Dephasing channels count each entry as
/// one step.
class CompiledProgram {
  public:
    CompiledProgram(const SiteTable& table, const BoundaryTopology& topo,
                    const std::vector<StepDesc>& steps);

    const std::vector<Tessellation>& tessellations() const { return tess_; }
    int sites() const { return n_sites_; }
    void apply_period(WalkerState& state) const;

  private:
    std::vector<Tessellation> tess_;
    int n_sites_ = 0;
};

struct Trajectory {
    /// probabilities[r] is the distribution after `record_every * r` periods
    /// (index 0 is the initial state).
    std::vector<std::vector<double>> probabilities;
    std::vector<double> norms;
    WalkerState final_state;
};

struct RunOptions {
    int record_every = 1;
    bool keep_distributions = true;
};

Trajectory run_program(const WalkerState& initial, const CompiledProgram& program, int periods,
                       const RunOptions& opts = {});

void write_trajectory_csv(const Trajectory& traj, int record_every, std::ostream& out);

}  // namespace rydqw::walk
