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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rydqw/config.hpp"
#include "rydqw/decoherence.hpp"
#include "rydqw/io.hpp"
#include "rydqw/protocols.hpp"
#include "rydqw/topology.hpp"
#include "rydqw/walk.hpp"

namespace rydqw::experiments {

/// Spatial hopping-angle wall:
/// theta(x) = (tm + tp)/2 + (tp - tm)/2 * tanh(x / w).
struct AngleProfile {
    double theta_minus;
    double theta_plus;
    double width_um;
    double center_um = 0.0;
};

double angle_at(const AngleProfile& profile, double x_um);

// ── 1D domain wall ───────────────────────────────────────────────────────────

struct Edge1DResult {
    std::vector<double> final_distribution;
    double trapped_fraction;  // probability within the site window around the wall
    int center_site;
    double norm_error;
};

/// 100-step (by default) symmetric coinless walk with tanh angle walls,
/// walker starting at the centre site; reports P(|x| <= window sites).
Edge1DResult run_edge_1d(int n_sites, double a0, double a1, const AngleProfile& theta0,
                         const AngleProfile& theta1, int steps, int window_sites = 5);

/// Whether two (theta0, theta1) points carry distinct 1D invariants, plus a
/// gap-closure scan of the straight path between them.
struct PhaseComparison {
    topology::InvariantPair first;
    topology::InvariantPair second;
    bool distinct;
    bool closure_on_path;
};

PhaseComparison compare_1d_phases(double t0_a, double t1_a, double t0_b, double t1_b);

// ── 2D runs ─────────────────────────────────────────────────────────────────

enum class Protocol2D { CoinedChern, CoinedSimple, CoinlessTetramer, CoinlessDimerAnomalous };

Protocol2D protocol2d_from_string(const std::string& name);

struct StripeSpec {
    double lo;  // stripe along x in cell coordinates: lo < c <= hi
    double hi;
    double theta0_in;
    double theta1_in;
    double theta0_out;
    double theta1_out;
};

struct Edge2DResult {
    lattice::SiteTable table;
    walk::Trajectory trajectory;
    std::vector<double> cell_population;  // dimer/tetramer-summed final population
    double stripe_border_fraction;        // population on the boundary planes of the stripe
    double norm_error;
};

Edge2DResult run_edge_2d(Protocol2D protocol, std::array<int, 2> cells, const StripeSpec& stripe,
                         const std::vector<std::pair<int, cxd>>& init_sites, int steps,
                         std::optional<std::array<double, 2>> tetramer_y_angles = {});

/// One-period basis-state map of the uniform anomalous cycle on an open
/// dimer lattice: which basis states return to themselves exactly and where
/// the others go.
struct AnomalousCycleReport {
    std::vector<double> return_overlap;  // |<b|U|b>| per basis state
    std::vector<int> image_site;         // argmax site of U|b>, for circulating states
    std::vector<int> circulating;        // sites with return overlap below 0.5
    bool interior_exact;                 // every interior-cell site returns (1e-10)
    bool circuit_on_boundary_cells;      // circulating sites confined to boundary cells
    bool every_boundary_cell_hosts_circuit;
    bool circuit_is_permutation;         // circulating set maps bijectively onto itself
    bool clockwise;                      // bottom row moves toward -x (y up, x right)
};

AnomalousCycleReport anomalous_cycle_report(std::array<int, 2> cells, double theta = pi / 2);

// ── 3D runs ─────────────────────────────────────────────────────────────────

struct Edge3DResult {
    double plane_fraction;          // population on the stripe border planes
    std::vector<double> cell_population;
    double norm_error;
};

Edge3DResult run_edge_3d(std::array<int, 3> cells, const StripeSpec& stripe,
                         const std::vector<std::pair<int, cxd>>& init_sites, int steps,
                         const lattice::SiteTable** table_out = nullptr);

/// Builds the standard initial state (|x=lo,3,3,o> + |x=hi,3,3,o>)/sqrt(2)
/// for a 3D stripe run.
std::vector<std::pair<int, cxd>> stripe_plane_init(const lattice::SiteTable& table, int x_lo,
                                                   int x_hi, std::array<int, 2> yz, int parity);

struct CycleReport3D {
    bool bulk_exact;       // every interior site returns after one period
    bool boundary_moves;   // at least one boundary site does not
    int circulating_count;
};

CycleReport3D insulator_3d_report(std::array<int, 3> cells, double theta = pi / 2);

// ── topological surfaces ─────────────────────────────────────────────────────

struct SurfaceResult {
    lattice::SiteTable table;
    walk::Trajectory trajectory;
    double norm_error;
};

SurfaceResult run_surface_walk(lattice::SeamKind seam, std::array<int, 2> cells, double theta,
                               double boundary_theta, int start_site, int steps);

// ── config-driven front end ──────────────────────────────────────────────────

/// Executes the experiment named in [experiment] name=... and writes CSV/JSON
/// artifacts under outdir. Throws config::config_error for invalid configs
/// and std::runtime_error for numerical failures.
void run_from_config(const config::Ini& ini, const std::filesystem::path& outdir,
                     io::Manifest& manifest, int workers = 0);

}  // namespace rydqw::experiments
