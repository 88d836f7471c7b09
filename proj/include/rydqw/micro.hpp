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

#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "rydqw/common.hpp"
#include "rydqw/lattice.hpp"

namespace rydqw::micro {

/// All frequencies are cyclic (value/2pi) in MHz unless suffixed otherwise;
/// times in us, lengths in um.
struct RydbergParams {
    double principal_n = 70.0;
    double c3_base_ghz_um3 = 8.4;   // C3(phi = 0) at n = 70; scales as (n/70)^3
    double omega_mhz = 2.0;         // two-photon Rabi frequency Omega/2pi
    double delta_mhz = 0.0;         // laser detuning Delta/2pi from the s level
    double gamma_p_mhz = 1.4;       // intermediate-state decay rate / 2pi
    double delta_p_mhz = 600.0;     // intermediate-state detuning / 2pi
    double omega1_mhz = 60.0;       // two-photon legs
    double omega2_mhz = 40.0;
    double tau_base_us = 450.0;     // walker lifetime at n = 70 (77 K)
    // Lifetime scaling exponent tau(n) = tau_base (n/70)^tau_exponent. The
    // source text quotes -3, which shrinks with n and conflicts with the
    // claimed n-linear step scaling; kept configurable on purpose.
    double tau_exponent = -3.0;
    double trap_freq_khz = 150.0;
    double ground_spread_nm = 20.0;
    double mass_amu = 86.909180;    // Rb-87
    double lambda1_nm = 420.0;
    double lambda2_nm = 1013.0;
    double laser_linewidth_khz = 0.5;
    double trap_coherence_s = 12.0;
    double init_fidelity = 0.98;
    double detection_fidelity = 0.98;

    double c3_zero_ghz_um3() const;  // (n/70)^3 scaling applied
    double a_min_um() const;         // LeRoy bound, 0.95 um at n = 70, (n/70)^2
    bool omega_delta_warning() const { return std::abs(omega_mhz / delta_mhz) > 0.2; }
};

/// Spherical dipole components (mu_plus, mu_minus, mu_z) per atom in
/// arbitrary units; the overall scale is renormalized so that
/// V(phi = 0, R) = C3(0)/R^3. The default is the single-channel choice that
/// leaves only the (1 - 3 cos^2 phi)/2 angular structure.
struct DipoleComponents {
    std::array<double, 3> atom1{1.0, 1.0, 0.0};
    std::array<double, 3> atom2{1.0, 1.0, 0.0};
};

/// Angular exchange interaction V(R, phi) in MHz; phi is the angle between
/// the interatomic axis and the quantization axis. Throws on R <= 0.
double exchange_strength(double r_um, double phi, const RydbergParams& params,
                         const DipoleComponents& dipoles = {});

bool below_leroy(double r_um, const RydbergParams& params);

// ── pulse-level dynamics ─────────────────────────────────────────────────────

/// Two-site 2pi-pulse over the exchange chain
/// |pg> -(O/2)- |ps> -(V)- |sp> -(O/2)- |gp>, with the s-containing states
/// detuned by Delta = delta_offset - V (resonant pair at delta_offset = 0).
/// Pulse time 1/sqrt(Omega^2 + delta^2) us. Exact eigenbasis propagation.
struct PulseResult {
    double theta_hop;          // arcsin of the final |<gp|psi>|
    double max_s_population;   // peak of P(ps) + P(sp) during the pulse
    double final_transfer;     // |<gp|psi(T)>|^2
    double norm_error;
};

PulseResult pulse_dynamics(const RydbergParams& params, double v_mhz, double delta_offset_mhz,
                           int samples = 2001);

/// Same dynamics via fixed-step RK4; cross-check for the exact propagator.
PulseResult pulse_dynamics_rk4(const RydbergParams& params, double v_mhz, double delta_offset_mhz,
                               int steps = 200000);

/// Effective detuning offset that realizes a hop angle of pi/4 (Hadamard
/// step) at the given parameters, by bisection on pulse_dynamics.
double hadamard_offset_mhz(const RydbergParams& params, double v_mhz);

// ── site selectivity ─────────────────────────────────────────────────────────

/// Peak s population of one candidate site over the 2pi pulse in the
/// aggregate level-shift picture: a driven two-level with the site's s state
/// shifted by its own V, so its detuning is V_site - V_target. Numerical
/// sampling of the exact two-level evolution.
double shifted_site_peak(const RydbergParams& params, double v_target_mhz, double v_site_mhz,
                         int samples = 4001);

struct SelectivityRow {
    int site;
    double distance_um;
    double phi;
    double v_mhz;
    double peak_population;
};

/// Scan every site of the table against a walker site, with the laser tuned
/// resonant to the target site (Delta = -V_target) and the quantization axis
/// along the walker-target displacement.
std::vector<SelectivityRow> site_selectivity_scan(const lattice::SiteTable& table, int walker,
                                                  int target, const RydbergParams& params,
                                                  const DipoleComponents& dipoles = {});

// ── leakage infidelity of a coupling tessellation ────────────────────────────

struct NeighborTerm {
    int site;
    double v_mhz;
    double denom_mhz;  // V_ij - V_ik
    double term;       // (Omega^2/4) / denom^2
};

struct LeakageResult {
    double infidelity;
    std::vector<NeighborTerm> terms;
};

/// Analytic leakage: sum over the shell of (Omega^2/4)/(V_ij - V_ik)^2 with
/// the quantization axis along the pair. The shell is the `shell_size`
/// nearest sites to the walker (ties by index), excluding the pair itself.
/// Throws resonant_collision_error when a neighbour is degenerate with the
/// target coupling.
LeakageResult leakage_infidelity(const lattice::SiteTable& table, int walker, int target,
                                 const RydbergParams& params, int shell_size = 8,
                                 const DipoleComponents& dipoles = {});

/// Time-averaged off-target excited population over the 2pi pulse in the
/// multi-site level-shift model (walker fixed, each shell site's s level
/// shifted by its own V). This is the numerical counterpart of the analytic
/// sum; the modulation of the resonant transfer splits the drive into
/// sidebands, which is what makes the quarter-power analytic form correct.
double leakage_numeric(const lattice::SiteTable& table, int walker, int target,
                       const RydbergParams& params, int shell_size = 8,
                       const DipoleComponents& dipoles = {}, int samples = 8192);

std::vector<int> neighbor_shell(const lattice::SiteTable& table, int walker, int target,
                                int shell_size);

/// Largest Omega/|Delta| whose analytic leakage stays within 1 - fidelity,
/// found by bisection. Throws resonant_collision_error through from the
/// analytic sum when the geometry is degenerate.
double required_omega_over_delta(const lattice::SiteTable& table, int walker, int target,
                                 const RydbergParams& params, double fidelity,
                                 int shell_size = 8);

// ── error budget ─────────────────────────────────────────────────────────────

struct BudgetEntry {
    std::string source;
    double p_s;
    std::string note;
    std::map<std::string, double> inputs;
};

struct ErrorBudget {
    std::vector<BudgetEntry> entries;
    const BudgetEntry& entry(const std::string& source) const;
};

/// Dephasing probability of one Hadamard step under laser phase noise,
/// from a Lindblad integration of the pulse chain with collapse operators
/// sqrt(gamma) |s><s| on each atom. P_s = 1 - <ideal| rho |ideal>.
double laser_noise_ps(const RydbergParams& params, double v_mhz, double gamma_over_omega);

/// Dephasing probability of one Hadamard step under detuning errors drawn
/// from a distribution of relative half-width rel_width = E(delta)/Omega
/// (uniform by default, Gaussian with that sigma optionally).
double detuning_error_ps(const RydbergParams& params, double v_mhz, double rel_width,
                         bool gaussian = false, int quad_points = 65);

double doppler_speed_mm_s(const RydbergParams& params);
double doppler_detuning_mhz(const RydbergParams& params, double speed_mm_s);

/// The five-entry stroboscopic error budget. The intermediate-scattering
/// entry reports both the closed-form value and the commonly quoted
/// 2.5e-4 reference value; they disagree by more than an order of magnitude
/// and the discrepancy is flagged in the note rather than reconciled.
ErrorBudget error_budget(const RydbergParams& params);

// ── step budget ──────────────────────────────────────────────────────────────

struct StepBudget {
    double step_time_us;
    double tau_us;                  // lifetime at this principal number
    double model_loss_per_step;     // step_time/tau * mean excited population
    double model_survival;
    double calibrated_loss_per_step;  // reproduces 40% survival at 210 steps (n = 70)
    double calibrated_survival;
    double calibration_factor;      // calibrated / model at these parameters
    double headline_steps;          // 210 (n/70)
    double op_fidelity_compound;    // F^steps, tracked separately from loss
    double survival_with_readout;   // init/detection multipliers applied
};

StepBudget step_budget(const RydbergParams& params, double op_fidelity, int steps,
                       double mean_excited_population = 1.5);

}  // namespace rydqw::micro
