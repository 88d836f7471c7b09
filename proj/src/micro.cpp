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

#include "rydqw/micro.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rydqw::micro {

namespace {

constexpr double hbar = 1.054571817e-34;      // J s
constexpr double amu_kg = 1.66053906660e-27;  // kg
const cxd iu{0.0, 1.0};

}  // namespace

double RydbergParams::c3_zero_ghz_um3() const {
    const double r = principal_n / 70.0;
    return c3_base_ghz_um3 * r * r * r;
}

double RydbergParams::a_min_um() const {
    const double r = principal_n / 70.0;
    return 0.95 * r * r;
}

double exchange_strength(double r_um, double phi, const RydbergParams& params,
                         const DipoleComponents& d) {
    if (r_um <= 0.0) throw std::invalid_argument("interatomic distance must be positive");
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double f1 = 0.5 * (1.0 - 3.0 * c * c);
    const double f2 = 3.0 / std::sqrt(2.0) * s * c;
    const double f3 = 1.5 * s * s;
    auto channels = [&](double g1, double g2, double g3) {
        const auto& [p1, m1, z1] = d.atom1;
        const auto& [p2, m2, z2] = d.atom2;
        return g1 * (p1 * m2 + m1 * p2 + 2.0 * z1 * z2) +
               g2 * (p1 * z2 - m1 * z2 + z1 * p2 - z1 * m2) - g3 * (p1 * p2 - m1 * m2);
    };
    const double raw_zero = channels(-1.0, 0.0, 0.0);  // f1(0) = -1, f2(0) = f3(0) = 0
    if (raw_zero == 0.0)
        throw std::invalid_argument("dipole components give no coupling on the quantization axis");
    const double c3_mhz_um3 = params.c3_zero_ghz_um3() * 1e3;
    const double scale = c3_mhz_um3 / raw_zero;
    return scale * channels(f1, f2, f3) / (r_um * r_um * r_um);
}

bool below_leroy(double r_um, const RydbergParams& params) { return r_um < params.a_min_um(); }

// ── exact propagation of small Hermitian systems ────────────────────────────

namespace {

/// psi(t) = U exp(-i 2 pi Lambda t) U^dag psi0 for a cyclic-frequency H (MHz).
class ExactPropagator {
  public:
    explicit ExactPropagator(const Eigen::MatrixXcd& h_cyclic) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h_cyclic);
        u_ = es.eigenvectors();
        evals_ = es.eigenvalues();
    }

    Eigen::VectorXcd at(double t_us, const Eigen::VectorXcd& psi0) const {
        Eigen::VectorXcd c = u_.adjoint() * psi0;
        for (int i = 0; i < c.size(); ++i) c(i) *= std::exp(-iu * (two_pi * evals_(i) * t_us));
        return u_ * c;
    }

  private:
    Eigen::MatrixXcd u_;
    Eigen::VectorXd evals_;
};

Eigen::MatrixXcd pulse_chain_hamiltonian(const RydbergParams& params, double v_mhz,
                                         double delta_offset_mhz) {
    const double g = 0.5 * params.omega_mhz;
    const double delta = delta_offset_mhz - v_mhz;  // s-state detuning, resonant at offset 0
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(4, 4);
    h(0, 1) = g;
    h(1, 0) = g;
    h(1, 2) = v_mhz;
    h(2, 1) = v_mhz;
    h(2, 3) = g;
    h(3, 2) = g;
    h(1, 1) = delta;
    h(2, 2) = delta;
    return h;
}

double pulse_time_us(const RydbergParams& params, double delta_offset_mhz) {
    return 1.0 / std::hypot(params.omega_mhz, delta_offset_mhz);
}

}  // namespace

PulseResult pulse_dynamics(const RydbergParams& params, double v_mhz, double delta_offset_mhz,
                           int samples) {
    const Eigen::MatrixXcd h = pulse_chain_hamiltonian(params, v_mhz, delta_offset_mhz);
    const ExactPropagator prop(h);
    const double t_end = pulse_time_us(params, delta_offset_mhz);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(4);
    psi0(0) = 1.0;

    PulseResult res{};
    double peak = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const Eigen::VectorXcd psi = prop.at(t_end * i / samples, psi0);
        peak = std::max(peak, std::norm(psi(1)) + std::norm(psi(2)));
        if (i == samples) {
            res.final_transfer = std::norm(psi(3));
            res.theta_hop = std::asin(std::min(1.0, std::abs(psi(3))));
            res.norm_error = std::abs(psi.squaredNorm() - 1.0);
        }
    }
    res.max_s_population = peak;
    return res;
}

PulseResult pulse_dynamics_rk4(const RydbergParams& params, double v_mhz, double delta_offset_mhz,
                               int steps) {
    const Eigen::MatrixXcd h = two_pi * pulse_chain_hamiltonian(params, v_mhz, delta_offset_mhz);
    const double t_end = pulse_time_us(params, delta_offset_mhz);
    const double dt = t_end / steps;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
    psi(0) = 1.0;
    auto rhs = [&](const Eigen::VectorXcd& p) { return (-iu * (h * p)).eval(); };
    PulseResult res{};
    double peak = 0.0;
    for (int i = 0; i < steps; ++i) {
        const Eigen::VectorXcd k1 = rhs(psi);
        const Eigen::VectorXcd k2 = rhs(psi + 0.5 * dt * k1);
        const Eigen::VectorXcd k3 = rhs(psi + 0.5 * dt * k2);
        const Eigen::VectorXcd k4 = rhs(psi + dt * k3);
        psi += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        peak = std::max(peak, std::norm(psi(1)) + std::norm(psi(2)));
    }
    res.max_s_population = peak;
    res.final_transfer = std::norm(psi(3));
    res.theta_hop = std::asin(std::min(1.0, std::abs(psi(3))));
    res.norm_error = std::abs(psi.squaredNorm() - 1.0);
    return res;
}

double hadamard_offset_mhz(const RydbergParams& params, double v_mhz) {
    const double target = pi / 4.0;
    double lo = 0.0;                       // theta(0) = pi/2
    double hi = 30.0 * params.omega_mhz;   // far detuned: theta ~ 0
    auto theta = [&](double d) { return pulse_dynamics(params, v_mhz, d, 801).theta_hop; };
    if (theta(hi) > target) throw std::runtime_error("hop angle does not fall below pi/4 in range");
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (theta(mid) > target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double shifted_site_peak(const RydbergParams& params, double v_target_mhz, double v_site_mhz,
                         int samples) {
    const double g = 0.5 * params.omega_mhz;
    const double delta = v_site_mhz - v_target_mhz;  // Delta = -V_target plus this site's shift
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
    h(0, 1) = g;
    h(1, 0) = g;
    h(1, 1) = delta;
    const ExactPropagator prop(h);
    const double t_end = 1.0 / params.omega_mhz;  // 2pi pulse of the resonant target
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(2);
    psi0(0) = 1.0;
    double peak = 0.0;
    for (int i = 1; i <= samples; ++i)
        peak = std::max(peak, std::norm(prop.at(t_end * i / samples, psi0)(1)));
    return peak;
}

namespace {

struct PairGeometry {
    double distance;
    double phi;  // against the walker->target axis
};

PairGeometry geometry(const lattice::SiteTable& table, int walker, int target, int site) {
    const auto& w = table.site(walker).pos;
    const auto& t = table.site(target).pos;
    const auto& s = table.site(site).pos;
    std::array<double, 3> axis{}, rel{};
    double an = 0.0, rn = 0.0, dot = 0.0;
    for (int a = 0; a < 3; ++a) {
        axis[a] = t[a] - w[a];
        rel[a] = s[a] - w[a];
        an += axis[a] * axis[a];
        rn += rel[a] * rel[a];
        dot += axis[a] * rel[a];
    }
    an = std::sqrt(an);
    rn = std::sqrt(rn);
    const double c = std::clamp(dot / (an * rn), -1.0, 1.0);
    return {rn, std::acos(c)};
}

}  // namespace

std::vector<SelectivityRow> site_selectivity_scan(const lattice::SiteTable& table, int walker,
                                                  int target, const RydbergParams& params,
                                                  const DipoleComponents& dipoles) {
    const auto tgt = geometry(table, walker, target, target);
    const double v_target = exchange_strength(tgt.distance, 0.0, params, dipoles);
    std::vector<SelectivityRow> rows;
    rows.reserve(table.size() - 1);
    for (int s = 0; s < table.size(); ++s) {
        if (s == walker) continue;
        const auto g = geometry(table, walker, target, s);
        const double v = exchange_strength(g.distance, g.phi, params, dipoles);
        rows.push_back({s, g.distance, g.phi, v,
                        shifted_site_peak(params, v_target, v)});
    }
    return rows;
}

std::vector<int> neighbor_shell(const lattice::SiteTable& table, int walker, int target,
                                int shell_size) {
    std::vector<int> order;
    order.reserve(table.size());
    for (int s = 0; s < table.size(); ++s)
        if (s != walker && s != target) order.push_back(s);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const double da = geometry(table, walker, target, a).distance;
        const double db = geometry(table, walker, target, b).distance;
        if (da != db) return da < db;
        return a < b;
    });
    if (static_cast<int>(order.size()) > shell_size) order.resize(shell_size);
    return order;
}

LeakageResult leakage_infidelity(const lattice::SiteTable& table, int walker, int target,
                                 const RydbergParams& params, int shell_size,
                                 const DipoleComponents& dipoles) {
    const auto tgt = geometry(table, walker, target, target);
    const double v_target = exchange_strength(tgt.distance, 0.0, params, dipoles);
    LeakageResult res{0.0, {}};
    for (int s : neighbor_shell(table, walker, target, shell_size)) {
        const auto g = geometry(table, walker, target, s);
        const double v = exchange_strength(g.distance, g.phi, params, dipoles);
        const double denom = v_target - v;
        if (std::abs(denom) < 1e-9 * std::abs(v_target))
            throw resonant_collision_error("site " + std::to_string(s) +
                                           " is degenerate with the addressed pair");
        const double term = 0.25 * params.omega_mhz * params.omega_mhz / (denom * denom);
        res.terms.push_back({s, v, denom, term});
        res.infidelity += term;
    }
    return res;
}

double leakage_numeric(const lattice::SiteTable& table, int walker, int target,
                       const RydbergParams& params, int shell_size,
                       const DipoleComponents& dipoles, int samples) {
    const auto tgt = geometry(table, walker, target, target);
    const double v_target = exchange_strength(tgt.distance, 0.0, params, dipoles);
    const std::vector<int> shell = neighbor_shell(table, walker, target, shell_size);

    const int n = static_cast<int>(shell.size()) + 2;  // |pg>, target, shell sites
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    const double g = 0.5 * params.omega_mhz;
    h(0, 1) = g;
    h(1, 0) = g;  // target, detuning 0
    for (int m = 0; m < static_cast<int>(shell.size()); ++m) {
        const auto geo = geometry(table, walker, target, shell[m]);
        const double v = exchange_strength(geo.distance, geo.phi, params, dipoles);
        h(0, m + 2) = g;
        h(m + 2, 0) = g;
        h(m + 2, m + 2) = v - v_target;
    }
    const ExactPropagator prop(h);
    const double t_end = 1.0 / params.omega_mhz;
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(n);
    psi0(0) = 1.0;
    double acc = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const Eigen::VectorXcd psi = prop.at(t_end * i / samples, psi0);
        double off = 0.0;
        for (int m = 2; m < n; ++m) off += std::norm(psi(m));
        acc += off;
    }
    return acc / samples;
}

double required_omega_over_delta(const lattice::SiteTable& table, int walker, int target,
                                 const RydbergParams& params, double fidelity, int shell_size) {
    if (fidelity <= 0.0 || fidelity >= 1.0)
        throw std::invalid_argument("fidelity must lie in (0, 1)");
    const auto tgt = geometry(table, walker, target, target);
    const double v_target = exchange_strength(tgt.distance, 0.0, params, DipoleComponents{});
    const double budget = 1.0 - fidelity;

    auto leakage_at = [&](double ratio) {
        RydbergParams p = params;
        p.omega_mhz = ratio * std::abs(v_target);
        return leakage_infidelity(table, walker, target, p, shell_size).infidelity;
    };
    double lo = 1e-9, hi = 10.0;
    if (leakage_at(hi) <= budget) return hi;
    if (leakage_at(lo) > budget)
        throw std::runtime_error("fidelity unreachable at any Omega/Delta");
    for (int it = 0; it < 200; ++it) {
        const double mid = std::sqrt(lo * hi);
        (leakage_at(mid) <= budget ? lo : hi) = mid;
    }
    return std::sqrt(lo * hi);
}

// ── error budget ─────────────────────────────────────────────────────────────

const BudgetEntry& ErrorBudget::entry(const std::string& source) const {
    for (const auto& e : entries)
        if (e.source == source) return e;
    throw std::out_of_range("no budget entry named " + source);
}

namespace {

/// Lindblad evolution of the 4-state pulse chain via the vectorized
/// generator exponential; collapse operators are s-state projectors.
Eigen::MatrixXcd lindblad_propagate(const Eigen::MatrixXcd& h_cyclic, double gamma_cyclic_mhz,
                                    double t_us, const Eigen::MatrixXcd& rho0) {
    const int n = static_cast<int>(h_cyclic.rows());
    const Eigen::MatrixXcd h = two_pi * h_cyclic;
    const double gamma = two_pi * gamma_cyclic_mhz;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);

    auto kron = [&](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
        Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        return out;
    };

    Eigen::MatrixXcd gen = -iu * (kron(id, h) - kron(h.transpose(), id));
    for (int s : {1, 2}) {  // |ps><ps| and |sp><sp|
        Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
        p(s, s) = 1.0;
        gen += gamma * (kron(p, p) - 0.5 * (kron(id, p) + kron(p.transpose(), id)));
    }
    gen *= t_us;
    const Eigen::MatrixXcd u = gen.exp();

    Eigen::VectorXcd vec(n * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) vec(j * n + i) = rho0(i, j);
    vec = u * vec;
    Eigen::MatrixXcd rho(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) rho(i, j) = vec(j * n + i);
    return rho;
}

}  // namespace

double laser_noise_ps(const RydbergParams& params, double v_mhz, double gamma_over_omega) {
    if (gamma_over_omega < 0.0) throw std::invalid_argument("noise rate must be non-negative");
    const double offset = hadamard_offset_mhz(params, v_mhz);
    const Eigen::MatrixXcd h = pulse_chain_hamiltonian(params, v_mhz, offset);
    const double t_end = pulse_time_us(params, offset);

    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(4);
    psi0(0) = 1.0;
    const Eigen::VectorXcd ideal = ExactPropagator(h).at(t_end, psi0);
    const Eigen::MatrixXcd rho0 = psi0 * psi0.adjoint();
    const Eigen::MatrixXcd rho =
        lindblad_propagate(h, gamma_over_omega * params.omega_mhz, t_end, rho0);
    const double fid = std::real(ideal.adjoint() * rho * ideal);
    return std::clamp(1.0 - fid, 0.0, 1.0);
}

double detuning_error_ps(const RydbergParams& params, double v_mhz, double rel_width,
                         bool gaussian, int quad_points) {
    if (rel_width < 0.0) throw std::invalid_argument("detuning width must be non-negative");
    if (rel_width == 0.0) return 0.0;
    const double offset = hadamard_offset_mhz(params, v_mhz);
    const double t_end = pulse_time_us(params, offset);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(4);
    psi0(0) = 1.0;
    const Eigen::VectorXcd ideal =
        ExactPropagator(pulse_chain_hamiltonian(params, v_mhz, offset)).at(t_end, psi0);

    const double width = rel_width * params.omega_mhz;
    double mean_fid = 0.0, weight_sum = 0.0;
    for (int q = 0; q < quad_points; ++q) {
        // midpoint rule over [-1, 1]; uniform weights or a truncated Gaussian
        const double x = -1.0 + (2.0 * q + 1.0) / quad_points;
        const double derr = gaussian ? 3.0 * width * x : width * x;
        const double w = gaussian ? std::exp(-0.5 * (3.0 * x) * (3.0 * x)) : 1.0;
        const Eigen::VectorXcd psi =
            ExactPropagator(pulse_chain_hamiltonian(params, v_mhz, offset + derr))
                .at(t_end, psi0);
        mean_fid += w * std::norm(ideal.adjoint() * psi);
        weight_sum += w;
    }
    return std::clamp(1.0 - mean_fid / weight_sum, 0.0, 1.0);
}

double doppler_speed_mm_s(const RydbergParams& params) {
    const double omega_tr = two_pi * params.trap_freq_khz * 1e3;  // rad/s
    const double mass = params.mass_amu * amu_kg;
    return std::sqrt(hbar * omega_tr / (2.0 * mass)) * 1e3;
}

double doppler_detuning_mhz(const RydbergParams& params, double speed_mm_s) {
    const double inv_m = 1.0 / (params.lambda1_nm * 1e-9) - 1.0 / (params.lambda2_nm * 1e-9);
    return std::abs(inv_m) * (speed_mm_s * 1e-3) * 1e-6;  // counter-propagating legs
}

ErrorBudget error_budget(const RydbergParams& params) {
    ErrorBudget budget;
    const double v = params.c3_zero_ghz_um3() * 1e3 / 27.0;  // 3 um lattice constant

    {
        const double rel = params.laser_linewidth_khz * 1e-3 / params.omega_mhz;
        BudgetEntry e{"laser_noise", laser_noise_ps(params, v, rel),
                      "Lindblad s-projector dephasing over one Hadamard step",
                      {{"gamma_over_omega", rel}, {"v_mhz", v}}};
        budget.entries.push_back(std::move(e));
    }
    {
        const double ratio = params.omega1_mhz / params.omega2_mhz;
        const double formula =
            pi * params.gamma_p_mhz / (2.0 * params.delta_p_mhz) * (ratio + 1.0 / ratio);
        BudgetEntry e{"intermediate_scattering", formula,
                      "closed form disagrees with the quoted 2.5e-4 reference value by more "
                      "than an order of magnitude; both reported, not reconciled",
                      {{"formula_value", formula},
                       {"quoted_value", 2.5e-4},
                       {"discrepancy_factor", formula / 2.5e-4}}};
        budget.entries.push_back(std::move(e));
    }
    {
        const double offset = hadamard_offset_mhz(params, v);
        const double t_step = pulse_time_us(params, offset);
        const double p = t_step * 1e-6 / params.trap_coherence_s;
        BudgetEntry e{"trap_scattering", p, "single-step time over the lattice coherence time",
                      {{"step_time_us", t_step}, {"coherence_s", params.trap_coherence_s}}};
        budget.entries.push_back(std::move(e));
    }
    {
        const double sigma_um = params.ground_spread_nm * 1e-3;
        const double a_um = 3.0;
        const double e_v = 12.0 * v * (sigma_um / a_um) * (sigma_um / a_um);
        const double rel = e_v / params.omega_mhz;
        BudgetEntry e{"confinement", detuning_error_ps(params, v, rel),
                      "interaction uncertainty from the motional ground-state spread",
                      {{"e_v_mhz", e_v}, {"e_v_over_omega", rel}}};
        budget.entries.push_back(std::move(e));
    }
    {
        const double speed = doppler_speed_mm_s(params);
        const double detuning = doppler_detuning_mhz(params, speed);
        const double rel = detuning / params.omega_mhz;
        BudgetEntry e{"doppler", detuning_error_ps(params, v, rel),
                      "two-photon Doppler shift at the motional-ground-state velocity",
                      {{"speed_mm_s", speed},
                       {"doppler_detuning_mhz", detuning},
                       {"delta_over_omega", rel}}};
        budget.entries.push_back(std::move(e));
    }
    return budget;
}

StepBudget step_budget(const RydbergParams& params, double op_fidelity, int steps,
                       double mean_excited_population) {
    StepBudget out{};
    const double scale = params.principal_n / 70.0;
    out.step_time_us = 1.0 / params.omega_mhz;
    out.tau_us = params.tau_base_us * std::pow(scale, params.tau_exponent);
    out.model_loss_per_step = out.step_time_us / out.tau_us * mean_excited_population;
    out.model_survival = std::exp(-out.model_loss_per_step * steps);
    out.headline_steps = 210.0 * scale;

    // the reference survival point: 40% after 210 steps at n = 70, loss ~ 1/n
    const double loss70 = -std::log(0.4) / 210.0;
    out.calibrated_loss_per_step = loss70 / scale;
    out.calibrated_survival = std::exp(-out.calibrated_loss_per_step * steps);
    out.calibration_factor = out.calibrated_loss_per_step / out.model_loss_per_step;
    out.op_fidelity_compound = std::pow(op_fidelity, steps);
    out.survival_with_readout =
        out.calibrated_survival * params.init_fidelity * params.detection_fidelity;
    return out;
}

}  // namespace rydqw::micro
