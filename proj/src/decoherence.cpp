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

#include "rydqw/decoherence.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace rydqw::decoherence {

DensityMatrix density_from_state(const walk::WalkerState& psi) {
    const int n = psi.size();
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = psi.amp[i];
    return v * v.adjoint();
}

namespace {

void conjugate_by_tessellation(DensityMatrix& rho, const walk::Tessellation& t) {
    const cxd iu{0.0, 1.0};
    const auto& pairs = t.pairs();
    const auto& angles = t.angles();
    for (std::size_t n = 0; n < pairs.size(); ++n) {
        const auto [u, v] = pairs[n];
        const double c = std::cos(angles[n]);
        const cxd is = iu * std::sin(angles[n]);
        // rho -> U rho, rows u and v
        Eigen::RowVectorXcd ru = rho.row(u);
        rho.row(u) = c * ru + is * rho.row(v);
        rho.row(v) = is * ru + c * rho.row(v);
        // rho -> rho U^dag, columns u and v
        Eigen::VectorXcd cu = rho.col(u);
        rho.col(u) = c * cu - is * rho.col(v);
        rho.col(v) = -is * cu + c * rho.col(v);
    }
}

void dephase(DensityMatrix& rho, double p_s) {
    if (p_s == 0.0) return;
    const double keep = 1.0 - p_s;
    const Eigen::VectorXcd d = rho.diagonal();
    rho *= keep;
    rho.diagonal() = d;
}

}  // namespace

void channel_step(DensityMatrix& rho, const walk::Tessellation& t, double p_s) {
    if (p_s < 0.0 || p_s > 1.0) throw std::invalid_argument("p_s must lie in [0, 1]");
    conjugate_by_tessellation(rho, t);
    dephase(rho, p_s);
}

DensityEvolver::DensityEvolver(const walk::CompiledProgram& program, double p_s, ChannelPer per)
    : program_(&program), p_s_(p_s), per_(per) {
    if (p_s < 0.0 || p_s > 1.0) throw std::invalid_argument("p_s must lie in [0, 1]");
}

void DensityEvolver::step_once(DensityMatrix& rho, std::size_t tess_index) const {
    conjugate_by_tessellation(rho, program_->tessellations()[tess_index]);
    if (per_ == ChannelPer::TessellationStep) dephase(rho, p_s_);
}

void DensityEvolver::step_period(DensityMatrix& rho) const {
    for (std::size_t i = 0; i < program_->tessellations().size(); ++i) step_once(rho, i);
    if (per_ == ChannelPer::Period) dephase(rho, p_s_);
}

double mean_square_displacement(const DensityMatrix& rho, int center_site) {
    double msd = 0.0;
    for (int x = 0; x < rho.rows(); ++x) {
        const double dx = x - center_site;
        msd += rho(x, x).real() * dx * dx;
    }
    return msd;
}

CoherenceFit coherence_length(const DensityMatrix& rho, const DensityMatrix& rho_ideal,
                              int center_site, double support_floor) {
    if (rho.rows() != rho_ideal.rows())
        throw std::invalid_argument("density matrices have different sizes");
    const int n = static_cast<int>(rho.rows());

    CoherenceFit fit;
    std::vector<std::pair<double, double>> pts;  // (|d|, log ratio)
    bool all_dead = true;
    for (int d = 1; d < n; ++d) {
        const int hi = center_site + d;
        const int lo = center_site - d;
        if (hi >= n || lo < 0) break;
        const double ref = std::abs(rho_ideal(hi, lo));
        if (ref <= support_floor) continue;
        const double val = std::abs(rho(hi, lo));
        if (val > support_floor * 1e-4) all_dead = false;
        if (val <= 0.0) continue;
        pts.emplace_back(static_cast<double>(d), std::log(val / ref));
    }

    if (pts.size() < 3) {
        if (all_dead) {
            fit.l_co = 0.0;  // fully projective limit: nothing survives the floor
            fit.points_used = 0;
            return fit;
        }
        fit.fit_failed = true;
        return fit;
    }

    // least squares slope of log ratio vs |d|
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = pts.size();
    const double denom = m * sxx - sx * sx;
    const double slope = (m * sxy - sx * sy) / denom;
    fit.points_used = static_cast<int>(pts.size());
    if (slope >= -1e-12) {
        fit.unbounded = true;
        fit.l_co = std::numeric_limits<double>::infinity();
    } else {
        fit.l_co = -1.0 / slope;
    }
    return fit;
}

namespace {

double loglog_slope(const std::vector<std::pair<double, double>>& pts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [u, v] : pts) {
        const double x = std::log(u);
        const double y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(pts.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace

TransportFit transport_fit(const std::vector<std::pair<double, double>>& series) {
    std::vector<std::pair<double, double>> ballistic, diffusive;
    for (const auto& [gt, msd] : series) {
        if (gt <= 0.0 || msd <= 0.0) continue;
        (gt <= 1.0 ? ballistic : diffusive).push_back({gt, msd});
    }
    TransportFit fit;
    fit.ballistic_points = static_cast<int>(ballistic.size());
    fit.diffusive_points = static_cast<int>(diffusive.size());
    if (ballistic.size() >= 4) {
        fit.ballistic_exponent = loglog_slope(ballistic);
        double num = 0.0, den = 0.0;
        for (const auto& [gt, msd] : ballistic) {
            num += msd * gt * gt;
            den += gt * gt * gt * gt;
        }
        fit.ballistic_coefficient = num / den;
    } else if (diffusive.size() < 4) {
        throw std::invalid_argument("transport series too short: need 4 points in a regime");
    }
    if (diffusive.size() >= 4) fit.diffusive_exponent = loglog_slope(diffusive);
    return fit;
}

void write_abs_matrix_csv(const DensityMatrix& rho, std::ostream& out) {
    char buf[64];
    out << "x";
    for (int j = 0; j < rho.cols(); ++j) out << ",xp" << j;
    out << '\n';
    for (int i = 0; i < rho.rows(); ++i) {
        out << i;
        for (int j = 0; j < rho.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), ",%.17g", std::abs(rho(i, j)));
            out << buf;
        }
        out << '\n';
    }
}

}  // namespace rydqw::decoherence
