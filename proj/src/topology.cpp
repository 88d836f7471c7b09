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

#include "rydqw/topology.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rydqw::topology {

namespace {
const cxd iu{0.0, 1.0};
}

Mat2 bloch_h0(double k, double abar1) {
    Mat2 h;
    h << 0.0, std::exp(iu * (k * abar1)), std::exp(-iu * (k * abar1)), 0.0;
    return h;
}

Mat2 bloch_h1(double k, double abar1) {
    Mat2 h;
    h << 0.0, std::exp(-iu * (k * (1.0 - abar1))), std::exp(iu * (k * (1.0 - abar1))), 0.0;
    return h;
}

Mat2 exp_ih(double theta, const Mat2& h) {
    return std::cos(theta) * Mat2::Identity() + iu * std::sin(theta) * h;
}

Mat2 floquet_operator(double k, double theta0, double theta1, double abar1, Frame frame) {
    const Mat2 h0 = bloch_h0(k, abar1);
    const Mat2 h1 = bloch_h1(k, abar1);
    switch (frame) {
        case Frame::Symmetric0:
            return exp_ih(0.5 * theta0, h0) * exp_ih(theta1, h1) * exp_ih(0.5 * theta0, h0);
        case Frame::Symmetric1:
            return exp_ih(0.5 * theta1, h1) * exp_ih(theta0, h0) * exp_ih(0.5 * theta1, h1);
        case Frame::Plain:
            return exp_ih(theta1, h1) * exp_ih(theta0, h0);
    }
    throw std::logic_error("bad frame");
}

double quasienergy(double theta0, double theta1, double k) {
    const double c =
        std::cos(theta0) * std::cos(theta1) - std::sin(theta0) * std::sin(theta1) * std::cos(k);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

BandExtremes band_extremes(double theta0, double theta1, int k_points) {
    double lo = pi, hi = 0.0;
    for (int l = 0; l < k_points; ++l) {
        const double k = two_pi * l / (k_points - 1);  // includes both 0 and 2 pi
        const double e = quasienergy(theta0, theta1, k);
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    return {lo, hi};
}

std::array<double, 2> eigenphases(const Mat2& w) {
    const cxd tr = w(0, 0) + w(1, 1);
    const cxd det = w(0, 0) * w(1, 1) - w(0, 1) * w(1, 0);
    const cxd disc = std::sqrt(tr * tr - 4.0 * det);
    const cxd l1 = 0.5 * (tr + disc);
    const cxd l2 = 0.5 * (tr - disc);
    return {std::arg(l1), std::arg(l2)};
}

namespace {

// In-plane axis of the symmetric-frame operator before normalization:
// W = cos E + i sin E (n.sigma), |vec| = |sin E|. Derived from the SU(2)
// composition of the three rotations; the half-split factor carries the
// cos-k cross term.
std::array<double, 2> axis_unnormalized(double k, double theta0, double theta1, double abar1,
                                        Frame frame) {
    const double alpha = k * abar1;           // H~0 axis: (cos a, -sin a)
    const double beta = k * (1.0 - abar1);    // H~1 axis: (cos b, +sin b)
    const double ck = std::cos(k);
    double ca, cb;
    if (frame == Frame::Symmetric0) {
        ca = std::sin(theta0) * std::cos(theta1) - (1.0 - std::cos(theta0)) * std::sin(theta1) * ck;
        cb = std::sin(theta1);
    } else if (frame == Frame::Symmetric1) {
        cb = std::sin(theta1) * std::cos(theta0) - (1.0 - std::cos(theta1)) * std::sin(theta0) * ck;
        ca = std::sin(theta0);
    } else {
        throw std::invalid_argument("closed-form axis exists for symmetric frames only");
    }
    return {ca * std::cos(alpha) + cb * std::cos(beta), -ca * std::sin(alpha) + cb * std::sin(beta)};
}

}  // namespace

std::array<double, 3> bloch_vector(double k, double theta0, double theta1, double abar1,
                                   Frame frame) {
    const auto [vx, vy] = axis_unnormalized(k, theta0, theta1, abar1, frame);
    const double norm = std::hypot(vx, vy);
    if (norm < 1e-12)
        throw gap_closed_error("quantization axis undefined: sin E = 0 at this k");
    return {vx / norm, vy / norm, 0.0};
}

std::array<double, 3> bloch_vector_numeric(const Mat2& w) {
    Eigen::ComplexEigenSolver<Mat2> es(w);
    const auto& vals = es.eigenvalues();
    const auto& vecs = es.eigenvectors();
    Mat2 heff = Mat2::Zero();
    double emax = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double phase = std::arg(vals(i));
        emax = std::max(emax, std::abs(phase));
        heff += phase * (vecs.col(i) * vecs.col(i).adjoint());
    }
    if (emax < 1e-12 || emax > pi - 1e-12)
        throw gap_closed_error("matrix log branch undefined at a gap closure");
    const double e = emax;
    const double nx = 0.5 * (heff(0, 1) + heff(1, 0)).real() / e;
    const double ny = 0.5 * ((heff(0, 1) - heff(1, 0)) * iu).real() / e;
    const double nz = 0.5 * (heff(0, 0) - heff(1, 1)).real() / e;
    return {nx, ny, nz};
}

WindingResult winding_number(double theta0, double theta1, double abar1, Frame frame,
                             int k_points, double gap_tol) {
    // gap check at both quasi-energy gap centres
    const BandExtremes ext = band_extremes(theta0, theta1);
    if (ext.e_min < gap_tol)
        throw gap_closed_error("gap closed at E = 0: topological transition");
    if (ext.e_max > pi - gap_tol)
        throw gap_closed_error("gap closed at E = pi: topological transition");

    std::vector<double> nx(k_points), ny(k_points);
    for (int l = 0; l < k_points; ++l) {
        const double k = two_pi * l / k_points;
        const auto [vx, vy] = axis_unnormalized(k, theta0, theta1, abar1, frame);
        const double norm = std::hypot(vx, vy);
        nx[l] = vx / norm;
        ny[l] = vy / norm;
    }
    // trapezoid of (n_x dk n_y - n_y dk n_x) with central differences; the
    // grid is periodic for abar1 = 0 and the wrap indices stay valid for the
    // gauge-shifted case because the axis is pi-antiperiodic at worst.
    double acc = 0.0;
    for (int l = 0; l < k_points; ++l) {
        const int lp = (l + 1) % k_points;
        const int lm = (l + k_points - 1) % k_points;
        acc += nx[l] * (ny[lp] - ny[lm]) - ny[l] * (nx[lp] - nx[lm]);
    }
    const double raw = acc / (2.0 * two_pi);
    return {static_cast<int>(std::lround(raw)), raw};
}

InvariantPair invariant_pair(double theta0, double theta1, int k_points, double gap_tol) {
    const WindingResult nu = winding_number(theta0, theta1, 0.0, Frame::Symmetric0, k_points, gap_tol);
    const WindingResult nup = winding_number(theta0, theta1, 0.0, Frame::Symmetric1, k_points, gap_tol);
    return {(nu.nu + nup.nu) / 2, (nu.nu - nup.nu) / 2};
}

namespace {

Mat2 shift_phases(walk::Transition kind, const std::array<double, 3>& k) {
    double d = 0.0;  // phase of the odd component; even gets the conjugate
    switch (kind) {
        case walk::Transition::T:
        case walk::Transition::Tx: d = k[0]; break;
        case walk::Transition::Ty: d = k[1]; break;
        case walk::Transition::Tz: d = k[2]; break;
        case walk::Transition::Txy: d = k[0] - k[1]; break;
        case walk::Transition::Txz: d = k[0] - k[2]; break;
        case walk::Transition::Txyz: d = k[0] - k[1] - k[2]; break;
    }
    Mat2 m = Mat2::Zero();
    m(0, 0) = std::exp(-iu * d);
    m(1, 1) = std::exp(iu * d);
    return m;
}

double uniform_angle_of(const walk::AnglePolicy& policy) {
    if (!std::holds_alternative<walk::UniformAngle>(policy))
        throw std::invalid_argument("momentum backend supports uniform angles only");
    return std::get<walk::UniformAngle>(policy).theta;
}

}  // namespace

Mat2 momentum_operator(const std::vector<walk::StepDesc>& steps, const std::array<double, 3>& k,
                       double abar1) {
    Mat2 w = Mat2::Identity();
    for (const walk::StepDesc& d : steps) {
        Mat2 m;
        if (std::holds_alternative<walk::TessStep>(d)) {
            const auto& s = std::get<walk::TessStep>(d);
            const double theta = uniform_angle_of(s.angle);
            switch (s.kind) {
                case walk::Tess::X0: m = exp_ih(theta, bloch_h0(k[0], abar1)); break;
                case walk::Tess::X1: m = exp_ih(theta, bloch_h1(k[0], abar1)); break;
                default:
                    throw std::invalid_argument(
                        "momentum backend represents x0/x1 tessellations, coins and shifts");
            }
        } else if (std::holds_alternative<walk::CoinStep>(d)) {
            m = exp_ih(uniform_angle_of(std::get<walk::CoinStep>(d).angle), bloch_h0(k[0], abar1));
        } else if (std::holds_alternative<walk::ShiftStep>(d)) {
            m = shift_phases(std::get<walk::ShiftStep>(d).kind, k);
        } else {
            throw std::invalid_argument("boundary steps have no momentum representation");
        }
        w = m * w;
    }
    return w;
}

GapPair band_gaps(const std::vector<walk::StepDesc>& steps, int dim, int k_points, double abar1) {
    GapPair g{pi, pi};
    std::array<double, 3> k{0.0, 0.0, 0.0};
    const int ny = dim >= 2 ? k_points : 1;
    const int nz = dim >= 3 ? k_points : 1;
    for (int iz = 0; iz < nz; ++iz) {
        if (dim >= 3) k[2] = two_pi * iz / k_points;
        for (int iy = 0; iy < ny; ++iy) {
            if (dim >= 2) k[1] = two_pi * iy / k_points;
            for (int ix = 0; ix < k_points; ++ix) {
                k[0] = two_pi * ix / k_points;
                for (double phase : eigenphases(momentum_operator(steps, k, abar1))) {
                    const double e = std::abs(phase);
                    g.gap0 = std::min(g.gap0, e);
                    g.gap_pi = std::min(g.gap_pi, pi - e);
                }
            }
        }
    }
    return g;
}

namespace {

Eigen::Vector2cd band_vector(const Mat2& w, int band, double gap_tol) {
    Eigen::ComplexEigenSolver<Mat2> es(w);
    int pick = -1;
    for (int i = 0; i < 2; ++i) {
        const double phase = std::arg(es.eigenvalues()(i));
        if (std::abs(phase) < gap_tol || std::abs(phase) > pi - gap_tol)
            throw gap_closed_error("band gap closed on the Chern grid");
        if ((band == 0) == (phase > 0.0)) pick = i;
    }
    if (pick < 0) throw gap_closed_error("bands are not particle-hole paired");
    return es.eigenvectors().col(pick).normalized();
}

}  // namespace

ChernResult chern_number(const std::vector<walk::StepDesc>& steps, int band, int grid,
                         double abar1, double gap_tol) {
    std::vector<Eigen::Vector2cd> u(static_cast<std::size_t>(grid) * grid);
    for (int iy = 0; iy < grid; ++iy)
        for (int ix = 0; ix < grid; ++ix) {
            const std::array<double, 3> k{two_pi * ix / grid, two_pi * iy / grid, 0.0};
            u[iy * grid + ix] = band_vector(momentum_operator(steps, k, abar1), band, gap_tol);
        }
    auto link = [&](int a, int b) {
        const cxd ov = u[a].dot(u[b]);  // Eigen dot conjugates the left factor
        return ov / std::abs(ov);
    };
    double total = 0.0;
    for (int iy = 0; iy < grid; ++iy)
        for (int ix = 0; ix < grid; ++ix) {
            const int x1 = (ix + 1) % grid;
            const int y1 = (iy + 1) % grid;
            const int p00 = iy * grid + ix;
            const int p10 = iy * grid + x1;
            const int p11 = y1 * grid + x1;
            const int p01 = y1 * grid + ix;
            const cxd plaquette = link(p00, p10) * link(p10, p11) * link(p11, p01) * link(p01, p00);
            total += std::arg(plaquette);
        }
    const double raw = total / two_pi;
    return {static_cast<int>(std::lround(raw)), raw};
}

double chern_riemann(const std::vector<walk::StepDesc>& steps, int band, int grid, double abar1) {
    const double h = two_pi / grid;
    auto n_at = [&](int ix, int iy) {
        const std::array<double, 3> k{two_pi * ix / grid, two_pi * iy / grid, 0.0};
        auto n = bloch_vector_numeric(momentum_operator(steps, k, abar1));
        if (band == 1)
            for (double& c : n) c = -c;
        return n;
    };
    double acc = 0.0;
    for (int iy = 0; iy < grid; ++iy)
        for (int ix = 0; ix < grid; ++ix) {
            const auto n = n_at(ix, iy);
            const auto nxp = n_at((ix + 1) % grid, iy);
            const auto nxm = n_at((ix + grid - 1) % grid, iy);
            const auto nyp = n_at(ix, (iy + 1) % grid);
            const auto nym = n_at(ix, (iy + grid - 1) % grid);
            std::array<double, 3> dx, dy;
            for (int c = 0; c < 3; ++c) {
                dx[c] = (nxp[c] - nxm[c]) / (2.0 * h);
                dy[c] = (nyp[c] - nym[c]) / (2.0 * h);
            }
            const double triple = n[0] * (dx[1] * dy[2] - dx[2] * dy[1]) +
                                  n[1] * (dx[2] * dy[0] - dx[0] * dy[2]) +
                                  n[2] * (dx[0] * dy[1] - dx[1] * dy[0]);
            acc += triple * h * h;
        }
    return acc / (4.0 * pi);
}

Eigen::MatrixXcd dense_period_operator(const walk::CompiledProgram& program) {
    const int n = program.sites();
    Eigen::MatrixXcd w(n, n);
    for (int j = 0; j < n; ++j) {
        walk::WalkerState e = walk::WalkerState::basis(n, j);
        program.apply_period(e);
        for (int i = 0; i < n; ++i) w(i, j) = e.amp[i];
    }
    return w;
}

}  // namespace rydqw::topology
