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

#include "rydqw/walk.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace rydqw::walk {

double WalkerState::norm_sq() const {
    double n = 0.0;
    for (const cxd& a : amp) n += std::norm(a);
    return n;
}

WalkerState WalkerState::basis(int n_sites, int site) {
    if (site < 0 || site >= n_sites) throw std::invalid_argument("basis site out of range");
    WalkerState s;
    s.amp.assign(n_sites, cxd{0.0, 0.0});
    s.amp[site] = cxd{1.0, 0.0};
    return s;
}

WalkerState WalkerState::superposition(int n_sites, const std::vector<std::pair<int, cxd>>& terms) {
    WalkerState s;
    s.amp.assign(n_sites, cxd{0.0, 0.0});
    for (const auto& [site, a] : terms) {
        if (site < 0 || site >= n_sites) throw std::invalid_argument("site out of range");
        s.amp[site] += a;
    }
    const double n = std::sqrt(s.norm_sq());
    if (n == 0.0) throw std::invalid_argument("superposition has zero norm");
    for (cxd& a : s.amp) a /= n;
    return s;
}

Tessellation::Tessellation(PairSet pairs, double uniform_angle)
    : pairs_(std::move(pairs)), angles_(pairs_.size(), uniform_angle) {
    validate();
    cos_.reserve(angles_.size());
    sin_.reserve(angles_.size());
    for (double t : angles_) {
        cos_.push_back(std::cos(t));
        sin_.push_back(std::sin(t));
    }
}

Tessellation::Tessellation(PairSet pairs, std::vector<double> per_pair_angles)
    : pairs_(std::move(pairs)), angles_(std::move(per_pair_angles)) {
    if (angles_.size() != pairs_.size())
        throw std::invalid_argument("angle count does not match pair count");
    validate();
    cos_.reserve(angles_.size());
    sin_.reserve(angles_.size());
    for (double t : angles_) {
        if (!std::isfinite(t)) throw std::invalid_argument("non-finite hopping angle");
        cos_.push_back(std::cos(t));
        sin_.push_back(std::sin(t));
    }
}

void Tessellation::validate(int) const {
    std::unordered_set<std::int32_t> seen;
    seen.reserve(2 * pairs_.size());
    for (const auto& p : pairs_) {
        if (p[0] == p[1]) throw std::invalid_argument("pair couples a site to itself");
        if (!seen.insert(p[0]).second || !seen.insert(p[1]).second)
            throw std::invalid_argument("overlapping pairs: not a tessellation");
    }
}

void Tessellation::apply(WalkerState& state) const {
    const cxd i_unit{0.0, 1.0};
    for (std::size_t n = 0; n < pairs_.size(); ++n) {
        const auto [u, v] = pairs_[n];
        const cxd au = state.amp[u];
        const cxd av = state.amp[v];
        state.amp[u] = cos_[n] * au + i_unit * sin_[n] * av;
        state.amp[v] = i_unit * sin_[n] * au + cos_[n] * av;
    }
}

void Tessellation::apply_inverse(WalkerState& state) const {
    const cxd mi{0.0, -1.0};
    for (std::size_t n = 0; n < pairs_.size(); ++n) {
        const auto [u, v] = pairs_[n];
        const cxd au = state.amp[u];
        const cxd av = state.amp[v];
        state.amp[u] = cos_[n] * au + mi * sin_[n] * av;
        state.amp[v] = mi * sin_[n] * au + cos_[n] * av;
    }
}

WalkerState apply_tessellation(const WalkerState& state, const Tessellation& t) {
    WalkerState out = state;
    t.apply(out);
    return out;
}

WalkerState coin_rotation(const WalkerState& state, const SiteTable& table, double theta,
                          const BoundaryTopology& topo) {
    Tessellation coin(lattice::tessellation_pairs(table, Tess::X0, topo), theta);
    return apply_tessellation(state, coin);
}

namespace {

Tess transition_partner(Transition kind) {
    switch (kind) {
        case Transition::T:
        case Transition::Tx: return Tess::X1;
        case Transition::Ty: return Tess::XY0;
        case Transition::Tz: return Tess::XZ0;
        case Transition::Txy: return Tess::XY1;
        case Transition::Txz: return Tess::XZ1;
        case Transition::Txyz: return Tess::XYZ1;
    }
    throw std::logic_error("bad transition kind");
}

}  // namespace

WalkerState transition_operator(const WalkerState& state, const SiteTable& table,
                                const BoundaryTopology& topo, Transition kind) {
    const double half = pi / 2.0;
    Tessellation coin(lattice::tessellation_pairs(table, Tess::X0, topo), half);
    Tessellation swap(lattice::tessellation_pairs(table, transition_partner(kind), topo), half);
    WalkerState out = state;
    coin.apply(out);
    swap.apply(out);
    return out;
}

WalkerState boundary_step(const WalkerState& state, const PairSet& seam, double theta) {
    if (seam.empty()) return state;
    Tessellation t(seam, theta);
    return apply_tessellation(state, t);
}

double angle_for_pair(const AnglePolicy& policy, const SiteTable& table,
                      const lattice::SitePair& p) {
    if (std::holds_alternative<UniformAngle>(policy))
        return std::get<UniformAngle>(policy).theta;
    const auto& a = table.site(p[0]);
    const auto& b = table.site(p[1]);
    if (std::holds_alternative<TanhAngle>(policy)) {
        const auto& t = std::get<TanhAngle>(policy);
        const double mid = 0.5 * (a.pos[t.axis] + b.pos[t.axis]) - t.center_um;
        return 0.5 * (t.theta_minus + t.theta_plus) +
               0.5 * (t.theta_plus - t.theta_minus) * std::tanh(mid / t.width_um);
    }
    const auto& s = std::get<StripeAngle>(policy);
    const double mid = 0.5 * (a.cell[s.axis] + b.cell[s.axis]);
    return (mid > s.lo && mid <= s.hi) ? s.theta_in : s.theta_out;
}

namespace {

Tessellation make_tessellation(const SiteTable& table, const BoundaryTopology& topo, Tess kind,
                               const AnglePolicy& policy) {
    PairSet pairs = lattice::tessellation_pairs(table, kind, topo);
    if (std::holds_alternative<UniformAngle>(policy))
        return Tessellation(std::move(pairs), std::get<UniformAngle>(policy).theta);
    std::vector<double> angles;
    angles.reserve(pairs.size());
    for (const auto& p : pairs) angles.push_back(angle_for_pair(policy, table, p));
    return Tessellation(std::move(pairs), std::move(angles));
}

}  // namespace

CompiledProgram::CompiledProgram(const SiteTable& table, const BoundaryTopology& topo,
                                 const std::vector<StepDesc>& steps)
    : n_sites_(table.size()) {
    const double half = pi / 2.0;
    for (const StepDesc& d : steps) {
        if (std::holds_alternative<TessStep>(d)) {
            const auto& s = std::get<TessStep>(d);
            tess_.push_back(make_tessellation(table, topo, s.kind, s.angle));
        } else if (std::holds_alternative<CoinStep>(d)) {
            const auto& s = std::get<CoinStep>(d);
            tess_.push_back(make_tessellation(table, topo, Tess::X0, s.angle));
        } else if (std::holds_alternative<ShiftStep>(d)) {
            const auto kind = std::get<ShiftStep>(d).kind;
            tess_.push_back(make_tessellation(table, topo, Tess::X0, UniformAngle{half}));
            tess_.push_back(
                make_tessellation(table, topo, transition_partner(kind), UniformAngle{half}));
        } else {
            const auto& s = std::get<BoundaryStepDesc>(d);
            PairSet seam = lattice::seam_pairs(table, topo, s.axis);
            if (!seam.empty()) tess_.emplace_back(std::move(seam), s.theta);
        }
    }
}

void CompiledProgram::apply_period(WalkerState& state) const {
    for (const Tessellation& t : tess_) t.apply(state);
}

Trajectory run_program(const WalkerState& initial, const CompiledProgram& program, int periods,
                       const RunOptions& opts) {
    if (periods < 0) throw std::invalid_argument("periods must be non-negative");
    if (initial.size() != program.sites())
        throw std::invalid_argument("state size does not match program");

    Trajectory traj;
    WalkerState state = initial;
    auto record = [&](const WalkerState& s) {
        if (opts.keep_distributions) {
            std::vector<double> p(s.amp.size());
            for (std::size_t i = 0; i < s.amp.size(); ++i) p[i] = std::norm(s.amp[i]);
            traj.probabilities.push_back(std::move(p));
        }
        traj.norms.push_back(s.norm_sq());
    };
    record(state);
    for (int step = 1; step <= periods; ++step) {
        program.apply_period(state);
        if (step % opts.record_every == 0) record(state);
    }
    traj.final_state = std::move(state);
    return traj;
}

void write_trajectory_csv(const Trajectory& traj, int record_every, std::ostream& out) {
    out << "step,site,probability\n";
    char buf[64];
    for (std::size_t r = 0; r < traj.probabilities.size(); ++r) {
        const auto& dist = traj.probabilities[r];
        for (std::size_t s = 0; s < dist.size(); ++s) {
            std::snprintf(buf, sizeof(buf), "%zu,%zu,%.17g\n", r * record_every, s, dist[s]);
            out << buf;
        }
    }
}

}  // namespace rydqw::walk
