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

#include <vector>

#include "rydqw/walk.hpp"

namespace rydqw::protocols {

using walk::AnglePolicy;
using walk::StepDesc;

/// The step lists below are written in application order (the rightmost
/// operator of the usual product notation first). One list is one period.

/// W1(theta1) W0(theta0)
std::vector<StepDesc> coinless_plain_1d(AnglePolicy theta0, AnglePolicy theta1);

/// W0(theta0/2) W1(theta1) W0(theta0/2) — the chiral-symmetric time frame.
std::vector<StepDesc> coinless_symmetric_1d(AnglePolicy theta0, AnglePolicy theta1);

/// T_y R(theta1) T_x R(theta0)
std::vector<StepDesc> coined_2d_simple(AnglePolicy theta0, AnglePolicy theta1);

/// T_x R(theta0) T_y R(theta1) T_xy R(theta0)
std::vector<StepDesc> coined_2d_chern(AnglePolicy theta0, AnglePolicy theta1);

/// T_x R(theta0) T_y R(theta1) T_z R(theta0)
std::vector<StepDesc> coined_3d(AnglePolicy theta0, AnglePolicy theta1);

/// W_x0 W_xy1 W_x1 W_xy0, uniform angle (pi/2 gives the anomalous cycle).
std::vector<StepDesc> anomalous_2d(double theta);

/// W_x1 W_xz1 W_x0 W_xz0 W_xy0 W_x0 W_xy1 W_x1, uniform angle.
std::vector<StepDesc> coinless_3d_insulator(double theta);

/// W_y0 W_y1 W_yb W_x0 W_x1 W_xb on a 2D tetramer lattice with boundary
/// steps supplying the surface identifications.
std::vector<StepDesc> surface_walk_2d(double theta, double boundary_theta);

/// Separable 2D tetramer walk W_y1 W_y0 W_x1 W_x0.
std::vector<StepDesc> coinless_2d_tetramer(AnglePolicy tx0, AnglePolicy tx1, AnglePolicy ty0,
                                           AnglePolicy ty1);

/// Halve every angle of a policy (for symmetric half-steps).
AnglePolicy halve(const AnglePolicy& policy);

}  // namespace rydqw::protocols
