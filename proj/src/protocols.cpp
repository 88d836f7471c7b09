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

#include "rydqw/protocols.hpp"

namespace rydqw::protocols {

using walk::BoundaryStepDesc;
using walk::CoinStep;
using walk::ShiftStep;
using walk::StripeAngle;
using walk::TanhAngle;
using walk::Tess;
using walk::TessStep;
using walk::Transition;
using walk::UniformAngle;

AnglePolicy halve(const AnglePolicy& policy) {
    if (std::holds_alternative<UniformAngle>(policy))
        return UniformAngle{0.5 * std::get<UniformAngle>(policy).theta};
    if (std::holds_alternative<TanhAngle>(policy)) {
        TanhAngle t = std::get<TanhAngle>(policy);
        t.theta_minus *= 0.5;
        t.theta_plus *= 0.5;
        return t;
    }
    StripeAngle s = std::get<StripeAngle>(policy);
    s.theta_in *= 0.5;
    s.theta_out *= 0.5;
    return s;
}

std::vector<StepDesc> coinless_plain_1d(AnglePolicy theta0, AnglePolicy theta1) {
    return {TessStep{Tess::X0, theta0}, TessStep{Tess::X1, theta1}};
}

std::vector<StepDesc> coinless_symmetric_1d(AnglePolicy theta0, AnglePolicy theta1) {
    const AnglePolicy half = halve(theta0);
    return {TessStep{Tess::X0, half}, TessStep{Tess::X1, theta1}, TessStep{Tess::X0, half}};
}

std::vector<StepDesc> coined_2d_simple(AnglePolicy theta0, AnglePolicy theta1) {
    return {CoinStep{theta0}, ShiftStep{Transition::Tx}, CoinStep{theta1},
            ShiftStep{Transition::Ty}};
}

std::vector<StepDesc> coined_2d_chern(AnglePolicy theta0, AnglePolicy theta1) {
    return {CoinStep{theta0}, ShiftStep{Transition::Txy}, CoinStep{theta1},
            ShiftStep{Transition::Ty}, CoinStep{theta0}, ShiftStep{Transition::Tx}};
}

std::vector<StepDesc> coined_3d(AnglePolicy theta0, AnglePolicy theta1) {
    return {CoinStep{theta0}, ShiftStep{Transition::Tz}, CoinStep{theta1},
            ShiftStep{Transition::Ty}, CoinStep{theta0}, ShiftStep{Transition::Tx}};
}

std::vector<StepDesc> anomalous_2d(double theta) {
    const UniformAngle u{theta};
    return {TessStep{Tess::XY0, u}, TessStep{Tess::X1, u}, TessStep{Tess::XY1, u},
            TessStep{Tess::X0, u}};
}

std::vector<StepDesc> coinless_3d_insulator(double theta) {
    const UniformAngle u{theta};
    return {TessStep{Tess::X1, u},  TessStep{Tess::XY1, u}, TessStep{Tess::X0, u},
            TessStep{Tess::XY0, u}, TessStep{Tess::XZ0, u}, TessStep{Tess::X0, u},
            TessStep{Tess::XZ1, u}, TessStep{Tess::X1, u}};
}

std::vector<StepDesc> surface_walk_2d(double theta, double boundary_theta) {
    const UniformAngle u{theta};
    return {BoundaryStepDesc{0, boundary_theta}, TessStep{Tess::X1, u}, TessStep{Tess::X0, u},
            BoundaryStepDesc{1, boundary_theta}, TessStep{Tess::Y1, u}, TessStep{Tess::Y0, u}};
}

std::vector<StepDesc> coinless_2d_tetramer(AnglePolicy tx0, AnglePolicy tx1, AnglePolicy ty0,
                                           AnglePolicy ty1) {
    return {TessStep{Tess::X0, tx0}, TessStep{Tess::X1, tx1}, TessStep{Tess::Y0, ty0},
            TessStep{Tess::Y1, ty1}};
}

}  // namespace rydqw::protocols
