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

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rydqw {

using cxd = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Fold an angle into [0, pi] the way arccos(cos(x)) does.
inline double fold_to_band(double x) {
    x = std::fmod(std::abs(x), two_pi);
    return x > pi ? two_pi - x : x;
}

/// Raised when a momentum-space invariant is requested at a parameter
/// point where the relevant quasi-energy gap is closed.
class gap_closed_error : public std::runtime_error {
  public:
    explicit gap_closed_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a neighbouring site is degenerate with the addressed pair,
/// so the leakage denominator of the analytic infidelity vanishes.
class resonant_collision_error : public std::runtime_error {
  public:
    explicit resonant_collision_error(const std::string& what) : std::runtime_error(what) {}
};

/// FNV-1a over a byte string; used for config hashes in run manifests.
inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace rydqw
