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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rydqw::lattice {

/// Unit cell type. The cell size is 2^(split axes): dimers split only x,
/// tetramers split x and y, octamers split all three axes. Split axes carry
/// two alternating lattice constants (a0 inside the cell, a1 between cells);
/// unsplit axes have the single constant a0.
enum class UnitKind { Dimer, Tetramer, Octamer };

enum class AxisRule { Open, Periodic };

/// Seam identifications beyond plain periodic wrapping. A Moebius seam on x
/// joins the right edge to the left edge with the transverse row order
/// reversed; Klein applies Moebius seams on both axes.
enum class SeamKind { None, MoebiusX, MoebiusY, Klein };

struct BoundaryTopology {
    std::array<AxisRule, 3> rule{AxisRule::Open, AxisRule::Open, AxisRule::Open};
    SeamKind seam = SeamKind::None;

    static BoundaryTopology open();
    static BoundaryTopology periodic(int dimension);
    bool periodic_on(int axis) const { return rule[axis] == AxisRule::Periodic; }
};

struct LatticeSpec {
    int dimension = 1;
    UnitKind unit = UnitKind::Dimer;
    std::array<int, 3> cells{1, 1, 1};
    std::array<double, 3> a0{1.0, 1.0, 1.0};  // intra-cell constant (um); sole constant on unsplit axes
    std::array<double, 3> a1{1.0, 1.0, 1.0};  // inter-cell constant (um), split axes only

    int split_axes() const;
    int sites_per_cell() const { return 1 << split_axes(); }
    long total_sites() const;
    void validate() const;  // throws std::invalid_argument
};

/// Parity along a split axis: 0 = odd (first site of the cell), 1 = even,
/// -1 = axis not split.
struct Site {
    std::array<double, 3> pos{0.0, 0.0, 0.0};
    std::array<std::int32_t, 3> cell{0, 0, 0};
    std::array<std::int8_t, 3> parity{-1, -1, -1};
};

using SitePair = std::array<std::int32_t, 2>;
using PairSet = std::vector<SitePair>;

/// Deterministic site enumeration: parity bits innermost (x bit least
/// significant), then cell coordinates with x fastest.
class SiteTable {
  public:
    SiteTable() = default;
    SiteTable(LatticeSpec spec, std::vector<Site> sites);

    const LatticeSpec& spec() const { return spec_; }
    int size() const { return static_cast<int>(sites_.size()); }
    const Site& site(int index) const { return sites_[index]; }
    const std::vector<Site>& sites() const { return sites_; }

    /// Index of the site with the given cell coordinates and parity bits,
    /// or -1 when out of range. Parity entries on unsplit axes are ignored.
    int index_of(std::array<int, 3> cell, std::array<int, 3> parity) const;

    /// Chain tables (odd site counts allowed) bypass the cell formula.
    bool is_chain() const { return chain_; }

    void write_csv(std::ostream& out) const;

  private:
    friend SiteTable build_chain(int, double, double);
    LatticeSpec spec_;
    std::vector<Site> sites_;
    bool chain_ = false;
};

SiteTable build_lattice(const LatticeSpec& spec);

/// 1D chain with alternating spacings a0, a1, a0, ... starting at 0.
/// Supports odd site counts; the dangling end site stays unpaired in the
/// intra or inter tessellation.
SiteTable build_chain(int n_sites, double a0, double a1);

/// Tessellation kinds. x0/x1 are the intra/inter couplings along the split
/// axis; y*/z* likewise on lattices split along those axes. The diagonal
/// kinds xy*/xz*/xyz* live on dimer lattices only: the 0 family crosses the
/// intra-cell gap, the 1 family the inter-cell gap. Orientations follow the
/// convention that one period of the four-operator cycle
/// (xy0, x1, xy1, x0) is the identity on every bulk site and transports
/// boundary sites clockwise:
///   xy0: even(i,j)  <->  odd(i,j+1)
///   xy1: even(i,j)  <->  odd(i+1,j-1)
/// and the same pattern with z replacing y, or displacing both y and z for
/// the xyz space diagonals.
enum class Tess {
    X0, X1, Y0, Y1, Z0, Z1,
    XY0, XY1, XZ0, XZ1, XYZ0, XYZ1,
};

std::string to_string(Tess t);
Tess tess_from_string(const std::string& name);

/// Disjoint pair set for one coupling tessellation. Inter-cell kinds wrap
/// around axes the topology declares periodic and drop pairs that would
/// cross an open edge. Throws std::invalid_argument when the kind does not
/// exist on the lattice (e.g. xz on 2D, y0 on a dimer lattice).
PairSet tessellation_pairs(const SiteTable& table, Tess kind, const BoundaryTopology& topo);

/// Boundary-step pairs for one axis of a topological surface. Plain periodic
/// rule gives the wrap pairs (last x-site to first x-site per transverse
/// row); a Moebius seam on the axis reverses the transverse row order; open
/// gives an empty set. Throws on 1D lattices and invalid axes.
PairSet seam_pairs(const SiteTable& table, const BoundaryTopology& topo, int axis);

void write_pairs_csv(const PairSet& pairs, std::ostream& out);

}  // namespace rydqw::lattice
