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

#include "rydqw/lattice.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace rydqw::lattice {

BoundaryTopology BoundaryTopology::open() { return {}; }

BoundaryTopology BoundaryTopology::periodic(int dimension) {
    BoundaryTopology t;
    for (int a = 0; a < dimension; ++a) t.rule[a] = AxisRule::Periodic;
    return t;
}

int LatticeSpec::split_axes() const {
    switch (unit) {
        case UnitKind::Dimer: return 1;
        case UnitKind::Tetramer: return 2;
        case UnitKind::Octamer: return 3;
    }
    return 1;
}

long LatticeSpec::total_sites() const {
    long n = sites_per_cell();
    for (int a = 0; a < dimension; ++a) n *= cells[a];
    return n;
}

void LatticeSpec::validate() const {
    if (dimension < 1 || dimension > 3)
        throw std::invalid_argument("lattice dimension must be 1, 2 or 3");
    if (split_axes() > dimension)
        throw std::invalid_argument("unit kind requires more split axes than the lattice dimension");
    for (int a = 0; a < dimension; ++a) {
        if (cells[a] < 1)
            throw std::invalid_argument("cells per axis must be positive");
        if (a < split_axes()) {
            if (a0[a] <= 0.0 || a1[a] <= 0.0)
                throw std::invalid_argument("lattice constants must be positive");
        } else if (a0[a] <= 0.0) {
            throw std::invalid_argument("lattice constants must be positive");
        }
    }
}

SiteTable::SiteTable(LatticeSpec spec, std::vector<Site> sites)
    : spec_(std::move(spec)), sites_(std::move(sites)) {}

int SiteTable::index_of(std::array<int, 3> cell, std::array<int, 3> parity) const {
    if (chain_) {
        // chain sites are (cell, parity) along x only
        int idx = 2 * cell[0] + (parity[0] > 0 ? 1 : 0);
        return (idx >= 0 && idx < size()) ? idx : -1;
    }
    const int splits = spec_.split_axes();
    long cell_linear = 0;
    for (int a = spec_.dimension - 1; a >= 0; --a) {
        if (cell[a] < 0 || cell[a] >= spec_.cells[a]) return -1;
        cell_linear = cell_linear * spec_.cells[a] + cell[a];
    }
    int pcode = 0;
    for (int a = 0; a < splits; ++a) {
        if (parity[a] < 0 || parity[a] > 1) return -1;
        pcode |= parity[a] << a;
    }
    return static_cast<int>(cell_linear * spec_.sites_per_cell() + pcode);
}

SiteTable build_lattice(const LatticeSpec& spec) {
    spec.validate();
    const int splits = spec.split_axes();
    const int spc = spec.sites_per_cell();

    std::vector<Site> sites;
    sites.reserve(spec.total_sites());
    std::array<int, 3> c{0, 0, 0};
    const int cx = spec.cells[0];
    const int cy = spec.dimension > 1 ? spec.cells[1] : 1;
    const int cz = spec.dimension > 2 ? spec.cells[2] : 1;
    for (c[2] = 0; c[2] < cz; ++c[2])
        for (c[1] = 0; c[1] < cy; ++c[1])
            for (c[0] = 0; c[0] < cx; ++c[0])
                for (int pcode = 0; pcode < spc; ++pcode) {
                    Site s;
                    for (int a = 0; a < spec.dimension; ++a) {
                        s.cell[a] = c[a];
                        if (a < splits) {
                            const int p = (pcode >> a) & 1;
                            s.parity[a] = static_cast<std::int8_t>(p);
                            s.pos[a] = c[a] * (spec.a0[a] + spec.a1[a]) + p * spec.a0[a];
                        } else {
                            s.pos[a] = c[a] * spec.a0[a];
                        }
                    }
                    sites.push_back(s);
                }
    return SiteTable(spec, std::move(sites));
}

SiteTable build_chain(int n_sites, double a0, double a1) {
    if (n_sites < 1) throw std::invalid_argument("chain needs at least one site");
    if (a0 <= 0.0 || a1 <= 0.0) throw std::invalid_argument("lattice constants must be positive");
    LatticeSpec spec;
    spec.dimension = 1;
    spec.unit = UnitKind::Dimer;
    spec.cells[0] = (n_sites + 1) / 2;
    spec.a0[0] = a0;
    spec.a1[0] = a1;
    std::vector<Site> sites(n_sites);
    double x = 0.0;
    for (int i = 0; i < n_sites; ++i) {
        sites[i].pos[0] = x;
        sites[i].cell[0] = i / 2;
        sites[i].parity[0] = static_cast<std::int8_t>(i % 2);
        x += (i % 2 == 0) ? a0 : a1;
    }
    SiteTable table(spec, std::move(sites));
    table.chain_ = true;
    return table;
}

std::string to_string(Tess t) {
    switch (t) {
        case Tess::X0: return "x0";
        case Tess::X1: return "x1";
        case Tess::Y0: return "y0";
        case Tess::Y1: return "y1";
        case Tess::Z0: return "z0";
        case Tess::Z1: return "z1";
        case Tess::XY0: return "xy0";
        case Tess::XY1: return "xy1";
        case Tess::XZ0: return "xz0";
        case Tess::XZ1: return "xz1";
        case Tess::XYZ0: return "xyz0";
        case Tess::XYZ1: return "xyz1";
    }
    return "?";
}

Tess tess_from_string(const std::string& name) {
    static const std::pair<const char*, Tess> table[] = {
        {"x0", Tess::X0},   {"x1", Tess::X1},   {"y0", Tess::Y0},   {"y1", Tess::Y1},
        {"z0", Tess::Z0},   {"z1", Tess::Z1},   {"xy0", Tess::XY0}, {"xy1", Tess::XY1},
        {"xz0", Tess::XZ0}, {"xz1", Tess::XZ1}, {"xyz0", Tess::XYZ0}, {"xyz1", Tess::XYZ1},
    };
    for (const auto& [n, t] : table)
        if (name == n) return t;
    throw std::invalid_argument("unknown tessellation kind: " + name);
}

namespace {

struct DiagSpec {
    int dy;  // cell displacement of the odd partner along y
    int dz;  // and along z
    int dx;  // 0 for the intra-gap family, +1 for the inter-gap family
};

// Diagonal partner of the even site of a cell. The 0 family crosses the
// short intra-cell gap (same x cell), the 1 family crosses the long
// inter-cell gap (next x cell, transverse displacement reversed). This
// orientation makes the (xy0, x1, xy1, x0) cycle bulk-local with clockwise
// boundary circulation.
DiagSpec diag_spec(Tess kind) {
    switch (kind) {
        case Tess::XY0: return {+1, 0, 0};
        case Tess::XY1: return {-1, 0, +1};
        case Tess::XZ0: return {0, +1, 0};
        case Tess::XZ1: return {0, -1, +1};
        case Tess::XYZ0: return {+1, +1, 0};
        case Tess::XYZ1: return {-1, -1, +1};
        default: throw std::logic_error("not a diagonal tessellation kind");
    }
}

bool wrap_cell(int& c, int count, bool periodic) {
    if (c >= 0 && c < count) return true;
    if (!periodic) return false;
    c = ((c % count) + count) % count;
    return true;
}

PairSet chain_pairs(const SiteTable& table, Tess kind, const BoundaryTopology& topo) {
    if (kind != Tess::X0 && kind != Tess::X1)
        throw std::invalid_argument("1D chain supports only the x0/x1 tessellations");
    const int n = table.size();
    PairSet out;
    const int start = (kind == Tess::X0) ? 0 : 1;
    for (int i = start; i + 1 < n; i += 2) out.push_back({i, i + 1});
    if (kind == Tess::X1 && topo.periodic_on(0)) {
        if (n % 2 != 0)
            throw std::invalid_argument("periodic closure needs an even number of chain sites");
        if (n >= 4) out.push_back({n - 1, 0});
    }
    return out;
}

}  // namespace

PairSet tessellation_pairs(const SiteTable& table, Tess kind, const BoundaryTopology& topo) {
    if (table.is_chain()) return chain_pairs(table, kind, topo);

    const LatticeSpec& spec = table.spec();
    const int splits = spec.split_axes();

    auto axis_pairs = [&](int axis, bool inter) {
        if (axis >= spec.dimension || axis >= splits)
            throw std::invalid_argument("tessellation " + to_string(kind) +
                                        " is incompatible with this lattice");
        PairSet out;
        for (int i = 0; i < table.size(); ++i) {
            const Site& s = table.site(i);
            if (s.parity[axis] != (inter ? 1 : 0)) continue;
            std::array<int, 3> cell{s.cell[0], s.cell[1], s.cell[2]};
            std::array<int, 3> parity{s.parity[0], s.parity[1], s.parity[2]};
            parity[axis] = inter ? 0 : 1;
            if (inter) {
                int c = cell[axis] + 1;
                if (!wrap_cell(c, spec.cells[axis], topo.periodic_on(axis))) continue;
                cell[axis] = c;
            }
            const int j = table.index_of(cell, parity);
            if (j >= 0) out.push_back({i, j});
        }
        return out;
    };

    switch (kind) {
        case Tess::X0: return axis_pairs(0, false);
        case Tess::X1: return axis_pairs(0, true);
        case Tess::Y0: return axis_pairs(1, false);
        case Tess::Y1: return axis_pairs(1, true);
        case Tess::Z0: return axis_pairs(2, false);
        case Tess::Z1: return axis_pairs(2, true);
        default: break;
    }

    // diagonal kinds: dimer lattices only, and only in the plane(s) present
    if (spec.unit != UnitKind::Dimer)
        throw std::invalid_argument("diagonal tessellations exist only on dimer lattices");
    const DiagSpec d = diag_spec(kind);
    if ((d.dy != 0 && spec.dimension < 2) || (d.dz != 0 && spec.dimension < 3))
        throw std::invalid_argument("tessellation " + to_string(kind) +
                                    " is incompatible with this lattice dimension");

    PairSet out;
    for (int i = 0; i < table.size(); ++i) {
        const Site& s = table.site(i);
        if (s.parity[0] != 1) continue;  // even endpoint of every diagonal bond
        std::array<int, 3> cell{s.cell[0], s.cell[1], s.cell[2]};
        std::array<int, 3> parity{0, -1, -1};
        int cx = cell[0] + d.dx;
        int cy = cell[1] + d.dy;
        int cz = cell[2] + d.dz;
        if (!wrap_cell(cx, spec.cells[0], topo.periodic_on(0))) continue;
        if (d.dy != 0 && !wrap_cell(cy, spec.cells[1], topo.periodic_on(1))) continue;
        if (d.dz != 0 && !wrap_cell(cz, spec.cells[2], topo.periodic_on(2))) continue;
        const int j = table.index_of({cx, cy, cz}, parity);
        if (j >= 0) out.push_back({i, j});
    }
    return out;
}

PairSet seam_pairs(const SiteTable& table, const BoundaryTopology& topo, int axis) {
    const LatticeSpec& spec = table.spec();
    if (spec.dimension < 2)
        throw std::invalid_argument("seams are undefined on 1D lattices");
    if (axis < 0 || axis >= spec.dimension)
        throw std::invalid_argument("seam axis out of range");

    const bool flip = topo.seam == SeamKind::Klein ||
                      (topo.seam == SeamKind::MoebiusX && axis == 0) ||
                      (topo.seam == SeamKind::MoebiusY && axis == 1);
    if (!flip && !topo.periodic_on(axis)) return {};
    if (flip && spec.dimension != 2)
        throw std::invalid_argument("Moebius/Klein seams are defined for 2D lattices");

    const int splits = spec.split_axes();
    const bool split = axis < splits;
    const int other = axis == 0 ? 1 : 0;
    const bool other_split = other < splits;
    const int other_rows = spec.cells[other] * (other_split ? 2 : 1);

    PairSet out;
    if (spec.dimension == 2) {
        for (int row = 0; row < other_rows; ++row) {
            auto row_coords = [&](int r) {
                return std::pair<int, int>{other_split ? r / 2 : r, other_split ? r % 2 : -1};
            };
            auto [rc, rp] = row_coords(row);
            auto [lc, lp] = row_coords(flip ? other_rows - 1 - row : row);
            std::array<int, 3> cell_r{0, 0, 0}, parity_r{-1, -1, -1};
            std::array<int, 3> cell_l{0, 0, 0}, parity_l{-1, -1, -1};
            cell_r[axis] = spec.cells[axis] - 1;
            parity_r[axis] = split ? 1 : -1;
            cell_l[axis] = 0;
            parity_l[axis] = split ? 0 : -1;
            cell_r[other] = rc;
            parity_r[other] = rp;
            cell_l[other] = lc;
            parity_l[other] = lp;
            const int ri = table.index_of(cell_r, parity_r);
            const int li = table.index_of(cell_l, parity_l);
            if (ri >= 0 && li >= 0) out.push_back({ri, li});
        }
        return out;
    }

    // 3D: plain periodic wrap across the chosen axis
    for (int i = 0; i < table.size(); ++i) {
        const Site& s = table.site(i);
        if (s.cell[axis] != spec.cells[axis] - 1) continue;
        if (split && s.parity[axis] != 1) continue;
        std::array<int, 3> cell{s.cell[0], s.cell[1], s.cell[2]};
        std::array<int, 3> parity{s.parity[0], s.parity[1], s.parity[2]};
        cell[axis] = 0;
        if (split) parity[axis] = 0;
        const int j = table.index_of(cell, parity);
        if (j >= 0) out.push_back({i, j});
    }
    return out;
}

void SiteTable::write_csv(std::ostream& out) const {
    out << "index,x,y,z,parity_x,parity_y,parity_z\n";
    char buf[64];
    auto parity_char = [](std::int8_t p) { return p < 0 ? '-' : (p == 0 ? 'o' : 'e'); };
    for (int i = 0; i < size(); ++i) {
        const Site& s = sites_[i];
        out << i;
        for (int a = 0; a < 3; ++a) {
            std::snprintf(buf, sizeof(buf), ",%.17g", s.pos[a]);
            out << buf;
        }
        out << ',' << parity_char(s.parity[0]) << ',' << parity_char(s.parity[1]) << ','
            << parity_char(s.parity[2]) << '\n';
    }
}

void write_pairs_csv(const PairSet& pairs, std::ostream& out) {
    out << "site_a,site_b\n";
    for (const auto& p : pairs) out << p[0] << ',' << p[1] << '\n';
}

}  // namespace rydqw::lattice
