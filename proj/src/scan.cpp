// Copyright 2026 The qdyn Authors
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

#include "qdyn/scan.hpp"

#include <cmath>
#include <limits>

#include "qdyn/errors.hpp"
#include "qdyn/exact_diag.hpp"
#include "qdyn/units.hpp"

namespace qdyn {

std::vector<ScanPoint> scan_distance(const Molecule& mol, const ScanSpec& spec,
                                     const Options& options) {
  if (spec.moving_atom < 0 || spec.moving_atom >= mol.size() || spec.target_atom < 0 ||
      spec.target_atom >= mol.size() || spec.moving_atom == spec.target_atom) {
    fail(ErrorCode::invalid_argument, "scan atoms out of range");
  }
  if (spec.axis < 0 || spec.axis > 2) {
    fail(ErrorCode::invalid_argument, "scan axis must be 0, 1 or 2");
  }
  if (spec.distances_angstrom.empty()) {
    fail(ErrorCode::invalid_argument, "scan needs at least one distance");
  }

  // Keep the moving atom on the side of the target it started on.
  const double side = mol.coord(spec.moving_atom)(spec.axis) -
                      mol.coord(spec.target_atom)(spec.axis);
  const double sign = (side < 0.0) ? -1.0 : 1.0;

  std::vector<ScanPoint> points;
  points.reserve(spec.distances_angstrom.size());

  bool have_prev = false;
  HamiltonianContext prev_ctx;
  VqeResult prev_vqe;

  for (const double dist_ang : spec.distances_angstrom) {
    std::vector<Eigen::Vector3d> coords = mol.coords();
    coords[static_cast<size_t>(spec.moving_atom)] =
        mol.coord(spec.target_atom);
    coords[static_cast<size_t>(spec.moving_atom)](spec.axis) +=
        sign * units::angstrom_to_bohr(dist_ang);
    const Molecule geom = mol.with_coordinates(std::move(coords));

    // Tracking across scan points keeps phases and the active window smooth
    // for warm starts, but large steps can defeat the overlap match (a core
    // orbital moved far beyond its own width); fall back to a fresh context.
    HamiltonianContext ctx;
    if (have_prev) {
      try {
        ctx = build_context_tracked(geom, options, prev_ctx);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::orbital_tracking) throw;
        ctx = build_context(geom, options);
      }
    } else {
      ctx = build_context(geom, options);
    }
    VqeResult vqe = have_prev ? solve_ground_state(ctx, options, &prev_vqe.theta)
                              : solve_ground_state(ctx, options);

    ScanPoint point;
    point.distance_angstrom = dist_ang;
    point.e_hf = ctx.scf.energy;
    point.e_vqe = vqe.energy;
    point.f_vqe = std::numeric_limits<double>::quiet_NaN();
    point.vqe_iterations = vqe.iterations;
    if (spec.with_oracle) {
      point.e_oracle =
          exact_ground_state_sector(ctx.hamiltonian, ctx.soi.n_active_electrons).energy;
    }

    if (spec.with_forces) {
      const ForceVector fv = compute_forces(ctx, vqe, options);
      const int comp = 3 * spec.moving_atom + spec.axis;
      point.f_vqe = fv.force(comp);
      if (spec.with_oracle) {
        // Independent route: re-optimized VQE at R +- dd along the scan
        // component.
        const double dd = options.delta_d_bohr();
        const HamiltonianContext plus = build_context_tracked(
            displace(geom, spec.moving_atom, spec.axis, +dd), options, ctx);
        const HamiltonianContext minus = build_context_tracked(
            displace(geom, spec.moving_atom, spec.axis, -dd), options, ctx);
        const VqeResult ep = solve_ground_state(plus, options, &vqe.theta);
        const VqeResult em = solve_ground_state(minus, options, &vqe.theta);
        point.f_oracle = -(ep.energy - em.energy) / (2.0 * dd);
      }
    }

    points.push_back(std::move(point));
    prev_ctx = std::move(ctx);
    prev_vqe = std::move(vqe);
    have_prev = true;
  }
  return points;
}

}  // namespace qdyn
