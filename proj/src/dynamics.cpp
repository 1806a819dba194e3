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

#include "qdyn/dynamics.hpp"

#include <cstdio>
#include <ostream>

#include "qdyn/errors.hpp"
#include "qdyn/units.hpp"

namespace qdyn {

double kinetic_energy(const Eigen::VectorXd& velocities,
                      const std::vector<double>& masses_me) {
  double e = 0.0;
  for (size_t i = 0; i < masses_me.size(); ++i) {
    e += 0.5 * masses_me[i] *
         velocities.segment<3>(static_cast<Eigen::Index>(3 * i)).squaredNorm();
  }
  return e;
}

TrajectoryFrame verlet_step(const TrajectoryFrame& frame, double dt_fs,
                            const ForceProvider& provider,
                            const std::vector<double>& masses_me) {
  if (dt_fs <= 0.0) fail(ErrorCode::invalid_argument, "time step must be positive");
  const double dt = units::fs_to_atomic_time(dt_fs);
  const int n = frame.mol.size();

  Eigen::VectorXd r = frame.mol.flat_coords();
  for (int i = 0; i < n; ++i) {
    const double m = masses_me[static_cast<size_t>(i)];
    r.segment<3>(3 * i) += frame.velocities.segment<3>(3 * i) * dt +
                           frame.forces.segment<3>(3 * i) * (0.5 * dt * dt / m);
  }
  const Molecule mol_new = frame.mol.with_flat_coords(r);
  const ForceEvaluation eval = provider(mol_new);

  TrajectoryFrame next;
  next.time_fs = frame.time_fs + dt_fs;
  next.mol = mol_new;
  next.velocities = frame.velocities;
  for (int i = 0; i < n; ++i) {
    const double m = masses_me[static_cast<size_t>(i)];
    next.velocities.segment<3>(3 * i) +=
        (frame.forces.segment<3>(3 * i) + eval.forces.segment<3>(3 * i)) *
        (0.5 * dt / m);
  }
  next.forces = eval.forces;
  next.potential = eval.potential;
  next.kinetic = kinetic_energy(next.velocities, masses_me);
  next.total = next.potential + next.kinetic;
  next.vqe_iterations = eval.vqe_iterations;
  return next;
}

namespace {

double min_pair_distance(const Molecule& mol) {
  double d = 1e300;
  for (int i = 0; i < mol.size(); ++i)
    for (int j = i + 1; j < mol.size(); ++j) d = std::min(d, mol.distance(i, j));
  return d;
}

}  // namespace

Trajectory run_md(const Molecule& mol, const Eigen::VectorXd& velocities0,
                  const MdOptions& md, const Options& options) {
  if (md.dt_fs <= 0.0) fail(ErrorCode::invalid_argument, "time step must be positive");
  if (md.n_steps < 1) fail(ErrorCode::invalid_argument, "need at least one MD step");
  if (velocities0.size() != 3 * mol.size()) {
    fail(ErrorCode::invalid_argument, "initial velocity vector has wrong length");
  }

  const std::vector<double> masses = mol.masses(options.isotope_masses);
  Trajectory traj;

  // Warm-start state threaded through the trajectory; orbitals are tracked
  // step to step so the active window follows the same physical orbitals.
  struct {
    bool valid = false;
    HamiltonianContext ctx;
    VqeResult vqe;
  } prev;

  const ForceProvider provider = [&](const Molecule& geometry) -> ForceEvaluation {
    HamiltonianContext ctx = prev.valid
                                 ? build_context_tracked(geometry, options, prev.ctx)
                                 : build_context(geometry, options);
    const VqeResult vqe = prev.valid
                              ? solve_ground_state(ctx, options, &prev.vqe.theta)
                              : solve_ground_state(ctx, options);
    const ForceVector fv = compute_forces(ctx, vqe, options);
    ForceEvaluation eval;
    eval.forces = fv.force;
    eval.potential = vqe.energy;
    eval.vqe_iterations = vqe.iterations;
    prev.ctx = std::move(ctx);
    prev.vqe = vqe;
    prev.valid = true;
    return eval;
  };

  try {
    TrajectoryFrame frame;
    frame.time_fs = 0.0;
    frame.mol = mol;
    frame.velocities = velocities0;
    const ForceEvaluation eval0 = provider(mol);
    frame.forces = eval0.forces;
    frame.potential = eval0.potential;
    frame.kinetic = kinetic_energy(frame.velocities, masses);
    frame.total = frame.potential + frame.kinetic;
    frame.vqe_iterations = eval0.vqe_iterations;
    traj.frames.push_back(frame);

    for (int step = 0; step < md.n_steps; ++step) {
      // Collision guard on the upcoming geometry.
      Eigen::VectorXd r = traj.frames.back().mol.flat_coords();
      const TrajectoryFrame& f = traj.frames.back();
      const double dt = units::fs_to_atomic_time(md.dt_fs);
      for (int i = 0; i < mol.size(); ++i) {
        const double m = masses[static_cast<size_t>(i)];
        r.segment<3>(3 * i) += f.velocities.segment<3>(3 * i) * dt +
                               f.forces.segment<3>(3 * i) * (0.5 * dt * dt / m);
      }
      const Molecule upcoming = mol.with_flat_coords(r);
      if (min_pair_distance(upcoming) < md.collision_guard_bohr) {
        traj.truncated = true;
        traj.diagnostic = "collision guard: atom pair below " +
                          std::to_string(md.collision_guard_bohr) + " Bohr at step " +
                          std::to_string(step + 1);
        break;
      }
      traj.frames.push_back(verlet_step(traj.frames.back(), md.dt_fs, provider, masses));
    }
  } catch (const Error& e) {
    traj.truncated = true;
    traj.diagnostic = e.what();
  }
  return traj;
}

void write_trajectory_xyz(const Trajectory& traj, std::ostream& out) {
  char comment[96];
  for (const auto& f : traj.frames) {
    std::snprintf(comment, sizeof(comment), "t = %.4f fs", f.time_fs);
    out << to_xyz(f.mol, comment);
  }
}

void write_energies_csv(const Trajectory& traj, std::ostream& out) {
  if (traj.frames.empty()) return;
  const int n = traj.frames.front().mol.size();
  out << "time_fs,e_pot_ha,e_kin_ha,e_tot_ha,vqe_iterations";
  for (int i = 0; i < n; ++i) {
    out << ",fx_" << i << "_ha_bohr,fy_" << i << "_ha_bohr,fz_" << i << "_ha_bohr";
  }
  out << "\n";
  char buf[160];
  for (const auto& f : traj.frames) {
    std::snprintf(buf, sizeof(buf), "%.4f,%.12f,%.12f,%.12f,%d", f.time_fs, f.potential,
                  f.kinetic, f.total, f.vqe_iterations);
    out << buf;
    for (int j = 0; j < 3 * n; ++j) {
      std::snprintf(buf, sizeof(buf), ",%.10e", f.forces(j));
      out << buf;
    }
    out << "\n";
  }
}

}  // namespace qdyn
