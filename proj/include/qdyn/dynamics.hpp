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

#pragma once

#include <Eigen/Core>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qdyn/forces.hpp"

namespace qdyn {

struct TrajectoryFrame {
  double time_fs = 0.0;
  Molecule mol;                // positions, Bohr internally
  Eigen::VectorXd velocities;  // 3N, Bohr per atomic time unit
  Eigen::VectorXd forces;      // 3N, Ha/Bohr
  double potential = 0.0;      // Ha
  double kinetic = 0.0;        // Ha
  double total = 0.0;          // potential + kinetic as stored
  int vqe_iterations = 0;
};

struct ForceEvaluation {
  Eigen::VectorXd forces;  // 3N, Ha/Bohr
  double potential = 0.0;  // Ha
  int vqe_iterations = 0;
};

using ForceProvider = std::function<ForceEvaluation(const Molecule&)>;

double kinetic_energy(const Eigen::VectorXd& velocities, const std::vector<double>& masses_me);

/// One velocity-Verlet step: positions advance with the stored forces, the
/// provider supplies forces at the new geometry, velocities use both.
TrajectoryFrame verlet_step(const TrajectoryFrame& frame, double dt_fs,
                            const ForceProvider& provider,
                            const std::vector<double>& masses_me);

struct MdOptions {
  double dt_fs = 0.2;
  int n_steps = 1;
  double collision_guard_bohr = 0.3;  // halt when any pair gets closer
};

struct Trajectory {
  std::vector<TrajectoryFrame> frames;
  bool truncated = false;
  std::string diagnostic;
};

/// NVE trajectory with warm-started VQE forces at every step. Initial
/// velocities in Bohr per atomic time unit. Electronic failures truncate the
/// trajectory with a diagnostic instead of throwing.
Trajectory run_md(const Molecule& mol, const Eigen::VectorXd& velocities0,
                  const MdOptions& md, const Options& options);

/// Multi-frame XYZ (positions in Angstrom, time and charge on the comment line).
void write_trajectory_xyz(const Trajectory& traj, std::ostream& out);

/// CSV sidecar: time fs, energies in Hartree, VQE iterations, per-atom forces.
void write_energies_csv(const Trajectory& traj, std::ostream& out);

}  // namespace qdyn
