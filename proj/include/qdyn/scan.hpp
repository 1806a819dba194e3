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

#include <optional>
#include <vector>

#include "qdyn/forces.hpp"

namespace qdyn {

struct ScanPoint {
  double distance_angstrom = 0.0;
  double e_hf = 0.0;
  double e_vqe = 0.0;
  std::optional<double> e_oracle;  // sector exact diagonalization
  double f_vqe = 0.0;              // correlated-sampling force, scan component
  std::optional<double> f_oracle;  // re-optimized central difference
  int vqe_iterations = 0;
};

struct ScanSpec {
  int moving_atom = -1;
  int target_atom = -1;
  int axis = 2;
  std::vector<double> distances_angstrom;
  bool with_oracle = false;
  bool with_forces = true;
};

/// Distance sweep: the moving atom is placed on the given axis at each
/// distance from the target atom (keeping its original side), VQE is
/// warm-started point to point, and per-point energies/forces are recorded.
/// The reported force component is the moving atom's along the scan axis.
std::vector<ScanPoint> scan_distance(const Molecule& mol, const ScanSpec& spec,
                                     const Options& options);

}  // namespace qdyn
