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
#include <vector>

#include "qdyn/pipeline.hpp"

namespace qdyn {

/// Forces from the frozen-state finite difference, one component per
/// Cartesian coordinate, with the reuse/extra decomposition retained:
/// F_j = -(dE_reuse_j + dE_extra_j) / (2 dd).
struct ForceVector {
  Eigen::VectorXd force;               // 3N, Ha/Bohr
  std::vector<double> reuse_energy;    // dE^reuse per component, Ha
  std::vector<double> extra_energy;    // dE^extra per component, Ha
  std::vector<double> audit_residual;  // |(reuse+extra) - <psi|dH|psi>|
  int extra_string_count = 0;          // strings needing new measurements
};

using HamiltonianProvider = std::function<PauliSum(const Molecule&)>;

/// Correlated-sampling forces: 6N displaced Hamiltonians through the full
/// tracked pipeline, term difference, reuse of the cached P_alpha, one extra
/// expectation on the frozen reference state per component. No
/// re-optimization anywhere. The reference VQE must be converged at the
/// context geometry.
ForceVector compute_forces(const HamiltonianContext& reference,
                           const VqeResult& reference_vqe, const Options& options);

/// Same algorithm over an arbitrary Hamiltonian provider (testing seam).
ForceVector compute_forces_with_provider(const Molecule& mol,
                                         const HamiltonianProvider& provider,
                                         const PauliSum& reference_h,
                                         const VqeResult& reference_vqe,
                                         double delta_d_bohr, int threads = 1);

/// Validation mode: central difference of fully re-optimized VQE energies at
/// R +- dd (warm-started from the reference parameters).
ForceVector compute_forces_exact(const HamiltonianContext& reference,
                                 const VqeResult& reference_vqe, const Options& options);

}  // namespace qdyn
