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

#include <iosfwd>

#include "qdyn/forces.hpp"

namespace qdyn {

struct HessianMatrix {
  enum class Method { full, approximate };
  Eigen::MatrixXd matrix;  // 3N x 3N, Ha/Bohr^2, symmetrized
  Method method = Method::full;
  double raw_asymmetry = 0.0;   // max |H_ij - H_ji| before symmetrization
  int vqe_evaluations = 0;      // ground-state optimizations spent building it
};

struct NormalModeResult {
  Eigen::VectorXd frequencies_cm1;  // 3N ascending; negative = imaginary
  Eigen::MatrixXd modes;            // columns = mass-weighted eigenvectors
  int near_zero_count = 0;          // |freq| < 50 cm^-1
  double reconstruction_error = 0.0;
};

struct OptimizeReport {
  int steps = 0;
  double max_force = 0.0;  // Ha/Bohr at exit
  double energy = 0.0;     // Ha at exit
};

/// Steepest descent with backtracking line search on the VQE energy, forces
/// from the correlated-sampling evaluator; converged at max |F| < 1e-4
/// Ha/Bohr. Errors when the step limit is exceeded.
Molecule optimize_geometry(const Molecule& mol, const Options& options,
                           int max_steps = 200, OptimizeReport* report = nullptr);

/// Full finite-difference Hessian: independently re-optimized VQE energy at
/// every displaced geometry; four-point cross formula off the diagonal,
/// central second difference on it.
HessianMatrix hessian_full(const Molecule& mol, const Options& options);

/// Frozen-state Hessian: the same stencils applied to the Hamiltonian
/// coefficients term-wise, one expectation per stencil on the reference
/// state, cached P_alpha reused for strings in the reference support. No
/// re-optimization anywhere.
HessianMatrix hessian_approx(const Molecule& mol, const HamiltonianContext& reference,
                             const VqeResult& reference_vqe, const Options& options);

/// Provider-parameterized core of hessian_approx (testing seam).
HessianMatrix hessian_approx_with_provider(const Molecule& mol,
                                           const HamiltonianProvider& provider,
                                           const PauliSum& reference_h,
                                           const VqeResult& reference_vqe,
                                           double delta_d_bohr, int threads = 1);

/// Mass-weights, optionally Eckart-projects, diagonalizes; frequencies in
/// cm^-1 with sign(lambda) carried as the sign of the value.
NormalModeResult normal_modes(const HessianMatrix& hessian, const Molecule& mol,
                              const Options& options);

/// Count of genuine imaginary modes: Eckart-projected mass-weighted
/// frequencies below -100 cm^-1. The projection keeps translation/rotation
/// noise of the frozen-state Hessian from masquerading as curvature.
int imaginary_mode_count(const HessianMatrix& hessian, const Molecule& mol,
                         const Options& options);

/// Plain-text matrix dump of a Hessian (one row per line).
void dump_hessian_text(const HessianMatrix& hessian, std::ostream& out);

struct TsResult {
  Molecule geometry;
  NormalModeResult modes;
  double max_gradient = 0.0;  // Ha/Bohr at the solution
  int iterations = 0;
};

/// Newton-Raphson saddle search on the approximate Hessian with
/// correlated-sampling gradients. The start must already have exactly one
/// negative Hessian eigenvalue; trial steps that lose that signature are
/// halved (factor 0.5, at most 8 times). Converged at max |grad| < 1e-4
/// Ha/Bohr.
TsResult ts_search(const Molecule& mol0, const Options& options, int max_steps = 50);

}  // namespace qdyn
