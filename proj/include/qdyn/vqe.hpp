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

#include <string>
#include <vector>

#include "qdyn/uccsd.hpp"

namespace qdyn {

struct VqeOptions {
  double gradient_tolerance = 1e-7;  // max-norm, Ha
  double energy_tolerance = 1e-9;    // Ha, change between accepted steps
  int max_iterations = 500;
  std::string trace_path;  // per-iteration CSV (iteration,energy,grad_norm)
};

struct VqeResult {
  double energy = 0.0;
  std::vector<double> theta;
  PauliSum::TermMap expectations;  // P_alpha for every Hamiltonian string
  QuantumState state;
  int iterations = 0;
  bool converged = false;
  double gradient_norm = 0.0;  // max-norm at the solution
};

/// BFGS minimization of <psi(theta)|H|psi(theta)> with exact gradients and a
/// strong-Wolfe line search. Deterministic; non-convergence after
/// max_iterations yields a flagged result rather than an error.
VqeResult minimize(const PauliSum& hamiltonian, const UccsdAnsatz& ansatz,
                   std::vector<double> theta0, const VqeOptions& options = {});

/// Initial parameters for the next geometry from a previous solution;
/// errors on ansatz shape mismatch.
std::vector<double> warm_start(const VqeResult& previous, const UccsdAnsatz& next);

}  // namespace qdyn
