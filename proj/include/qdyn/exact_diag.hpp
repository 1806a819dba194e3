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

#include "qdyn/pauli.hpp"
#include "qdyn/statevector.hpp"

namespace qdyn {

struct GroundState {
  double energy = 0.0;
  QuantumState state;
};

/// Lowest eigenpair of the full 2^N operator (matrix-free Lanczos with full
/// reorthogonalization). N <= 16. Testing/oracle use only.
GroundState exact_ground_state(const PauliSum& op);

/// Lowest eigenpair restricted to the particle-number sector with
/// n_electrons occupied qubits (dense diagonalization over the C(N, n_e)
/// subspace). Requires the operator to conserve particle number; this is the
/// FCI-comparable energy for molecular Hamiltonians.
GroundState exact_ground_state_sector(const PauliSum& op, int n_electrons);

}  // namespace qdyn
