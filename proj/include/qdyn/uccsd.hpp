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

#include <span>
#include <vector>

#include "qdyn/jordan_wigner.hpp"
#include "qdyn/statevector.hpp"

namespace qdyn {

/// Spin-conserving UCCSD excitation list from the HF occupation (interleaved
/// spins), singles first then doubles, each lexicographically ordered. Each
/// excitation carries its JW generator strings so the ansatz applies as exact
/// Pauli-rotation products, first-order Trotterized across excitations.
class UccsdAnsatz {
 public:
  static UccsdAnsatz build(int n_qubits, int n_electrons);

  int n_qubits() const { return n_qubits_; }
  int n_electrons() const { return n_electrons_; }
  int n_params() const { return static_cast<int>(excitations_.size()); }
  const std::vector<FermionicExcitation>& excitations() const { return excitations_; }
  const std::vector<std::vector<std::pair<PauliString, double>>>& generators() const {
    return generators_;
  }

 private:
  int n_qubits_ = 0;
  int n_electrons_ = 0;
  std::vector<FermionicExcitation> excitations_;
  std::vector<std::vector<std::pair<PauliString, double>>> generators_;
};

/// In-place application of exp(theta_K G_K) ... exp(theta_1 G_1) to the state.
/// Each excitation exponential acts as an exact Givens rotation on its
/// invariant amplitude pairs (the fused form of the commuting Pauli-rotation
/// product).
void apply_uccsd(QuantumState& state, const UccsdAnsatz& ansatz,
                 std::span<const double> theta);

/// Same unitary as the literal product of Pauli rotations over the JW
/// generator strings; kept as a cross-check for the fused path.
void apply_uccsd_reference(QuantumState& state, const UccsdAnsatz& ansatz,
                           std::span<const double> theta);

/// Value form matching the operation contract.
QuantumState apply_uccsd(const QuantumState& state, const UccsdAnsatz& ansatz,
                         std::span<const double> theta);

/// Energy and exact dE/dtheta via one reverse sweep (cost ~ a few circuit
/// applications, independent of the parameter count).
double uccsd_energy_and_gradient(const PauliSum& hamiltonian, const UccsdAnsatz& ansatz,
                                 std::span<const double> theta,
                                 std::vector<double>& grad_out);

/// Ansatz state from the HF reference.
QuantumState uccsd_state(const UccsdAnsatz& ansatz, std::span<const double> theta);

}  // namespace qdyn
