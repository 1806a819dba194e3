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

#include <utility>
#include <vector>

#include "qdyn/pauli.hpp"
#include "qdyn/scf.hpp"

namespace qdyn {

/// Jordan-Wigner image of the second-quantized Hamiltonian: qubit k is spin
/// orbital k, a+_p -> (X_p - iY_p)/2 (x) Z_{p-1}..Z_0, occupied = |1>. The
/// scalar offset rides on the identity string; terms below prune_threshold
/// are dropped. Errors when the accumulated coefficients have imaginary
/// residue above 1e-10 (non-Hermitian input).
PauliSum jordan_wigner(const SpinOrbitalIntegrals& soi, double prune_threshold = 1e-12);

/// Term-wise difference H(+) - H(-), pruned.
PauliSum delta_hamiltonian(const PauliSum& h_plus, const PauliSum& h_minus,
                           double prune_threshold = 1e-12);

/// The reuse/extra decomposition of a displaced-Hamiltonian difference
/// against the string set of a reference Hamiltonian. Strings found in the
/// reference keep their measured expectations; the rest form the extra
/// operator that needs one new measurement on the frozen reference state.
struct DeltaSplit {
  std::vector<std::pair<double, PauliString>> reuse_plus;   // from H(+)
  std::vector<std::pair<double, PauliString>> reuse_minus;  // from H(-)
  PauliSum extra;
};

/// Splits from the two displaced Hamiltonians so the plus/minus reuse lists
/// keep their origin; extra = (non-reference part of h_plus) - (same of
/// h_minus).
DeltaSplit split_reuse_extra(const PauliSum& h_plus, const PauliSum& h_minus,
                             const PauliSum& reference, double prune_threshold = 1e-12);

/// Split of an already-differenced operator; the combined reuse list lands in
/// reuse_plus. Energy-wise equivalent to the two-argument form.
DeltaSplit split_reuse_extra(const PauliSum& delta, const PauliSum& reference);

/// Sum of coeff * P_alpha over both reuse lists (plus minus minus), using a
/// cache of per-string expectations.
double reuse_energy(const DeltaSplit& split, const PauliSum::TermMap& expectations);

struct FermionicExcitation {
  int i = -1, j = -1;  // occupied spin orbitals (j < 0 for singles)
  int a = -1, b = -1;  // virtual spin orbitals (b < 0 for singles)
  bool is_double() const { return j >= 0; }
};

/// JW image of the anti-Hermitian generator T - T+ for one excitation,
/// returned as pairs (P, c) meaning the operator sum_j c_j * (i P_j), in
/// canonical string order. exp(theta (T - T+)) is the product of the
/// commuting rotations exp(i theta c_j P_j).
std::vector<std::pair<PauliString, double>> jw_excitation_generator(
    const FermionicExcitation& ex, int n_qubits);

}  // namespace qdyn
