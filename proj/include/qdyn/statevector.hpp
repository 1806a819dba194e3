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

#include <complex>
#include <vector>

#include "qdyn/pauli.hpp"

namespace qdyn {

/// Dense complex amplitude vector over 2^N computational basis states; bit k
/// of the index is qubit k, |1> on qubit k has Z eigenvalue -1 (occupied spin
/// orbital).
class QuantumState {
 public:
  QuantumState() = default;
  explicit QuantumState(int n_qubits);
  static QuantumState basis_state(int n_qubits, uint64_t index);

  int n_qubits() const { return n_; }
  size_t dim() const { return amp_.size(); }
  std::complex<double>& operator[](size_t i) { return amp_[i]; }
  const std::complex<double>& operator[](size_t i) const { return amp_[i]; }
  const std::vector<std::complex<double>>& amplitudes() const { return amp_; }
  std::vector<std::complex<double>>& amplitudes() { return amp_; }

  double norm() const;
  void normalize();

 private:
  std::vector<std::complex<double>> amp_;
  int n_ = 0;
};

/// Computational basis state with the n_electrons lowest-index qubits set.
QuantumState prepare_hf_state(int n_qubits, int n_electrons);

/// In-place |psi> -> P|psi>.
void apply_pauli(QuantumState& state, const PauliString& p);

/// In-place |psi> -> exp(i phi P)|psi> (bit-mask stride sweep, no matrices).
void apply_pauli_rotation(QuantumState& state, const PauliString& p, double phi);

/// out += coeff * P|in>.
void add_pauli_apply(const QuantumState& in, const PauliString& p, double coeff,
                     QuantumState& out);

/// out = H|in>.
void apply_pauli_sum(const QuantumState& in, const PauliSum& h, QuantumState& out);

std::complex<double> inner_product(const QuantumState& bra, const QuantumState& ket);

/// <psi|P|psi>, exact.
double expectation(const QuantumState& state, const PauliString& p);

/// sum_a h_a <psi|P_a|psi>, exact.
double expectation(const QuantumState& state, const PauliSum& h);

/// Per-string expectations for every term of h (the P_alpha cache);
/// total_out, when given, receives the weighted sum.
PauliSum::TermMap expectation_terms(const QuantumState& state, const PauliSum& h,
                                    double* total_out = nullptr);

}  // namespace qdyn
