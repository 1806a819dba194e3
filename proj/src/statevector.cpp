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

#include "qdyn/statevector.hpp"

#include <bit>
#include <cmath>

#include "qdyn/errors.hpp"

namespace qdyn {

namespace {

constexpr int kMaxQubits = 24;

// Phase of P|i> = lambda(i) |i ^ x>: lambda(i) = i^{n_Y} * (-1)^{popcount(i & z)}.
inline std::complex<double> pauli_phase(uint64_t index, uint32_t z, int n_y) {
  static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> w = ipow[n_y % 4];
  if (std::popcount(index & static_cast<uint64_t>(z)) % 2 != 0) w = -w;
  return w;
}

}  // namespace

QuantumState::QuantumState(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    fail(ErrorCode::size_limit, "statevector limited to 24 qubits");
  }
  amp_.assign(size_t{1} << n_qubits, {0.0, 0.0});
}

QuantumState QuantumState::basis_state(int n_qubits, uint64_t index) {
  QuantumState s(n_qubits);
  s.amp_.at(index) = {1.0, 0.0};
  return s;
}

double QuantumState::norm() const {
  double n2 = 0.0;
  for (const auto& a : amp_) n2 += std::norm(a);
  return std::sqrt(n2);
}

void QuantumState::normalize() {
  const double n = norm();
  if (n == 0.0) fail(ErrorCode::internal, "cannot normalize zero state");
  for (auto& a : amp_) a /= n;
}

QuantumState prepare_hf_state(int n_qubits, int n_electrons) {
  if (n_electrons < 0 || n_electrons > n_qubits) {
    fail(ErrorCode::precondition, "electron count exceeds qubit count");
  }
  const uint64_t index = (n_electrons == 0) ? 0 : ((uint64_t{1} << n_electrons) - 1);
  return QuantumState::basis_state(n_qubits, index);
}

void apply_pauli(QuantumState& state, const PauliString& p) {
  if (p.n_qubits() != state.n_qubits()) {
    fail(ErrorCode::invalid_argument, "apply_pauli: qubit count mismatch");
  }
  const uint32_t x = p.x_mask();
  const uint32_t z = p.z_mask();
  const int n_y = std::popcount(x & z);
  const size_t dim = state.dim();
  auto& amp = state.amplitudes();
  if (x == 0) {
    for (size_t i = 0; i < dim; ++i) amp[i] *= pauli_phase(i, z, n_y);
    return;
  }
  for (size_t i = 0; i < dim; ++i) {
    const size_t j = i ^ x;
    if (j < i) continue;
    // New a_i comes from old a_j and vice versa.
    const std::complex<double> ai = amp[i];
    const std::complex<double> aj = amp[j];
    amp[i] = pauli_phase(j, z, n_y) * aj;
    amp[j] = pauli_phase(i, z, n_y) * ai;
  }
}

void apply_pauli_rotation(QuantumState& state, const PauliString& p, double phi) {
  if (p.n_qubits() != state.n_qubits()) {
    fail(ErrorCode::invalid_argument, "apply_pauli_rotation: qubit count mismatch");
  }
  const uint32_t x = p.x_mask();
  const uint32_t z = p.z_mask();
  const int n_y = std::popcount(x & z);
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const std::complex<double> is(0.0, s);
  const size_t dim = state.dim();
  auto& amp = state.amplitudes();
  if (x == 0) {
    // Diagonal string: amplitudes pick up e^{+-i phi}.
    const std::complex<double> ep(c, s);
    const std::complex<double> em(c, -s);
    for (size_t i = 0; i < dim; ++i) {
      const bool minus = std::popcount(i & static_cast<uint64_t>(z)) % 2 != 0;
      amp[i] *= minus ? em : ep;
    }
    return;
  }
  for (size_t i = 0; i < dim; ++i) {
    const size_t j = i ^ x;
    if (j < i) continue;
    const std::complex<double> ai = amp[i];
    const std::complex<double> aj = amp[j];
    amp[i] = c * ai + is * pauli_phase(j, z, n_y) * aj;
    amp[j] = c * aj + is * pauli_phase(i, z, n_y) * ai;
  }
}

void add_pauli_apply(const QuantumState& in, const PauliString& p, double coeff,
                     QuantumState& out) {
  const uint32_t x = p.x_mask();
  const uint32_t z = p.z_mask();
  const int n_y = std::popcount(x & z);
  const size_t dim = in.dim();
  for (size_t i = 0; i < dim; ++i) {
    out[i ^ x] += coeff * pauli_phase(i, z, n_y) * in[i];
  }
}

void apply_pauli_sum(const QuantumState& in, const PauliSum& h, QuantumState& out) {
  if (h.n_qubits() != in.n_qubits()) {
    fail(ErrorCode::invalid_argument, "apply_pauli_sum: qubit count mismatch");
  }
  out = QuantumState(in.n_qubits());
  for (const auto& [p, c] : h.terms()) add_pauli_apply(in, p, c, out);
}

std::complex<double> inner_product(const QuantumState& bra, const QuantumState& ket) {
  std::complex<double> acc{0.0, 0.0};
  const size_t dim = bra.dim();
  for (size_t i = 0; i < dim; ++i) acc += std::conj(bra[i]) * ket[i];
  return acc;
}

double expectation(const QuantumState& state, const PauliString& p) {
  if (p.n_qubits() != state.n_qubits()) {
    fail(ErrorCode::invalid_argument, "expectation: qubit count mismatch");
  }
  const uint32_t x = p.x_mask();
  const uint32_t z = p.z_mask();
  const int n_y = std::popcount(x & z);
  const size_t dim = state.dim();
  std::complex<double> acc{0.0, 0.0};
  for (size_t i = 0; i < dim; ++i) {
    acc += std::conj(state[i ^ x]) * pauli_phase(i, z, n_y) * state[i];
  }
  return acc.real();
}

double expectation(const QuantumState& state, const PauliSum& h) {
  if (h.n_qubits() != state.n_qubits()) {
    fail(ErrorCode::invalid_argument, "expectation: qubit count mismatch");
  }
  double e = 0.0;
  for (const auto& [p, c] : h.terms()) e += c * expectation(state, p);
  return e;
}

PauliSum::TermMap expectation_terms(const QuantumState& state, const PauliSum& h,
                                    double* total_out) {
  if (h.n_qubits() != state.n_qubits()) {
    fail(ErrorCode::invalid_argument, "expectation_terms: qubit count mismatch");
  }
  PauliSum::TermMap values;
  double total = 0.0;
  for (const auto& [p, c] : h.terms()) {
    const double v = expectation(state, p);
    values.emplace(p, v);
    total += c * v;
  }
  if (total_out != nullptr) *total_out = total;
  return values;
}

}  // namespace qdyn
