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

#include "qdyn/uccsd.hpp"

#include <bit>
#include <cmath>

#include "qdyn/errors.hpp"

namespace qdyn {

UccsdAnsatz UccsdAnsatz::build(int n_qubits, int n_electrons) {
  if (n_electrons < 0 || n_electrons > n_qubits) {
    fail(ErrorCode::precondition, "electron count exceeds qubit count");
  }
  UccsdAnsatz ansatz;
  ansatz.n_qubits_ = n_qubits;
  ansatz.n_electrons_ = n_electrons;

  auto spin = [](int so) { return so % 2; };

  // Singles: same-spin i -> a, ascending (i, a).
  for (int i = 0; i < n_electrons; ++i) {
    for (int a = n_electrons; a < n_qubits; ++a) {
      if (spin(i) != spin(a)) continue;
      FermionicExcitation ex;
      ex.i = i;
      ex.a = a;
      ansatz.excitations_.push_back(ex);
    }
  }
  // Doubles: i < j occupied, a < b virtual, conserving the spin multiset.
  for (int i = 0; i < n_electrons; ++i) {
    for (int j = i + 1; j < n_electrons; ++j) {
      for (int a = n_electrons; a < n_qubits; ++a) {
        for (int b = a + 1; b < n_qubits; ++b) {
          const int occ_spin = spin(i) + spin(j);
          const int virt_spin = spin(a) + spin(b);
          if (occ_spin != virt_spin) continue;
          FermionicExcitation ex;
          ex.i = i;
          ex.j = j;
          ex.a = a;
          ex.b = b;
          ansatz.excitations_.push_back(ex);
        }
      }
    }
  }

  ansatz.generators_.reserve(ansatz.excitations_.size());
  for (const auto& ex : ansatz.excitations_) {
    ansatz.generators_.push_back(jw_excitation_generator(ex, n_qubits));
  }
  return ansatz;
}

namespace {

// Fermionic parity of the occupied orbitals below p.
inline double ladder_sign(uint32_t mask, int p) {
  const uint32_t below = mask & ((1u << p) - 1u);
  return (std::popcount(below) % 2 != 0) ? -1.0 : 1.0;
}

// Matrix element s = <m^flip| G |m> of the anti-Hermitian excitation
// generator on a pattern-matching basis state (ladder operators applied
// right to left).
inline double excitation_sign(const FermionicExcitation& ex, uint32_t m) {
  double s = 1.0;
  uint32_t cur = m;
  s *= ladder_sign(cur, ex.i);
  cur ^= 1u << ex.i;
  if (ex.is_double()) {
    s *= ladder_sign(cur, ex.j);
    cur ^= 1u << ex.j;
    s *= ladder_sign(cur, ex.b);
    cur ^= 1u << ex.b;
  }
  s *= ladder_sign(cur, ex.a);
  return s;
}

struct ExcitationMasks {
  uint32_t occ;   // must be occupied
  uint32_t virt;  // must be empty
  uint32_t flip;  // occ | virt
};

inline ExcitationMasks masks_of(const FermionicExcitation& ex) {
  ExcitationMasks m;
  m.occ = 1u << ex.i;
  m.virt = 1u << ex.a;
  if (ex.is_double()) {
    m.occ |= 1u << ex.j;
    m.virt |= 1u << ex.b;
  }
  m.flip = m.occ | m.virt;
  return m;
}

// exp(theta G) in place: a Givens rotation on each invariant pair
// (|m>, |m ^ flip>), identity elsewhere.
void apply_excitation_exponential(QuantumState& state, const FermionicExcitation& ex,
                                  double theta) {
  if (theta == 0.0) return;
  const ExcitationMasks mk = masks_of(ex);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const size_t dim = state.dim();
  for (size_t m = 0; m < dim; ++m) {
    if ((m & mk.occ) != mk.occ || (m & mk.virt) != 0) continue;
    const size_t partner = m ^ mk.flip;
    const double sign = excitation_sign(ex, static_cast<uint32_t>(m));
    const std::complex<double> am = state[m];
    const std::complex<double> ap = state[partner];
    state[m] = c * am - sign * s * ap;
    state[partner] = c * ap + sign * s * am;
  }
}

// out += G |in| restricted to the matching pairs: (G psi)_{m'} = s psi_m,
// (G psi)_m = -s psi_{m'}.
void add_generator_apply(const QuantumState& in, const FermionicExcitation& ex,
                         QuantumState& out) {
  const ExcitationMasks mk = masks_of(ex);
  const size_t dim = in.dim();
  for (size_t m = 0; m < dim; ++m) {
    if ((m & mk.occ) != mk.occ || (m & mk.virt) != 0) continue;
    const size_t partner = m ^ mk.flip;
    const double sign = excitation_sign(ex, static_cast<uint32_t>(m));
    out[partner] += sign * in[m];
    out[m] -= sign * in[partner];
  }
}

}  // namespace

void apply_uccsd(QuantumState& state, const UccsdAnsatz& ansatz,
                 std::span<const double> theta) {
  if (static_cast<int>(theta.size()) != ansatz.n_params()) {
    fail(ErrorCode::invalid_argument, "theta length does not match parameter count");
  }
  if (state.n_qubits() != ansatz.n_qubits()) {
    fail(ErrorCode::invalid_argument, "state and ansatz qubit counts differ");
  }
  for (int k = 0; k < ansatz.n_params(); ++k) {
    apply_excitation_exponential(state, ansatz.excitations()[static_cast<size_t>(k)],
                                 theta[static_cast<size_t>(k)]);
  }
}

void apply_uccsd_reference(QuantumState& state, const UccsdAnsatz& ansatz,
                           std::span<const double> theta) {
  if (static_cast<int>(theta.size()) != ansatz.n_params()) {
    fail(ErrorCode::invalid_argument, "theta length does not match parameter count");
  }
  for (int k = 0; k < ansatz.n_params(); ++k) {
    for (const auto& [p, c] : ansatz.generators()[static_cast<size_t>(k)]) {
      apply_pauli_rotation(state, p, theta[static_cast<size_t>(k)] * c);
    }
  }
}

QuantumState apply_uccsd(const QuantumState& state, const UccsdAnsatz& ansatz,
                         std::span<const double> theta) {
  QuantumState out = state;
  apply_uccsd(out, ansatz, theta);
  return out;
}

QuantumState uccsd_state(const UccsdAnsatz& ansatz, std::span<const double> theta) {
  QuantumState state = prepare_hf_state(ansatz.n_qubits(), ansatz.n_electrons());
  apply_uccsd(state, ansatz, theta);
  return state;
}

double uccsd_energy_and_gradient(const PauliSum& hamiltonian, const UccsdAnsatz& ansatz,
                                 std::span<const double> theta,
                                 std::vector<double>& grad_out) {
  const int K = ansatz.n_params();
  grad_out.assign(static_cast<size_t>(K), 0.0);

  QuantumState ket = uccsd_state(ansatz, theta);
  QuantumState bra;
  apply_pauli_sum(ket, hamiltonian, bra);  // bra = H|psi>
  const double energy = inner_product(ket, bra).real();

  // Reverse sweep: at step k, ket = U_k..U_1|HF>, bra = U_{k+1}+..U_K+ H|psi>,
  // and dE/dtheta_k = 2 Re <bra|G_k|ket>.
  for (int k = K - 1; k >= 0; --k) {
    const auto& ex = ansatz.excitations()[static_cast<size_t>(k)];
    QuantumState g_ket(ansatz.n_qubits());
    add_generator_apply(ket, ex, g_ket);
    grad_out[static_cast<size_t>(k)] = 2.0 * inner_product(bra, g_ket).real();

    apply_excitation_exponential(ket, ex, -theta[static_cast<size_t>(k)]);
    apply_excitation_exponential(bra, ex, -theta[static_cast<size_t>(k)]);
  }
  return energy;
}

}  // namespace qdyn
