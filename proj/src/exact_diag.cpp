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

#include "qdyn/exact_diag.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <random>

#include "qdyn/errors.hpp"

namespace qdyn {

GroundState exact_ground_state(const PauliSum& op) {
  const int n = op.n_qubits();
  if (n < 1 || n > 16) {
    fail(ErrorCode::size_limit, "exact_ground_state supports 1..16 qubits");
  }
  const size_t dim = size_t{1} << n;

  // Deterministic start vector.
  std::mt19937_64 rng(0x9d2c5680u);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  QuantumState v(n);
  for (size_t i = 0; i < dim; ++i) v[i] = {uni(rng), uni(rng)};
  v.normalize();

  const int m_max = static_cast<int>(std::min<size_t>(dim, 260));
  std::vector<QuantumState> basis;
  basis.reserve(static_cast<size_t>(m_max));
  std::vector<double> alpha, beta;

  basis.push_back(v);
  QuantumState w(n);
  double best_energy = 0.0;
  Eigen::VectorXd ritz;

  for (int k = 0; k < m_max; ++k) {
    apply_pauli_sum(basis.back(), op, w);
    const double a = inner_product(basis.back(), w).real();
    alpha.push_back(a);

    // w -= alpha v_k + beta v_{k-1}, then full reorthogonalization.
    for (size_t i = 0; i < dim; ++i) w[i] -= a * basis.back()[i];
    if (k > 0) {
      const double b = beta.back();
      for (size_t i = 0; i < dim; ++i) w[i] -= b * basis[basis.size() - 2][i];
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : basis) {
        const std::complex<double> c = inner_product(u, w);
        for (size_t i = 0; i < dim; ++i) w[i] -= c * u[i];
      }
    }

    // Ritz values of the current tridiagonal.
    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      T(i, i) = alpha[static_cast<size_t>(i)];
      if (i > 0) T(i, i - 1) = T(i - 1, i) = beta[static_cast<size_t>(i - 1)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    best_energy = es.eigenvalues()(0);
    ritz = es.eigenvectors().col(0);

    const double b_next = w.norm();
    const double residual = b_next * std::abs(ritz(m - 1));
    if (b_next < 1e-13 || residual < 1e-11 * std::max(1.0, std::abs(best_energy)) ||
        k == m_max - 1 || static_cast<size_t>(m) == dim) {
      break;
    }
    beta.push_back(b_next);
    for (size_t i = 0; i < dim; ++i) w[i] /= b_next;
    basis.push_back(w);
  }

  GroundState gs;
  gs.energy = best_energy;
  gs.state = QuantumState(n);
  for (size_t j = 0; j < static_cast<size_t>(ritz.size()); ++j) {
    for (size_t i = 0; i < dim; ++i) gs.state[i] += ritz(static_cast<Eigen::Index>(j)) * basis[j][i];
  }
  gs.state.normalize();
  return gs;
}

GroundState exact_ground_state_sector(const PauliSum& op, int n_electrons) {
  const int n = op.n_qubits();
  if (n < 1 || n > 16) {
    fail(ErrorCode::size_limit, "exact_ground_state_sector supports 1..16 qubits");
  }
  if (n_electrons < 0 || n_electrons > n) {
    fail(ErrorCode::precondition, "electron count out of range");
  }
  const size_t dim = size_t{1} << n;
  std::vector<uint32_t> states;
  std::vector<int> pos(dim, -1);
  for (uint32_t i = 0; i < dim; ++i) {
    if (std::popcount(i) == n_electrons) {
      pos[i] = static_cast<int>(states.size());
      states.push_back(i);
    }
  }
  const int d = static_cast<int>(states.size());

  // Individual Pauli strings hop between sectors; only the full sum is block
  // diagonal. Verify conservation with one matvec, then keep the sector block.
  {
    std::mt19937_64 rng(0xb5297a4du);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    QuantumState probe(n);
    for (const uint32_t s : states) probe[s] = {uni(rng), uni(rng)};
    probe.normalize();
    QuantumState image(n);
    apply_pauli_sum(probe, op, image);
    double out_of_sector = 0.0, total = 0.0;
    for (size_t i = 0; i < image.dim(); ++i) {
      const double a2 = std::norm(image[i]);
      total += a2;
      if (pos[i] < 0) out_of_sector += a2;
    }
    if (out_of_sector > 1e-20 * std::max(1.0, total)) {
      fail(ErrorCode::precondition,
           "operator does not conserve particle number; sector diagonalization invalid");
    }
  }

  static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(d, d);
  for (int col = 0; col < d; ++col) {
    const uint32_t b = states[static_cast<size_t>(col)];
    for (const auto& [p, c] : op.terms()) {
      const uint32_t image = b ^ p.x_mask();
      const int row = pos[image];
      if (row < 0) continue;  // cancels across the sum; not part of this block
      std::complex<double> w = ipow[std::popcount(p.x_mask() & p.z_mask()) % 4];
      if (std::popcount(b & p.z_mask()) % 2 != 0) w = -w;
      H(row, col) += c * w;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  GroundState gs;
  gs.energy = es.eigenvalues()(0);
  gs.state = QuantumState(n);
  for (int k = 0; k < d; ++k) {
    gs.state[states[static_cast<size_t>(k)]] = es.eigenvectors()(k, 0);
  }
  gs.state.normalize();
  return gs;
}

}  // namespace qdyn
