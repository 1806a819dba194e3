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

#include "qdyn/pipeline.hpp"

#include <exception>
#include <thread>
#include <vector>

#include "qdyn/errors.hpp"

namespace qdyn {

HamiltonianContext build_context(const Molecule& mol, const Options& options) {
  HamiltonianContext ctx;
  ctx.mol = mol;
  ctx.basis = build_basis(mol);
  const IntegralSet ints = compute_integrals(ctx.basis, mol);
  ctx.scf = run_rhf(mol, ints, options.scf);
  ctx.soi = spin_orbital_integrals(ctx.scf, ints, mol, options.active_space);
  ctx.hamiltonian = jordan_wigner(ctx.soi, options.pauli_prune_threshold);
  return ctx;
}

HamiltonianContext build_context_tracked(const Molecule& mol, const Options& options,
                                         const HamiltonianContext& reference) {
  HamiltonianContext ctx;
  ctx.mol = mol;
  ctx.basis = build_basis(mol);
  const IntegralSet ints = compute_integrals(ctx.basis, mol);
  const ScfResult raw = run_rhf(mol, ints, options.scf);
  ctx.scf = track_orbitals(raw, ctx.basis, reference.scf, reference.basis);
  ctx.soi = spin_orbital_integrals(ctx.scf, ints, mol, options.active_space);
  ctx.hamiltonian = jordan_wigner(ctx.soi, options.pauli_prune_threshold);
  return ctx;
}

UccsdAnsatz make_ansatz(const HamiltonianContext& ctx) {
  return UccsdAnsatz::build(ctx.soi.n_spin_orbitals, ctx.soi.n_active_electrons);
}

VqeResult solve_ground_state(const HamiltonianContext& ctx, const Options& options,
                             const std::vector<double>* warm_theta) {
  const UccsdAnsatz ansatz = make_ansatz(ctx);
  std::vector<double> theta0(static_cast<size_t>(ansatz.n_params()), 0.0);
  if (warm_theta != nullptr) {
    if (static_cast<int>(warm_theta->size()) != ansatz.n_params()) {
      fail(ErrorCode::invalid_argument, "warm start shape mismatch");
    }
    theta0 = *warm_theta;
  }
  return minimize(ctx.hamiltonian, ansatz, std::move(theta0), options.vqe);
}

void parallel_for(int n, int n_threads, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  if (n_threads <= 0) {
    n_threads = static_cast<int>(std::thread::hardware_concurrency());
  }
  const int workers = std::max(1, std::min(n_threads, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (int i = w; i < n; i += workers) fn(i);
      } catch (...) {
        errors[static_cast<size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace qdyn
