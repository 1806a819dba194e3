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

#include <functional>
#include <optional>

#include "qdyn/jordan_wigner.hpp"
#include "qdyn/units.hpp"
#include "qdyn/vqe.hpp"

namespace qdyn {

/// Knobs shared by the whole pipeline. Defaults: STO-3G, 0.2 fs time step,
/// 1.0e-3 Angstrom difference step, standard atomic weights.
struct Options {
  std::optional<ActiveSpace> active_space;
  double delta_d_angstrom = 1.0e-3;
  bool isotope_masses = false;   // default: standard atomic weights
  bool eckart_projection = false;
  enum class ForceMode { correlated, exact };
  ForceMode force_mode = ForceMode::correlated;
  int threads = 0;  // 0 = all available cores
  double pauli_prune_threshold = 1e-12;
  ScfOptions scf;
  VqeOptions vqe;

  double delta_d_bohr() const { return units::angstrom_to_bohr(delta_d_angstrom); }
};

/// Everything the electronic pipeline produces at one geometry:
/// basis -> integrals -> RHF -> (active space) spin-orbital tensors -> JW.
struct HamiltonianContext {
  Molecule mol;
  BasisSet basis;
  ScfResult scf;
  SpinOrbitalIntegrals soi;
  PauliSum hamiltonian;
};

HamiltonianContext build_context(const Molecule& mol, const Options& options);

/// Same pipeline, but the displaced-geometry MOs are tracked (reordered and
/// sign-aligned) against the reference before the active window and the JW
/// mapping are applied. Required for smooth finite-difference Hamiltonians.
HamiltonianContext build_context_tracked(const Molecule& mol, const Options& options,
                                         const HamiltonianContext& reference);

UccsdAnsatz make_ansatz(const HamiltonianContext& ctx);

/// Cold (theta = 0) or warm-started VQE on the context Hamiltonian.
VqeResult solve_ground_state(const HamiltonianContext& ctx, const Options& options,
                             const std::vector<double>* warm_theta = nullptr);

/// Runs fn(0..n-1), possibly on several threads; each index writes only its
/// own slot so results do not depend on the thread count.
void parallel_for(int n, int n_threads, const std::function<void(int)>& fn);

}  // namespace qdyn
