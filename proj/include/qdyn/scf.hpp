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

#include <Eigen/Core>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qdyn/integrals.hpp"
#include "qdyn/molecule.hpp"

namespace qdyn {

struct ScfOptions {
  int max_iterations = 200;
  double energy_tolerance = 1e-10;   // Ha
  double density_tolerance = 1e-8;   // max |dD|
  int diis_size = 8;
  double level_shift = 0.2;          // Ha, applied only when oscillation is detected
  bool throw_on_no_convergence = true;
};

struct ScfResult {
  double energy = 0.0;               // electronic + nuclear repulsion, Ha
  double nuclear_repulsion = 0.0;    // Ha
  Eigen::MatrixXd mo_coeffs;         // columns = MOs, ascending orbital energy
  Eigen::VectorXd orbital_energies;  // Ha
  Eigen::MatrixXd density;           // AO density, closed-shell factor 2
  bool converged = false;
  int iterations = 0;
  double commutator_max = 0.0;       // max |FDS - SDF| at exit
  int n_occupied = 0;
};

/// Restricted Hartree-Fock with DIIS. Requires an even electron count and at
/// least n_electrons/2 basis functions. MO phases are fixed so the
/// largest-magnitude coefficient of each column is positive.
ScfResult run_rhf(const Molecule& mol, const IntegralSet& ints,
                  const ScfOptions& options = {});

struct ActiveSpace {
  int n_electrons;  // even
  int n_orbitals;
};

/// One- and two-body integrals over spin orbitals, interleaved spins
/// (even index = alpha, odd = beta of the same spatial MO). h2 follows the
/// ordering h_pqrs of H = sum h_pq a+_p a_q + 1/2 sum h_pqrs a+_p a+_q a_r a_s,
/// i.e. h_pqrs = <pq|sr> over spin orbitals.
struct SpinOrbitalIntegrals {
  Eigen::MatrixXd h1;        // 2M x 2M
  std::vector<double> h2;    // (2M)^4
  double scalar_offset = 0;  // nuclear repulsion + frozen-core energy, Ha
  int n_spin_orbitals = 0;
  int n_active_electrons = 0;
  std::vector<int> active_mos;  // spatial MO indices included

  double h2_at(int p, int q, int r, int s) const {
    const int n = n_spin_orbitals;
    return h2[static_cast<size_t>(((p * n + q) * n + r) * n + s)];
  }
  double& h2_at(int p, int q, int r, int s) {
    const int n = n_spin_orbitals;
    return h2[static_cast<size_t>(((p * n + q) * n + r) * n + s)];
  }
};

/// AO->MO transform plus spin-orbital assembly. With an active space the
/// window is centered on HOMO/LUMO in orbital-energy order and the remaining
/// occupied orbitals are folded into an effective one-body operator and the
/// scalar offset.
SpinOrbitalIntegrals spin_orbital_integrals(const ScfResult& scf,
                                            const IntegralSet& ints,
                                            const Molecule& mol,
                                            std::optional<ActiveSpace> active = {});

/// Energy of the aufbau determinant evaluated directly from spin-orbital
/// integrals; equals the RHF total energy when no orbitals are frozen.
double hf_determinant_energy(const SpinOrbitalIntegrals& soi);

/// Reorders and sign-aligns the displaced MOs against a reference by greedy
/// maximum-overlap assignment on |C_ref^T S_cross C_disp|. Errors when the
/// assignment is not confidently one-to-one (best overlap below 0.4).
ScfResult track_orbitals(const ScfResult& displaced, const BasisSet& displaced_basis,
                         const ScfResult& reference, const BasisSet& reference_basis);

/// Debug dump: orbital energies and MO coefficient columns as plain text.
void dump_mo_coefficients(const ScfResult& scf, std::ostream& out);

}  // namespace qdyn
