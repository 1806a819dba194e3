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

// Independent test oracles. Everything here recomputes physics through a
// different route than the library code it checks: explicit 2x2 Kronecker
// products, ladder operators on occupation bitstrings, grid quadrature,
// closed-form minimal-basis expressions.

#pragma once

#include <Eigen/Dense>

#include "qdyn/basis.hpp"
#include "qdyn/pauli.hpp"
#include "qdyn/scf.hpp"
#include "qdyn/statevector.hpp"

namespace qdyn::oracles {

/// Dense 2^N matrix of a Pauli string from per-qubit 2x2 entries.
Eigen::MatrixXcd dense_pauli(const PauliString& p);

/// Dense 2^N matrix of a weighted Pauli sum.
Eigen::MatrixXcd dense_pauli(const PauliSum& h);

/// Dense 2^N Fock-space Hamiltonian built by applying ladder operators to
/// occupation bitstrings (no Pauli algebra involved).
Eigen::MatrixXd fock_space_matrix(const SpinOrbitalIntegrals& soi);

/// Ground-state energy by dense diagonalization over the n-electron
/// determinant basis (brute-force determinant CI).
double determinant_ci_ground_energy(const SpinOrbitalIntegrals& soi);

/// exp(G) |v> for anti-Hermitian dense G via eigendecomposition of iG.
Eigen::VectorXcd expm_apply(const Eigen::MatrixXcd& g, const Eigen::VectorXcd& v);

/// 3D Simpson quadrature of the product of two contracted Gaussians.
double overlap_by_quadrature(const ContractedGaussian& a, const ContractedGaussian& b);

/// Coulomb self-repulsion (gg|gg) of an s-type contracted Gaussian by radial
/// quadrature of the electrostatic potential of |g|^2.
double coulomb_self_by_quadrature(const ContractedGaussian& g);

/// Closed-form minimal-basis H2 RHF energy (symmetric combination), no SCF
/// iteration involved.
double h2_minimal_rhf_energy(const IntegralSet& ints, double e_nuc);

/// Random Hermitian spin-orbital tensors with the physical index symmetries,
/// deterministic in the seed.
SpinOrbitalIntegrals random_hermitian_tensors(int n_spin_orbitals, int n_electrons,
                                              unsigned seed);

/// Statevector as a dense complex vector.
Eigen::VectorXcd state_to_vector(const QuantumState& s);

}  // namespace qdyn::oracles
