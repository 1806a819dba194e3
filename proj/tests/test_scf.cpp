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

#include <doctest.h>

#include <cstring>

#include "oracles.hpp"
#include "qdyn/errors.hpp"
#include "qdyn/scf.hpp"
#include "qdyn/units.hpp"

using namespace qdyn;

namespace {

Molecule h2_at(double bond_angstrom) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "2\n\nH 0 0 0\nH 0 0 %.6f\n", bond_angstrom);
  return parse_xyz(buf);
}

Molecule h3plus_equilateral(double side_angstrom) {
  const double s = side_angstrom;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "3\ncharge=1\nH 0 0 0\nH %.8f 0 0\nH %.8f %.8f 0\n",
                s, s / 2.0, s * std::sqrt(3.0) / 2.0);
  return parse_xyz(buf);
}

}  // namespace

TEST_CASE("RHF H2 matches the closed-form minimal-basis result to 1e-8") {
  const Molecule h2 = h2_at(0.735);
  const IntegralSet ints = compute_integrals(build_basis(h2), h2);
  const ScfResult scf = run_rhf(h2, ints);
  REQUIRE(scf.converged);
  const double oracle = oracles::h2_minimal_rhf_energy(ints, nuclear_repulsion(h2));
  CHECK(scf.energy == doctest::Approx(oracle).epsilon(1e-8));
  CHECK(scf.commutator_max < 1e-8);
}

TEST_CASE("RHF invariants: orthonormal MOs, deterministic phases") {
  const Molecule h3 = h3plus_equilateral(0.986);
  const IntegralSet ints = compute_integrals(build_basis(h3), h3);
  const ScfResult a = run_rhf(h3, ints);
  REQUIRE(a.converged);
  CHECK(a.n_occupied == 1);

  const Eigen::MatrixXd ctsc = a.mo_coeffs.transpose() * ints.S * a.mo_coeffs;
  CHECK((ctsc - Eigen::MatrixXd::Identity(ints.n, ints.n)).cwiseAbs().maxCoeff() < 1e-8);

  const ScfResult b = run_rhf(h3, ints);
  CHECK(std::memcmp(a.mo_coeffs.data(), b.mo_coeffs.data(),
                    sizeof(double) * static_cast<size_t>(a.mo_coeffs.size())) == 0);
  CHECK(a.energy == b.energy);
}

TEST_CASE("RHF smoke: two electrons on a single H basis function") {
  const Molecule hminus = parse_xyz("1\ncharge=-1\nH 0 0 0\n");
  const IntegralSet ints = compute_integrals(build_basis(hminus), hminus);
  const ScfResult scf = run_rhf(hminus, ints);
  CHECK(scf.converged);
  CHECK(std::isfinite(scf.energy));
}

TEST_CASE("RHF rejects odd electron counts") {
  const Molecule h3n = parse_xyz("3\n\nH 0 0 0\nH 0.986 0 0\nH 0.493 0.8539 0\n");
  const IntegralSet ints = compute_integrals(build_basis(h3n), h3n);
  CHECK_THROWS_WITH_AS(run_rhf(h3n, ints), doctest::Contains("even electron"), Error);
}

TEST_CASE("spin-orbital tensors: index symmetries and HF contraction identity") {
  const Molecule h2 = h2_at(0.735);
  const IntegralSet ints = compute_integrals(build_basis(h2), h2);
  const ScfResult scf = run_rhf(h2, ints);
  const SpinOrbitalIntegrals soi = spin_orbital_integrals(scf, ints, h2);

  CHECK(soi.n_spin_orbitals == 4);
  CHECK(soi.n_active_electrons == 2);
  CHECK((soi.h1 - soi.h1.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  const int n = soi.n_spin_orbitals;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const double v = soi.h2_at(p, q, r, s);
          CHECK(std::abs(soi.h2_at(q, p, s, r) - v) < 1e-10);
          CHECK(std::abs(soi.h2_at(s, r, q, p) - v) < 1e-10);
        }

  // Aufbau determinant contraction reproduces the RHF total energy.
  CHECK(hf_determinant_energy(soi) == doctest::Approx(scf.energy).epsilon(1e-9));
}

TEST_CASE("RHF energy is variational against determinant CI") {
  for (const Molecule& mol : {h2_at(0.735), h3plus_equilateral(0.986)}) {
    const IntegralSet ints = compute_integrals(build_basis(mol), mol);
    const ScfResult scf = run_rhf(mol, ints);
    const SpinOrbitalIntegrals soi = spin_orbital_integrals(scf, ints, mol);
    const double fci = oracles::determinant_ci_ground_energy(soi);
    CHECK(scf.energy >= fci - 1e-10);
  }
}

TEST_CASE("active space covering the full window reproduces the full tensors") {
  const Molecule h2 = h2_at(0.735);
  const IntegralSet ints = compute_integrals(build_basis(h2), h2);
  const ScfResult scf = run_rhf(h2, ints);
  const SpinOrbitalIntegrals full = spin_orbital_integrals(scf, ints, h2);
  const SpinOrbitalIntegrals active =
      spin_orbital_integrals(scf, ints, h2, ActiveSpace{2, 2});
  CHECK(full.n_spin_orbitals == active.n_spin_orbitals);
  CHECK(full.scalar_offset == active.scalar_offset);
  CHECK((full.h1 - active.h1).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(full.h2.size() == active.h2.size());
  for (size_t k = 0; k < full.h2.size(); ++k) CHECK(full.h2[k] == active.h2[k]);
}

TEST_CASE("frozen-core folding: LiH (2,2) HF determinant reproduces RHF energy") {
  const Molecule lih = parse_xyz("2\n\nLi 0 0 0\nH 0 0 1.6\n");
  const IntegralSet ints = compute_integrals(build_basis(lih), lih);
  const ScfResult scf = run_rhf(lih, ints);
  const SpinOrbitalIntegrals soi =
      spin_orbital_integrals(scf, ints, lih, ActiveSpace{2, 2});
  CHECK(soi.n_spin_orbitals == 4);
  CHECK(soi.n_active_electrons == 2);
  CHECK(soi.active_mos == std::vector<int>{1, 2});
  CHECK(hf_determinant_energy(soi) == doctest::Approx(scf.energy).epsilon(1e-9));
}

TEST_CASE("active window bounds are validated") {
  const Molecule h2 = h2_at(0.735);
  const IntegralSet ints = compute_integrals(build_basis(h2), h2);
  const ScfResult scf = run_rhf(h2, ints);
  CHECK_THROWS_WITH_AS(spin_orbital_integrals(scf, ints, h2, ActiveSpace{2, 5}),
                       doctest::Contains("active window"), Error);
  CHECK_THROWS_AS(spin_orbital_integrals(scf, ints, h2, ActiveSpace{3, 2}), Error);
}

TEST_CASE("orbital tracking aligns displaced MOs with the reference") {
  const Molecule h3 = h3plus_equilateral(0.986);
  const BasisSet basis = build_basis(h3);
  const IntegralSet ints = compute_integrals(basis, h3);
  const ScfResult ref = run_rhf(h3, ints);

  const Molecule moved = displace(h3, 0, 0, 1.8897e-3);
  const BasisSet mbasis = build_basis(moved);
  const IntegralSet mints = compute_integrals(mbasis, moved);
  const ScfResult raw = run_rhf(moved, mints);
  const ScfResult tracked = track_orbitals(raw, mbasis, ref, basis);

  const Eigen::MatrixXd m =
      ref.mo_coeffs.transpose() * overlap_cross(basis, mbasis) * tracked.mo_coeffs;
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    CHECK(m(k, k) > 0.99);  // aligned in order and sign
  }
}

TEST_CASE("spin_orbital_integrals is deterministic") {
  const Molecule lih = parse_xyz("2\n\nLi 0 0 0\nH 0 0 1.6\n");
  const IntegralSet ints = compute_integrals(build_basis(lih), lih);
  const ScfResult scf = run_rhf(lih, ints);
  const SpinOrbitalIntegrals a = spin_orbital_integrals(scf, ints, lih, ActiveSpace{2, 2});
  const SpinOrbitalIntegrals b = spin_orbital_integrals(scf, ints, lih, ActiveSpace{2, 2});
  CHECK(std::memcmp(a.h2.data(), b.h2.data(), sizeof(double) * a.h2.size()) == 0);
  CHECK(a.scalar_offset == b.scalar_offset);
}
