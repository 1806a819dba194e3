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

#include <algorithm>

#include "oracles.hpp"
#include "qdyn/errors.hpp"
#include "qdyn/exact_diag.hpp"
#include "qdyn/jordan_wigner.hpp"
#include "qdyn/pipeline.hpp"
#include "qdyn/units.hpp"

using namespace qdyn;

namespace {

SpinOrbitalIntegrals one_body_only(const Eigen::MatrixXd& h1, double offset = 0.0) {
  SpinOrbitalIntegrals soi;
  soi.n_spin_orbitals = static_cast<int>(h1.rows());
  soi.n_active_electrons = 0;
  soi.scalar_offset = offset;
  soi.h1 = h1;
  const size_t n4 = static_cast<size_t>(soi.n_spin_orbitals) * soi.n_spin_orbitals *
                    soi.n_spin_orbitals * soi.n_spin_orbitals;
  soi.h2.assign(n4, 0.0);
  return soi;
}

SpinOrbitalIntegrals h2_sto3g_tensors(double bond_angstrom) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "2\n\nH 0 0 0\nH 0 0 %.6f\n", bond_angstrom);
  const Molecule mol = parse_xyz(buf);
  const IntegralSet ints = compute_integrals(build_basis(mol), mol);
  const ScfResult scf = run_rhf(mol, ints);
  return spin_orbital_integrals(scf, ints, mol);
}

}  // namespace

TEST_CASE("PauliString word form and canonical order") {
  const PauliString p = PauliString::from_word("ZIII");
  CHECK(p.n_qubits() == 4);
  CHECK(p.letter(0) == 'Z');
  CHECK(p.letter(3) == 'I');
  CHECK(p.word() == "ZIII");

  PauliString::Less less;
  CHECK(less(PauliString::from_word("II"), PauliString::from_word("IX")));
  CHECK(less(PauliString::from_word("IX"), PauliString::from_word("XI")));
  CHECK(less(PauliString::from_word("XY"), PauliString::from_word("XZ")));
  CHECK_FALSE(less(PauliString::from_word("ZZ"), PauliString::from_word("ZZ")));
}

TEST_CASE("PauliSum text serialization round-trips") {
  PauliSum h(3);
  h.add(PauliString::from_word("XIZ"), -0.4804);
  h.add(PauliString::from_word("III"), 0.25);
  const PauliSum back = PauliSum::from_text(h.to_text());
  CHECK(back.size() == 2);
  CHECK(back.coefficient(PauliString::from_word("XIZ")) == doctest::Approx(-0.4804));
  CHECK(back.coefficient(PauliString::from_word("III")) == doctest::Approx(0.25));
}

TEST_CASE("JW number operator: a+0 a0 -> 0.5 I - 0.5 Z0") {
  Eigen::MatrixXd h1 = Eigen::MatrixXd::Zero(1, 1);
  h1(0, 0) = 1.0;
  const PauliSum sum = jordan_wigner(one_body_only(h1));
  CHECK(sum.size() == 2);
  CHECK(sum.coefficient(PauliString::from_word("I")) == doctest::Approx(0.5));
  CHECK(sum.coefficient(PauliString::from_word("Z")) == doctest::Approx(-0.5));
}

TEST_CASE("JW hopping term against the dense 4x4 oracle") {
  const double t = 0.37;
  Eigen::MatrixXd h1 = Eigen::MatrixXd::Zero(2, 2);
  h1(0, 1) = h1(1, 0) = t;
  const SpinOrbitalIntegrals soi = one_body_only(h1);
  const PauliSum sum = jordan_wigner(soi);

  CHECK(sum.coefficient(PauliString::from_word("XX")) == doctest::Approx(t / 2));
  CHECK(sum.coefficient(PauliString::from_word("YY")) == doctest::Approx(t / 2));

  const Eigen::MatrixXcd dense = oracles::dense_pauli(sum);
  const Eigen::MatrixXd fock = oracles::fock_space_matrix(soi);
  CHECK((dense.real() - fock).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(dense.imag().cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("H2 JW Hamiltonian: ground eigenvalue equals determinant CI") {
  const SpinOrbitalIntegrals soi = h2_sto3g_tensors(0.735);
  const PauliSum h = jordan_wigner(soi);
  CHECK(h.n_qubits() == 4);
  const double fci = oracles::determinant_ci_ground_energy(soi);
  const GroundState gs = exact_ground_state(h);
  CHECK(gs.energy == doctest::Approx(fci).epsilon(1e-9));
  const GroundState sector = exact_ground_state_sector(h, 2);
  CHECK(sector.energy == doctest::Approx(fci).epsilon(1e-10));
}

TEST_CASE("JW preserves spectra on random Hermitian tensors") {
  for (const int n_so : {2, 3, 4}) {
    for (const unsigned seed : {1u, 2u, 3u}) {
      const SpinOrbitalIntegrals soi =
          oracles::random_hermitian_tensors(n_so, n_so / 2, seed);
      const PauliSum h = jordan_wigner(soi);
      const Eigen::MatrixXcd dense = oracles::dense_pauli(h);
      const Eigen::MatrixXd fock = oracles::fock_space_matrix(soi);

      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ed(dense);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ef(fock);
      for (Eigen::Index k = 0; k < ed.eigenvalues().size(); ++k) {
        CHECK(std::abs(ed.eigenvalues()(k) - ef.eigenvalues()(k)) < 1e-9);
      }
    }
  }
}

TEST_CASE("molecular JW Hamiltonian commutes with the number operator") {
  const SpinOrbitalIntegrals soi = h2_sto3g_tensors(0.735);
  const PauliSum h = jordan_wigner(soi);
  PauliSum number(4);
  for (int k = 0; k < 4; ++k) {
    number.add(PauliString(4), 0.5);
    number.add(PauliString::from_masks(4, 0, 1u << k), -0.5);
  }
  const Eigen::MatrixXcd hd = oracles::dense_pauli(h);
  const Eigen::MatrixXcd nd = oracles::dense_pauli(number);
  CHECK((hd * nd - nd * hd).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("non-Hermitian tensors are rejected") {
  Eigen::MatrixXd h1 = Eigen::MatrixXd::Zero(2, 2);
  h1(0, 1) = 0.3;  // asymmetric
  CHECK_THROWS_WITH_AS(jordan_wigner(one_body_only(h1)),
                       doctest::Contains("non-Hermitian"), Error);
}

TEST_CASE("scalar offset rides on the identity string") {
  Eigen::MatrixXd h1 = Eigen::MatrixXd::Zero(2, 2);
  h1(0, 0) = 0.2;
  const PauliSum without = jordan_wigner(one_body_only(h1, 0.0));
  const PauliSum with = jordan_wigner(one_body_only(h1, 1.75));
  CHECK(with.identity_coefficient() - without.identity_coefficient() ==
        doctest::Approx(1.75).epsilon(1e-12));
}

TEST_CASE("delta_hamiltonian basics") {
  const SpinOrbitalIntegrals soi = h2_sto3g_tensors(0.735);
  const PauliSum h = jordan_wigner(soi);

  const PauliSum zero = delta_hamiltonian(h, h);
  CHECK(zero.size() == 0);

  const SpinOrbitalIntegrals soi_plus = h2_sto3g_tensors(0.736);
  const PauliSum hp = jordan_wigner(soi_plus);
  const PauliSum ab = delta_hamiltonian(hp, h);
  const PauliSum ba = delta_hamiltonian(h, hp);
  CHECK(ab.size() == ba.size());
  for (const auto& [p, c] : ab.terms()) {
    CHECK(ba.coefficient(p) == -c);  // exact antisymmetry
  }

  PauliSum small(2);
  small.add(PauliString::from_word("XX"), 1.0);
  CHECK_THROWS_AS(delta_hamiltonian(h, small), Error);
}

TEST_CASE("displaced H2 Hamiltonians share the reference string support") {
  const double dd_ang = 1.0e-3;
  const PauliSum ref = jordan_wigner(h2_sto3g_tensors(0.735));
  const PauliSum hp = jordan_wigner(h2_sto3g_tensors(0.735 + dd_ang));
  const PauliSum hm = jordan_wigner(h2_sto3g_tensors(0.735 - dd_ang));
  const PauliSum delta = delta_hamiltonian(hp, hm);
  for (const auto& [p, c] : delta.terms()) {
    CHECK(ref.contains(p));
  }
  const DeltaSplit split = split_reuse_extra(hp, hm, ref);
  CHECK(split.extra.size() == 0);
}

TEST_CASE("split_reuse_extra: subset and disjoint supports") {
  PauliSum reference(1);
  reference.add(PauliString::from_word("I"), 1.0);

  PauliSum delta(1);
  delta.add(PauliString::from_word("Z"), 0.5);
  const DeltaSplit disjoint = split_reuse_extra(delta, reference);
  CHECK(disjoint.reuse_plus.empty());
  CHECK(disjoint.extra.size() == 1);
  CHECK(disjoint.extra.coefficient(PauliString::from_word("Z")) == doctest::Approx(0.5));

  PauliSum covered(1);
  covered.add(PauliString::from_word("I"), 0.25);
  const DeltaSplit subset = split_reuse_extra(covered, reference);
  CHECK(subset.extra.size() == 0);
  REQUIRE(subset.reuse_plus.size() == 1);
  PauliSum::TermMap cache;
  cache.emplace(PauliString::from_word("I"), 1.0);
  CHECK(reuse_energy(subset, cache) == doctest::Approx(0.25));
}

TEST_CASE("H3+ displacement: reuse covers the delta coefficient weight") {
  Options opt;
  const auto weight_fraction = [&](const Molecule& mol, int atom, int axis) {
    const HamiltonianContext ref = build_context(mol, opt);
    const double dd = opt.delta_d_bohr();
    const HamiltonianContext plus =
        build_context_tracked(displace(mol, atom, axis, +dd), opt, ref);
    const HamiltonianContext minus =
        build_context_tracked(displace(mol, atom, axis, -dd), opt, ref);
    const PauliSum delta = delta_hamiltonian(plus.hamiltonian, minus.hamiltonian);
    double total = 0.0, reused = 0.0;
    for (const auto& [p, c] : delta.terms()) {
      total += std::abs(c);
      if (ref.hamiltonian.contains(p)) reused += std::abs(c);
    }
    return reused / total;
  };

  // Colinear scan geometry, bond-direction displacement: the string support
  // is unchanged and everything is reused (recorded regression value 1.0).
  const Molecule colinear = parse_xyz("3\ncharge=1\nH 0 0 0\nH 0 0 0.735\nH 0 0 2.235\n");
  const double f_colinear = weight_fraction(colinear, 2, 2);
  CHECK(f_colinear >= 0.95);
  CHECK(f_colinear >= 0.999);

  // At the D3h point symmetry prunes strings from the reference that the
  // displaced Hamiltonians repopulate; observed fraction 0.9454.
  const Molecule equilateral =
      parse_xyz("3\ncharge=1\nH 0 0 0\nH 0.986 0 0\nH 0.493 0.85390817 0\n");
  const double f_sym = weight_fraction(equilateral, 1, 0);
  CHECK(f_sym >= 0.94);
  CHECK(f_sym <= 0.96);
}

TEST_CASE("no string lands in both a reuse list and extra") {
  const PauliSum ref = jordan_wigner(h2_sto3g_tensors(0.80));
  const PauliSum hp = jordan_wigner(h2_sto3g_tensors(0.81));
  const PauliSum hm = jordan_wigner(h2_sto3g_tensors(0.79));
  const DeltaSplit split = split_reuse_extra(hp, hm, ref);
  for (const auto& [c, p] : split.reuse_plus) {
    CHECK(ref.contains(p));
    CHECK_FALSE(split.extra.contains(p));
  }
  for (const auto& [c, p] : split.reuse_minus) {
    CHECK(ref.contains(p));
    CHECK_FALSE(split.extra.contains(p));
  }
}

TEST_CASE("JW enforces the simulator qubit bound") {
  SpinOrbitalIntegrals big;
  big.n_spin_orbitals = 26;
  CHECK_THROWS_WITH_AS(jordan_wigner(big), doctest::Contains("24"), Error);
}
