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
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "qdyn/errors.hpp"
#include "qdyn/exact_diag.hpp"
#include "qdyn/pipeline.hpp"

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

TEST_CASE("constant Hamiltonian: no descent iterations") {
  const UccsdAnsatz ansatz = UccsdAnsatz::build(4, 2);
  PauliSum h(4);
  h.add(PauliString(4), 2.5);
  const std::vector<double> theta0 = {0.3, -0.2, 0.1};
  const VqeResult result = minimize(h, ansatz, theta0);
  CHECK(result.converged);
  CHECK(result.iterations == 0);
  CHECK(result.energy == doctest::Approx(2.5).epsilon(1e-13));
  CHECK(result.theta == theta0);
}

TEST_CASE("H2 VQE reaches the exact ground state within 1e-7") {
  const HamiltonianContext ctx = build_context(h2_at(0.735), Options{});
  const UccsdAnsatz ansatz = make_ansatz(ctx);
  const VqeResult result =
      minimize(ctx.hamiltonian, ansatz, std::vector<double>(3, 0.0));
  REQUIRE(result.converged);
  const double exact = exact_ground_state_sector(ctx.hamiltonian, 2).energy;
  CHECK(result.energy == doctest::Approx(exact).epsilon(1e-7));
  CHECK(result.energy >= exact - 1e-9);

  // Self-consistency: stored energy equals a fresh expectation at theta.
  const QuantumState s = uccsd_state(ansatz, result.theta);
  CHECK(expectation(s, ctx.hamiltonian) == doctest::Approx(result.energy).epsilon(1e-12));
}

TEST_CASE("H3+ equilateral VQE matches the oracle") {
  const HamiltonianContext ctx = build_context(h3plus_equilateral(0.986), Options{});
  const VqeResult result = solve_ground_state(ctx, Options{});
  REQUIRE(result.converged);
  const double exact = exact_ground_state_sector(ctx.hamiltonian, 2).energy;
  CHECK(std::abs(result.energy - exact) < 1e-7);
  CHECK(result.energy >= exact - 1e-9);
}

TEST_CASE("exact gradients agree with central parameter differences") {
  const HamiltonianContext ctx = build_context(h3plus_equilateral(0.986), Options{});
  const UccsdAnsatz ansatz = make_ansatz(ctx);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> uni(-0.4, 0.4);
  std::vector<double> theta;
  for (int k = 0; k < ansatz.n_params(); ++k) theta.push_back(uni(rng));

  std::vector<double> grad;
  uccsd_energy_and_gradient(ctx.hamiltonian, ansatz, theta, grad);

  const double step = 1e-6;
  for (int k = 0; k < ansatz.n_params(); ++k) {
    std::vector<double> tp = theta, tm = theta;
    tp[static_cast<size_t>(k)] += step;
    tm[static_cast<size_t>(k)] -= step;
    const double ep = expectation(uccsd_state(ansatz, tp), ctx.hamiltonian);
    const double em = expectation(uccsd_state(ansatz, tm), ctx.hamiltonian);
    const double fd = (ep - em) / (2.0 * step);
    CHECK(std::abs(grad[static_cast<size_t>(k)] - fd) < 1e-8);
  }
}

TEST_CASE("warm start: identical geometry re-converges in at most 2 iterations") {
  const HamiltonianContext ctx = build_context(h2_at(0.76), Options{});
  const UccsdAnsatz ansatz = make_ansatz(ctx);
  const VqeResult cold = minimize(ctx.hamiltonian, ansatz, {0.0, 0.0, 0.0});
  REQUIRE(cold.converged);
  const VqeResult warm = minimize(ctx.hamiltonian, ansatz, warm_start(cold, ansatz));
  CHECK(warm.converged);
  CHECK(warm.iterations <= 2);
  CHECK(warm.energy == doctest::Approx(cold.energy).epsilon(1e-10));
}

TEST_CASE("warm start rejects mismatched shapes") {
  const HamiltonianContext h2 = build_context(h2_at(0.735), Options{});
  const HamiltonianContext h3 = build_context(h3plus_equilateral(0.986), Options{});
  const VqeResult r = solve_ground_state(h2, Options{});
  CHECK_THROWS_WITH_AS(warm_start(r, make_ansatz(h3)), doctest::Contains("mismatch"),
                       Error);
}

TEST_CASE("warm starting beats cold starting along a short displacement sweep") {
  // Ten geometries 2e-3 Angstrom apart, as an MD step would produce.
  Options opt;
  int warm_total = 0;
  int cold_total = 0;
  HamiltonianContext prev;
  VqeResult prev_vqe;
  bool have_prev = false;
  for (int k = 0; k < 10; ++k) {
    const Molecule mol = h2_at(0.78 + 2e-3 * k);
    const HamiltonianContext ctx =
        have_prev ? build_context_tracked(mol, opt, prev) : build_context(mol, opt);
    const VqeResult cold = solve_ground_state(ctx, opt);
    cold_total += cold.iterations;
    const VqeResult warm = have_prev ? solve_ground_state(ctx, opt, &prev_vqe.theta)
                                     : cold;
    warm_total += warm.iterations;
    prev = ctx;
    prev_vqe = warm;
    have_prev = true;
  }
  CHECK(warm_total < cold_total);
}

TEST_CASE("minimize is deterministic bit for bit") {
  const HamiltonianContext ctx = build_context(h3plus_equilateral(1.1), Options{});
  const UccsdAnsatz ansatz = make_ansatz(ctx);
  const std::vector<double> theta0(static_cast<size_t>(ansatz.n_params()), 0.0);
  const VqeResult a = minimize(ctx.hamiltonian, ansatz, theta0);
  const VqeResult b = minimize(ctx.hamiltonian, ansatz, theta0);
  CHECK(a.energy == b.energy);
  REQUIRE(a.theta.size() == b.theta.size());
  CHECK(std::memcmp(a.theta.data(), b.theta.data(), sizeof(double) * a.theta.size()) == 0);
}

TEST_CASE("convergence trace is written when requested") {
  const HamiltonianContext ctx = build_context(h2_at(0.9), Options{});
  VqeOptions vo;
  vo.trace_path = "vqe_trace_test.csv";
  const VqeResult r = minimize(ctx.hamiltonian, make_ansatz(ctx),
                               std::vector<double>(3, 0.0), vo);
  CHECK(r.converged);
  std::ifstream in(vo.trace_path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "iteration,energy,grad_norm");
  int lines = 0;
  std::string line;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == r.iterations + 1);
  std::remove(vo.trace_path.c_str());
}
