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

#include "qdyn/scf.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <deque>
#include <ostream>

#include "qdyn/errors.hpp"

namespace qdyn {

namespace {

void fix_phases(Eigen::MatrixXd& C) {
  for (Eigen::Index j = 0; j < C.cols(); ++j) {
    Eigen::Index imax = 0;
    C.col(j).cwiseAbs().maxCoeff(&imax);
    if (C(imax, j) < 0.0) C.col(j) = -C.col(j);
  }
}

Eigen::MatrixXd build_fock(const IntegralSet& ints, const Eigen::MatrixXd& D) {
  const int n = ints.n;
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n, n);
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = mu; nu < n; ++nu) {
      double g = 0.0;
      for (int la = 0; la < n; ++la) {
        for (int si = 0; si < n; ++si) {
          const double d = D(la, si);
          if (d == 0.0) continue;
          g += d * (ints.eri_at(mu, nu, la, si) - 0.5 * ints.eri_at(mu, la, nu, si));
        }
      }
      G(mu, nu) = g;
      G(nu, mu) = g;
    }
  }
  return ints.T + ints.V + G;
}

}  // namespace

ScfResult run_rhf(const Molecule& mol, const IntegralSet& ints, const ScfOptions& opt) {
  const int n = ints.n;
  const int n_elec = mol.n_electrons();
  if (n_elec % 2 != 0) {
    fail(ErrorCode::precondition, "RHF requires an even electron count, got " +
                                      std::to_string(n_elec));
  }
  const int n_occ = n_elec / 2;
  if (n_occ > n) {
    fail(ErrorCode::precondition, "not enough basis functions for " +
                                      std::to_string(n_elec) + " electrons");
  }

  const double e_nuc = mol.size() > 1 ? nuclear_repulsion(mol) : 0.0;
  const Eigen::MatrixXd Hcore = ints.T + ints.V;

  // Symmetric orthogonalization X = S^(-1/2).
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_s(ints.S);
  const Eigen::MatrixXd X = es_s.eigenvectors() *
                            es_s.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                            es_s.eigenvectors().transpose();
  const Eigen::MatrixXd S_half = es_s.eigenvectors() *
                                 es_s.eigenvalues().cwiseSqrt().asDiagonal() *
                                 es_s.eigenvectors().transpose();

  Eigen::MatrixXd C, D = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd eps;

  // Diagonalizes F in the orthonormal basis; shift > 0 raises the virtual
  // block built from the current occupied MOs.
  auto solve_mos = [&](const Eigen::MatrixXd& F, double shift) {
    Eigen::MatrixXd F_orth = X.transpose() * F * X;
    if (shift > 0.0 && n_occ > 0 && C.size() > 0) {
      const Eigen::MatrixXd occ = S_half * C.leftCols(n_occ);
      F_orth += shift * (Eigen::MatrixXd::Identity(n, n) - occ * occ.transpose());
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(F_orth);
    C = X * es.eigenvectors();
    eps = es.eigenvalues();
    fix_phases(C);
  };

  solve_mos(Hcore, 0.0);  // core guess
  if (n_occ > 0) D = 2.0 * C.leftCols(n_occ) * C.leftCols(n_occ).transpose();

  std::deque<Eigen::MatrixXd> diis_focks;
  std::deque<Eigen::MatrixXd> diis_errors;
  double e_prev = 0.0;
  double last_delta_e = 0.0;
  bool shift_active = false;
  int rises = 0;

  ScfResult result;
  result.nuclear_repulsion = e_nuc;
  result.n_occupied = n_occ;

  for (int iter = 1; iter <= opt.max_iterations; ++iter) {
    Eigen::MatrixXd F = build_fock(ints, D);
    const double e_elec = 0.5 * (D.cwiseProduct(Hcore + F)).sum();
    const double e_total = e_elec + e_nuc;

    const Eigen::MatrixXd err_ao = F * D * ints.S - ints.S * D * F;
    const Eigen::MatrixXd err = X.transpose() * err_ao * X;
    result.commutator_max = err_ao.cwiseAbs().maxCoeff();

    const double delta_e = e_total - e_prev;
    if (iter > 2 && delta_e > 0.0 && last_delta_e < 0.0) {
      if (++rises >= 2) shift_active = true;
    }
    last_delta_e = delta_e;

    // DIIS extrapolation.
    diis_focks.push_back(F);
    diis_errors.push_back(err);
    while (static_cast<int>(diis_focks.size()) > opt.diis_size) {
      diis_focks.pop_front();
      diis_errors.pop_front();
    }
    if (diis_focks.size() >= 2) {
      const int m = static_cast<int>(diis_focks.size());
      Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m + 1, m + 1);
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          B(a, b) = (diis_errors[static_cast<size_t>(a)].cwiseProduct(
                         diis_errors[static_cast<size_t>(b)]))
                        .sum();
        }
        B(a, m) = B(m, a) = -1.0;
      }
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
      rhs(m) = -1.0;
      const Eigen::VectorXd coef = B.fullPivLu().solve(rhs);
      if (coef.allFinite()) {
        F.setZero();
        for (int a = 0; a < m; ++a) F += coef(a) * diis_focks[static_cast<size_t>(a)];
      }
    }

    solve_mos(F, (shift_active && n_occ < n) ? opt.level_shift : 0.0);
    Eigen::MatrixXd D_new = Eigen::MatrixXd::Zero(n, n);
    if (n_occ > 0) D_new = 2.0 * C.leftCols(n_occ) * C.leftCols(n_occ).transpose();
    const double d_change = (D_new - D).cwiseAbs().maxCoeff();
    D = D_new;

    result.iterations = iter;
    if (iter > 1 && std::abs(delta_e) < opt.energy_tolerance &&
        d_change < opt.density_tolerance) {
      // Canonicalize: one clean diagonalization of the converged Fock.
      const Eigen::MatrixXd Ff = build_fock(ints, D);
      solve_mos(Ff, 0.0);
      if (n_occ > 0) D = 2.0 * C.leftCols(n_occ) * C.leftCols(n_occ).transpose();
      const Eigen::MatrixXd F2 = build_fock(ints, D);
      result.energy = 0.5 * (D.cwiseProduct(Hcore + F2)).sum() + e_nuc;
      const Eigen::MatrixXd comm = F2 * D * ints.S - ints.S * D * F2;
      result.commutator_max = comm.cwiseAbs().maxCoeff();
      result.converged = true;
      result.mo_coeffs = C;
      result.orbital_energies = eps;
      result.density = D;
      return result;
    }
    e_prev = e_total;
    result.energy = e_total;
    result.mo_coeffs = C;
    result.orbital_energies = eps;
    result.density = D;
  }

  if (opt.throw_on_no_convergence) {
    fail(ErrorCode::scf_convergence,
         "SCF did not converge in " + std::to_string(opt.max_iterations) +
             " iterations (last energy " + std::to_string(result.energy) + " Ha)");
  }
  return result;
}

SpinOrbitalIntegrals spin_orbital_integrals(const ScfResult& scf,
                                            const IntegralSet& ints,
                                            const Molecule& mol,
                                            std::optional<ActiveSpace> active) {
  const int n = ints.n;
  const int n_occ = scf.n_occupied;
  const Eigen::MatrixXd& C = scf.mo_coeffs;

  int n_act_orb = n;
  int n_act_elec = mol.n_electrons();
  int first_active = 0;
  if (active.has_value()) {
    n_act_elec = active->n_electrons;
    n_act_orb = active->n_orbitals;
    if (n_act_elec % 2 != 0 || n_act_elec < 0) {
      fail(ErrorCode::precondition, "active electron count must be even and >= 0");
    }
    const int act_occ = n_act_elec / 2;
    const int act_virt = n_act_orb - act_occ;
    if (act_occ > n_occ || act_virt < 0 || n_occ - act_occ + n_act_orb > n) {
      fail(ErrorCode::precondition, "active window exceeds orbital count");
    }
    first_active = n_occ - act_occ;
  }
  const int n_frozen = first_active;

  // AO->MO one-body transform.
  const Eigen::MatrixXd h_mo = C.transpose() * (ints.T + ints.V) * C;

  // Quarter transforms for the full MO ERI tensor (chemists' notation).
  std::vector<double> t1(static_cast<size_t>(n) * n * n * n, 0.0);
  std::vector<double> t2(t1.size(), 0.0);
  auto idx = [n](int p, int q, int r, int s) {
    return static_cast<size_t>(((p * n + q) * n + r) * n + s);
  };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int mu = 0; mu < n; ++mu) acc += C(mu, p) * ints.eri_at(mu, q, r, s);
          t1[idx(p, q, r, s)] = acc;
        }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int nu = 0; nu < n; ++nu) acc += C(nu, q) * t1[idx(p, nu, r, s)];
          t2[idx(p, q, r, s)] = acc;
        }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int la = 0; la < n; ++la) acc += C(la, r) * t2[idx(p, q, la, s)];
          t1[idx(p, q, r, s)] = acc;
        }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int si = 0; si < n; ++si) acc += C(si, s) * t1[idx(p, q, r, si)];
          t2[idx(p, q, r, s)] = acc;
        }
  const std::vector<double>& mo_eri = t2;

  // Frozen-core energy and effective one-body operator.
  double e_frozen = 0.0;
  for (int i = 0; i < n_frozen; ++i) {
    e_frozen += 2.0 * h_mo(i, i);
    for (int j = 0; j < n_frozen; ++j) {
      e_frozen += 2.0 * mo_eri[idx(i, i, j, j)] - mo_eri[idx(i, j, i, j)];
    }
  }
  Eigen::MatrixXd h_eff(n_act_orb, n_act_orb);
  std::vector<int> act(static_cast<size_t>(n_act_orb));
  for (int t = 0; t < n_act_orb; ++t) act[static_cast<size_t>(t)] = first_active + t;
  for (int t = 0; t < n_act_orb; ++t) {
    for (int u = 0; u < n_act_orb; ++u) {
      double h = h_mo(act[static_cast<size_t>(t)], act[static_cast<size_t>(u)]);
      for (int i = 0; i < n_frozen; ++i) {
        h += 2.0 * mo_eri[idx(act[static_cast<size_t>(t)], act[static_cast<size_t>(u)], i, i)] -
             mo_eri[idx(act[static_cast<size_t>(t)], i, i, act[static_cast<size_t>(u)])];
      }
      h_eff(t, u) = h;
    }
  }

  // Spin-orbital assembly, interleaved (even alpha, odd beta).
  SpinOrbitalIntegrals soi;
  const int n_so = 2 * n_act_orb;
  soi.n_spin_orbitals = n_so;
  soi.n_active_electrons = n_act_elec;
  soi.scalar_offset = scf.nuclear_repulsion + e_frozen;
  soi.active_mos = act;
  soi.h1 = Eigen::MatrixXd::Zero(n_so, n_so);
  for (int p = 0; p < n_so; ++p) {
    for (int q = 0; q < n_so; ++q) {
      if (p % 2 == q % 2) soi.h1(p, q) = h_eff(p / 2, q / 2);
    }
  }
  soi.h2.assign(static_cast<size_t>(n_so) * n_so * n_so * n_so, 0.0);
  // h_pqrs = <pq|sr> = (p s | q r) delta(sp,ss) delta(sq,sr) over spatials.
  for (int p = 0; p < n_so; ++p)
    for (int q = 0; q < n_so; ++q)
      for (int r = 0; r < n_so; ++r)
        for (int s = 0; s < n_so; ++s) {
          if (p % 2 != s % 2 || q % 2 != r % 2) continue;
          soi.h2_at(p, q, r, s) =
              mo_eri[idx(act[static_cast<size_t>(p / 2)], act[static_cast<size_t>(s / 2)],
                         act[static_cast<size_t>(q / 2)], act[static_cast<size_t>(r / 2)])];
        }
  return soi;
}

double hf_determinant_energy(const SpinOrbitalIntegrals& soi) {
  const int ne = soi.n_active_electrons;
  double e = soi.scalar_offset;
  for (int p = 0; p < ne; ++p) e += soi.h1(p, p);
  for (int p = 0; p < ne; ++p) {
    for (int q = 0; q < ne; ++q) {
      // <pq|pq> - <pq|qp> in h_pqrs ordering.
      e += 0.5 * (soi.h2_at(p, q, q, p) - soi.h2_at(p, q, p, q));
    }
  }
  return e;
}

void dump_mo_coefficients(const ScfResult& scf, std::ostream& out) {
  char buf[64];
  out << "orbital_energies";
  for (Eigen::Index k = 0; k < scf.orbital_energies.size(); ++k) {
    std::snprintf(buf, sizeof(buf), " % .12e", scf.orbital_energies(k));
    out << buf;
  }
  out << "\n";
  for (Eigen::Index mu = 0; mu < scf.mo_coeffs.rows(); ++mu) {
    out << "C " << mu;
    for (Eigen::Index k = 0; k < scf.mo_coeffs.cols(); ++k) {
      std::snprintf(buf, sizeof(buf), " % .12e", scf.mo_coeffs(mu, k));
      out << buf;
    }
    out << "\n";
  }
}

ScfResult track_orbitals(const ScfResult& displaced, const BasisSet& displaced_basis,
                         const ScfResult& reference, const BasisSet& reference_basis) {
  const Eigen::MatrixXd s_cross = overlap_cross(reference_basis, displaced_basis);
  const Eigen::MatrixXd M = reference.mo_coeffs.transpose() * s_cross * displaced.mo_coeffs;
  const int n = static_cast<int>(M.rows());

  std::vector<int> assignment(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    int best = -1;
    double best_val = 0.0;
    for (int j = 0; j < n; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      const double v = std::abs(M(i, j));
      if (v > best_val) {
        best_val = v;
        best = j;
      }
    }
    if (best < 0 || best_val < 0.4) {
      fail(ErrorCode::orbital_tracking,
           "orbital tracking ambiguity: reference MO " + std::to_string(i) +
               " has best overlap " + std::to_string(best_val));
    }
    assignment[static_cast<size_t>(i)] = best;
    used[static_cast<size_t>(best)] = true;
  }

  ScfResult tracked = displaced;
  for (int i = 0; i < n; ++i) {
    const int j = assignment[static_cast<size_t>(i)];
    tracked.mo_coeffs.col(i) = displaced.mo_coeffs.col(j);
    if (M(i, j) < 0.0) tracked.mo_coeffs.col(i) = -tracked.mo_coeffs.col(i);
    tracked.orbital_energies(i) = displaced.orbital_energies(j);
  }

  // Within degenerate clusters of the reference spectrum a signed permutation
  // cannot align the frames (the displaced SCF splits the cluster along its
  // own axes). Rotate each cluster block by its orthogonal Procrustes factor
  // so the cross overlap becomes symmetric positive definite.
  const Eigen::MatrixXd Mt = reference.mo_coeffs.transpose() * s_cross * tracked.mo_coeffs;
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n && std::abs(reference.orbital_energies(end) -
                               reference.orbital_energies(end - 1)) < 1e-7) {
      ++end;
    }
    const int size = end - start;
    if (size > 1) {
      const Eigen::MatrixXd block = Mt.block(start, start, size, size);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(block,
                                            Eigen::ComputeFullU | Eigen::ComputeFullV);
      if (svd.singularValues().minCoeff() < 0.4) {
        fail(ErrorCode::orbital_tracking,
             "orbital tracking ambiguity inside a degenerate cluster");
      }
      const Eigen::MatrixXd rot = svd.matrixV() * svd.matrixU().transpose();
      tracked.mo_coeffs.middleCols(start, size) =
          (tracked.mo_coeffs.middleCols(start, size) * rot).eval();
    }
    start = end;
  }
  return tracked;
}

}  // namespace qdyn
