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

#include "qdyn/stationary.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "qdyn/errors.hpp"
#include "qdyn/exact_diag.hpp"
#include "qdyn/units.hpp"

namespace qdyn {

namespace {

constexpr double kForceConvergence = 1e-4;   // Ha/Bohr
constexpr double kEigenvalueFloor = 1e-6;    // Ha/Bohr^2, pseudo-inverse cutoff

struct Displacement {
  int i;          // first coordinate
  int j;          // second coordinate, -1 for single displacements
  int si, sj;     // signs
};

Molecule displaced_geometry(const Molecule& mol, const Displacement& d, double dd) {
  Molecule out = displace(mol, d.i / 3, d.i % 3, d.si * dd);
  if (d.j >= 0) out = displace(out, d.j / 3, d.j % 3, d.sj * dd);
  return out;
}

constexpr double kImaginaryModeCutoff = -100.0;  // cm^-1

// <psi|op|psi> on the frozen reference state, reusing cached P_alpha for
// strings present in the reference Hamiltonian.
double frozen_expectation(const PauliSum& op, const PauliSum& reference_h,
                          const VqeResult& reference_vqe) {
  const DeltaSplit split = split_reuse_extra(op, reference_h);
  return reuse_energy(split, reference_vqe.expectations) +
         expectation(reference_vqe.state, split.extra);
}

}  // namespace

Molecule optimize_geometry(const Molecule& mol0, const Options& options, int max_steps,
                           OptimizeReport* report) {
  Molecule mol = mol0;
  HamiltonianContext ctx = build_context(mol, options);
  VqeResult vqe = solve_ground_state(ctx, options);
  double alpha = 1.0;  // Bohr^2/Ha

  for (int step = 1; step <= max_steps; ++step) {
    const ForceVector fv = compute_forces(ctx, vqe, options);
    const double fmax = fv.force.cwiseAbs().maxCoeff();
    if (report != nullptr) {
      report->steps = step - 1;
      report->max_force = fmax;
      report->energy = vqe.energy;
    }
    if (fmax < kForceConvergence) return mol;

    // Steepest descent along the force with Armijo backtracking; trial
    // energies come from full warm-started VQE solves.
    const Eigen::VectorXd d = fv.force;
    const double d2 = d.squaredNorm();
    double a = std::min(alpha, 0.35 / d.cwiseAbs().maxCoeff());
    bool accepted = false;
    for (int bt = 0; bt < 25; ++bt) {
      const Molecule trial = mol.with_flat_coords(mol.flat_coords() + a * d);
      HamiltonianContext trial_ctx;
      VqeResult trial_vqe;
      try {
        trial_ctx = build_context_tracked(trial, options, ctx);
        trial_vqe = solve_ground_state(trial_ctx, options, &vqe.theta);
      } catch (const Error&) {
        a *= 0.5;
        continue;
      }
      if (trial_vqe.energy <= vqe.energy - 1e-4 * a * d2) {
        mol = trial;
        ctx = std::move(trial_ctx);
        vqe = std::move(trial_vqe);
        accepted = true;
        break;
      }
      a *= 0.5;
    }
    if (!accepted) {
      fail(ErrorCode::precondition,
           "geometry optimization line search failed at step " + std::to_string(step));
    }
    alpha = a * 1.5;
  }
  fail(ErrorCode::precondition, "geometry optimization exceeded " +
                                    std::to_string(max_steps) + " steps");
}

HessianMatrix hessian_full(const Molecule& mol, const Options& options) {
  const double dd = options.delta_d_bohr();
  const int n = 3 * mol.size();

  const HamiltonianContext ctx0 = build_context(mol, options);
  const VqeResult vqe0 = solve_ground_state(ctx0, options);
  const double e0 = vqe0.energy;

  std::vector<Displacement> disp;
  for (int i = 0; i < n; ++i) {
    disp.push_back({i, -1, +1, 0});
    disp.push_back({i, -1, -1, 0});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      disp.push_back({i, j, +1, +1});
      disp.push_back({i, j, -1, -1});
      disp.push_back({i, j, -1, +1});
      disp.push_back({i, j, +1, -1});
    }
  }

  std::vector<double> energy(disp.size(), 0.0);
  parallel_for(static_cast<int>(disp.size()), options.threads, [&](int k) {
    const Molecule geom = displaced_geometry(mol, disp[static_cast<size_t>(k)], dd);
    const HamiltonianContext ctx = build_context_tracked(geom, options, ctx0);
    const VqeResult vqe = solve_ground_state(ctx, options, &vqe0.theta);
    energy[static_cast<size_t>(k)] = vqe.energy;
  });

  HessianMatrix h;
  h.method = HessianMatrix::Method::full;
  h.vqe_evaluations = static_cast<int>(disp.size()) + 1;  // displaced + reference
  h.matrix = Eigen::MatrixXd::Zero(n, n);
  size_t k = 0;
  for (int i = 0; i < n; ++i) {
    const double ep = energy[k++];
    const double em = energy[k++];
    // Diagonal: standard central second difference.
    h.matrix(i, i) = (ep + em - 2.0 * e0) / (dd * dd);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double e1 = energy[k++];
      const double e2 = energy[k++];
      const double e3 = energy[k++];
      const double e4 = energy[k++];
      const double s = (e1 + e2 - e3 - e4) / (4.0 * dd * dd);
      h.matrix(i, j) = s;
      h.matrix(j, i) = s;
    }
  }
  h.raw_asymmetry = (h.matrix - h.matrix.transpose()).cwiseAbs().maxCoeff();
  h.matrix = 0.5 * (h.matrix + h.matrix.transpose()).eval();
  return h;
}

HessianMatrix hessian_approx_with_provider(const Molecule& mol,
                                           const HamiltonianProvider& provider,
                                           const PauliSum& reference_h,
                                           const VqeResult& reference_vqe,
                                           double delta_d_bohr, int threads) {
  const int n = 3 * mol.size();
  const double dd = delta_d_bohr;

  std::vector<Displacement> disp;
  for (int i = 0; i < n; ++i) {
    disp.push_back({i, -1, +1, 0});
    disp.push_back({i, -1, -1, 0});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      disp.push_back({i, j, +1, +1});
      disp.push_back({i, j, -1, -1});
      disp.push_back({i, j, -1, +1});
      disp.push_back({i, j, +1, -1});
    }
  }

  std::vector<PauliSum> h_disp(disp.size());
  parallel_for(static_cast<int>(disp.size()), threads, [&](int k) {
    h_disp[static_cast<size_t>(k)] =
        provider(displaced_geometry(mol, disp[static_cast<size_t>(k)], dd));
  });

  HessianMatrix h;
  h.method = HessianMatrix::Method::approximate;
  h.matrix = Eigen::MatrixXd::Zero(n, n);
  size_t k = 0;
  for (int i = 0; i < n; ++i) {
    PauliSum stencil = h_disp[k++];
    stencil += h_disp[k++];
    PauliSum center = reference_h;
    center *= 2.0;
    stencil -= center;
    h.matrix(i, i) =
        frozen_expectation(stencil, reference_h, reference_vqe) / (dd * dd);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PauliSum stencil = h_disp[k++];
      stencil += h_disp[k++];
      stencil -= h_disp[k++];
      stencil -= h_disp[k++];
      const double s =
          frozen_expectation(stencil, reference_h, reference_vqe) / (4.0 * dd * dd);
      h.matrix(i, j) = s;
      h.matrix(j, i) = s;
    }
  }
  h.raw_asymmetry = 0.0;
  return h;
}

HessianMatrix hessian_approx(const Molecule& mol, const HamiltonianContext& reference,
                             const VqeResult& reference_vqe, const Options& options) {
  const HamiltonianProvider provider = [&](const Molecule& displaced) {
    return build_context_tracked(displaced, options, reference).hamiltonian;
  };
  return hessian_approx_with_provider(mol, provider, reference.hamiltonian,
                                      reference_vqe, options.delta_d_bohr(),
                                      options.threads);
}

void dump_hessian_text(const HessianMatrix& hessian, std::ostream& out) {
  char buf[64];
  for (Eigen::Index i = 0; i < hessian.matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < hessian.matrix.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "% .12e%s", hessian.matrix(i, j),
                    j + 1 == hessian.matrix.cols() ? "" : " ");
      out << buf;
    }
    out << "\n";
  }
}

NormalModeResult normal_modes(const HessianMatrix& hessian, const Molecule& mol,
                              const Options& options) {
  const int n_atoms = mol.size();
  const int n = 3 * n_atoms;
  const std::vector<double> masses = mol.masses(options.isotope_masses);
  for (const double m : masses) {
    if (m <= 0.0) fail(ErrorCode::invalid_argument, "masses must be positive");
  }

  Eigen::MatrixXd w(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      w(i, j) = hessian.matrix(i, j) /
                std::sqrt(masses[static_cast<size_t>(i / 3)] *
                          masses[static_cast<size_t>(j / 3)]);
    }
  }

  if (options.eckart_projection) {
    // Orthonormal mass-weighted translation and rotation vectors.
    Eigen::Vector3d com = Eigen::Vector3d::Zero();
    double m_tot = 0.0;
    for (int a = 0; a < n_atoms; ++a) {
      com += masses[static_cast<size_t>(a)] * mol.coord(a);
      m_tot += masses[static_cast<size_t>(a)];
    }
    com /= m_tot;

    std::vector<Eigen::VectorXd> span;
    for (int k = 0; k < 3; ++k) {
      Eigen::VectorXd t = Eigen::VectorXd::Zero(n);
      for (int a = 0; a < n_atoms; ++a) {
        t(3 * a + k) = std::sqrt(masses[static_cast<size_t>(a)]);
      }
      span.push_back(t);
    }
    for (int k = 0; k < 3; ++k) {
      Eigen::Vector3d axis = Eigen::Vector3d::Zero();
      axis(k) = 1.0;
      Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
      for (int a = 0; a < n_atoms; ++a) {
        const Eigen::Vector3d arm = mol.coord(a) - com;
        r.segment<3>(3 * a) = std::sqrt(masses[static_cast<size_t>(a)]) * axis.cross(arm);
      }
      span.push_back(r);
    }
    std::vector<Eigen::VectorXd> ortho;
    for (auto v : span) {
      for (const auto& u : ortho) v -= u.dot(v) * u;
      const double norm = v.norm();
      if (norm > 1e-8) ortho.push_back(v / norm);
    }
    Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n, n);
    for (const auto& u : ortho) proj -= u * u.transpose();
    w = (proj * w * proj).eval();
    w = (0.5 * (w + w.transpose())).eval();
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w);
  NormalModeResult result;
  result.frequencies_cm1 = Eigen::VectorXd(n);
  for (int k = 0; k < n; ++k) {
    const double lambda = es.eigenvalues()(k);
    const double omega = std::sqrt(std::abs(lambda));
    result.frequencies_cm1(k) =
        (lambda < 0.0 ? -1.0 : 1.0) * units::hartree_to_wavenumber(omega);
  }
  result.modes = es.eigenvectors();
  result.reconstruction_error =
      (result.modes * es.eigenvalues().asDiagonal() * result.modes.transpose() - w)
          .cwiseAbs()
          .maxCoeff();
  for (int k = 0; k < n; ++k) {
    if (std::abs(result.frequencies_cm1(k)) < 50.0) ++result.near_zero_count;
  }
  return result;
}

int imaginary_mode_count(const HessianMatrix& hessian, const Molecule& mol,
                         const Options& options) {
  Options projected = options;
  projected.eckart_projection = true;
  const NormalModeResult modes = normal_modes(hessian, mol, projected);
  // Count distinct imaginary frequency values: a degenerate pair (the bend of
  // a linear saddle) is one frequency.
  int count = 0;
  double prev = 0.0;
  for (Eigen::Index k = 0; k < modes.frequencies_cm1.size(); ++k) {
    const double f = modes.frequencies_cm1(k);
    if (f >= kImaginaryModeCutoff) break;
    if (count == 0 || std::abs(f - prev) > std::max(25.0, 0.03 * std::abs(prev))) {
      ++count;
    }
    prev = f;
  }
  return count;
}

TsResult ts_search(const Molecule& mol0, const Options& options, int max_steps) {
  Molecule mol = mol0;
  HamiltonianContext ctx = build_context(mol, options);
  VqeResult vqe = solve_ground_state(ctx, options);
  HessianMatrix hess = hessian_approx(mol, ctx, vqe, options);

  {
    const int neg = imaginary_mode_count(hess, mol, options);
    if (neg != 1) {
      fail(ErrorCode::precondition,
           "TS search requires exactly one negative Hessian eigenvalue at the "
           "start, found " + std::to_string(neg));
    }
  }

  TsResult result;
  for (int step = 0; step <= max_steps; ++step) {
    const ForceVector fv = compute_forces(ctx, vqe, options);
    const Eigen::VectorXd grad = -fv.force;
    const double gmax = grad.cwiseAbs().maxCoeff();
    result.iterations = step;
    result.max_gradient = gmax;
    if (gmax < kForceConvergence) {
      result.geometry = mol;
      result.modes = normal_modes(hess, mol, options);
      return result;
    }
    if (step == max_steps) break;

    // Newton step through the eigen pseudo-inverse, near-zero modes dropped.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hess.matrix);
    Eigen::VectorXd dx = Eigen::VectorXd::Zero(grad.size());
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      const double lambda = es.eigenvalues()(k);
      if (std::abs(lambda) < kEigenvalueFloor) continue;
      dx -= es.eigenvectors().col(k) * (es.eigenvectors().col(k).dot(grad) / lambda);
    }

    double scale = 1.0;
    bool accepted = false;
    for (int halving = 0; halving <= 8; ++halving) {
      const Molecule trial = mol.with_flat_coords(mol.flat_coords() + scale * dx);
      try {
        HamiltonianContext trial_ctx = build_context_tracked(trial, options, ctx);
        VqeResult trial_vqe = solve_ground_state(trial_ctx, options, &vqe.theta);
        HessianMatrix trial_hess = hessian_approx(trial, trial_ctx, trial_vqe, options);
        if (imaginary_mode_count(trial_hess, trial, options) == 1) {
          mol = trial;
          ctx = std::move(trial_ctx);
          vqe = std::move(trial_vqe);
          hess = std::move(trial_hess);
          accepted = true;
          break;
        }
      } catch (const Error&) {
        // fall through to halving
      }
      scale *= 0.5;
    }
    if (!accepted) {
      fail(ErrorCode::precondition,
           "TS step halving exhausted without recovering a single negative "
           "eigenvalue");
    }
  }
  fail(ErrorCode::precondition,
       "TS search exceeded " + std::to_string(max_steps) + " steps");
}

}  // namespace qdyn
