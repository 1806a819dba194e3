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

#include "qdyn/vqe.hpp"

#include <Eigen/Core>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>

#include "qdyn/errors.hpp"

namespace qdyn {

namespace {

struct Evaluation {
  double f = 0.0;
  Eigen::VectorXd g;
};

using Objective = std::function<Evaluation(const Eigen::VectorXd&)>;

struct WolfeResult {
  double alpha = 0.0;
  Evaluation eval;
  bool ok = false;
};

// Strong-Wolfe line search (c1 = 1e-4, c2 = 0.9), bisection zoom.
WolfeResult wolfe_search(const Objective& obj, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& d, double f0, double dphi0) {
  constexpr double c1 = 1e-4;
  constexpr double c2 = 0.9;
  constexpr int max_evals = 60;

  WolfeResult best;
  int evals = 0;

  auto phi = [&](double alpha) {
    ++evals;
    Evaluation e = obj(x + alpha * d);
    return std::make_pair(e, e.g.dot(d));
  };

  auto zoom = [&](double lo, double f_lo, double hi) -> WolfeResult {
    for (int it = 0; it < 40 && evals < max_evals; ++it) {
      const double alpha = 0.5 * (lo + hi);
      auto [e, dphi] = phi(alpha);
      if (!std::isfinite(e.f)) {
        hi = alpha;
        continue;
      }
      if (e.f > f0 + c1 * alpha * dphi0 || e.f >= f_lo) {
        hi = alpha;
      } else {
        if (std::abs(dphi) <= -c2 * dphi0) return {alpha, e, true};
        if (dphi * (hi - lo) >= 0.0) hi = lo;
        lo = alpha;
        f_lo = e.f;
      }
      if (std::abs(hi - lo) < 1e-16) break;
    }
    return {};
  };

  double alpha_prev = 0.0;
  double f_prev = f0;
  double alpha = 1.0;
  for (int it = 0; it < 20 && evals < max_evals; ++it) {
    auto [e, dphi] = phi(alpha);
    if (!std::isfinite(e.f)) {
      alpha *= 0.25;
      continue;
    }
    if (e.f > f0 + c1 * alpha * dphi0 || (it > 0 && e.f >= f_prev)) {
      return zoom(alpha_prev, f_prev, alpha);
    }
    if (std::abs(dphi) <= -c2 * dphi0) return {alpha, e, true};
    if (dphi >= 0.0) return zoom(alpha, e.f, alpha_prev);
    alpha_prev = alpha;
    f_prev = e.f;
    alpha = std::min(2.0 * alpha, 1e3);
  }

  // Fallback: plain Armijo backtracking.
  alpha = 1.0;
  for (int it = 0; it < 30; ++it) {
    auto [e, dphi] = phi(alpha);
    (void)dphi;
    if (std::isfinite(e.f) && e.f <= f0 + c1 * alpha * dphi0) return {alpha, e, true};
    alpha *= 0.5;
  }
  return best;
}

}  // namespace

VqeResult minimize(const PauliSum& hamiltonian, const UccsdAnsatz& ansatz,
                   std::vector<double> theta0, const VqeOptions& opt) {
  const int n = ansatz.n_params();
  if (static_cast<int>(theta0.size()) != n) {
    fail(ErrorCode::invalid_argument, "theta0 length does not match ansatz");
  }
  if (hamiltonian.n_qubits() != ansatz.n_qubits()) {
    fail(ErrorCode::invalid_argument, "hamiltonian and ansatz qubit counts differ");
  }

  if (n == 0) {
    VqeResult r;
    r.converged = true;
    r.state = prepare_hf_state(ansatz.n_qubits(), ansatz.n_electrons());
    r.expectations = expectation_terms(r.state, hamiltonian, &r.energy);
    return r;
  }

  std::ofstream trace;
  if (!opt.trace_path.empty()) {
    trace.open(opt.trace_path);
    trace << "iteration,energy,grad_norm\n";
  }

  Objective obj = [&](const Eigen::VectorXd& x) {
    Evaluation e;
    std::vector<double> th(x.data(), x.data() + x.size());
    std::vector<double> grad;
    e.f = uccsd_energy_and_gradient(hamiltonian, ansatz, th, grad);
    e.g = Eigen::Map<Eigen::VectorXd>(grad.data(), static_cast<Eigen::Index>(grad.size()));
    return e;
  };

  Eigen::VectorXd x = Eigen::Map<Eigen::VectorXd>(theta0.data(), n);
  Evaluation cur = obj(x);
  Eigen::MatrixXd Hinv = Eigen::MatrixXd::Identity(n, n);

  VqeResult result;
  result.iterations = 0;
  double gmax = (n > 0) ? cur.g.cwiseAbs().maxCoeff() : 0.0;
  double delta_e = 0.0;
  bool have_step = false;

  auto write_trace = [&](int iter) {
    if (trace.is_open()) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "%d,%.15e,%.3e\n", iter, cur.f, gmax);
      trace << buf;
    }
  };
  write_trace(0);

  while (true) {
    if (gmax < opt.gradient_tolerance &&
        (!have_step || std::abs(delta_e) < opt.energy_tolerance)) {
      result.converged = true;
      break;
    }
    if (result.iterations >= opt.max_iterations) break;

    Eigen::VectorXd d = -(Hinv * cur.g);
    double dphi0 = d.dot(cur.g);
    if (!(dphi0 < 0.0)) {
      Hinv.setIdentity();
      d = -cur.g;
      dphi0 = d.dot(cur.g);
      if (!(dphi0 < 0.0)) break;  // zero gradient handled above
    }

    const WolfeResult ls = wolfe_search(obj, x, d, cur.f, dphi0);
    if (!ls.ok) break;

    const Eigen::VectorXd s = ls.alpha * d;
    const Eigen::VectorXd y = ls.eval.g - cur.g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
      Hinv = (I - rho * s * y.transpose()) * Hinv * (I - rho * y * s.transpose()) +
             rho * s * s.transpose();
    }

    delta_e = ls.eval.f - cur.f;
    have_step = true;
    x += s;
    cur = ls.eval;
    gmax = cur.g.cwiseAbs().maxCoeff();
    ++result.iterations;
    write_trace(result.iterations);
  }

  result.theta.assign(x.data(), x.data() + x.size());
  result.state = uccsd_state(ansatz, result.theta);
  result.expectations = expectation_terms(result.state, hamiltonian, &result.energy);
  result.gradient_norm = gmax;
  return result;
}

std::vector<double> warm_start(const VqeResult& previous, const UccsdAnsatz& next) {
  if (static_cast<int>(previous.theta.size()) != next.n_params()) {
    fail(ErrorCode::invalid_argument,
         "warm start shape mismatch: previous has " +
             std::to_string(previous.theta.size()) + " parameters, ansatz needs " +
             std::to_string(next.n_params()));
  }
  return previous.theta;
}

}  // namespace qdyn
