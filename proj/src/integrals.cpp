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

#include "qdyn/integrals.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <ostream>

#include "qdyn/boys.hpp"
#include "qdyn/errors.hpp"

namespace qdyn {

namespace {

// Hermite expansion coefficient E_t^{ij} for a 1D primitive pair with
// exponents a, b and center separation Q = Ax - Bx.
double hermite_coef(int i, int j, int t, double Q, double a, double b) {
  const double p = a + b;
  const double mu = a * b / p;
  if (t < 0 || t > i + j) return 0.0;
  if (i == 0 && j == 0 && t == 0) return std::exp(-mu * Q * Q);
  if (j == 0) {
    return hermite_coef(i - 1, j, t - 1, Q, a, b) / (2.0 * p) -
           mu * Q / a * hermite_coef(i - 1, j, t, Q, a, b) +
           (t + 1.0) * hermite_coef(i - 1, j, t + 1, Q, a, b);
  }
  return hermite_coef(i, j - 1, t - 1, Q, a, b) / (2.0 * p) +
         mu * Q / b * hermite_coef(i, j - 1, t, Q, a, b) +
         (t + 1.0) * hermite_coef(i, j - 1, t + 1, Q, a, b);
}

// Hermite Coulomb integral R^n_{tuv}(p, PC) built on a Boys table F.
double hermite_coulomb(int t, int u, int v, int n, double p,
                       const Eigen::Vector3d& pc, const double* F) {
  if (t == 0 && u == 0 && v == 0) {
    return std::pow(-2.0 * p, static_cast<double>(n)) * F[n];
  }
  if (t > 0) {
    double r = pc.x() * hermite_coulomb(t - 1, u, v, n + 1, p, pc, F);
    if (t > 1) r += (t - 1.0) * hermite_coulomb(t - 2, u, v, n + 1, p, pc, F);
    return r;
  }
  if (u > 0) {
    double r = pc.y() * hermite_coulomb(t, u - 1, v, n + 1, p, pc, F);
    if (u > 1) r += (u - 1.0) * hermite_coulomb(t, u - 2, v, n + 1, p, pc, F);
    return r;
  }
  double r = pc.z() * hermite_coulomb(t, u, v - 1, n + 1, p, pc, F);
  if (v > 1) r += (v - 1.0) * hermite_coulomb(t, u, v - 2, n + 1, p, pc, F);
  return r;
}

double overlap_1d(int i, int j, double Q, double a, double b) {
  return hermite_coef(i, j, 0, Q, a, b) * std::sqrt(std::numbers::pi / (a + b));
}

double primitive_overlap(const std::array<int, 3>& la, const std::array<int, 3>& lb,
                         double a, double b, const Eigen::Vector3d& AB) {
  double s = 1.0;
  for (int d = 0; d < 3; ++d) {
    s *= overlap_1d(la[static_cast<size_t>(d)], lb[static_cast<size_t>(d)], AB[d], a, b);
  }
  return s;
}

double primitive_kinetic(const std::array<int, 3>& la, const std::array<int, 3>& lb,
                         double a, double b, const Eigen::Vector3d& AB) {
  double s[3], t[3];
  for (int d = 0; d < 3; ++d) {
    const int i = la[static_cast<size_t>(d)];
    const int j = lb[static_cast<size_t>(d)];
    const double Q = AB[d];
    s[d] = overlap_1d(i, j, Q, a, b);
    t[d] = b * (2.0 * j + 1.0) * s[d] - 2.0 * b * b * overlap_1d(i, j + 2, Q, a, b);
    if (j >= 2) t[d] -= 0.5 * j * (j - 1.0) * overlap_1d(i, j - 2, Q, a, b);
  }
  return t[0] * s[1] * s[2] + s[0] * t[1] * s[2] + s[0] * s[1] * t[2];
}

double primitive_nuclear(const std::array<int, 3>& la, const std::array<int, 3>& lb,
                         double a, double b, const Eigen::Vector3d& A,
                         const Eigen::Vector3d& B, const Eigen::Vector3d& C) {
  const double p = a + b;
  const Eigen::Vector3d P = (a * A + b * B) / p;
  const Eigen::Vector3d AB = A - B;
  const Eigen::Vector3d PC = P - C;
  const int lmax = la[0] + la[1] + la[2] + lb[0] + lb[1] + lb[2];
  double F[16];
  boys_function(lmax, p * PC.squaredNorm(), F);
  double v = 0.0;
  for (int t = 0; t <= la[0] + lb[0]; ++t) {
    const double ex = hermite_coef(la[0], lb[0], t, AB.x(), a, b);
    for (int u = 0; u <= la[1] + lb[1]; ++u) {
      const double ey = hermite_coef(la[1], lb[1], u, AB.y(), a, b);
      for (int w = 0; w <= la[2] + lb[2]; ++w) {
        const double ez = hermite_coef(la[2], lb[2], w, AB.z(), a, b);
        v += ex * ey * ez * hermite_coulomb(t, u, w, 0, p, PC, F);
      }
    }
  }
  return 2.0 * std::numbers::pi / p * v;
}

double primitive_eri(const ContractedGaussian& ga, const ContractedGaussian& gb,
                     const ContractedGaussian& gc, const ContractedGaussian& gd,
                     double a, double b, double c, double d) {
  const double p = a + b;
  const double q = c + d;
  const double alpha = p * q / (p + q);
  const Eigen::Vector3d P = (a * ga.center + b * gb.center) / p;
  const Eigen::Vector3d Q = (c * gc.center + d * gd.center) / q;
  const Eigen::Vector3d AB = ga.center - gb.center;
  const Eigen::Vector3d CD = gc.center - gd.center;
  const Eigen::Vector3d PQ = P - Q;

  const int l1 = ga.angular[0] + gb.angular[0];
  const int m1 = ga.angular[1] + gb.angular[1];
  const int n1 = ga.angular[2] + gb.angular[2];
  const int l2 = gc.angular[0] + gd.angular[0];
  const int m2 = gc.angular[1] + gd.angular[1];
  const int n2 = gc.angular[2] + gd.angular[2];

  double F[16];
  boys_function(l1 + m1 + n1 + l2 + m2 + n2, alpha * PQ.squaredNorm(), F);

  double sum = 0.0;
  for (int t = 0; t <= l1; ++t) {
    const double e1x = hermite_coef(ga.angular[0], gb.angular[0], t, AB.x(), a, b);
    if (e1x == 0.0) continue;
    for (int u = 0; u <= m1; ++u) {
      const double e1y = hermite_coef(ga.angular[1], gb.angular[1], u, AB.y(), a, b);
      if (e1y == 0.0) continue;
      for (int v = 0; v <= n1; ++v) {
        const double e1z = hermite_coef(ga.angular[2], gb.angular[2], v, AB.z(), a, b);
        if (e1z == 0.0) continue;
        for (int tau = 0; tau <= l2; ++tau) {
          const double e2x = hermite_coef(gc.angular[0], gd.angular[0], tau, CD.x(), c, d);
          if (e2x == 0.0) continue;
          for (int nu = 0; nu <= m2; ++nu) {
            const double e2y = hermite_coef(gc.angular[1], gd.angular[1], nu, CD.y(), c, d);
            if (e2y == 0.0) continue;
            for (int phi = 0; phi <= n2; ++phi) {
              const double e2z =
                  hermite_coef(gc.angular[2], gd.angular[2], phi, CD.z(), c, d);
              if (e2z == 0.0) continue;
              const double sign = ((tau + nu + phi) % 2 == 0) ? 1.0 : -1.0;
              sum += e1x * e1y * e1z * e2x * e2y * e2z * sign *
                     hermite_coulomb(t + tau, u + nu, v + phi, 0, alpha, PQ, F);
            }
          }
        }
      }
    }
  }
  const double pre = 2.0 * std::pow(std::numbers::pi, 2.5) / (p * q * std::sqrt(p + q));
  return pre * sum;
}

double contracted_eri(const ContractedGaussian& ga, const ContractedGaussian& gb,
                      const ContractedGaussian& gc, const ContractedGaussian& gd) {
  double v = 0.0;
  for (const auto& pa : ga.primitives)
    for (const auto& pb : gb.primitives)
      for (const auto& pc : gc.primitives)
        for (const auto& pd : gd.primitives) {
          v += pa.coefficient * pb.coefficient * pc.coefficient * pd.coefficient *
               primitive_eri(ga, gb, gc, gd, pa.exponent, pb.exponent, pc.exponent,
                             pd.exponent);
        }
  return v;
}

}  // namespace

Eigen::MatrixXd overlap_cross(const BasisSet& bra, const BasisSet& ket) {
  Eigen::MatrixXd S(bra.size(), ket.size());
  for (size_t i = 0; i < bra.size(); ++i) {
    for (size_t j = 0; j < ket.size(); ++j) {
      const auto& ga = bra[i];
      const auto& gb = ket[j];
      const Eigen::Vector3d AB = ga.center - gb.center;
      double s = 0.0;
      for (const auto& pa : ga.primitives)
        for (const auto& pb : gb.primitives) {
          s += pa.coefficient * pb.coefficient *
               primitive_overlap(ga.angular, gb.angular, pa.exponent, pb.exponent, AB);
        }
      S(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
    }
  }
  return S;
}

IntegralSet compute_integrals(const BasisSet& basis, const Molecule& mol) {
  if (basis.empty()) fail(ErrorCode::invalid_argument, "empty basis set");
  const int n = static_cast<int>(basis.size());
  IntegralSet ints;
  ints.n = n;
  ints.S = Eigen::MatrixXd::Zero(n, n);
  ints.T = Eigen::MatrixXd::Zero(n, n);
  ints.V = Eigen::MatrixXd::Zero(n, n);

  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const auto& ga = basis[static_cast<size_t>(i)];
      const auto& gb = basis[static_cast<size_t>(j)];
      const Eigen::Vector3d AB = ga.center - gb.center;
      double s = 0.0, t = 0.0, v = 0.0;
      for (const auto& pa : ga.primitives) {
        for (const auto& pb : gb.primitives) {
          const double cc = pa.coefficient * pb.coefficient;
          s += cc * primitive_overlap(ga.angular, gb.angular, pa.exponent, pb.exponent, AB);
          t += cc * primitive_kinetic(ga.angular, gb.angular, pa.exponent, pb.exponent, AB);
          for (int k = 0; k < mol.size(); ++k) {
            v -= cc * mol.atom(k).z *
                 primitive_nuclear(ga.angular, gb.angular, pa.exponent, pb.exponent,
                                   ga.center, gb.center, mol.coord(k));
          }
        }
      }
      ints.S(i, j) = ints.S(j, i) = s;
      ints.T(i, j) = ints.T(j, i) = t;
      ints.V(i, j) = ints.V(j, i) = v;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ints.S);
  if (es.eigenvalues().minCoeff() < 1e-8) {
    fail(ErrorCode::precondition,
         "basis is numerically linearly dependent (smallest overlap eigenvalue " +
             std::to_string(es.eigenvalues().minCoeff()) + ")");
  }

  ints.eri.assign(static_cast<size_t>(n) * n * n * n, 0.0);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q <= p; ++q) {
      const int pq = p * (p + 1) / 2 + q;
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s <= r; ++s) {
          const int rs = r * (r + 1) / 2 + s;
          if (pq < rs) continue;
          const double v = contracted_eri(basis[static_cast<size_t>(p)],
                                          basis[static_cast<size_t>(q)],
                                          basis[static_cast<size_t>(r)],
                                          basis[static_cast<size_t>(s)]);
          ints.eri_at(p, q, r, s) = v;
          ints.eri_at(q, p, r, s) = v;
          ints.eri_at(p, q, s, r) = v;
          ints.eri_at(q, p, s, r) = v;
          ints.eri_at(r, s, p, q) = v;
          ints.eri_at(s, r, p, q) = v;
          ints.eri_at(r, s, q, p) = v;
          ints.eri_at(s, r, q, p) = v;
        }
      }
    }
  }
  return ints;
}

void dump_integrals(const IntegralSet& ints, std::ostream& out) {
  const int n = ints.n;
  char buf[128];
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      std::snprintf(buf, sizeof(buf), "S %d %d % .12e\n", p, q, ints.S(p, q));
      out << buf;
    }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      std::snprintf(buf, sizeof(buf), "T %d %d % .12e\n", p, q, ints.T(p, q));
      out << buf;
    }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      std::snprintf(buf, sizeof(buf), "V %d %d % .12e\n", p, q, ints.V(p, q));
      out << buf;
    }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          std::snprintf(buf, sizeof(buf), "ERI %d %d %d %d % .12e\n", p, q, r, s,
                        ints.eri_at(p, q, r, s));
          out << buf;
        }
}

}  // namespace qdyn
