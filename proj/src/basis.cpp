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

#include "qdyn/basis.hpp"

#include <cmath>
#include <numbers>

#include "qdyn/errors.hpp"

namespace qdyn {

namespace {

struct Shell {
  char kind;  // 'S' or 'P' (SP shells are listed as one S and one P entry)
  std::array<double, 3> exponents;
  std::array<double, 3> coefficients;
};

// STO-3G exponents and contraction coefficients (EMSL Basis Set Exchange
// values), SP shells share exponents between the s and p rows.
const Shell kHydrogen[] = {
    {'S', {3.425250914, 0.6239137298, 0.1688554040},
          {0.1543289673, 0.5353281423, 0.4446345422}},
};

const Shell kLithium[] = {
    {'S', {16.11957475, 2.936200663, 0.7946504870},
          {0.1543289673, 0.5353281423, 0.4446345422}},
    {'S', {0.6362897469, 0.1478600533, 0.04808867840},
          {-0.09996722919, 0.3995128261, 0.7001154689}},
    {'P', {0.6362897469, 0.1478600533, 0.04808867840},
          {0.1559162750, 0.6076837186, 0.3919573931}},
};

const Shell kCarbon[] = {
    {'S', {71.61683735, 13.04509632, 3.530512160},
          {0.1543289673, 0.5353281423, 0.4446345422}},
    {'S', {2.941249355, 0.6834830964, 0.2222899159},
          {-0.09996722919, 0.3995128261, 0.7001154689}},
    {'P', {2.941249355, 0.6834830964, 0.2222899159},
          {0.1559162750, 0.6076837186, 0.3919573931}},
};

const Shell kChlorine[] = {
    {'S', {601.3456136, 109.5358542, 29.64467686},
          {0.1543289673, 0.5353281423, 0.4446345422}},
    {'S', {38.96041889, 9.053563477, 2.944499834},
          {-0.09996722919, 0.3995128261, 0.7001154689}},
    {'P', {38.96041889, 9.053563477, 2.944499834},
          {0.1559162750, 0.6076837186, 0.3919573931}},
    {'S', {2.129386495, 0.5940934274, 0.2325241410},
          {-0.2196203690, 0.2255954336, 0.9003984260}},
    {'P', {2.129386495, 0.5940934274, 0.2325241410},
          {0.01058760429, 0.5951670053, 0.4620010120}},
};

struct ElementBasis {
  int z;
  const Shell* shells;
  int n_shells;
};

const ElementBasis kSto3g[] = {
    {1, kHydrogen, 1},
    {3, kLithium, 3},
    {6, kCarbon, 3},
    {17, kChlorine, 5},
};

const ElementBasis* basis_for(int z) {
  for (const auto& e : kSto3g) {
    if (e.z == z) return &e;
  }
  return nullptr;
}

double double_factorial(int n) {
  double r = 1.0;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

// Norm of a primitive Cartesian Gaussian with angular momentum (l,m,n).
double primitive_norm(double alpha, const std::array<int, 3>& lmn) {
  const int L = lmn[0] + lmn[1] + lmn[2];
  const double num = std::pow(2.0 * alpha / std::numbers::pi, 1.5) *
                     std::pow(4.0 * alpha, static_cast<double>(L));
  const double den = double_factorial(2 * lmn[0] - 1) *
                     double_factorial(2 * lmn[1] - 1) *
                     double_factorial(2 * lmn[2] - 1);
  return std::sqrt(num / den);
}

void normalize(ContractedGaussian& g) {
  for (auto& p : g.primitives) {
    p.coefficient *= primitive_norm(p.exponent, g.angular);
  }
  const double s = self_overlap(g);
  const double scale = 1.0 / std::sqrt(s);
  for (auto& p : g.primitives) p.coefficient *= scale;
}

}  // namespace

double self_overlap(const ContractedGaussian& g) {
  // <g|g> = sum_ab c_a c_b prod_dim (2k-1)!! / (2p)^k * sqrt(pi/p), p = a+b.
  double s = 0.0;
  for (const auto& a : g.primitives) {
    for (const auto& b : g.primitives) {
      const double p = a.exponent + b.exponent;
      double v = std::pow(std::numbers::pi / p, 1.5);
      for (int d = 0; d < 3; ++d) {
        const int k = g.angular[static_cast<size_t>(d)];
        v *= double_factorial(2 * k - 1) / std::pow(2.0 * p, static_cast<double>(k));
      }
      s += a.coefficient * b.coefficient * v;
    }
  }
  return s;
}

BasisSet build_basis(const Molecule& mol) {
  BasisSet basis;
  for (int i = 0; i < mol.size(); ++i) {
    const ElementBasis* eb = basis_for(mol.atom(i).z);
    if (eb == nullptr) {
      fail(ErrorCode::invalid_argument,
           "no STO-3G parameters for element " + std::string(mol.atom(i).symbol));
    }
    for (int s = 0; s < eb->n_shells; ++s) {
      const Shell& shell = eb->shells[s];
      const int n_components = (shell.kind == 'S') ? 1 : 3;
      for (int c = 0; c < n_components; ++c) {
        ContractedGaussian g;
        g.center = mol.coord(i);
        g.angular = {0, 0, 0};
        if (shell.kind == 'P') g.angular[static_cast<size_t>(c)] = 1;
        g.atom = i;
        for (int k = 0; k < 3; ++k) {
          if (shell.exponents[static_cast<size_t>(k)] <= 0.0) {
            fail(ErrorCode::internal, "non-positive basis exponent");
          }
          g.primitives.push_back({shell.exponents[static_cast<size_t>(k)],
                                  shell.coefficients[static_cast<size_t>(k)]});
        }
        normalize(g);
        basis.push_back(std::move(g));
      }
    }
  }
  return basis;
}

}  // namespace qdyn
