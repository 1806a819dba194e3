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
#include <array>
#include <vector>

#include "qdyn/molecule.hpp"

namespace qdyn {

struct PrimitiveGaussian {
  double exponent;     // Bohr^-2, > 0
  double coefficient;  // contraction coefficient, normalization folded in
};

/// One contracted Cartesian Gaussian x^l y^m z^n exp(-a r^2), normalized so
/// that <g|g> = 1.
struct ContractedGaussian {
  Eigen::Vector3d center;       // Bohr
  std::array<int, 3> angular;   // (l, m, n), l+m+n <= 1 for STO-3G s/p
  std::vector<PrimitiveGaussian> primitives;
  int atom = -1;                // owning atom index
};

using BasisSet = std::vector<ContractedGaussian>;

/// STO-3G basis for the molecule: H -> 1s; Li/C -> 1s,2s,2p; Cl ->
/// 1s,2s,2p,3s,3p. Functions appear in atom order, s before p, p in x,y,z
/// order. Errors when an element has no tabulated parameters.
BasisSet build_basis(const Molecule& mol);

/// Self-overlap of a contracted Gaussian (closed form); used for
/// normalization and checked by tests.
double self_overlap(const ContractedGaussian& g);

}  // namespace qdyn
