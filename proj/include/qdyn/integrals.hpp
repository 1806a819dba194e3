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
#include <iosfwd>
#include <vector>

#include "qdyn/basis.hpp"

namespace qdyn {

/// One- and two-electron integrals over a contracted Gaussian basis.
/// ERI is stored dense in chemists' notation (pq|rs).
struct IntegralSet {
  Eigen::MatrixXd S;        // overlap
  Eigen::MatrixXd T;        // kinetic
  Eigen::MatrixXd V;        // nuclear attraction
  std::vector<double> eri;  // n^4, chemists' (pq|rs)
  int n = 0;

  double eri_at(int p, int q, int r, int s) const {
    return eri[static_cast<size_t>(((p * n + q) * n + r) * n + s)];
  }
  double& eri_at(int p, int q, int r, int s) {
    return eri[static_cast<size_t>(((p * n + q) * n + r) * n + s)];
  }
};

/// McMurchie-Davidson evaluation of S, T, V and the full ERI tensor.
/// Errors when the overlap matrix is numerically linearly dependent
/// (smallest eigenvalue < 1e-8).
IntegralSet compute_integrals(const BasisSet& basis, const Molecule& mol);

/// Overlap between two (possibly different) basis sets; used for
/// maximum-overlap orbital tracking across displaced geometries.
Eigen::MatrixXd overlap_cross(const BasisSet& bra, const BasisSet& ket);

/// Plain-text dump (one "label indices value" line per entry) for
/// cross-checking against external references.
void dump_integrals(const IntegralSet& ints, std::ostream& out);

}  // namespace qdyn
