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
#include <string>
#include <string_view>
#include <vector>

#include "qdyn/elements.hpp"

namespace qdyn {

/// Molecular geometry in Bohr with a net charge. Immutable value type;
/// geometry edits go through displace()/with_coordinates().
class Molecule {
 public:
  Molecule() = default;

  /// Validates: matching list lengths, n_electrons >= 0, no atom pair closer
  /// than 1e-6 Bohr.
  static Molecule create(std::vector<const ElementInfo*> atoms,
                         std::vector<Eigen::Vector3d> coords_bohr, int charge);

  int size() const { return static_cast<int>(atoms_.size()); }
  const ElementInfo& atom(int i) const { return *atoms_.at(static_cast<size_t>(i)); }
  const Eigen::Vector3d& coord(int i) const { return coords_.at(static_cast<size_t>(i)); }
  const std::vector<Eigen::Vector3d>& coords() const { return coords_; }
  int charge() const { return charge_; }
  int n_electrons() const;

  /// Interatomic distance in Bohr.
  double distance(int i, int j) const;

  /// Copy with all coordinates replaced (same atoms/charge), re-validated.
  Molecule with_coordinates(std::vector<Eigen::Vector3d> coords_bohr) const;

  /// Per-atom masses in electron-mass units.
  std::vector<double> masses(bool isotope = false) const;

  /// Flattened coordinates (3N), Bohr.
  Eigen::VectorXd flat_coords() const;
  Molecule with_flat_coords(const Eigen::VectorXd& x) const;

 private:
  std::vector<const ElementInfo*> atoms_;
  std::vector<Eigen::Vector3d> coords_;
  int charge_ = 0;
};

/// Parses standard XYZ text (count line, comment line, "Sym x y z" in
/// Angstrom). The comment line may carry "charge=<int>". Errors carry the
/// offending line number.
Molecule parse_xyz(const std::string& text);

/// Serializes to XYZ (Angstrom). The charge is recorded in the comment line
/// whenever it is nonzero, or when the caller's comment already carries one.
std::string to_xyz(const Molecule& mol, std::string_view comment = "");

/// Copy with one Cartesian coordinate of one atom shifted by delta (Bohr).
Molecule displace(const Molecule& mol, int atom, int axis, double delta_bohr);

/// Sum over pairs Z_i Z_j / |R_i - R_j|, Hartree.
double nuclear_repulsion(const Molecule& mol);

}  // namespace qdyn
