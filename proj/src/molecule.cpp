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

#include "qdyn/molecule.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qdyn/errors.hpp"
#include "qdyn/units.hpp"

namespace qdyn {

namespace {

constexpr double kMinSeparationBohr = 1e-6;

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(ErrorCode::parse, "xyz parse error at line " + std::to_string(line) + ": " + what);
}

}  // namespace

Molecule Molecule::create(std::vector<const ElementInfo*> atoms,
                          std::vector<Eigen::Vector3d> coords_bohr, int charge) {
  if (atoms.size() != coords_bohr.size()) {
    fail(ErrorCode::invalid_argument, "atom and coordinate lists differ in length");
  }
  Molecule mol;
  mol.atoms_ = std::move(atoms);
  mol.coords_ = std::move(coords_bohr);
  mol.charge_ = charge;
  if (mol.n_electrons() < 0) {
    fail(ErrorCode::invalid_argument, "negative electron count (charge too high)");
  }
  for (int i = 0; i < mol.size(); ++i) {
    for (int j = i + 1; j < mol.size(); ++j) {
      if (mol.distance(i, j) < kMinSeparationBohr) {
        fail(ErrorCode::invalid_argument,
             "atoms " + std::to_string(i) + " and " + std::to_string(j) + " are coincident");
      }
    }
  }
  return mol;
}

int Molecule::n_electrons() const {
  int z_total = 0;
  for (const auto* a : atoms_) z_total += a->z;
  return z_total - charge_;
}

double Molecule::distance(int i, int j) const {
  return (coord(i) - coord(j)).norm();
}

Molecule Molecule::with_coordinates(std::vector<Eigen::Vector3d> coords_bohr) const {
  return create(atoms_, std::move(coords_bohr), charge_);
}

std::vector<double> Molecule::masses(bool isotope) const {
  std::vector<double> m;
  m.reserve(atoms_.size());
  for (const auto* a : atoms_) {
    m.push_back(units::amu_to_electron_mass(isotope ? a->isotope_mass_amu
                                                    : a->standard_mass_amu));
  }
  return m;
}

Eigen::VectorXd Molecule::flat_coords() const {
  Eigen::VectorXd x(3 * size());
  for (int i = 0; i < size(); ++i) x.segment<3>(3 * i) = coord(i);
  return x;
}

Molecule Molecule::with_flat_coords(const Eigen::VectorXd& x) const {
  if (x.size() != 3 * size()) {
    fail(ErrorCode::invalid_argument, "coordinate vector has wrong length");
  }
  std::vector<Eigen::Vector3d> c(static_cast<size_t>(size()));
  for (int i = 0; i < size(); ++i) c[static_cast<size_t>(i)] = x.segment<3>(3 * i);
  return with_coordinates(std::move(c));
}

Molecule parse_xyz(const std::string& text) {
  std::istringstream in(text);
  std::string line;

  if (!std::getline(in, line)) parse_fail(1, "empty input");
  int count = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> count) || count <= 0) parse_fail(1, "malformed atom count");
    std::string rest;
    if (ls >> rest) parse_fail(1, "trailing text after atom count");
  }

  if (!std::getline(in, line)) parse_fail(2, "missing comment line");
  int charge = 0;
  {
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      if (token.rfind("charge=", 0) == 0) {
        try {
          charge = std::stoi(token.substr(7));
        } catch (const std::exception&) {
          parse_fail(2, "malformed charge token '" + token + "'");
        }
      }
    }
  }

  std::vector<const ElementInfo*> atoms;
  std::vector<Eigen::Vector3d> coords;
  for (int i = 0; i < count; ++i) {
    const int line_no = i + 3;
    if (!std::getline(in, line)) parse_fail(line_no, "unexpected end of input");
    std::istringstream ls(line);
    std::string sym;
    if (!(ls >> sym)) parse_fail(line_no, "missing element symbol");
    const ElementInfo* elem = find_element(sym);
    if (elem == nullptr) parse_fail(line_no, "unknown element symbol '" + sym + "'");
    double x = 0, y = 0, z = 0;
    if (!(ls >> x >> y >> z)) parse_fail(line_no, "non-numeric coordinate");
    atoms.push_back(elem);
    coords.emplace_back(units::angstrom_to_bohr(x), units::angstrom_to_bohr(y),
                        units::angstrom_to_bohr(z));
  }

  return Molecule::create(std::move(atoms), std::move(coords), charge);
}

std::string to_xyz(const Molecule& mol, std::string_view comment) {
  std::ostringstream out;
  out << mol.size() << "\n";
  std::string c(comment);
  if (mol.charge() != 0 && c.find("charge=") == std::string::npos) {
    if (!c.empty()) c += " ";
    c += "charge=" + std::to_string(mol.charge());
  }
  out << c << "\n";
  char buf[128];
  for (int i = 0; i < mol.size(); ++i) {
    const Eigen::Vector3d r = mol.coord(i) / units::kBohrPerAngstrom;
    std::snprintf(buf, sizeof(buf), "%-2s % .10f % .10f % .10f",
                  std::string(mol.atom(i).symbol).c_str(), r.x(), r.y(), r.z());
    out << buf << "\n";
  }
  return out.str();
}

Molecule displace(const Molecule& mol, int atom, int axis, double delta_bohr) {
  if (atom < 0 || atom >= mol.size()) {
    fail(ErrorCode::invalid_argument, "displace: atom index out of range");
  }
  if (axis < 0 || axis > 2) {
    fail(ErrorCode::invalid_argument, "displace: axis must be 0, 1 or 2");
  }
  std::vector<Eigen::Vector3d> c(mol.coords());
  c[static_cast<size_t>(atom)][axis] += delta_bohr;
  return mol.with_coordinates(std::move(c));
}

double nuclear_repulsion(const Molecule& mol) {
  double e = 0.0;
  for (int i = 0; i < mol.size(); ++i) {
    for (int j = i + 1; j < mol.size(); ++j) {
      const double r = mol.distance(i, j);
      if (r < 1e-6) {
        fail(ErrorCode::invalid_argument, "nuclear repulsion of coincident nuclei");
      }
      e += static_cast<double>(mol.atom(i).z) * static_cast<double>(mol.atom(j).z) / r;
    }
  }
  return e;
}

}  // namespace qdyn
