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

#include "qdyn.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>

#include "qdyn/dynamics.hpp"
#include "qdyn/errors.hpp"
#include "qdyn/exact_diag.hpp"
#include "qdyn/scan.hpp"
#include "qdyn/stationary.hpp"
#include "qdyn/units.hpp"

struct qdyn_molecule {
  qdyn::Molecule mol;
};

struct qdyn_options {
  qdyn::Options opt;
};

struct qdyn_solution {
  qdyn::Options opt;
  qdyn::HamiltonianContext ctx;
  qdyn::VqeResult vqe;
};

struct qdyn_trajectory {
  qdyn::Trajectory traj;
};

struct qdyn_scan {
  std::vector<qdyn::ScanPoint> points;
};

struct qdyn_modes {
  qdyn::NormalModeResult modes;
  int imaginary_count = 0;
};

namespace {

thread_local std::string g_last_error;

qdyn_status map_code(qdyn::ErrorCode code) {
  using qdyn::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument:
      return QDYN_ERROR_INVALID_ARGUMENT;
    case ErrorCode::parse:
      return QDYN_ERROR_PARSE;
    case ErrorCode::io:
      return QDYN_ERROR_IO;
    case ErrorCode::scf_convergence:
      return QDYN_ERROR_SCF;
    case ErrorCode::vqe:
      return QDYN_ERROR_VQE;
    case ErrorCode::orbital_tracking:
      return QDYN_ERROR_TRACKING;
    case ErrorCode::size_limit:
      return QDYN_ERROR_SIZE;
    case ErrorCode::precondition:
      return QDYN_ERROR_PRECONDITION;
    case ErrorCode::internal:
      return QDYN_ERROR_INTERNAL;
  }
  return QDYN_ERROR_INTERNAL;
}

template <typename Fn>
qdyn_status guarded(Fn&& fn) {
  try {
    fn();
    return QDYN_OK;
  } catch (const qdyn::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QDYN_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return QDYN_ERROR_INTERNAL;
  }
}

qdyn_status require(bool ok, const char* message) {
  if (ok) return QDYN_OK;
  g_last_error = message;
  return QDYN_ERROR_INVALID_ARGUMENT;
}

qdyn_status fill_buffer(const std::string& text, char* buffer, size_t capacity,
                        size_t* required) {
  if (required != nullptr) *required = text.size() + 1;
  if (buffer == nullptr || capacity == 0) return QDYN_OK;
  if (capacity < text.size() + 1) {
    g_last_error = "buffer too small";
    return QDYN_ERROR_INVALID_ARGUMENT;
  }
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return QDYN_OK;
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) {
    qdyn::fail(qdyn::ErrorCode::io, std::string("cannot open file: ") + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const char* path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) {
    qdyn::fail(qdyn::ErrorCode::io, std::string("cannot write file: ") + path);
  }
  out << content;
}

const qdyn::ScanPoint* scan_at(const qdyn_scan* scan, int point) {
  if (scan == nullptr || point < 0 || point >= static_cast<int>(scan->points.size())) {
    return nullptr;
  }
  return &scan->points[static_cast<size_t>(point)];
}

}  // namespace

extern "C" {

const char* qdyn_status_name(qdyn_status status) {
  switch (status) {
    case QDYN_OK:
      return "ok";
    case QDYN_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case QDYN_ERROR_PARSE:
      return "parse error";
    case QDYN_ERROR_IO:
      return "io error";
    case QDYN_ERROR_SCF:
      return "scf convergence failure";
    case QDYN_ERROR_VQE:
      return "vqe failure";
    case QDYN_ERROR_TRACKING:
      return "orbital tracking ambiguity";
    case QDYN_ERROR_SIZE:
      return "size limit exceeded";
    case QDYN_ERROR_PRECONDITION:
      return "precondition violated";
    case QDYN_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* qdyn_last_error(void) { return g_last_error.c_str(); }

const char* qdyn_version(void) { return "qdyn 1.0.0"; }

/* ----- molecules ----- */

qdyn_status qdyn_molecule_parse_xyz(const char* text, qdyn_molecule** out) {
  if (auto s = require(text != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] { *out = new qdyn_molecule{qdyn::parse_xyz(text)}; });
}

qdyn_status qdyn_molecule_read_xyz(const char* path, qdyn_molecule** out) {
  if (auto s = require(path != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] { *out = new qdyn_molecule{qdyn::parse_xyz(read_file(path))}; });
}

qdyn_status qdyn_molecule_write_xyz(const qdyn_molecule* mol, const char* path,
                                    const char* comment) {
  if (auto s = require(mol != nullptr && path != nullptr, "null argument")) return s;
  return guarded([&] {
    write_file(path, qdyn::to_xyz(mol->mol, comment ? comment : ""));
  });
}

qdyn_status qdyn_molecule_to_xyz(const qdyn_molecule* mol, const char* comment,
                                 char* buffer, size_t capacity, size_t* required) {
  if (auto s = require(mol != nullptr, "null molecule")) return s;
  qdyn_status status = QDYN_OK;
  const qdyn_status run = guarded([&] {
    status = fill_buffer(qdyn::to_xyz(mol->mol, comment ? comment : ""), buffer,
                         capacity, required);
  });
  return run != QDYN_OK ? run : status;
}

void qdyn_molecule_free(qdyn_molecule* mol) { delete mol; }

int qdyn_molecule_atom_count(const qdyn_molecule* mol) {
  return mol == nullptr ? 0 : mol->mol.size();
}

int qdyn_molecule_charge(const qdyn_molecule* mol) {
  return mol == nullptr ? 0 : mol->mol.charge();
}

int qdyn_molecule_electron_count(const qdyn_molecule* mol) {
  return mol == nullptr ? 0 : mol->mol.n_electrons();
}

const char* qdyn_molecule_symbol(const qdyn_molecule* mol, int atom) {
  if (mol == nullptr || atom < 0 || atom >= mol->mol.size()) return nullptr;
  return mol->mol.atom(atom).symbol.data();
}

qdyn_status qdyn_molecule_positions(const qdyn_molecule* mol, double* xyz_angstrom) {
  if (auto s = require(mol != nullptr && xyz_angstrom != nullptr, "null argument")) {
    return s;
  }
  for (int i = 0; i < mol->mol.size(); ++i) {
    for (int k = 0; k < 3; ++k) {
      xyz_angstrom[3 * i + k] = qdyn::units::bohr_to_angstrom(mol->mol.coord(i)(k));
    }
  }
  return QDYN_OK;
}

qdyn_status qdyn_molecule_set_positions(qdyn_molecule* mol, const double* xyz_angstrom) {
  if (auto s = require(mol != nullptr && xyz_angstrom != nullptr, "null argument")) {
    return s;
  }
  return guarded([&] {
    std::vector<Eigen::Vector3d> coords;
    coords.reserve(static_cast<size_t>(mol->mol.size()));
    for (int i = 0; i < mol->mol.size(); ++i) {
      coords.emplace_back(qdyn::units::angstrom_to_bohr(xyz_angstrom[3 * i]),
                          qdyn::units::angstrom_to_bohr(xyz_angstrom[3 * i + 1]),
                          qdyn::units::angstrom_to_bohr(xyz_angstrom[3 * i + 2]));
    }
    mol->mol = mol->mol.with_coordinates(std::move(coords));
  });
}

qdyn_status qdyn_molecule_distance(const qdyn_molecule* mol, int a, int b,
                                   double* angstrom) {
  if (auto s = require(mol != nullptr && angstrom != nullptr, "null argument")) return s;
  if (auto s = require(a >= 0 && a < mol->mol.size() && b >= 0 && b < mol->mol.size(),
                       "atom index out of range")) {
    return s;
  }
  *angstrom = qdyn::units::bohr_to_angstrom(mol->mol.distance(a, b));
  return QDYN_OK;
}

/* ----- options ----- */

qdyn_options* qdyn_options_create(void) { return new qdyn_options{}; }

void qdyn_options_free(qdyn_options* options) { delete options; }

qdyn_status qdyn_options_set_active_space(qdyn_options* options, int n_electrons,
                                          int n_orbitals) {
  if (auto s = require(options != nullptr, "null options")) return s;
  if (auto s = require(n_electrons > 0 && n_orbitals > 0, "active space must be positive")) {
    return s;
  }
  options->opt.active_space = qdyn::ActiveSpace{n_electrons, n_orbitals};
  return QDYN_OK;
}

qdyn_status qdyn_options_set_difference_step(qdyn_options* options, double angstrom) {
  if (auto s = require(options != nullptr, "null options")) return s;
  if (auto s = require(angstrom > 0.0, "difference step must be positive")) return s;
  options->opt.delta_d_angstrom = angstrom;
  return QDYN_OK;
}

qdyn_status qdyn_options_set_force_mode(qdyn_options* options, int exact) {
  if (auto s = require(options != nullptr, "null options")) return s;
  options->opt.force_mode = exact ? qdyn::Options::ForceMode::exact
                                  : qdyn::Options::ForceMode::correlated;
  return QDYN_OK;
}

qdyn_status qdyn_options_set_threads(qdyn_options* options, int threads) {
  if (auto s = require(options != nullptr, "null options")) return s;
  if (auto s = require(threads >= 0, "thread count must not be negative")) return s;
  options->opt.threads = threads;
  return QDYN_OK;
}

qdyn_status qdyn_options_set_isotope_masses(qdyn_options* options, int enabled) {
  if (auto s = require(options != nullptr, "null options")) return s;
  options->opt.isotope_masses = enabled != 0;
  return QDYN_OK;
}

qdyn_status qdyn_options_set_eckart_projection(qdyn_options* options, int enabled) {
  if (auto s = require(options != nullptr, "null options")) return s;
  options->opt.eckart_projection = enabled != 0;
  return QDYN_OK;
}

qdyn_status qdyn_options_set_vqe_trace(qdyn_options* options, const char* csv_path) {
  if (auto s = require(options != nullptr, "null options")) return s;
  options->opt.vqe.trace_path = csv_path ? csv_path : "";
  return QDYN_OK;
}

/* ----- single-point electronic structure ----- */

qdyn_status qdyn_solve(const qdyn_options* options, const qdyn_molecule* mol,
                       qdyn_solution** out) {
  if (auto s = require(mol != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] {
    const qdyn::Options opt = options ? options->opt : qdyn::Options{};
    auto solution = std::make_unique<qdyn_solution>();
    solution->opt = opt;
    solution->ctx = qdyn::build_context(mol->mol, opt);
    solution->vqe = qdyn::solve_ground_state(solution->ctx, opt);
    *out = solution.release();
  });
}

void qdyn_solution_free(qdyn_solution* solution) { delete solution; }

double qdyn_solution_hf_energy(const qdyn_solution* s) {
  return s ? s->ctx.scf.energy : std::numeric_limits<double>::quiet_NaN();
}

double qdyn_solution_vqe_energy(const qdyn_solution* s) {
  return s ? s->vqe.energy : std::numeric_limits<double>::quiet_NaN();
}

int qdyn_solution_vqe_iterations(const qdyn_solution* s) {
  return s ? s->vqe.iterations : 0;
}

int qdyn_solution_vqe_converged(const qdyn_solution* s) {
  return (s != nullptr && s->vqe.converged) ? 1 : 0;
}

int qdyn_solution_qubit_count(const qdyn_solution* s) {
  return s ? s->ctx.hamiltonian.n_qubits() : 0;
}

int qdyn_solution_term_count(const qdyn_solution* s) {
  return s ? static_cast<int>(s->ctx.hamiltonian.size()) : 0;
}

int qdyn_solution_parameter_count(const qdyn_solution* s) {
  return s ? static_cast<int>(s->vqe.theta.size()) : 0;
}

qdyn_status qdyn_solution_exact_energy(const qdyn_solution* s, double* out) {
  if (auto st = require(s != nullptr && out != nullptr, "null argument")) return st;
  return guarded([&] {
    *out = qdyn::exact_ground_state_sector(s->ctx.hamiltonian,
                                           s->ctx.soi.n_active_electrons)
               .energy;
  });
}

qdyn_status qdyn_solution_forces(const qdyn_solution* s, double* forces) {
  if (auto st = require(s != nullptr && forces != nullptr, "null argument")) return st;
  return guarded([&] {
    const qdyn::ForceVector fv = qdyn::compute_forces(s->ctx, s->vqe, s->opt);
    for (int j = 0; j < fv.force.size(); ++j) forces[j] = fv.force(j);
  });
}

qdyn_status qdyn_solution_hamiltonian_text(const qdyn_solution* s, char* buffer,
                                           size_t capacity, size_t* required) {
  if (auto st = require(s != nullptr, "null solution")) return st;
  return fill_buffer(s->ctx.hamiltonian.to_text(), buffer, capacity, required);
}

qdyn_status qdyn_solution_write_hamiltonian(const qdyn_solution* s, const char* path) {
  if (auto st = require(s != nullptr && path != nullptr, "null argument")) return st;
  return guarded([&] { write_file(path, s->ctx.hamiltonian.to_text()); });
}

qdyn_status qdyn_solution_write_mos(const qdyn_solution* s, const char* path) {
  if (auto st = require(s != nullptr && path != nullptr, "null argument")) return st;
  return guarded([&] {
    std::ofstream out(path);
    if (!out.good()) qdyn::fail(qdyn::ErrorCode::io, std::string("cannot write ") + path);
    qdyn::dump_mo_coefficients(s->ctx.scf, out);
  });
}

qdyn_status qdyn_dump_integrals(const qdyn_molecule* mol, const char* path) {
  if (auto st = require(mol != nullptr && path != nullptr, "null argument")) return st;
  return guarded([&] {
    const qdyn::BasisSet basis = qdyn::build_basis(mol->mol);
    const qdyn::IntegralSet ints = qdyn::compute_integrals(basis, mol->mol);
    std::ofstream out(path);
    if (!out.good()) qdyn::fail(qdyn::ErrorCode::io, std::string("cannot write ") + path);
    qdyn::dump_integrals(ints, out);
  });
}

/* ----- geometry optimization ----- */

qdyn_status qdyn_optimize(const qdyn_options* options, const qdyn_molecule* mol,
                          int max_steps, qdyn_molecule** out) {
  if (auto s = require(mol != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] {
    const qdyn::Options opt = options ? options->opt : qdyn::Options{};
    *out = new qdyn_molecule{
        qdyn::optimize_geometry(mol->mol, opt, max_steps > 0 ? max_steps : 200)};
  });
}

/* ----- vibrational analysis ----- */

qdyn_status qdyn_frequencies(const qdyn_options* options, const qdyn_molecule* mol,
                             int approximate, const char* hessian_dump_path,
                             qdyn_modes** out) {
  if (auto s = require(mol != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] {
    const qdyn::Options opt = options ? options->opt : qdyn::Options{};
    qdyn::HessianMatrix hessian;
    if (approximate) {
      const qdyn::HamiltonianContext ctx = qdyn::build_context(mol->mol, opt);
      const qdyn::VqeResult vqe = qdyn::solve_ground_state(ctx, opt);
      hessian = qdyn::hessian_approx(mol->mol, ctx, vqe, opt);
    } else {
      hessian = qdyn::hessian_full(mol->mol, opt);
    }
    if (hessian_dump_path != nullptr) {
      std::ofstream dump(hessian_dump_path);
      if (!dump.good()) {
        qdyn::fail(qdyn::ErrorCode::io,
                   std::string("cannot write ") + hessian_dump_path);
      }
      qdyn::dump_hessian_text(hessian, dump);
    }
    auto modes = std::make_unique<qdyn_modes>();
    modes->modes = qdyn::normal_modes(hessian, mol->mol, opt);
    modes->imaginary_count = qdyn::imaginary_mode_count(hessian, mol->mol, opt);
    *out = modes.release();
  });
}

void qdyn_modes_free(qdyn_modes* modes) { delete modes; }

int qdyn_modes_count(const qdyn_modes* modes) {
  return modes ? static_cast<int>(modes->modes.frequencies_cm1.size()) : 0;
}

qdyn_status qdyn_modes_frequencies(const qdyn_modes* modes, double* cm1) {
  if (auto s = require(modes != nullptr && cm1 != nullptr, "null argument")) return s;
  for (int k = 0; k < modes->modes.frequencies_cm1.size(); ++k) {
    cm1[k] = modes->modes.frequencies_cm1(k);
  }
  return QDYN_OK;
}

int qdyn_modes_imaginary_count(const qdyn_modes* modes) {
  return modes ? modes->imaginary_count : 0;
}

qdyn_status qdyn_modes_vector(const qdyn_modes* modes, int mode, double* components) {
  if (auto s = require(modes != nullptr && components != nullptr, "null argument")) {
    return s;
  }
  if (auto s = require(mode >= 0 && mode < modes->modes.modes.cols(),
                       "mode index out of range")) {
    return s;
  }
  for (int k = 0; k < modes->modes.modes.rows(); ++k) {
    components[k] = modes->modes.modes(k, mode);
  }
  return QDYN_OK;
}

/* ----- molecular dynamics ----- */

qdyn_status qdyn_run_md(const qdyn_options* options, const qdyn_molecule* mol,
                        const double* velocities_angstrom_per_fs, double dt_fs,
                        int n_steps, qdyn_trajectory** out) {
  if (auto s = require(mol != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] {
    const qdyn::Options opt = options ? options->opt : qdyn::Options{};
    Eigen::VectorXd v0 = Eigen::VectorXd::Zero(3 * mol->mol.size());
    if (velocities_angstrom_per_fs != nullptr) {
      for (int j = 0; j < v0.size(); ++j) {
        v0(j) = qdyn::units::angstrom_per_fs_to_au(velocities_angstrom_per_fs[j]);
      }
    }
    qdyn::MdOptions md;
    md.dt_fs = dt_fs;
    md.n_steps = n_steps;
    *out = new qdyn_trajectory{qdyn::run_md(mol->mol, v0, md, opt)};
  });
}

void qdyn_trajectory_free(qdyn_trajectory* trajectory) { delete trajectory; }

int qdyn_trajectory_frame_count(const qdyn_trajectory* t) {
  return t ? static_cast<int>(t->traj.frames.size()) : 0;
}

int qdyn_trajectory_truncated(const qdyn_trajectory* t) {
  return (t != nullptr && t->traj.truncated) ? 1 : 0;
}

const char* qdyn_trajectory_diagnostic(const qdyn_trajectory* t) {
  return t ? t->traj.diagnostic.c_str() : "";
}

#define QDYN_FRAME_ACCESSOR(name, field)                                        \
  double qdyn_trajectory_##name(const qdyn_trajectory* t, int frame) {          \
    if (t == nullptr || frame < 0 ||                                            \
        frame >= static_cast<int>(t->traj.frames.size())) {                     \
      return std::numeric_limits<double>::quiet_NaN();                          \
    }                                                                           \
    return t->traj.frames[static_cast<size_t>(frame)].field;                    \
  }

QDYN_FRAME_ACCESSOR(time, time_fs)
QDYN_FRAME_ACCESSOR(potential, potential)
QDYN_FRAME_ACCESSOR(kinetic, kinetic)
QDYN_FRAME_ACCESSOR(total, total)

#undef QDYN_FRAME_ACCESSOR

int qdyn_trajectory_vqe_iterations(const qdyn_trajectory* t, int frame) {
  if (t == nullptr || frame < 0 || frame >= static_cast<int>(t->traj.frames.size())) {
    return 0;
  }
  return t->traj.frames[static_cast<size_t>(frame)].vqe_iterations;
}

qdyn_status qdyn_trajectory_molecule(const qdyn_trajectory* t, int frame,
                                     qdyn_molecule** out) {
  if (auto s = require(t != nullptr && out != nullptr, "null argument")) return s;
  if (auto s = require(frame >= 0 && frame < static_cast<int>(t->traj.frames.size()),
                       "frame index out of range")) {
    return s;
  }
  *out = new qdyn_molecule{t->traj.frames[static_cast<size_t>(frame)].mol};
  return QDYN_OK;
}

qdyn_status qdyn_trajectory_write_xyz(const qdyn_trajectory* t, const char* path) {
  if (auto s = require(t != nullptr && path != nullptr, "null argument")) return s;
  return guarded([&] {
    std::ofstream out(path);
    if (!out.good()) qdyn::fail(qdyn::ErrorCode::io, std::string("cannot write ") + path);
    qdyn::write_trajectory_xyz(t->traj, out);
  });
}

qdyn_status qdyn_trajectory_write_csv(const qdyn_trajectory* t, const char* path) {
  if (auto s = require(t != nullptr && path != nullptr, "null argument")) return s;
  return guarded([&] {
    std::ofstream out(path);
    if (!out.good()) qdyn::fail(qdyn::ErrorCode::io, std::string("cannot write ") + path);
    qdyn::write_energies_csv(t->traj, out);
  });
}

/* ----- distance scans ----- */

qdyn_status qdyn_scan_distance(const qdyn_options* options, const qdyn_molecule* mol,
                               int moving_atom, int target_atom, int axis,
                               const double* distances_angstrom, int n_points,
                               int with_oracle, int with_forces, qdyn_scan** out) {
  if (auto s = require(mol != nullptr && out != nullptr && distances_angstrom != nullptr,
                       "null argument")) {
    return s;
  }
  if (auto s = require(n_points > 0, "scan needs at least one point")) return s;
  return guarded([&] {
    const qdyn::Options opt = options ? options->opt : qdyn::Options{};
    qdyn::ScanSpec spec;
    spec.moving_atom = moving_atom;
    spec.target_atom = target_atom;
    spec.axis = axis;
    spec.distances_angstrom.assign(distances_angstrom, distances_angstrom + n_points);
    spec.with_oracle = with_oracle != 0;
    spec.with_forces = with_forces != 0;
    *out = new qdyn_scan{qdyn::scan_distance(mol->mol, spec, opt)};
  });
}

void qdyn_scan_free(qdyn_scan* scan) { delete scan; }

int qdyn_scan_point_count(const qdyn_scan* scan) {
  return scan ? static_cast<int>(scan->points.size()) : 0;
}

double qdyn_scan_distance_at(const qdyn_scan* scan, int point) {
  const auto* p = scan_at(scan, point);
  return p ? p->distance_angstrom : std::numeric_limits<double>::quiet_NaN();
}

double qdyn_scan_hf_energy(const qdyn_scan* scan, int point) {
  const auto* p = scan_at(scan, point);
  return p ? p->e_hf : std::numeric_limits<double>::quiet_NaN();
}

double qdyn_scan_vqe_energy(const qdyn_scan* scan, int point) {
  const auto* p = scan_at(scan, point);
  return p ? p->e_vqe : std::numeric_limits<double>::quiet_NaN();
}

double qdyn_scan_exact_energy(const qdyn_scan* scan, int point) {
  const auto* p = scan_at(scan, point);
  return (p && p->e_oracle) ? *p->e_oracle : std::numeric_limits<double>::quiet_NaN();
}

double qdyn_scan_force(const qdyn_scan* scan, int point) {
  const auto* p = scan_at(scan, point);
  return p ? p->f_vqe : std::numeric_limits<double>::quiet_NaN();
}

double qdyn_scan_exact_force(const qdyn_scan* scan, int point) {
  const auto* p = scan_at(scan, point);
  return (p && p->f_oracle) ? *p->f_oracle : std::numeric_limits<double>::quiet_NaN();
}

int qdyn_scan_vqe_iterations(const qdyn_scan* scan, int point) {
  const auto* p = scan_at(scan, point);
  return p ? p->vqe_iterations : 0;
}

/* ----- transition-state search ----- */

qdyn_status qdyn_ts_search(const qdyn_options* options, const qdyn_molecule* mol,
                           int max_steps, qdyn_molecule** geometry_out,
                           qdyn_modes** modes_out, double* max_gradient_out,
                           int* iterations_out) {
  if (auto s = require(mol != nullptr && geometry_out != nullptr, "null argument")) {
    return s;
  }
  return guarded([&] {
    const qdyn::Options opt = options ? options->opt : qdyn::Options{};
    qdyn::TsResult ts =
        qdyn::ts_search(mol->mol, opt, max_steps > 0 ? max_steps : 50);
    *geometry_out = new qdyn_molecule{ts.geometry};
    if (modes_out != nullptr) {
      auto modes = std::make_unique<qdyn_modes>();
      modes->modes = ts.modes;
      // Distinct imaginary frequency values of the returned spectrum.
      int count = 0;
      double prev = 0.0;
      for (Eigen::Index k = 0; k < ts.modes.frequencies_cm1.size(); ++k) {
        const double f = ts.modes.frequencies_cm1(k);
        if (f >= -100.0) break;
        if (count == 0 || std::abs(f - prev) > std::max(25.0, 0.03 * std::abs(prev))) {
          ++count;
        }
        prev = f;
      }
      modes->imaginary_count = count;
      *modes_out = modes.release();
    }
    if (max_gradient_out != nullptr) *max_gradient_out = ts.max_gradient;
    if (iterations_out != nullptr) *iterations_out = ts.iterations;
  });
}

}  // extern "C"
