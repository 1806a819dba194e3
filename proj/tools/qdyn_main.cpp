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

// qdyn command line: energy | scan | opt | freq | md | ts | extract-frame.
// Everything computational goes through the C API in qdyn.h; this file only
// parses flags, shuffles files and formats output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qdyn.h"

namespace {

using nlohmann::json;

int exit_code(qdyn_status status) {
  switch (status) {
    case QDYN_OK:
      return 0;
    case QDYN_ERROR_INVALID_ARGUMENT:
      return 2;
    case QDYN_ERROR_IO:
      return 3;
    case QDYN_ERROR_PARSE:
      return 4;
    case QDYN_ERROR_SCF:
      return 5;
    case QDYN_ERROR_VQE:
      return 6;
    case QDYN_ERROR_TRACKING:
      return 7;
    case QDYN_ERROR_SIZE:
      return 8;
    case QDYN_ERROR_PRECONDITION:
      return 9;
    case QDYN_ERROR_INTERNAL:
      return 10;
  }
  return 10;
}

struct Failure {
  int code;
};

void check(qdyn_status status) {
  if (status != QDYN_OK) {
    std::fprintf(stderr, "qdyn: %s (%s)\n", qdyn_last_error(), qdyn_status_name(status));
    throw Failure{exit_code(status)};
  }
}

template <typename T, void (*Free)(T*)>
using handle = std::unique_ptr<T, std::integral_constant<decltype(Free), Free>>;

using MoleculeHandle = handle<qdyn_molecule, qdyn_molecule_free>;
using OptionsHandle = handle<qdyn_options, qdyn_options_free>;
using SolutionHandle = handle<qdyn_solution, qdyn_solution_free>;
using TrajectoryHandle = handle<qdyn_trajectory, qdyn_trajectory_free>;
using ScanHandle = handle<qdyn_scan, qdyn_scan_free>;
using ModesHandle = handle<qdyn_modes, qdyn_modes_free>;

MoleculeHandle load_molecule(const std::string& path) {
  qdyn_molecule* mol = nullptr;
  check(qdyn_molecule_read_xyz(path.c_str(), &mol));
  return MoleculeHandle(mol);
}

// Shared pipeline knobs, fed from flags with JSON config fallback.
struct CommonConfig {
  int threads = 0;          // 0 = all available cores
  double delta_d = 1.0e-3;  // Angstrom
  bool isotope_masses = false;
  bool eckart = false;
  std::string force_mode = "correlated";
  std::vector<int> active;  // empty or {n_electrons, n_orbitals}
  std::string trace;

  OptionsHandle make_options() const {
    OptionsHandle opt(qdyn_options_create());
    check(qdyn_options_set_threads(opt.get(), threads));
    check(qdyn_options_set_difference_step(opt.get(), delta_d));
    check(qdyn_options_set_isotope_masses(opt.get(), isotope_masses ? 1 : 0));
    check(qdyn_options_set_eckart_projection(opt.get(), eckart ? 1 : 0));
    if (force_mode == "exact") {
      check(qdyn_options_set_force_mode(opt.get(), 1));
    } else if (force_mode == "correlated") {
      check(qdyn_options_set_force_mode(opt.get(), 0));
    } else {
      std::fprintf(stderr, "qdyn: force mode must be 'correlated' or 'exact'\n");
      throw Failure{2};
    }
    if (!active.empty()) {
      if (active.size() != 2) {
        std::fprintf(stderr, "qdyn: --active needs two values: electrons orbitals\n");
        throw Failure{2};
      }
      check(qdyn_options_set_active_space(opt.get(), active[0], active[1]));
    }
    if (!trace.empty()) check(qdyn_options_set_vqe_trace(opt.get(), trace.c_str()));
    return opt;
  }
};

std::string* g_config_path = nullptr;

void add_common_flags(CLI::App* cmd, CommonConfig& cfg) {
  if (g_config_path != nullptr) {
    cmd->add_option("--config", *g_config_path,
                    "JSON config file (flags take precedence)");
  }
  cmd->add_option("--threads", cfg.threads,
                  "worker threads for displaced geometries (0 = all cores)");
  cmd->add_option("--delta-d", cfg.delta_d, "finite-difference step in Angstrom");
  cmd->add_flag("--isotope-masses", cfg.isotope_masses,
                "use most-abundant-isotope masses instead of standard weights");
  cmd->add_flag("--eckart", cfg.eckart, "project translations/rotations in normal modes");
  cmd->add_option("--force-mode", cfg.force_mode, "correlated | exact");
  cmd->add_flag_callback(
      "--exact-forces", [&cfg]() { cfg.force_mode = "exact"; },
      "re-optimize at displaced geometries (same as --force-mode exact)");
  cmd->add_option("--active", cfg.active, "active space: electrons orbitals")
      ->expected(2);
  cmd->add_option("--trace", cfg.trace, "write VQE convergence CSV to this path");
}

// Flags take precedence over the config file, which beats defaults.
void apply_config(const CLI::App* cmd, const json& cfg, CommonConfig& common) {
  auto unset = [&](const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() == 0;
  };
  if (unset("--threads") && cfg.contains("threads")) common.threads = cfg["threads"];
  if (unset("--delta-d") && cfg.contains("delta_d")) common.delta_d = cfg["delta_d"];
  if (unset("--isotope-masses") && cfg.contains("isotope_masses")) {
    common.isotope_masses = cfg["isotope_masses"];
  }
  if (unset("--eckart") && cfg.contains("eckart")) common.eckart = cfg["eckart"];
  if (unset("--force-mode") && cfg.contains("force_mode")) {
    common.force_mode = cfg["force_mode"];
  }
  if (unset("--active") && cfg.contains("active")) {
    common.active = cfg["active"].get<std::vector<int>>();
  }
  if (unset("--trace") && cfg.contains("trace")) common.trace = cfg["trace"];
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in.good()) {
    std::fprintf(stderr, "qdyn: cannot open config file %s\n", path.c_str());
    throw Failure{3};
  }
  try {
    return json::parse(in);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "qdyn: config parse error: %s\n", e.what());
    throw Failure{4};
  }
}

int axis_index(const std::string& axis) {
  if (axis == "x") return 0;
  if (axis == "y") return 1;
  if (axis == "z") return 2;
  std::fprintf(stderr, "qdyn: axis must be x, y or z\n");
  throw Failure{2};
}

std::vector<double> parse_velocities(const std::string& table, int n_atoms) {
  std::vector<double> v(static_cast<size_t>(3 * n_atoms), 0.0);
  if (table.empty()) return v;
  std::istringstream entries(table);
  std::string entry;
  while (std::getline(entries, entry, ';')) {
    if (entry.find_first_not_of(" \t") == std::string::npos) continue;
    const size_t colon = entry.find(':');
    if (colon == std::string::npos) {
      std::fprintf(stderr, "qdyn: bad --v0 entry '%s' (want idx:vx,vy,vz)\n",
                   entry.c_str());
      throw Failure{2};
    }
    int idx = -1;
    double vx = 0, vy = 0, vz = 0;
    char c1 = 0, c2 = 0;
    std::istringstream head(entry.substr(0, colon));
    std::istringstream tail(entry.substr(colon + 1));
    if (!(head >> idx) || !(tail >> vx >> c1 >> vy >> c2 >> vz) || c1 != ',' ||
        c2 != ',') {
      std::fprintf(stderr, "qdyn: bad --v0 entry '%s' (want idx:vx,vy,vz)\n",
                   entry.c_str());
      throw Failure{2};
    }
    if (idx < 0 || idx >= n_atoms) {
      std::fprintf(stderr, "qdyn: --v0 atom index %d out of range\n", idx);
      throw Failure{2};
    }
    v[static_cast<size_t>(3 * idx)] = vx;
    v[static_cast<size_t>(3 * idx + 1)] = vy;
    v[static_cast<size_t>(3 * idx + 2)] = vz;
  }
  return v;
}

void print_distances(const qdyn_molecule* mol) {
  const int n = qdyn_molecule_atom_count(mol);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double d = 0.0;
      check(qdyn_molecule_distance(mol, i, j, &d));
      std::printf("  r(%s%d-%s%d) = %.5f A\n", qdyn_molecule_symbol(mol, i), i,
                  qdyn_molecule_symbol(mol, j), j, d);
    }
  }
}

json modes_to_json(const qdyn_modes* modes, const char* method) {
  const int n = qdyn_modes_count(modes);
  std::vector<double> freqs(static_cast<size_t>(n), 0.0);
  check(qdyn_modes_frequencies(modes, freqs.data()));
  json out;
  out["method"] = method;
  out["frequencies_cm1"] = freqs;
  out["imaginary_count"] = qdyn_modes_imaginary_count(modes);
  json vectors = json::array();
  std::vector<double> mode(static_cast<size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    check(qdyn_modes_vector(modes, k, mode.data()));
    vectors.push_back(mode);
  }
  out["mode_vectors"] = vectors;
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out.good()) {
    std::fprintf(stderr, "qdyn: cannot write %s\n", path.c_str());
    throw Failure{3};
  }
  out << text;
}

// ----- subcommand bodies -----

int run_energy(const std::string& input, const CommonConfig& common, bool oracle,
               const std::string& dump_hamiltonian, const std::string& dump_integrals,
               const std::string& dump_mos) {
  const MoleculeHandle mol = load_molecule(input);
  const OptionsHandle opt = common.make_options();
  qdyn_solution* raw = nullptr;
  check(qdyn_solve(opt.get(), mol.get(), &raw));
  const SolutionHandle sol(raw);

  std::printf("atoms: %d  charge: %d  electrons: %d\n",
              qdyn_molecule_atom_count(mol.get()), qdyn_molecule_charge(mol.get()),
              qdyn_molecule_electron_count(mol.get()));
  std::printf("qubits: %d  hamiltonian terms: %d  parameters: %d\n",
              qdyn_solution_qubit_count(sol.get()), qdyn_solution_term_count(sol.get()),
              qdyn_solution_parameter_count(sol.get()));
  std::printf("E_HF  = %.10f Ha\n", qdyn_solution_hf_energy(sol.get()));
  std::printf("E_VQE = %.10f Ha  (%d iterations%s)\n",
              qdyn_solution_vqe_energy(sol.get()), qdyn_solution_vqe_iterations(sol.get()),
              qdyn_solution_vqe_converged(sol.get()) ? ", converged" : ", NOT converged");
  if (oracle) {
    double exact = 0.0;
    check(qdyn_solution_exact_energy(sol.get(), &exact));
    std::printf("E_exact = %.10f Ha  |E_VQE - E_exact| = %.3e Ha\n", exact,
                std::abs(qdyn_solution_vqe_energy(sol.get()) - exact));
  }
  if (!dump_hamiltonian.empty()) {
    check(qdyn_solution_write_hamiltonian(sol.get(), dump_hamiltonian.c_str()));
    std::printf("hamiltonian written to %s\n", dump_hamiltonian.c_str());
  }
  if (!dump_integrals.empty()) {
    check(qdyn_dump_integrals(mol.get(), dump_integrals.c_str()));
    std::printf("integrals written to %s\n", dump_integrals.c_str());
  }
  if (!dump_mos.empty()) {
    check(qdyn_solution_write_mos(sol.get(), dump_mos.c_str()));
    std::printf("MO coefficients written to %s\n", dump_mos.c_str());
  }
  return 0;
}

int run_scan(const std::string& input, const CommonConfig& common, int atom, int target,
             const std::string& axis, double from, double to, int points, bool oracle,
             bool no_forces, const std::string& out_path) {
  if (points < 1) {
    std::fprintf(stderr, "qdyn: --points must be at least 1\n");
    throw Failure{2};
  }
  const MoleculeHandle mol = load_molecule(input);
  const OptionsHandle opt = common.make_options();
  std::vector<double> distances;
  for (int k = 0; k < points; ++k) {
    distances.push_back(points == 1 ? from : from + k * (to - from) / (points - 1));
  }
  qdyn_scan* raw = nullptr;
  check(qdyn_scan_distance(opt.get(), mol.get(), atom, target, axis_index(axis),
                           distances.data(), points, oracle ? 1 : 0,
                           no_forces ? 0 : 1, &raw));
  const ScanHandle scan(raw);

  std::ostringstream csv;
  csv << "distance_angstrom,e_hf_ha,e_vqe_ha,e_exact_ha,f_vqe_ha_bohr,"
         "f_exact_ha_bohr,vqe_iterations\n";
  char line[256];
  for (int k = 0; k < qdyn_scan_point_count(scan.get()); ++k) {
    const double ee = qdyn_scan_exact_energy(scan.get(), k);
    const double fe = qdyn_scan_exact_force(scan.get(), k);
    std::snprintf(line, sizeof(line), "%.6f,%.12f,%.12f,", qdyn_scan_distance_at(scan.get(), k),
                  qdyn_scan_hf_energy(scan.get(), k), qdyn_scan_vqe_energy(scan.get(), k));
    csv << line;
    if (std::isnan(ee)) {
      csv << ",";
    } else {
      std::snprintf(line, sizeof(line), "%.12f,", ee);
      csv << line;
    }
    const double fv = qdyn_scan_force(scan.get(), k);
    if (std::isnan(fv)) {
      csv << ",";
    } else {
      std::snprintf(line, sizeof(line), "%.10e,", fv);
      csv << line;
    }
    if (std::isnan(fe)) {
      csv << ",";
    } else {
      std::snprintf(line, sizeof(line), "%.10e,", fe);
      csv << line;
    }
    csv << qdyn_scan_vqe_iterations(scan.get(), k) << "\n";
  }
  if (out_path.empty()) {
    std::fputs(csv.str().c_str(), stdout);
  } else {
    write_text(out_path, csv.str());
    std::printf("scan written to %s (%d points)\n", out_path.c_str(), points);
  }
  return 0;
}

int run_opt(const std::string& input, const CommonConfig& common, int max_steps,
            const std::string& out_path) {
  const MoleculeHandle mol = load_molecule(input);
  const OptionsHandle opt = common.make_options();
  qdyn_molecule* raw = nullptr;
  check(qdyn_optimize(opt.get(), mol.get(), max_steps, &raw));
  const MoleculeHandle optimized(raw);
  std::printf("optimized geometry:\n");
  print_distances(optimized.get());
  if (!out_path.empty()) {
    check(qdyn_molecule_write_xyz(optimized.get(), out_path.c_str(), "optimized"));
    std::printf("geometry written to %s\n", out_path.c_str());
  }
  return 0;
}

int run_freq(const std::string& input, const CommonConfig& common,
             const std::string& hessian, const std::string& json_path,
             const std::string& dump_hessian) {
  if (hessian != "full" && hessian != "approx") {
    std::fprintf(stderr, "qdyn: --hessian must be 'full' or 'approx'\n");
    throw Failure{2};
  }
  const MoleculeHandle mol = load_molecule(input);
  const OptionsHandle opt = common.make_options();
  qdyn_modes* raw = nullptr;
  check(qdyn_frequencies(opt.get(), mol.get(), hessian == "approx" ? 1 : 0,
                         dump_hessian.empty() ? nullptr : dump_hessian.c_str(), &raw));
  const ModesHandle modes(raw);

  const json out = modes_to_json(modes.get(), hessian.c_str());
  std::printf("frequencies (cm^-1):");
  for (const double f : out["frequencies_cm1"].get<std::vector<double>>()) {
    std::printf(" %.1f", f);
  }
  std::printf("\nimaginary modes: %d\n", qdyn_modes_imaginary_count(modes.get()));
  if (!json_path.empty()) {
    write_text(json_path, out.dump(2) + "\n");
    std::printf("modes written to %s\n", json_path.c_str());
  }
  return 0;
}

int run_md(const std::string& input, const CommonConfig& common, double dt, int steps,
           const std::string& v0, const std::string& out_dir) {
  const MoleculeHandle mol = load_molecule(input);
  const OptionsHandle opt = common.make_options();
  const std::vector<double> velocities =
      parse_velocities(v0, qdyn_molecule_atom_count(mol.get()));
  qdyn_trajectory* raw = nullptr;
  check(qdyn_run_md(opt.get(), mol.get(), velocities.data(), dt, steps, &raw));
  const TrajectoryHandle traj(raw);

  const int frames = qdyn_trajectory_frame_count(traj.get());
  double drift = 0.0;
  const double e0 = qdyn_trajectory_total(traj.get(), 0);
  for (int k = 0; k < frames; ++k) {
    drift = std::max(drift, std::abs(qdyn_trajectory_total(traj.get(), k) - e0));
  }
  std::printf("frames: %d  (%.1f fs)\n", frames,
              qdyn_trajectory_time(traj.get(), frames - 1));
  std::printf("max |E_tot(t) - E_tot(0)| = %.4f mHa\n", drift * 1000.0);
  if (qdyn_trajectory_truncated(traj.get())) {
    std::printf("trajectory truncated: %s\n", qdyn_trajectory_diagnostic(traj.get()));
  }

  std::filesystem::create_directories(out_dir.empty() ? "." : out_dir);
  const std::string base = out_dir.empty() ? "." : out_dir;
  const std::string xyz = base + "/trajectory.xyz";
  const std::string csv = base + "/energies.csv";
  check(qdyn_trajectory_write_xyz(traj.get(), xyz.c_str()));
  check(qdyn_trajectory_write_csv(traj.get(), csv.c_str()));
  std::printf("trajectory written to %s, energies to %s\n", xyz.c_str(), csv.c_str());
  return 0;
}

int run_ts(const std::string& input, const CommonConfig& common, int max_steps,
           const std::string& out_path, const std::string& json_path) {
  const MoleculeHandle mol = load_molecule(input);
  const OptionsHandle opt = common.make_options();
  qdyn_molecule* geom_raw = nullptr;
  qdyn_modes* modes_raw = nullptr;
  double max_gradient = 0.0;
  int iterations = 0;
  check(qdyn_ts_search(opt.get(), mol.get(), max_steps, &geom_raw, &modes_raw,
                       &max_gradient, &iterations));
  const MoleculeHandle geometry(geom_raw);
  const ModesHandle modes(modes_raw);

  std::printf("transition state found after %d Newton steps\n", iterations);
  print_distances(geometry.get());
  std::printf("max |gradient| = %.3e Ha/Bohr\n", max_gradient);
  const int n = qdyn_modes_count(modes.get());
  std::vector<double> freqs(static_cast<size_t>(n), 0.0);
  check(qdyn_modes_frequencies(modes.get(), freqs.data()));
  std::printf("imaginary frequency values: %d, lowest mode %.1f cm^-1\n",
              qdyn_modes_imaginary_count(modes.get()), freqs.empty() ? 0.0 : freqs[0]);
  if (!out_path.empty()) {
    check(qdyn_molecule_write_xyz(geometry.get(), out_path.c_str(), "transition state"));
    std::printf("geometry written to %s\n", out_path.c_str());
  }
  if (!json_path.empty()) {
    json out = modes_to_json(modes.get(), "approx");
    out["max_gradient_ha_bohr"] = max_gradient;
    out["newton_iterations"] = iterations;
    write_text(json_path, out.dump(2) + "\n");
    std::printf("modes written to %s\n", json_path.c_str());
  }
  return 0;
}

int run_extract_frame(const std::string& input, int frame, const std::string& out_path) {
  std::ifstream in(input);
  if (!in.good()) {
    std::fprintf(stderr, "qdyn: cannot open %s\n", input.c_str());
    throw Failure{3};
  }
  std::string line;
  int current = 0;
  while (current <= frame) {
    if (!std::getline(in, line)) {
      std::fprintf(stderr, "qdyn: trajectory has only %d frames\n", current);
      throw Failure{2};
    }
    int count = 0;
    try {
      count = std::stoi(line);
    } catch (const std::exception&) {
      std::fprintf(stderr, "qdyn: malformed frame header '%s'\n", line.c_str());
      throw Failure{4};
    }
    std::ostringstream block;
    block << count << "\n";
    for (int k = 0; k < count + 1; ++k) {
      if (!std::getline(in, line)) {
        std::fprintf(stderr, "qdyn: truncated frame %d\n", current);
        throw Failure{4};
      }
      block << line << "\n";
    }
    if (current == frame) {
      // Validate through the library before writing.
      qdyn_molecule* mol = nullptr;
      check(qdyn_molecule_parse_xyz(block.str().c_str(), &mol));
      qdyn_molecule_free(mol);
      write_text(out_path, block.str());
      std::printf("frame %d written to %s\n", frame, out_path.c_str());
      return 0;
    }
    ++current;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum-simulated reaction dynamics workbench"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qdyn_version()));

  std::string config_path;
  g_config_path = &config_path;

  struct {
    std::string input, dump_hamiltonian, dump_integrals, dump_mos, dump_hessian;
    std::string out, json_path, hessian = "full";
    std::string axis = "z", v0;
    CommonConfig common;
    bool oracle = false, no_forces = false;
    int atom = -1, target = -1, points = 10, max_steps = 200, frame = 0, steps = 1;
    double from = std::nan(""), to = std::nan(""), dt = 0.2;
  } p;

  CLI::App* energy = app.add_subcommand("energy", "HF + VQE single point");
  energy->add_option("input", p.input, "XYZ file")->required();
  energy->add_flag("--oracle", p.oracle, "compare against exact diagonalization");
  energy->add_option("--dump-hamiltonian", p.dump_hamiltonian,
                     "write the Pauli Hamiltonian to this file");
  energy->add_option("--dump-integrals", p.dump_integrals,
                     "write S/T/V/ERI tensors to this file");
  energy->add_option("--dump-mos", p.dump_mos,
                     "write MO coefficients and orbital energies to this file");
  add_common_flags(energy, p.common);

  CLI::App* scan = app.add_subcommand("scan", "distance sweep with energies and forces");
  scan->add_option("input", p.input, "XYZ template")->required();
  scan->add_option("--atom", p.atom, "index of the moving atom");
  scan->add_option("--target", p.target, "index of the distance reference atom");
  scan->add_option("--axis", p.axis, "scan axis: x, y or z");
  scan->add_option("--from", p.from, "first distance in Angstrom");
  scan->add_option("--to", p.to, "last distance in Angstrom");
  scan->add_option("--points", p.points, "number of points");
  scan->add_flag("--oracle", p.oracle, "add exact energies and re-optimized forces");
  scan->add_flag("--no-forces", p.no_forces, "skip force evaluation (energies only)");
  scan->add_option("-o,--out", p.out, "CSV output path (default stdout)");
  add_common_flags(scan, p.common);

  CLI::App* opt_cmd = app.add_subcommand("opt", "geometry optimization");
  opt_cmd->add_option("input", p.input, "XYZ file")->required();
  opt_cmd->add_option("--max-steps", p.max_steps, "step limit");
  opt_cmd->add_option("-o,--out", p.out, "optimized XYZ output path");
  add_common_flags(opt_cmd, p.common);

  CLI::App* freq = app.add_subcommand("freq", "normal-mode frequencies");
  freq->add_option("input", p.input, "XYZ file")->required();
  freq->add_option("--hessian", p.hessian, "full | approx");
  freq->add_option("--json", p.json_path, "write frequencies and modes as JSON");
  freq->add_option("--dump-hessian", p.dump_hessian,
                   "write the Hessian as a plain-text matrix");
  add_common_flags(freq, p.common);

  CLI::App* md = app.add_subcommand("md", "NVE ab initio molecular dynamics");
  md->add_option("input", p.input, "XYZ file")->required();
  md->add_option("--dt", p.dt, "time step in fs");
  md->add_option("--steps", p.steps, "number of steps");
  md->add_option("--v0", p.v0, "initial velocities 'idx:vx,vy,vz[;...]' in A/fs");
  md->add_option("--out", p.out, "output directory");
  add_common_flags(md, p.common);

  CLI::App* ts = app.add_subcommand("ts", "Newton-Raphson transition-state search");
  ts->add_option("input", p.input, "near-TS seed XYZ file")->required();
  ts->add_option("--max-steps", p.max_steps, "Newton step limit");
  ts->add_option("-o,--out", p.out, "TS geometry XYZ output path");
  ts->add_option("--json", p.json_path, "write modes as JSON");
  add_common_flags(ts, p.common);

  CLI::App* extract = app.add_subcommand("extract-frame", "pull one frame from a trajectory");
  extract->add_option("input", p.input, "multi-frame XYZ trajectory")->required();
  extract->add_option("--frame", p.frame, "frame index (0-based)")->required();
  extract->add_option("-o,--out", p.out, "output XYZ path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const json cfg = load_config(config_path);
    CLI::App* active_cmd = app.get_subcommands().front();
    apply_config(active_cmd, cfg, p.common);
    auto cfg_value = [&](const char* flag, const char* key, auto& target) {
      const CLI::Option* o = active_cmd->get_option_no_throw(flag);
      if (o != nullptr && o->count() == 0 && cfg.contains(key)) {
        cfg.at(key).get_to(target);
      }
    };
    cfg_value("--dt", "dt", p.dt);
    cfg_value("--steps", "steps", p.steps);
    cfg_value("--v0", "v0", p.v0);
    cfg_value("--out", "out", p.out);
    cfg_value("--max-steps", "max_steps", p.max_steps);
    cfg_value("--hessian", "hessian", p.hessian);
    cfg_value("--from", "from", p.from);
    cfg_value("--to", "to", p.to);
    cfg_value("--points", "points", p.points);
    cfg_value("--atom", "atom", p.atom);
    cfg_value("--target", "target", p.target);
    cfg_value("--axis", "axis", p.axis);
    cfg_value("--oracle", "oracle", p.oracle);
    cfg_value("--no-forces", "no_forces", p.no_forces);
    cfg_value("--json", "json", p.json_path);

    if (energy->parsed()) {
      return run_energy(p.input, p.common, p.oracle, p.dump_hamiltonian,
                        p.dump_integrals, p.dump_mos);
    }
    if (scan->parsed()) {
      if (p.atom < 0 || p.target < 0 || std::isnan(p.from) || std::isnan(p.to)) {
        std::fprintf(stderr,
                     "qdyn: scan needs --atom, --target, --from and --to "
                     "(flags or config file)\n");
        return 2;
      }
      return run_scan(p.input, p.common, p.atom, p.target, p.axis, p.from, p.to,
                      p.points, p.oracle, p.no_forces, p.out);
    }
    if (opt_cmd->parsed()) return run_opt(p.input, p.common, p.max_steps, p.out);
    if (freq->parsed()) {
      return run_freq(p.input, p.common, p.hessian, p.json_path, p.dump_hessian);
    }
    if (md->parsed()) return run_md(p.input, p.common, p.dt, p.steps, p.v0, p.out);
    if (ts->parsed()) return run_ts(p.input, p.common, p.max_steps, p.out, p.json_path);
    if (extract->parsed()) return run_extract_frame(p.input, p.frame, p.out);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "qdyn: %s\n", e.what());
    return 10;
  }
  return 2;
}
