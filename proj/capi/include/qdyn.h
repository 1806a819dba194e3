/* Copyright 2026 The qdyn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the qdyn reaction-dynamics workbench.
 *
 * Conventions: every fallible call returns a qdyn_status; QDYN_OK is 0.
 * On failure qdyn_last_error() carries a thread-local message (valid until
 * the next failing call on the same thread). Objects returned through
 * out-parameters are owned by the caller and released with the matching
 * _free function. Geometry I/O is in Angstrom, energies in Hartree, forces
 * in Hartree/Bohr, frequencies in cm^-1.
 */

#ifndef QDYN_H_
#define QDYN_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qdyn_status {
  QDYN_OK = 0,
  QDYN_ERROR_INVALID_ARGUMENT = 1,
  QDYN_ERROR_PARSE = 2,
  QDYN_ERROR_IO = 3,
  QDYN_ERROR_SCF = 4,
  QDYN_ERROR_VQE = 5,
  QDYN_ERROR_TRACKING = 6,
  QDYN_ERROR_SIZE = 7,
  QDYN_ERROR_PRECONDITION = 8,
  QDYN_ERROR_INTERNAL = 9
} qdyn_status;

const char* qdyn_status_name(qdyn_status status);
const char* qdyn_last_error(void);
const char* qdyn_version(void);

typedef struct qdyn_molecule qdyn_molecule;
typedef struct qdyn_options qdyn_options;
typedef struct qdyn_solution qdyn_solution;
typedef struct qdyn_trajectory qdyn_trajectory;
typedef struct qdyn_scan qdyn_scan;
typedef struct qdyn_modes qdyn_modes;

/* ----- molecules ----- */

qdyn_status qdyn_molecule_parse_xyz(const char* text, qdyn_molecule** out);
qdyn_status qdyn_molecule_read_xyz(const char* path, qdyn_molecule** out);
qdyn_status qdyn_molecule_write_xyz(const qdyn_molecule* mol, const char* path,
                                    const char* comment);
/* Two-call pattern: pass capacity 0 to query the required size. */
qdyn_status qdyn_molecule_to_xyz(const qdyn_molecule* mol, const char* comment,
                                 char* buffer, size_t capacity, size_t* required);
void qdyn_molecule_free(qdyn_molecule* mol);

int qdyn_molecule_atom_count(const qdyn_molecule* mol);
int qdyn_molecule_charge(const qdyn_molecule* mol);
int qdyn_molecule_electron_count(const qdyn_molecule* mol);
const char* qdyn_molecule_symbol(const qdyn_molecule* mol, int atom);
qdyn_status qdyn_molecule_positions(const qdyn_molecule* mol, double* xyz_angstrom);
qdyn_status qdyn_molecule_set_positions(qdyn_molecule* mol, const double* xyz_angstrom);
qdyn_status qdyn_molecule_distance(const qdyn_molecule* mol, int a, int b,
                                   double* angstrom);

/* ----- options ----- */

qdyn_options* qdyn_options_create(void);
void qdyn_options_free(qdyn_options* options);
qdyn_status qdyn_options_set_active_space(qdyn_options* options, int n_electrons,
                                          int n_orbitals);
qdyn_status qdyn_options_set_difference_step(qdyn_options* options, double angstrom);
/* 0 = correlated sampling (default), 1 = re-optimized finite difference. */
qdyn_status qdyn_options_set_force_mode(qdyn_options* options, int exact);
qdyn_status qdyn_options_set_threads(qdyn_options* options, int threads); /* 0 = auto */
qdyn_status qdyn_options_set_isotope_masses(qdyn_options* options, int enabled);
qdyn_status qdyn_options_set_eckart_projection(qdyn_options* options, int enabled);
qdyn_status qdyn_options_set_vqe_trace(qdyn_options* options, const char* csv_path);

/* ----- single-point electronic structure ----- */

qdyn_status qdyn_solve(const qdyn_options* options, const qdyn_molecule* mol,
                       qdyn_solution** out);
void qdyn_solution_free(qdyn_solution* solution);
double qdyn_solution_hf_energy(const qdyn_solution* solution);
double qdyn_solution_vqe_energy(const qdyn_solution* solution);
int qdyn_solution_vqe_iterations(const qdyn_solution* solution);
int qdyn_solution_vqe_converged(const qdyn_solution* solution);
int qdyn_solution_qubit_count(const qdyn_solution* solution);
int qdyn_solution_term_count(const qdyn_solution* solution);
int qdyn_solution_parameter_count(const qdyn_solution* solution);
/* Exact diagonalization in the molecule's particle sector. */
qdyn_status qdyn_solution_exact_energy(const qdyn_solution* solution, double* out);
/* Forces at the solution geometry, 3N entries, Ha/Bohr. */
qdyn_status qdyn_solution_forces(const qdyn_solution* solution, double* forces);
qdyn_status qdyn_solution_hamiltonian_text(const qdyn_solution* solution, char* buffer,
                                           size_t capacity, size_t* required);
qdyn_status qdyn_solution_write_hamiltonian(const qdyn_solution* solution,
                                            const char* path);
/* Debug dump of the MO coefficients and orbital energies. */
qdyn_status qdyn_solution_write_mos(const qdyn_solution* solution, const char* path);

/* Debug dump of S/T/V/ERI over the molecule's STO-3G basis. */
qdyn_status qdyn_dump_integrals(const qdyn_molecule* mol, const char* path);

/* ----- geometry optimization ----- */

qdyn_status qdyn_optimize(const qdyn_options* options, const qdyn_molecule* mol,
                          int max_steps, qdyn_molecule** out);

/* ----- vibrational analysis ----- */

/* approximate = 0: full Hessian (re-optimized VQE energies);
 * approximate = 1: frozen-state correlated-sampling Hessian.
 * hessian_dump_path, when non-NULL, receives the Hessian as a plain-text
 * matrix. */
qdyn_status qdyn_frequencies(const qdyn_options* options, const qdyn_molecule* mol,
                             int approximate, const char* hessian_dump_path,
                             qdyn_modes** out);
void qdyn_modes_free(qdyn_modes* modes);
int qdyn_modes_count(const qdyn_modes* modes);
qdyn_status qdyn_modes_frequencies(const qdyn_modes* modes, double* cm1);
/* Distinct imaginary frequency values (degenerate pairs count once). */
int qdyn_modes_imaginary_count(const qdyn_modes* modes);
qdyn_status qdyn_modes_vector(const qdyn_modes* modes, int mode, double* components);

/* ----- molecular dynamics ----- */

qdyn_status qdyn_run_md(const qdyn_options* options, const qdyn_molecule* mol,
                        const double* velocities_angstrom_per_fs, double dt_fs,
                        int n_steps, qdyn_trajectory** out);
void qdyn_trajectory_free(qdyn_trajectory* trajectory);
int qdyn_trajectory_frame_count(const qdyn_trajectory* trajectory);
int qdyn_trajectory_truncated(const qdyn_trajectory* trajectory);
const char* qdyn_trajectory_diagnostic(const qdyn_trajectory* trajectory);
double qdyn_trajectory_time(const qdyn_trajectory* trajectory, int frame);
double qdyn_trajectory_potential(const qdyn_trajectory* trajectory, int frame);
double qdyn_trajectory_kinetic(const qdyn_trajectory* trajectory, int frame);
double qdyn_trajectory_total(const qdyn_trajectory* trajectory, int frame);
int qdyn_trajectory_vqe_iterations(const qdyn_trajectory* trajectory, int frame);
qdyn_status qdyn_trajectory_molecule(const qdyn_trajectory* trajectory, int frame,
                                     qdyn_molecule** out);
qdyn_status qdyn_trajectory_write_xyz(const qdyn_trajectory* trajectory,
                                      const char* path);
qdyn_status qdyn_trajectory_write_csv(const qdyn_trajectory* trajectory,
                                      const char* path);

/* ----- distance scans ----- */

qdyn_status qdyn_scan_distance(const qdyn_options* options, const qdyn_molecule* mol,
                               int moving_atom, int target_atom, int axis,
                               const double* distances_angstrom, int n_points,
                               int with_oracle, int with_forces, qdyn_scan** out);
void qdyn_scan_free(qdyn_scan* scan);
int qdyn_scan_point_count(const qdyn_scan* scan);
double qdyn_scan_distance_at(const qdyn_scan* scan, int point);
double qdyn_scan_hf_energy(const qdyn_scan* scan, int point);
double qdyn_scan_vqe_energy(const qdyn_scan* scan, int point);
double qdyn_scan_exact_energy(const qdyn_scan* scan, int point); /* NaN w/o oracle */
double qdyn_scan_force(const qdyn_scan* scan, int point);
double qdyn_scan_exact_force(const qdyn_scan* scan, int point);  /* NaN w/o oracle */
int qdyn_scan_vqe_iterations(const qdyn_scan* scan, int point);

/* ----- transition-state search ----- */

qdyn_status qdyn_ts_search(const qdyn_options* options, const qdyn_molecule* mol,
                           int max_steps, qdyn_molecule** geometry_out,
                           qdyn_modes** modes_out, double* max_gradient_out,
                           int* iterations_out);

#ifdef __cplusplus
}
#endif

#endif /* QDYN_H_ */
