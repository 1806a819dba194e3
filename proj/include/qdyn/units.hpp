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

// Everything inside the library runs in Hartree atomic units; Angstrom, fs,
// amu and cm^-1 appear only at I/O boundaries.

namespace qdyn::units {

inline constexpr double kBohrPerAngstrom = 1.8897259886;
inline constexpr double kAtomicTimePerFs = 41.341374576;
inline constexpr double kElectronMassPerAmu = 1822.888486;
inline constexpr double kWavenumberPerHartree = 219474.6313632;

constexpr double angstrom_to_bohr(double a) { return a * kBohrPerAngstrom; }
constexpr double bohr_to_angstrom(double b) { return b / kBohrPerAngstrom; }
constexpr double fs_to_atomic_time(double t) { return t * kAtomicTimePerFs; }
constexpr double atomic_time_to_fs(double t) { return t / kAtomicTimePerFs; }
constexpr double amu_to_electron_mass(double m) { return m * kElectronMassPerAmu; }
constexpr double electron_mass_to_amu(double m) { return m / kElectronMassPerAmu; }
constexpr double hartree_to_wavenumber(double e) { return e * kWavenumberPerHartree; }
constexpr double wavenumber_to_hartree(double w) { return w / kWavenumberPerHartree; }

/// Velocity conversion used by the MD front end (initial velocities are given
/// in Angstrom/fs, propagation runs in Bohr per atomic time unit).
constexpr double angstrom_per_fs_to_au(double v) {
  return v * kBohrPerAngstrom / kAtomicTimePerFs;
}
constexpr double au_velocity_to_angstrom_per_fs(double v) {
  return v * kAtomicTimePerFs / kBohrPerAngstrom;
}

}  // namespace qdyn::units
