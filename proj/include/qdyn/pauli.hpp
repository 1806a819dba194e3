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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace qdyn {

/// A word over {I,X,Y,Z} on n qubits, stored as X/Z bit masks (bit k = qubit
/// k). The text form writes qubit 0 leftmost, e.g. "ZIII" is Z on qubit 0 of
/// four. Supports up to 32 qubits; the simulator bounds are far lower.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n_qubits) : n_(n_qubits) {}
  static PauliString from_masks(int n_qubits, uint32_t x, uint32_t z);
  static PauliString from_word(std::string_view word);

  int n_qubits() const { return n_; }
  uint32_t x_mask() const { return x_; }
  uint32_t z_mask() const { return z_; }
  bool is_identity() const { return x_ == 0 && z_ == 0; }

  char letter(int k) const;
  std::string word() const;

  /// Letter rank at qubit k with I < X < Y < Z; the basis of the canonical
  /// term ordering used everywhere.
  int rank(int k) const {
    const int x = (x_ >> k) & 1;
    const int z = (z_ >> k) & 1;
    return x ? (z ? 2 : 1) : (z ? 3 : 0);
  }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_;
  }

  /// Strict weak order: qubit count, then lexicographic on letters
  /// (qubit 0 first, I < X < Y < Z).
  struct Less {
    bool operator()(const PauliString& a, const PauliString& b) const;
  };

 private:
  uint32_t x_ = 0;
  uint32_t z_ = 0;
  int n_ = 0;
};

/// Real-weighted sum of Pauli strings on a fixed qubit count. Terms live in
/// an ordered map, so every iteration is in canonical order and all
/// downstream reductions are deterministic.
class PauliSum {
 public:
  using TermMap = std::map<PauliString, double, PauliString::Less>;

  PauliSum() = default;
  explicit PauliSum(int n_qubits) : n_(n_qubits) {}

  int n_qubits() const { return n_; }
  size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add(const PauliString& p, double coeff);
  double coefficient(const PauliString& p) const;
  bool contains(const PauliString& p) const { return terms_.count(p) > 0; }
  double identity_coefficient() const;

  /// Removes terms with |coeff| below threshold.
  void prune(double threshold);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(double scale);

  /// One "coefficient word" line per term, canonical order.
  std::string to_text() const;
  static PauliSum from_text(std::string_view text);

 private:
  TermMap terms_;
  int n_ = 0;
};

}  // namespace qdyn
