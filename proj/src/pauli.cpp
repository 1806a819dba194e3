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

#include "qdyn/pauli.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qdyn/errors.hpp"

namespace qdyn {

PauliString PauliString::from_masks(int n_qubits, uint32_t x, uint32_t z) {
  if (n_qubits < 0 || n_qubits > 32) {
    fail(ErrorCode::size_limit, "Pauli strings support at most 32 qubits");
  }
  PauliString p(n_qubits);
  const uint32_t mask = (n_qubits == 32) ? 0xffffffffu : ((1u << n_qubits) - 1u);
  p.x_ = x & mask;
  p.z_ = z & mask;
  return p;
}

PauliString PauliString::from_word(std::string_view word) {
  PauliString p(static_cast<int>(word.size()));
  for (size_t k = 0; k < word.size(); ++k) {
    switch (word[k]) {
      case 'I':
        break;
      case 'X':
        p.x_ |= 1u << k;
        break;
      case 'Y':
        p.x_ |= 1u << k;
        p.z_ |= 1u << k;
        break;
      case 'Z':
        p.z_ |= 1u << k;
        break;
      default:
        fail(ErrorCode::parse, std::string("invalid Pauli letter '") + word[k] + "'");
    }
  }
  return p;
}

char PauliString::letter(int k) const {
  static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
  return kLetters[rank(k)];
}

std::string PauliString::word() const {
  std::string w(static_cast<size_t>(n_), 'I');
  for (int k = 0; k < n_; ++k) w[static_cast<size_t>(k)] = letter(k);
  return w;
}

bool PauliString::Less::operator()(const PauliString& a, const PauliString& b) const {
  if (a.n_qubits() != b.n_qubits()) return a.n_qubits() < b.n_qubits();
  for (int k = 0; k < a.n_qubits(); ++k) {
    const int ra = a.rank(k);
    const int rb = b.rank(k);
    if (ra != rb) return ra < rb;
  }
  return false;
}

void PauliSum::add(const PauliString& p, double coeff) {
  if (p.n_qubits() != n_) {
    fail(ErrorCode::invalid_argument, "Pauli string qubit count mismatch");
  }
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0.0) terms_.erase(it);
  } else if (coeff == 0.0) {
    terms_.erase(it);
  }
}

double PauliSum::coefficient(const PauliString& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? 0.0 : it->second;
}

double PauliSum::identity_coefficient() const {
  return coefficient(PauliString(n_));
}

void PauliSum::prune(double threshold) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < threshold) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_ != n_) fail(ErrorCode::invalid_argument, "qubit count mismatch");
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  if (other.n_ != n_) fail(ErrorCode::invalid_argument, "qubit count mismatch");
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(double scale) {
  for (auto& [p, c] : terms_) c *= scale;
  return *this;
}

std::string PauliSum::to_text() const {
  std::ostringstream out;
  char buf[64];
  for (const auto& [p, c] : terms_) {
    std::snprintf(buf, sizeof(buf), "% .12e ", c);
    out << buf << p.word() << "\n";
  }
  return out.str();
}

PauliSum PauliSum::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  PauliSum sum;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    double coeff = 0.0;
    std::string word;
    if (!(ls >> coeff >> word)) fail(ErrorCode::parse, "bad Pauli sum line: " + line);
    const PauliString p = PauliString::from_word(word);
    if (first) {
      sum = PauliSum(p.n_qubits());
      first = false;
    }
    sum.add(p, coeff);
  }
  return sum;
}

}  // namespace qdyn
