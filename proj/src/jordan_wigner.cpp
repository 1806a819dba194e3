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

#include "qdyn/jordan_wigner.hpp"

#include <bit>
#include <cmath>
#include <complex>

#include "qdyn/errors.hpp"

namespace qdyn {

namespace {

// Pauli strings during operator algebra, kept in X/Z mask form with an
// explicit complex weight. Op(x,z) = i^{|x&z|} * X-part * Z-part, which makes
// each qubit's letter exactly I, X, Y or Z.
struct WeightedString {
  uint32_t x, z;
  std::complex<double> w;
};

std::complex<double> phase_i_pow(int k) {
  static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((k % 4) + 4) % 4];
}

WeightedString multiply(const WeightedString& a, const WeightedString& b) {
  const int ya = std::popcount(a.x & a.z);
  const int yb = std::popcount(b.x & b.z);
  const uint32_t x = a.x ^ b.x;
  const uint32_t z = a.z ^ b.z;
  const int yc = std::popcount(x & z);
  const int swaps = std::popcount(a.z & b.x);
  std::complex<double> w = a.w * b.w * phase_i_pow(ya + yb - yc);
  if (swaps % 2 != 0) w = -w;
  return {x, z, w};
}

// (X_p -+ i Y_p)/2 with the Z chain below p; dagger selects the minus sign.
std::array<WeightedString, 2> ladder(int p, bool dagger) {
  const uint32_t chain = (p == 0) ? 0u : ((1u << p) - 1u);
  const uint32_t bit = 1u << p;
  const std::complex<double> iy = dagger ? std::complex<double>(0, -0.5)
                                         : std::complex<double>(0, 0.5);
  return {WeightedString{bit, chain, {0.5, 0.0}},
          WeightedString{bit, chain | bit, iy}};
}

using Accumulator = std::map<PauliString, std::complex<double>, PauliString::Less>;

void accumulate_product(Accumulator& acc, int n_qubits,
                        const std::vector<std::array<WeightedString, 2>>& factors,
                        std::complex<double> scale) {
  // Expand the product of two-term factors (at most 4 -> 16 strings).
  const size_t n_factors = factors.size();
  const size_t combos = size_t{1} << n_factors;
  for (size_t mask = 0; mask < combos; ++mask) {
    WeightedString cur{0, 0, scale};
    for (size_t f = 0; f < n_factors; ++f) {
      cur = multiply(cur, factors[f][(mask >> f) & 1]);
    }
    if (cur.w == std::complex<double>(0, 0)) continue;
    acc[PauliString::from_masks(n_qubits, cur.x, cur.z)] += cur.w;
  }
}

}  // namespace

PauliSum jordan_wigner(const SpinOrbitalIntegrals& soi, double prune_threshold) {
  const int n = soi.n_spin_orbitals;
  if (n > 24) {
    fail(ErrorCode::size_limit,
         "Jordan-Wigner mapping limited to 24 spin orbitals, got " + std::to_string(n));
  }

  Accumulator acc;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const double h = soi.h1(p, q);
      if (h == 0.0) continue;
      accumulate_product(acc, n, {ladder(p, true), ladder(q, false)}, {h, 0.0});
    }
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const double h = soi.h2_at(p, q, r, s);
          if (h == 0.0) continue;
          accumulate_product(
              acc, n,
              {ladder(p, true), ladder(q, true), ladder(r, false), ladder(s, false)},
              {0.5 * h, 0.0});
        }

  PauliSum sum(n);
  for (const auto& [str, w] : acc) {
    if (std::abs(w.imag()) > 1e-10) {
      fail(ErrorCode::invalid_argument,
           "non-Hermitian tensors: imaginary residue " + std::to_string(w.imag()) +
               " on " + str.word());
    }
    if (std::abs(w.real()) >= prune_threshold) sum.add(str, w.real());
  }
  sum.add(PauliString(n), soi.scalar_offset);
  sum.prune(prune_threshold);
  return sum;
}

PauliSum delta_hamiltonian(const PauliSum& h_plus, const PauliSum& h_minus,
                           double prune_threshold) {
  if (h_plus.n_qubits() != h_minus.n_qubits()) {
    fail(ErrorCode::invalid_argument, "delta_hamiltonian: qubit count mismatch");
  }
  PauliSum delta = h_plus;
  delta -= h_minus;
  delta.prune(prune_threshold);
  return delta;
}

DeltaSplit split_reuse_extra(const PauliSum& h_plus, const PauliSum& h_minus,
                             const PauliSum& reference, double prune_threshold) {
  if (h_plus.n_qubits() != reference.n_qubits() ||
      h_minus.n_qubits() != reference.n_qubits()) {
    fail(ErrorCode::invalid_argument, "split_reuse_extra: qubit count mismatch");
  }
  DeltaSplit split;
  split.extra = PauliSum(reference.n_qubits());
  for (const auto& [p, c] : h_plus.terms()) {
    if (reference.contains(p)) {
      split.reuse_plus.emplace_back(c, p);
    } else {
      split.extra.add(p, c);
    }
  }
  for (const auto& [p, c] : h_minus.terms()) {
    if (reference.contains(p)) {
      split.reuse_minus.emplace_back(c, p);
    } else {
      split.extra.add(p, -c);
    }
  }
  split.extra.prune(prune_threshold);
  return split;
}

DeltaSplit split_reuse_extra(const PauliSum& delta, const PauliSum& reference) {
  if (delta.n_qubits() != reference.n_qubits()) {
    fail(ErrorCode::invalid_argument, "split_reuse_extra: qubit count mismatch");
  }
  DeltaSplit split;
  split.extra = PauliSum(reference.n_qubits());
  for (const auto& [p, c] : delta.terms()) {
    if (reference.contains(p)) {
      split.reuse_plus.emplace_back(c, p);
    } else {
      split.extra.add(p, c);
    }
  }
  return split;
}

double reuse_energy(const DeltaSplit& split, const PauliSum::TermMap& expectations) {
  auto lookup = [&](const PauliString& p) {
    const auto it = expectations.find(p);
    if (it == expectations.end()) {
      fail(ErrorCode::internal, "missing cached expectation for " + p.word());
    }
    return it->second;
  };

  // Merge the plus and minus lists string-wise so each contribution enters as
  // (c_plus - c_minus) * P_alpha; the two raw sums individually are orders of
  // magnitude larger than their difference. Both lists are in canonical order.
  double e = 0.0;
  size_t a = 0, b = 0;
  PauliString::Less less;
  while (a < split.reuse_plus.size() || b < split.reuse_minus.size()) {
    if (b == split.reuse_minus.size() ||
        (a < split.reuse_plus.size() &&
         less(split.reuse_plus[a].second, split.reuse_minus[b].second))) {
      e += split.reuse_plus[a].first * lookup(split.reuse_plus[a].second);
      ++a;
    } else if (a == split.reuse_plus.size() ||
               less(split.reuse_minus[b].second, split.reuse_plus[a].second)) {
      e -= split.reuse_minus[b].first * lookup(split.reuse_minus[b].second);
      ++b;
    } else {
      e += (split.reuse_plus[a].first - split.reuse_minus[b].first) *
           lookup(split.reuse_plus[a].second);
      ++a;
      ++b;
    }
  }
  return e;
}

std::vector<std::pair<PauliString, double>> jw_excitation_generator(
    const FermionicExcitation& ex, int n_qubits) {
  Accumulator acc;
  if (ex.is_double()) {
    // a+_a a+_b a_j a_i - a+_i a+_j a_b a_a
    accumulate_product(acc, n_qubits,
                       {ladder(ex.a, true), ladder(ex.b, true), ladder(ex.j, false),
                        ladder(ex.i, false)},
                       {1.0, 0.0});
    accumulate_product(acc, n_qubits,
                       {ladder(ex.i, true), ladder(ex.j, true), ladder(ex.b, false),
                        ladder(ex.a, false)},
                       {-1.0, 0.0});
  } else {
    accumulate_product(acc, n_qubits, {ladder(ex.a, true), ladder(ex.i, false)},
                       {1.0, 0.0});
    accumulate_product(acc, n_qubits, {ladder(ex.i, true), ladder(ex.a, false)},
                       {-1.0, 0.0});
  }

  std::vector<std::pair<PauliString, double>> gens;
  for (const auto& [str, w] : acc) {
    if (std::abs(w.real()) > 1e-14) {
      fail(ErrorCode::internal, "excitation generator not anti-Hermitian");
    }
    if (std::abs(w.imag()) > 1e-14) gens.emplace_back(str, w.imag());
  }
  return gens;
}

}  // namespace qdyn
