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

#include "qdyn/boys.hpp"

#include <cmath>
#include <numbers>

#include "qdyn/errors.hpp"

namespace qdyn {

namespace {

constexpr double kSeriesCutoff = 35.0;

// F_n(x) by the convergent series e^{-x} sum_k (2x)^k / (2n+1)(2n+3)...(2n+2k+1).
double boys_series(int n, double x) {
  const double ex = std::exp(-x);
  double term = 1.0 / (2.0 * n + 1.0);
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= 2.0 * x / (2.0 * n + 2.0 * k + 1.0);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return ex * sum;
}

}  // namespace

void boys_function(int n_max, double x, double* out) {
  if (n_max < 0 || x < 0.0) {
    fail(ErrorCode::invalid_argument, "boys_function: bad arguments");
  }
  if (x < kSeriesCutoff) {
    out[n_max] = boys_series(n_max, x);
    const double ex = std::exp(-x);
    for (int n = n_max; n > 0; --n) {
      out[n - 1] = (2.0 * x * out[n] + ex) / (2.0 * n - 1.0);
    }
  } else {
    // Asymptotic region: the e^{-x} corrections are below double precision,
    // so upward recursion is stable.
    const double ex = (x > 750.0) ? 0.0 : std::exp(-x);
    out[0] = 0.5 * std::sqrt(std::numbers::pi / x);
    for (int n = 0; n < n_max; ++n) {
      out[n + 1] = ((2.0 * n + 1.0) * out[n] - ex) / (2.0 * x);
    }
  }
}

double boys_f0(double x) {
  double f;
  boys_function(0, x, &f);
  return f;
}

}  // namespace qdyn
