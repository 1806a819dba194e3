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

namespace qdyn {

/// Fills out[0..n_max] with the Boys function F_n(x) = int_0^1 t^{2n}
/// exp(-x t^2) dt. Series plus downward recursion below x = 35, asymptotic
/// form with upward recursion above; stable for 0 <= x <= 1e3 and beyond.
void boys_function(int n_max, double x, double* out);

double boys_f0(double x);

}  // namespace qdyn
