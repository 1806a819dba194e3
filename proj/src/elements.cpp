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

#include "qdyn/elements.hpp"

#include <array>

#include "qdyn/errors.hpp"

namespace qdyn {

namespace {

// Standard atomic weights (CIAAW 2021 abridged) and most-abundant-isotope
// masses (AME2020).
constexpr std::array<ElementInfo, 18> kElements = {{
    {"H", 1, 1.008, 1.00782503207},
    {"He", 2, 4.0026, 4.002603254},
    {"Li", 3, 6.94, 7.016003437},
    {"Be", 4, 9.0121831, 9.012183065},
    {"B", 5, 10.81, 11.00930536},
    {"C", 6, 12.011, 12.0},
    {"N", 7, 14.007, 14.0030740048},
    {"O", 8, 15.999, 15.9949146196},
    {"F", 9, 18.998403163, 18.99840316273},
    {"Ne", 10, 20.1797, 19.9924401762},
    {"Na", 11, 22.98976928, 22.989769282},
    {"Mg", 12, 24.305, 23.985041697},
    {"Al", 13, 26.9815385, 26.98153853},
    {"Si", 14, 28.085, 27.97692653465},
    {"P", 15, 30.973761998, 30.97376199842},
    {"S", 16, 32.06, 31.9720711744},
    {"Cl", 17, 35.45, 34.968852682},
    {"Ar", 18, 39.95, 39.9623831237},
}};

}  // namespace

const ElementInfo* find_element(std::string_view symbol) {
  for (const auto& e : kElements) {
    if (e.symbol == symbol) return &e;
  }
  return nullptr;
}

const ElementInfo& element_by_z(int z) {
  if (z < 1 || z > static_cast<int>(kElements.size())) {
    fail(ErrorCode::invalid_argument,
         "no element data for atomic number " + std::to_string(z));
  }
  return kElements[static_cast<size_t>(z - 1)];
}

}  // namespace qdyn
