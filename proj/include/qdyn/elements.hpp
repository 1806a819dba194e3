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

#include <string_view>

namespace qdyn {

struct ElementInfo {
  std::string_view symbol;    // case-sensitive standard symbol
  int z;                      // atomic number
  double standard_mass_amu;   // standard atomic weight
  double isotope_mass_amu;    // most abundant isotope
};

/// Looks up an element by its case-sensitive symbol; nullptr when unknown.
const ElementInfo* find_element(std::string_view symbol);

/// Element data for atomic number z (1..18); throws for anything else.
const ElementInfo& element_by_z(int z);

}  // namespace qdyn
