// Copyright 2026 The zxdiff Authors
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
#include <string>
#include <vector>

#include "zxdiff/term.hpp"

namespace zxdiff {

enum class EquationSource { Axiom, Lemma, TriangleDef };

const char* source_name(EquationSource s);

struct EquationCatalogEntry {
  std::string name;
  Term lhs;
  Term rhs;
  EquationSource source;
};

// Axioms at representative arities (with flipped and color-swapped variants
// of the spider, copy and Hadamard rules), closed lemmas and triangle facts.
std::vector<EquationCatalogEntry> equation_catalog();

struct EquationCheck {
  std::string name;
  double max_diff = 0.0;
  bool passed = false;
};

// Compares both sides at `assignments` random points drawn from `seed`.
EquationCheck check_equation(const EquationCatalogEntry& e, std::uint64_t seed,
                             int assignments = 10, double tol = 1e-9);

}  // namespace zxdiff
