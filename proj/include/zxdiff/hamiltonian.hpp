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

#include <map>
#include <string>
#include <utility>

#include "zxdiff/semantics.hpp"
#include "zxdiff/term.hpp"

namespace zxdiff {

// H = sum_i h_i Z_i + sum_{i<j} h_ij Z_i Z_j with integer coefficients.
// Qubits are 0-based here; qubit 0 is the most significant bit.
struct IsingHamiltonian {
  int n = 0;
  std::map<int, int> linear;
  std::map<std::pair<int, int>, int> quadratic;

  // Throws InvalidArity on out-of-range or unordered indices.
  void validate() const;
};

CMatrix ising_matrix(const IsingHamiltonian& h);
// e^{i var H}: linear terms in ascending qubit order, then quadratic terms in
// lexicographic order.
Term evolution_diagram(const IsingHamiltonian& h, const std::string& var = "beta");
// -i times the var-derivative of the evolution at var = 0; equals H.
Term hamiltonian_diagram(const IsingHamiltonian& h);
// <psi| H |psi> for a state psi : 0 -> n.
Term expectation(const Term& state, const IsingHamiltonian& h);

}  // namespace zxdiff
