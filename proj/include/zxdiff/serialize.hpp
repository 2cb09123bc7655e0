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

#include <string>

#include "json.hpp"
#include "zxdiff/hamiltonian.hpp"
#include "zxdiff/semantics.hpp"
#include "zxdiff/term.hpp"

namespace zxdiff {

// Term JSON:
//   {"op":"compose","later":T,"earlier":T}
//   {"op":"tensor","left":T,"right":T}
//   {"op":"gen","kind":"z|x|h|id|swap|cup|cap|empty",
//    "inputs":n,"outputs":m,"phase":{"const_q":k,"coeffs":{"v":c}}}
// Arity and phase fields are only allowed on spiders. "const_rad" carries a
// non pi/4 constant left over from substitution.
nlohmann::json phase_to_json(const PhaseExpr& p);
PhaseExpr phase_from_json(const nlohmann::json& j);
nlohmann::json term_to_json(const Term& t);
Term term_from_json(const nlohmann::json& j);
// Parses text; malformed input raises SyntaxError.
Term parse_term(const std::string& text);
std::string serialize_term(const Term& t);

// [[{"re":..,"im":..}, ...], ...]
nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);
// Entries are lists of {"re","im","exp":{"v":k}} terms.
nlohmann::json param_matrix_to_json(const ParamMatrix& m);

// {"n":2,"linear":{"1":1},"quadratic":{"1,2":-1}} with 1-based qubits.
IsingHamiltonian hamiltonian_from_json(const nlohmann::json& j);
nlohmann::json hamiltonian_to_json(const IsingHamiltonian& h);

std::string to_dot(const Term& t);
std::string to_tikz(const Term& t);

}  // namespace zxdiff
