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

#include "zxdiff/controlize.hpp"
#include "zxdiff/term.hpp"

namespace zxdiff {

// Controlled derivative: |1> -> vec(d/dvar [[t]]).
ControlledState cderiv(const Term& t, const std::string& var);
// Derivative through the controlled derivative.
Term partial_c(const Term& t, const std::string& var);

// t = d2 . (d1 (x) x_beta(n, m, var)) with var absent from d1 and d2.
struct FactoredForm {
  Term d1;
  Term d2;
  int n = 0;
  int m = 0;
  std::string var;

  Term rebuild() const;
};

FactoredForm factor_beta(const Term& t, const std::string& var);

// Counter over n+m wires: diag(|x^+| - |x^-|) built from controlled
// triangles acting on one ancilla.
Term delta_diagram(int n, int m);
// Derivative of x_beta(n, m, var); requires n + m >= 1.
Term dzx_x(int n, int m, const std::string& var);
// Derivative through the factored form.
Term partial_zx(const Term& t, const std::string& var);

// Derivative of y_beta(k, var), counting each (-var, var) pair in turn.
Term dpair_y(int k, const std::string& var);
// Derivative through the factored form regrouped into (-var, var) pairs.
Term partial_pair(const Term& t, const std::string& var);

}  // namespace zxdiff
