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

#include <vector>

#include "zxdiff/term.hpp"

namespace zxdiff {

// Scalars (0 -> 0 diagrams).
Term sqrt2();       // X(1,0,0) . Z(0,1,0)
Term inv_sqrt2();   // X(3,0,0) . Z(0,3,0)
Term sqrt2_power(int k);
Term zero_scalar();  // Z(0,0,pi)
// e^{i theta}
Term phase_scalar(const PhaseExpr& theta);

// Normalized computational basis states and effects.
Term ket0();
Term ket1();
Term bra0();
Term bra1();
// |0> + |1>, one per wire.
Term ones(int k);

Term not_gate();  // X(1,1,pi)
Term z_gate();    // Z(1,1,pi)
Term cnot();      // control on the first wire

// [[1,-1],[0,1]]
Term triangle_inverse();
// |x,y> -> |x AND y>
Term and_gate();
// |x_1..x_k> -> 1 - x_1...x_k
Term nand_effect(int k);
// Controlled triangle on (control, target).
Term ctriangle();

// Places a k -> k gate on the given wires of an n-wire register.
Term on_wires(const Term& gate, const std::vector<int>& wires, int n);

}  // namespace zxdiff
