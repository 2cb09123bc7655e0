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

#include "zxdiff/gadgets.hpp"

#include <algorithm>

#include "zxdiff/errors.hpp"

namespace zxdiff {

namespace {
PhaseExpr q(int k) { return PhaseExpr::quarter_turns(k); }
}  // namespace

Term sqrt2() { return compose(x_spider(1, 0), z_spider(0, 1)); }

// X(3,0,0) . Z(0,3,0) = 2^{-3/2} * 2
Term inv_sqrt2() { return compose(x_spider(3, 0), z_spider(0, 3)); }

Term sqrt2_power(int k) {
  return k >= 0 ? tensor_power(sqrt2(), k) : tensor_power(inv_sqrt2(), -k);
}

Term zero_scalar() { return z_spider(0, 0, q(4)); }

// <0|+e^{i theta}<1| applied to sqrt2 |1>
Term phase_scalar(const PhaseExpr& theta) {
  return tensor(inv_sqrt2(), compose(z_spider(1, 0, theta), x_spider(0, 1, q(4))));
}

Term ket0() { return tensor(inv_sqrt2(), x_spider(0, 1)); }
Term ket1() { return tensor(inv_sqrt2(), x_spider(0, 1, q(4))); }
Term bra0() { return tensor(inv_sqrt2(), x_spider(1, 0)); }
Term bra1() { return tensor(inv_sqrt2(), x_spider(1, 0, q(4))); }

Term ones(int k) { return tensor_power(z_spider(0, 1), k); }

Term not_gate() { return x_spider(1, 1, q(4)); }
Term z_gate() { return z_spider(1, 1, q(4)); }

Term cnot() {
  Term body = compose(tensor(identity(), x_spider(2, 1)),
                      tensor(z_spider(1, 2), identity()));
  return tensor(sqrt2(), body);
}

Term triangle_inverse() { return sequence({z_gate(), triangle(), z_gate()}); }

Term and_gate() {
  return sequence({tensor(triangle(), triangle()), z_spider(2, 1),
                   triangle_inverse()});
}

Term nand_effect(int k) {
  if (k < 1) throw InvalidArity("nand_effect needs at least one input");
  return compose(z_spider(k, 0, q(4)), tensor_power(triangle(), k));
}

// Relation over (x, b) -> (x, z) that vanishes exactly on z=1,b=0 and on
// x=0,b=1,z=0.
Term ctriangle() {
  // wires after copying: x_out x' b1 b2 z_out z1 z2
  Term copies = tensor_all({z_spider(1, 2), z_spider(1, 2), z_spider(0, 3)});
  // reorder to x_out z_out z1 b1 x' b2 z2
  Term order = permutation({0, 4, 5, 2, 1, 3, 6});
  Term c1 = compose(nand_effect(2), tensor(identity(), not_gate()));
  Term c2 = compose(nand_effect(3), tensor_all({not_gate(), identity(), not_gate()}));
  return sequence({copies, order, tensor_all({identities(2), c1, c2})});
}

Term on_wires(const Term& gate, const std::vector<int>& wires, int n) {
  const int k = static_cast<int>(wires.size());
  if (gate.inputs() != k || gate.outputs() != k)
    throw WrongArity("on_wires expects a k -> k gate");
  // Bring the chosen wires to the front in order, apply, move them back.
  std::vector<int> front(wires);
  for (int w = 0; w < n; ++w)
    if (std::find(wires.begin(), wires.end(), w) == wires.end()) front.push_back(w);
  if (static_cast<int>(front.size()) != n) throw InvalidArity("bad wire list");
  std::vector<int> back(n);
  for (int j = 0; j < n; ++j) back[front[j]] = j;
  return sequence({permutation(front), tensor(gate, identities(n - k)),
                   permutation(back)});
}

}  // namespace zxdiff
