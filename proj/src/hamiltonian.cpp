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

#include "zxdiff/hamiltonian.hpp"

#include <bit>

#include "zxdiff/derivative.hpp"
#include "zxdiff/errors.hpp"
#include "zxdiff/gadgets.hpp"

namespace zxdiff {

void IsingHamiltonian::validate() const {
  if (n < 1) throw InvalidArity("hamiltonian needs at least one qubit");
  if (n > kMaxSymbolicWires / 2) throw TooLarge("too many qubits");
  for (const auto& [i, c] : linear)
    if (i < 0 || i >= n) throw InvalidArity("linear index out of range");
  for (const auto& [ij, c] : quadratic) {
    auto [i, j] = ij;
    if (i < 0 || j >= n || i >= j)
      throw InvalidArity("quadratic indices must satisfy 0 <= i < j < n");
  }
}

CMatrix ising_matrix(const IsingHamiltonian& h) {
  h.validate();
  const std::size_t dim = std::size_t{1} << h.n;
  CMatrix out(dim, dim);
  auto z = [&](std::size_t x, int i) { return ((x >> (h.n - 1 - i)) & 1u) ? -1 : 1; };
  for (std::size_t x = 0; x < dim; ++x) {
    int e = 0;
    for (const auto& [i, c] : h.linear) e += c * z(x, i);
    for (const auto& [ij, c] : h.quadratic) e += c * z(x, ij.first) * z(x, ij.second);
    out.at(x, x) = static_cast<double>(e);
  }
  return out;
}

Term evolution_diagram(const IsingHamiltonian& h, const std::string& var) {
  h.validate();
  const int n = h.n;
  auto rz_on = [&](int wire, int c) {
    Term rz = z_spider(1, 1, PhaseExpr::variable(var, -2 * c));
    return tensor_all({identities(wire), rz, identities(n - wire - 1)});
  };
  Term t = identities(n);
  for (const auto& [i, c] : h.linear) {
    if (c == 0) continue;
    // e^{i c var Z} = e^{i c var} Z(1,1,-2 c var)
    t = compose(tensor(phase_scalar(PhaseExpr::variable(var, c)), rz_on(i, c)), t);
  }
  for (const auto& [ij, c] : h.quadratic) {
    if (c == 0) continue;
    Term cx = on_wires(cnot(), {ij.first, ij.second}, n);
    Term body = sequence({cx, rz_on(ij.second, c), cx});
    t = compose(tensor(phase_scalar(PhaseExpr::variable(var, c)), body), t);
  }
  return t;
}

Term hamiltonian_diagram(const IsingHamiltonian& h) {
  const std::string var = "beta";
  Term d = partial_zx(evolution_diagram(h, var), var);
  return tensor(phase_scalar(PhaseExpr::quarter_turns(6)), substitute(d, {{var, 0.0}}));
}

Term expectation(const Term& state, const IsingHamiltonian& h) {
  if (state.inputs() != 0 || state.outputs() != h.n)
    throw WrongArity("expectation needs a state on " + std::to_string(h.n) + " wires");
  return sequence({state, hamiltonian_diagram(h), dagger(state)});
}

}  // namespace zxdiff
