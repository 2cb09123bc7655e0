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

#include "zxdiff/catalog.hpp"

#include <numbers>
#include <random>

#include "zxdiff/errors.hpp"
#include "zxdiff/gadgets.hpp"
#include "zxdiff/semantics.hpp"

namespace zxdiff {

const char* source_name(EquationSource s) {
  switch (s) {
    case EquationSource::Axiom: return "axiom";
    case EquationSource::Lemma: return "lemma";
    case EquationSource::TriangleDef: return "triangle-def";
  }
  return "?";
}

namespace {

PhaseExpr q(int k) { return PhaseExpr::quarter_turns(k); }
PhaseExpr var(const char* v) { return PhaseExpr::variable(v); }

Term half() { return sqrt2_power(-2); }

// H^{(x)m} . Z(n,m,a) . H^{(x)n}
Term recolor(int n, int m, const PhaseExpr& a) {
  return sequence({tensor_power(hadamard(), n), z_spider(n, m, a),
                   tensor_power(hadamard(), m)});
}

}  // namespace

std::vector<EquationCatalogEntry> equation_catalog() {
  using S = EquationSource;
  std::vector<EquationCatalogEntry> c;
  auto add = [&](std::string name, Term lhs, Term rhs, S s) {
    if (lhs.inputs() != rhs.inputs() || lhs.outputs() != rhs.outputs())
      throw ArityMismatch("catalog entry " + name + " has unequal arities");
    c.push_back({std::move(name), std::move(lhs), std::move(rhs), s});
  };
  const PhaseExpr a = var("alpha"), b = var("beta");

  // Spider fusion along one shared wire.
  add("S1", compose(z_spider(1, 1, a), z_spider(1, 1, b)), z_spider(1, 1, a + b), S::Axiom);
  add("S1-2-2", compose(tensor(identity(), z_spider(2, 1, b)), tensor(z_spider(1, 2, a), identity())),
      z_spider(2, 2, a + b), S::Axiom);
  add("S1-3-3", compose(tensor(z_spider(2, 2, b), identity()), tensor(identity(), z_spider(2, 2, a))),
      z_spider(3, 3, a + b), S::Axiom);
  add("S1-0-3", compose(tensor(z_spider(1, 2, b), identity()), z_spider(0, 2, a)),
      z_spider(0, 3, a + b), S::Axiom);
  add("S2", z_spider(1, 1), identity(), S::Axiom);
  add("E", tensor(sqrt2(), inv_sqrt2()), empty(), S::Axiom);
  add("B1", compose(z_spider(1, 2), x_spider(0, 1)),
      tensor_all({inv_sqrt2(), x_spider(0, 1), x_spider(0, 1)}), S::Axiom);
  add("B1-3", compose(z_spider(1, 3), x_spider(0, 1)),
      tensor_all({half(), x_spider(0, 1), x_spider(0, 1), x_spider(0, 1)}), S::Axiom);
  add("B2", compose(z_spider(1, 2), x_spider(2, 1)),
      tensor(sqrt2(), sequence({tensor(z_spider(1, 2), z_spider(1, 2)),
                                tensor_all({identity(), swap(), identity()}),
                                tensor(x_spider(2, 1), x_spider(2, 1))})),
      S::Axiom);
  add("K", compose(z_spider(1, 2, a), not_gate()),
      tensor(phase_scalar(a), compose(tensor(not_gate(), not_gate()), z_spider(1, 2, -a))),
      S::Axiom);
  add("EU", hadamard(),
      tensor(phase_scalar(q(7)), sequence({z_spider(1, 1, q(2)), x_spider(1, 1, q(2)),
                                           z_spider(1, 1, q(2))})),
      S::Axiom);
  add("H", compose(hadamard(), hadamard()), identity(), S::Axiom);
  for (auto [n, m] : {std::pair{1, 1}, {1, 2}, {2, 1}, {0, 3}, {3, 0}, {1, 0}}) {
    add("H-color-" + std::to_string(n) + "-" + std::to_string(m), recolor(n, m, a),
        x_spider(n, m, a), S::Axiom);
  }
  add("SUP", compose(tensor(z_spider(1, 0, a), z_spider(1, 0, a + q(4))), x_spider(1, 2)),
      tensor_all({z_spider(0, 0, a.scaled(2) + q(4)), half(), x_spider(1, 0)}), S::Axiom);
  // A phase on the control commutes with CNOT.
  add("C", compose(cnot(), tensor(z_spider(1, 1, a), identity())),
      compose(tensor(z_spider(1, 1, a), identity()), cnot()), S::Axiom);
  // The parity of two copies is always zero.
  add("BW", compose(x_spider(2, 1), z_spider(1, 2)),
      tensor_all({half(), z_spider(1, 0), x_spider(0, 1)}), S::Axiom);

  // Flipped and color-swapped variants.
  for (const char* name : {"S1-2-2", "S1-0-3", "B1", "B1-3", "H", "H-color-1-2", "K", "SUP"}) {
    for (const auto& e : std::vector<EquationCatalogEntry>(c)) {
      if (e.name != name) continue;
      add(e.name + "-flipped", dagger(e.lhs), dagger(e.rhs), S::Axiom);
      add(e.name + "-colorswap", color_swap(e.lhs), color_swap(e.rhs), S::Axiom);
    }
  }

  // Closed lemmas.
  add("sqrt-2-sqrt-1-over-2", tensor_all({inv_sqrt2(), inv_sqrt2(), z_spider(0, 0)}), empty(),
      S::Lemma);
  add("phase-scalars", tensor(phase_scalar(a), phase_scalar(b)), phase_scalar(a + b), S::Lemma);
  add("pi-push", compose(z_spider(1, 1, a), not_gate()),
      tensor(phase_scalar(a), compose(not_gate(), z_spider(1, 1, -a))), S::Lemma);
  add("zero-triangle-down", compose(triangle(), x_spider(0, 1)), x_spider(0, 1), S::Lemma);
  add("zero-triangle-up", compose(x_spider(1, 0), triangle()), tensor(sqrt2(), z_spider(1, 0)),
      S::Lemma);
  add("pi-triangle-down", compose(triangle(), x_spider(0, 1, q(4))),
      tensor(sqrt2(), z_spider(0, 1)), S::Lemma);
  add("pi-triangle-up", compose(x_spider(1, 0, q(4)), triangle()), x_spider(1, 0, q(4)),
      S::Lemma);
  add("pi-triangle-push", compose(not_gate(), triangle()),
      compose(dagger(triangle()), not_gate()), S::Lemma);
  add("opposite-triangles", sequence({z_gate(), triangle(), z_gate(), triangle()}), identity(),
      S::Lemma);
  add("two-pi-triangle-is-identity", sequence({triangle(), z_gate(), triangle(), z_gate()}),
      identity(), S::Lemma);
  add("same-direction-triangles-link-removal",
      sequence({z_spider(1, 2), tensor(triangle(), triangle()), z_spider(2, 1)}), triangle(),
      S::Lemma);
  add("tranzistor-swap-legs", compose(and_gate(), swap()), and_gate(), S::Lemma);
  add("controlled-triangle-off", compose(ctriangle(), tensor(ket0(), identity())),
      tensor(ket0(), identity()), S::Lemma);
  add("controlled-triangle-on", compose(ctriangle(), tensor(ket1(), identity())),
      tensor(ket1(), triangle()), S::Lemma);

  // Triangle facts.
  add("triangle-on-one", compose(triangle(), ket1()), z_spider(0, 1),
      S::TriangleDef);
  add("triangle-flip", sequence({not_gate(), dagger(triangle()), not_gate()}), triangle(),
      S::TriangleDef);
  add("triangle-inverse", compose(triangle(), triangle_inverse()), identity(), S::TriangleDef);
  return c;
}

EquationCheck check_equation(const EquationCatalogEntry& e, std::uint64_t seed,
                             int assignments, double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::set<std::string> vars = e.lhs.variables();
  vars.insert(e.rhs.variables().begin(), e.rhs.variables().end());
  EquationCheck r{e.name, 0.0, true};
  for (int i = 0; i < assignments; ++i) {
    Assignment a;
    for (const auto& v : vars) a[v] = angle(rng);
    r.max_diff = std::max(r.max_diff, max_abs_diff(evaluate(e.lhs, a), evaluate(e.rhs, a)));
  }
  r.passed = r.max_diff <= tol;
  return r;
}

}  // namespace zxdiff
