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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "zxdiff/errors.hpp"
#include "zxdiff/gadgets.hpp"
#include "zxdiff/hamiltonian.hpp"
#include "zxdiff/semantics.hpp"

namespace zxdiff {
namespace {

const cd kI(0, 1);

IsingHamiltonian example() { return {2, {{0, 1}, {1, -1}}, {{{0, 1}, 1}}}; }

CMatrix diag(std::vector<cd> d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

TEST(Ising, Matrix) {
  EXPECT_LT(max_abs_diff(ising_matrix(example()), diag({1, 1, -3, 1})), 1e-15);
  EXPECT_LT(max_abs_diff(ising_matrix({1, {{0, 1}}, {}}), diag({1, -1})), 1e-15);
  EXPECT_LT(max_abs_diff(ising_matrix({2, {}, {}}), diag({0, 0, 0, 0})), 1e-15);
}

TEST(Ising, Validation) {
  EXPECT_THROW((IsingHamiltonian{2, {{2, 1}}, {}}.validate()), Error);
  EXPECT_THROW((IsingHamiltonian{2, {}, {{{1, 0}, 1}}}.validate()), Error);
  EXPECT_THROW(ising_matrix({13, {}, {}}), TooLarge);
}

TEST(Ising, EvolutionMatchesExponential) {
  for (double b : {0.0, 0.3, 2.0}) {
    CMatrix u = evaluate(evolution_diagram({1, {{0, 1}}, {}}), {{"beta", b}});
    EXPECT_LT(max_abs_diff(u, diag({std::exp(kI * b), std::exp(-kI * b)})), 1e-12);
    CMatrix v = evaluate(evolution_diagram(example()), {{"beta", b}});
    std::vector<cd> want;
    for (double e : {1.0, 1.0, -3.0, 1.0}) want.push_back(std::exp(kI * b * e));
    EXPECT_LT(max_abs_diff(v, diag(want)), 1e-12);
  }
}

TEST(Ising, UnitaryGroup) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> h(-2, 2);
  std::uniform_real_distribution<double> angle(-3, 3);
  for (int i = 0; i < 5; ++i) {
    IsingHamiltonian H{3, {{0, h(rng)}, {2, h(rng)}}, {{{0, 1}, h(rng)}, {{1, 2}, h(rng)}}};
    Term u = evolution_diagram(H);
    double b1 = angle(rng), b2 = angle(rng);
    CMatrix u1 = evaluate(u, {{"beta", b1}}), u2 = evaluate(u, {{"beta", b2}});
    EXPECT_LT(max_abs_diff(matmul(u1, u2), evaluate(u, {{"beta", b1 + b2}})), 1e-9);
    EXPECT_LT(max_abs_diff(matmul(u1, adjoint(u1)), CMatrix::identity(8)), 1e-9);
    CMatrix gen = scale(finite_diff(u, "beta", {{"beta", 0.0}}, 1e-6), -kI);
    EXPECT_LT(max_abs_diff(gen, ising_matrix(H)), 1e-4);
  }
}

TEST(Ising, HamiltonianDiagram) {
  EXPECT_LT(max_abs_diff(evaluate(hamiltonian_diagram(example()), {}), diag({1, 1, -3, 1})),
            1e-9);
  EXPECT_LT(max_abs_diff(evaluate(hamiltonian_diagram({1, {{0, 1}}, {}}), {}), diag({1, -1})),
            1e-9);
}

TEST(Ising, Expectation) {
  IsingHamiltonian z{1, {{0, 1}}, {}};
  EXPECT_NEAR(std::abs(scalar_value(expectation(ket0(), z), {}) - 1.0), 0, 1e-9);
  EXPECT_NEAR(std::abs(scalar_value(expectation(ket1(), z), {}) + 1.0), 0, 1e-9);
  EXPECT_NEAR(std::abs(scalar_value(expectation(ket0(), {1, {}, {}}), {})), 0, 1e-9);
  // unnormalised state, compared with the plain vector product
  Term s = x_beta(1, 0, "beta");
  Assignment a{{"beta", std::numbers::pi / 2}};
  CMatrix v = evaluate(s, a);
  CMatrix want = matmul(adjoint(v), matmul(ising_matrix(z), v));
  EXPECT_NEAR(std::abs(scalar_value(expectation(s, z), a) - want.at(0, 0)), 0, 1e-9);
  EXPECT_THROW(expectation(x_beta(2, 0, "beta"), z), Error);
}

}  // namespace
}  // namespace zxdiff
