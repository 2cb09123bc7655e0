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

#include "support/random_terms.hpp"
#include "zxdiff/controlize.hpp"
#include "zxdiff/derivative.hpp"
#include "zxdiff/errors.hpp"
#include "zxdiff/gadgets.hpp"
#include "zxdiff/hamiltonian.hpp"
#include "zxdiff/semantics.hpp"

namespace zxdiff {
namespace {

constexpr double kPi = std::numbers::pi;
const cd kI(0, 1);
const PhaseExpr kBeta = PhaseExpr::variable("beta");

CMatrix column(std::vector<cd> v) {
  CMatrix m(v.size(), 1);
  m.data = std::move(v);
  return m;
}

CMatrix oracle_derivative(const Term& t, const Assignment& a) {
  return eval(dM(interp(t), "beta"), a);
}

// i e^{ib}|->
CMatrix x_base(double b) {
  const double s = 1 / std::sqrt(2.0);
  cd c = kI * std::exp(kI * b) * s;
  return column({c, -c});
}

TEST(Derivative, VariableFreeGivesZero) {
  Term t = sequence({hadamard(), z_spider(1, 2, PhaseExpr::quarter_turns(3)), swap()});
  for (const Term& d : {partial_c(t, "beta"), partial_zx(t, "beta"), partial_pair(t, "beta")}) {
    CMatrix m = evaluate(d, {});
    for (auto v : m.data) EXPECT_NEAR(std::abs(v), 0, 1e-12);
  }
}

TEST(Derivative, BaseCases) {
  for (double b : {0.0, 0.7, kPi / 2, kPi}) {
    Assignment a{{"beta", b}};
    EXPECT_LT(max_abs_diff(evaluate(partial_c(x_beta(1, 0, "beta"), "beta"), a), x_base(b)), 1e-9);
    EXPECT_LT(max_abs_diff(evaluate(dzx_x(1, 0, "beta"), a), x_base(b)), 1e-9);
    EXPECT_LT(max_abs_diff(evaluate(partial_zx(x_beta(1, 0, "beta"), "beta"), a), x_base(b)),
              1e-9);
    CMatrix y = oracle_derivative(y_beta(1, "beta"), a);
    EXPECT_LT(max_abs_diff(evaluate(dpair_y(1, "beta"), a), y), 1e-9);
    EXPECT_LT(max_abs_diff(evaluate(partial_pair(y_beta(1, "beta"), "beta"), a), y), 1e-9);
  }
}

TEST(Derivative, PairBaseCaseClosedForm) {
  // |+-> and |-+> in the computational basis
  const cd pm[4] = {0.5, -0.5, 0.5, -0.5};
  const cd mp[4] = {0.5, 0.5, -0.5, -0.5};
  for (double b : {0.0, 0.7, kPi / 2, kPi}) {
    cd e = std::exp(kI * b);
    std::vector<cd> want(4);
    for (int k = 0; k < 4; ++k) want[k] = kI * (e * pm[k] - std::conj(e) * mp[k]);
    EXPECT_LT(max_abs_diff(evaluate(dpair_y(1, "beta"), {{"beta", b}}), column(want)), 1e-9);
  }
}

TEST(Derivative, FactorBetaShapes) {
  FactoredForm z = factor_beta(z_spider(1, 1, kBeta.scaled(2)), "beta");
  EXPECT_EQ(z.n, 2);
  EXPECT_EQ(z.m, 0);
  FactoredForm x = factor_beta(x_spider(0, 1, -kBeta), "beta");
  EXPECT_EQ(x.n, 0);
  EXPECT_EQ(x.m, 1);
  FactoredForm h = factor_beta(hadamard(), "beta");
  EXPECT_EQ(h.n + h.m, 0);
  EXPECT_LT(max_abs_diff(evaluate(h.rebuild(), {}), evaluate(hadamard(), {})), 1e-12);
  EXPECT_THROW(dzx_x(0, 0, "beta"), InvalidArity);
}

TEST(Derivative, FactorBetaRebuildsRandomTerms) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  for (int i = 0; i < 30; ++i) {
    Term t = testing::random_dependent_term(rng);
    FactoredForm f = factor_beta(t, "beta");
    EXPECT_FALSE(f.d1.depends_on("beta"));
    EXPECT_FALSE(f.d2.depends_on("beta"));
    for (int k = 0; k < 5; ++k) {
      Assignment a{{"beta", angle(rng)}};
      EXPECT_LT(max_abs_diff(evaluate(f.rebuild(), a), evaluate(t, a)), 1e-9);
    }
  }
}

TEST(Derivative, DeltaDiagramMatchesDiagonal) {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      EXPECT_LT(max_abs_diff(evaluate(delta_diagram(n, m), {}), delta_matrix(n, m)), 1e-9)
          << n << "," << m;
}

TEST(Derivative, DzxMatchesOracle) {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; n + m <= 3; ++m) {
      if (n + m == 0) continue;
      for (double b : {0.0, 1.2}) {
        Assignment a{{"beta", b}};
        CMatrix want =
            scale(matmul(delta_tilde(n, m), evaluate(x_beta(n, m, "beta"), a)), kI);
        EXPECT_LT(max_abs_diff(evaluate(dzx_x(n, m, "beta"), a), want), 1e-9) << n << "," << m;
      }
    }
}

TEST(Derivative, CDerivativeIsControlled) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 10; ++i) {
    Term t = testing::random_dependent_term(rng);
    EXPECT_TRUE(is_controlled_state(cderiv(t, "beta").term()));
  }
}

TEST(Derivative, FourMethodsAgree) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  for (int i = 0; i < 10; ++i) {
    Term t = testing::random_dependent_term(rng);
    Term pc = partial_c(t, "beta"), pz = partial_zx(t, "beta"), pp = partial_pair(t, "beta");
    for (int k = 0; k < 3; ++k) {
      Assignment a{{"beta", angle(rng)}};
      CMatrix want = oracle_derivative(t, a);
      EXPECT_LT(max_abs_diff(evaluate(pc, a), want), 1e-9) << to_string(t);
      EXPECT_LT(max_abs_diff(evaluate(pz, a), want), 1e-9) << to_string(t);
      EXPECT_LT(max_abs_diff(evaluate(pp, a), want), 1e-9) << to_string(t);
      EXPECT_LT(max_abs_diff(finite_diff(t, "beta", a, 1e-6), want), 1e-5);
    }
  }
}

TEST(Derivative, ProductRules) {
  Term a = z_spider(1, 1, kBeta), b = x_spider(1, 1, kBeta.scaled(-1) + PhaseExpr::quarter_turns(1));
  Assignment at{{"beta", 0.45}};
  CMatrix da = evaluate(partial_c(a, "beta"), at), db = evaluate(partial_c(b, "beta"), at);
  CMatrix ea = evaluate(a, at), eb = evaluate(b, at);
  CMatrix tensor_rule = add(kron(da, eb), kron(ea, db));
  EXPECT_LT(max_abs_diff(evaluate(partial_c(tensor(a, b), "beta"), at), tensor_rule), 1e-9);
  CMatrix compose_rule = add(matmul(da, eb), matmul(ea, db));
  EXPECT_LT(max_abs_diff(evaluate(partial_c(compose(a, b), "beta"), at), compose_rule), 1e-9);
}

TEST(Derivative, DecompositionOrderDoesNotMatter) {
  Term a = z_spider(1, 1, kBeta), b = hadamard(), c = x_spider(1, 1, kBeta.scaled(2));
  Term left = compose(compose(a, b), c), right = compose(a, compose(b, c));
  Assignment at{{"beta", 2.1}};
  EXPECT_LT(max_abs_diff(evaluate(partial_c(left, "beta"), at),
                         evaluate(partial_c(right, "beta"), at)),
            1e-9);
}

TEST(Derivative, EvolutionDiagram) {
  IsingHamiltonian h{2, {{0, 1}, {1, -1}}, {{{0, 1}, 1}}};
  Term u = evolution_diagram(h);
  Assignment at{{"beta", 0.3}};
  EXPECT_LT(max_abs_diff(evaluate(partial_zx(u, "beta"), at), oracle_derivative(u, at)), 1e-9);
}

}  // namespace
}  // namespace zxdiff
