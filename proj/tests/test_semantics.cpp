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

#include "support/oracle.hpp"
#include "support/random_terms.hpp"
#include "zxdiff/errors.hpp"
#include "zxdiff/exp_poly.hpp"
#include "zxdiff/gadgets.hpp"
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

TEST(ExpPoly, Algebra) {
  ExpPoly e = ExpPoly::exp_i(kBeta.scaled(2) + PhaseExpr::quarter_turns(2));
  Assignment a{{"beta", 0.3}};
  EXPECT_NEAR(std::abs(e.eval(a) - kI * std::exp(kI * 0.6)), 0, 1e-15);
  EXPECT_NEAR(std::abs(e.diff("beta").eval(a) - 2.0 * kI * e.eval(a)), 0, 1e-14);
  EXPECT_TRUE((e - e).is_zero());
  ExpPoly f = ExpPoly::exp_i(-kBeta);
  EXPECT_NEAR(std::abs((e * f).eval(a) - e.eval(a) * f.eval(a)), 0, 1e-15);
  EXPECT_TRUE(ExpPoly(3.0).diff("beta").is_zero());
  EXPECT_THROW(e.eval({}), UnboundVariable);
}

TEST(ExpPoly, DiffMatchesFiniteDifference) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> k(-3, 3);
  std::uniform_real_distribution<double> x(-2, 2);
  for (int i = 0; i < 50; ++i) {
    ExpPoly p;
    for (int j = 0; j < 3; ++j)
      p += ExpPoly::exp_i(PhaseExpr::variable("beta", k(rng)) + PhaseExpr::variable("g", k(rng))) *
           cd(x(rng), x(rng));
    Assignment a{{"beta", x(rng)}, {"g", x(rng)}};
    Assignment up = a, down = a;
    up["beta"] += 1e-6;
    down["beta"] -= 1e-6;
    cd fd = (p.eval(up) - p.eval(down)) / 2e-6;
    EXPECT_NEAR(std::abs(p.diff("beta").eval(a) - fd), 0, 1e-6);
  }
}

TEST(Semantics, AgreesWithReferenceOnRandomTerms) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    Term t = testing::random_term(rng);
    Assignment a{{"beta", 0.1 + 0.2 * i}};
    EXPECT_LT(oracle::max_diff(oracle::dense(t, a), evaluate(t, a)), 1e-9);
    EXPECT_LT(max_abs_diff(eval(interp(t), a), evaluate(t, a)), 1e-9);
  }
}

TEST(Semantics, Functoriality) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 20; ++i) {
    Term a = testing::random_term(rng), b = testing::random_term(rng);
    Assignment at{{"beta", 0.9}};
    EXPECT_LT(max_abs_diff(evaluate(tensor(a, b), at), kron(evaluate(a, at), evaluate(b, at))),
              1e-9);
    Term c = compose(dagger(a), a);
    EXPECT_LT(max_abs_diff(evaluate(c, at), matmul(adjoint(evaluate(a, at)), evaluate(a, at))),
              1e-9);
  }
}

TEST(Semantics, ShapeFollowsArity) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    Term t = testing::random_term(rng);
    CMatrix m = evaluate(t, {{"beta", 0.0}});
    EXPECT_EQ(m.rows, std::size_t{1} << t.outputs());
    EXPECT_EQ(m.cols, std::size_t{1} << t.inputs());
  }
}

TEST(Semantics, Examples) {
  CMatrix z = eval(interp(z_spider(1, 1, kBeta)), {{"beta", kPi}});
  EXPECT_NEAR(std::abs(z.at(0, 0) - 1.0), 0, 1e-12);
  EXPECT_NEAR(std::abs(z.at(1, 1) + 1.0), 0, 1e-12);
  EXPECT_TRUE(approx_eq(z, z, 0));
  EXPECT_TRUE(approx_eq(evaluate(compose(hadamard(), hadamard()), {}), CMatrix::identity(2), 1e-12));
  EXPECT_LT(max_abs_diff(evaluate(triangle(), {}), triangle_matrix()), 1e-12);
  CMatrix tt = evaluate(compose(triangle(), triangle()), {});
  CMatrix want(2, 2);
  want.data = {1.0, 2.0, 0.0, 1.0};
  EXPECT_LT(max_abs_diff(tt, want), 1e-12);
  CMatrix x = evaluate(x_beta(1, 1, "beta"), {{"beta", 0.0}});
  EXPECT_LT(max_abs_diff(x, column({2, 0, 0, 0})), 1e-12);
}

TEST(Semantics, XBetaAndYBetaVectors) {
  const double s = 1 / std::sqrt(2.0);
  const double b = 0.7;
  cd e = std::exp(kI * b);
  // |+> + e^{ib}|->
  CMatrix x = evaluate(x_beta(1, 0, "beta"), {{"beta", b}});
  EXPECT_LT(max_abs_diff(x, column({s * (1.0 + e), s * (1.0 - e)})), 1e-12);
  // |++> + e^{ib}|+-> + e^{-ib}|-+> + |-->
  CMatrix y = evaluate(y_beta(1, "beta"), {{"beta", b}});
  std::vector<cd> want(4);
  const int pm[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  const cd w[4] = {1.0, e, std::conj(e), 1.0};
  for (int k = 0; k < 4; ++k)
    for (int idx = 0; idx < 4; ++idx) {
      int b0 = idx >> 1, b1 = idx & 1;
      want[idx] += w[k] * 0.5 * double((b0 ? pm[k][0] : 1) * (b1 ? pm[k][1] : 1));
    }
  EXPECT_LT(max_abs_diff(y, column(want)), 1e-12);
  CMatrix y2 = evaluate(y_beta(2, "beta"), {{"beta", kPi}});
  CMatrix y1 = evaluate(y_beta(1, "beta"), {{"beta", kPi}});
  EXPECT_LT(max_abs_diff(y2, kron(y1, y1)), 1e-12);
}

TEST(Semantics, DeltaMatrices) {
  CMatrix d10 = delta_matrix(1, 0);
  EXPECT_EQ(d10.at(0, 0), cd(0.0));
  EXPECT_EQ(d10.at(1, 1), cd(1.0));
  CMatrix d00 = delta_matrix(0, 0);
  EXPECT_EQ(d00.rows, 1u);
  EXPECT_EQ(d00.at(0, 0), cd(0.0));
  CMatrix d11 = delta_matrix(1, 1);
  const double diag[4] = {0, -1, 1, 0};
  for (int i = 0; i < 4; ++i) EXPECT_EQ(d11.at(i, i), cd(diag[i]));
  CMatrix t10 = delta_tilde(1, 0);
  EXPECT_NEAR(t10.at(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(t10.at(0, 1).real(), -0.5, 1e-15);
  EXPECT_THROW(delta_matrix(7, 6), TooLarge);
}

TEST(Semantics, DerivativeOfXBetaIsDiagonalWeight) {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      Term x = x_beta(n, m, "beta");
      Assignment a{{"beta", 0.4}};
      CMatrix lhs = eval(dM(interp(x), "beta"), a);
      CMatrix rhs = scale(matmul(delta_tilde(n, m), evaluate(x, a)), kI);
      EXPECT_LT(max_abs_diff(lhs, rhs), 1e-12) << n << "," << m;
    }
}

TEST(Semantics, ControlledTriangleCases) {
  CMatrix c = ctriangle_matrix();
  CMatrix d = evaluate(ctriangle(), {});
  EXPECT_LT(max_abs_diff(c, d), 1e-12);
  // |01> -> |01>, |11> -> |10> + |11>
  EXPECT_EQ(c.at(1, 1), cd(1.0));
  EXPECT_EQ(c.at(2, 3), cd(1.0));
  EXPECT_EQ(c.at(3, 3), cd(1.0));
  EXPECT_EQ(c.at(0, 0), cd(1.0));
  EXPECT_EQ(c.at(2, 2), cd(1.0));
  EXPECT_EQ(c.at(0, 1), cd(0.0));
}

TEST(Semantics, FiniteDifference) {
  Assignment a{{"beta", 0.7}};
  Term x = x_beta(1, 0, "beta");
  EXPECT_LT(max_abs_diff(finite_diff(x, "beta", a, 1e-6), eval(dM(interp(x), "beta"), a)), 1e-5);
  CMatrix zero = finite_diff(hadamard(), "beta", a);
  for (auto z : zero.data) EXPECT_EQ(z, cd(0.0));
  // i(|+-> - |-+>) at beta = 0
  CMatrix y = finite_diff(y_beta(1, "beta"), "beta", {{"beta", 0.0}}, 1e-6);
  EXPECT_LT(max_abs_diff(y, column({0, -kI, kI, 0})), 1e-5);
}

TEST(Semantics, NegatedPhasesConjugate) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 20; ++i) {
    Term t = testing::random_term(rng);
    Assignment a{{"beta", 0.55}};
    // dagger negates phases and transposes; undo the transpose
    CMatrix d = evaluate(dagger(t), a);
    CMatrix m = evaluate(t, a);
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c)
        EXPECT_NEAR(std::abs(std::conj(m.at(r, c)) - d.at(c, r)), 0, 1e-9);
  }
}

TEST(Semantics, Limits) {
  EXPECT_THROW(interp(tensor_power(z_spider(0, 1), 13)), TooLarge);
  EXPECT_NO_THROW(evaluate(tensor_power(z_spider(0, 1), 14), {}));
}

}  // namespace
}  // namespace zxdiff
