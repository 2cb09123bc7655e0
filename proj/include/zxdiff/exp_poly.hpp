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

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zxdiff/phase.hpp"

namespace zxdiff {

using cd = std::complex<double>;

// exp(i * sum_v k_v v), stored as the sorted list of non-zero (v, k_v).
using Monomial = std::vector<std::pair<std::string, int>>;

// Finite sum  sum_j c_j exp(i * <k_j, vars>)  with complex coefficients.
// Constant phases are folded into the coefficients.
class ExpPoly {
 public:
  ExpPoly() = default;
  ExpPoly(cd c);  // NOLINT: constants convert implicitly
  ExpPoly(double c) : ExpPoly(cd(c, 0.0)) {}  // NOLINT

  static ExpPoly exp_i(const PhaseExpr& phase);

  const std::map<Monomial, cd>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  ExpPoly& operator*=(cd c);
  ExpPoly operator+(const ExpPoly& o) const;
  ExpPoly operator-(const ExpPoly& o) const;
  ExpPoly operator*(const ExpPoly& o) const;
  ExpPoly operator*(cd c) const;
  ExpPoly operator-() const;

  ExpPoly diff(const std::string& var) const;
  cd eval(const Assignment& a) const;
  // Substitutes the bound variables, keeps the rest symbolic.
  ExpPoly substitute(const Assignment& a) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, cd c);
  std::map<Monomial, cd> terms_;
};

}  // namespace zxdiff
