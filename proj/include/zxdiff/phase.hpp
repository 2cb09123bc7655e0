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

#include <map>
#include <set>
#include <string>

namespace zxdiff {

using Assignment = std::map<std::string, double>;

// A linear phase  sum_v k_v * v + q * pi/4 (+ offset).
//
// The constant part is kept exact as a count of quarter turns mod 8. The
// floating offset (radians, in [0, 2pi)) only appears after substituting a
// value that is not a multiple of pi/4.
class PhaseExpr {
 public:
  PhaseExpr() = default;

  static PhaseExpr quarter_turns(int q);
  static PhaseExpr variable(const std::string& name, int k = 1);
  // Radians; folded into quarter turns when within 1e-9 of a multiple of pi/4.
  static PhaseExpr radians(double r);

  const std::map<std::string, int>& coeffs() const { return coeffs_; }
  int quarter() const { return quarter_; }
  double offset() const { return offset_; }
  int coeff(const std::string& var) const;
  std::set<std::string> variables() const;

  bool is_constant() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && quarter_ == 0 && offset_ == 0.0; }
  bool depends_on(const std::string& var) const { return coeffs_.count(var) > 0; }

  // Sum of coefficients times assigned values plus the constant, in radians.
  double value(const Assignment& a) const;
  double constant_radians() const;
  // Replaces every variable bound in `a`; unbound variables stay symbolic.
  PhaseExpr substitute(const Assignment& a) const;
  PhaseExpr without(const std::string& var) const;

  PhaseExpr operator+(const PhaseExpr& o) const;
  PhaseExpr operator-(const PhaseExpr& o) const;
  PhaseExpr operator-() const;
  PhaseExpr scaled(int k) const;

  bool operator==(const PhaseExpr& o) const;
  bool operator!=(const PhaseExpr& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void normalize();

  std::map<std::string, int> coeffs_;
  int quarter_ = 0;
  double offset_ = 0.0;
};

}  // namespace zxdiff
