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

#include "zxdiff/phase.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "zxdiff/errors.hpp"

namespace zxdiff {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kQuarter = std::numbers::pi / 4.0;

int mod8(int q) { return ((q % 8) + 8) % 8; }

}  // namespace

PhaseExpr PhaseExpr::quarter_turns(int q) {
  PhaseExpr p;
  p.quarter_ = mod8(q);
  return p;
}

PhaseExpr PhaseExpr::variable(const std::string& name, int k) {
  PhaseExpr p;
  if (k != 0) p.coeffs_[name] = k;
  return p;
}

PhaseExpr PhaseExpr::radians(double r) {
  PhaseExpr p;
  p.offset_ = r;
  p.normalize();
  return p;
}

int PhaseExpr::coeff(const std::string& var) const {
  auto it = coeffs_.find(var);
  return it == coeffs_.end() ? 0 : it->second;
}

std::set<std::string> PhaseExpr::variables() const {
  std::set<std::string> out;
  for (const auto& [v, k] : coeffs_) out.insert(v);
  return out;
}

double PhaseExpr::constant_radians() const { return quarter_ * kQuarter + offset_; }

double PhaseExpr::value(const Assignment& a) const {
  double r = constant_radians();
  for (const auto& [v, k] : coeffs_) {
    auto it = a.find(v);
    if (it == a.end()) throw UnboundVariable(v);
    r += k * it->second;
  }
  return r;
}

PhaseExpr PhaseExpr::substitute(const Assignment& a) const {
  PhaseExpr p;
  p.quarter_ = quarter_;
  p.offset_ = offset_;
  for (const auto& [v, k] : coeffs_) {
    auto it = a.find(v);
    if (it == a.end()) {
      p.coeffs_[v] = k;
    } else {
      p.offset_ += k * it->second;
    }
  }
  p.normalize();
  return p;
}

PhaseExpr PhaseExpr::without(const std::string& var) const {
  PhaseExpr p = *this;
  p.coeffs_.erase(var);
  return p;
}

void PhaseExpr::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
  if (offset_ != 0.0) {
    double turns = offset_ / kQuarter;
    double nearest = std::round(turns);
    if (std::abs(turns - nearest) < 1e-9) {
      quarter_ = mod8(quarter_ + static_cast<int>(std::fmod(nearest, 8.0)));
      offset_ = 0.0;
    } else {
      offset_ = std::fmod(offset_, kTwoPi);
      if (offset_ < 0) offset_ += kTwoPi;
    }
  }
  quarter_ = mod8(quarter_);
}

PhaseExpr PhaseExpr::operator+(const PhaseExpr& o) const {
  PhaseExpr p = *this;
  for (const auto& [v, k] : o.coeffs_) p.coeffs_[v] += k;
  p.quarter_ += o.quarter_;
  p.offset_ += o.offset_;
  p.normalize();
  return p;
}

PhaseExpr PhaseExpr::operator-() const { return scaled(-1); }

PhaseExpr PhaseExpr::operator-(const PhaseExpr& o) const { return *this + (-o); }

PhaseExpr PhaseExpr::scaled(int k) const {
  PhaseExpr p;
  for (const auto& [v, c] : coeffs_) p.coeffs_[v] = c * k;
  p.quarter_ = quarter_ * k;
  p.offset_ = offset_ * k;
  p.normalize();
  return p;
}

bool PhaseExpr::operator==(const PhaseExpr& o) const {
  return coeffs_ == o.coeffs_ && quarter_ == o.quarter_ &&
         std::abs(offset_ - o.offset_) < 1e-12;
}

std::string PhaseExpr::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, k] : coeffs_) {
    if (k < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    if (std::abs(k) != 1) os << std::abs(k) << "*";
    os << v;
    first = false;
  }
  if (quarter_ != 0) {
    if (!first) os << "+";
    static const char* names[] = {"0",    "pi/4",   "pi/2",   "3pi/4",
                                  "pi",   "5pi/4",  "3pi/2",  "7pi/4"};
    os << names[quarter_];
    first = false;
  }
  if (offset_ != 0.0) {
    if (!first) os << "+";
    os << offset_;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace zxdiff
