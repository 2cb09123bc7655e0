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

#include "zxdiff/exp_poly.hpp"

#include <cmath>
#include <sstream>

#include "zxdiff/errors.hpp"

namespace zxdiff {

namespace {

constexpr double kPrune = 1e-15;

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      int k = a[i].second + b[j].second;
      if (k != 0) out.emplace_back(a[i].first, k);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ExpPoly::ExpPoly(cd c) {
  if (std::abs(c) > kPrune) terms_[{}] = c;
}

ExpPoly ExpPoly::exp_i(const PhaseExpr& phase) {
  ExpPoly p;
  Monomial m(phase.coeffs().begin(), phase.coeffs().end());
  p.terms_[m] = std::polar(1.0, phase.constant_radians());
  return p;
}

void ExpPoly::add_term(const Monomial& m, cd c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) <= kPrune) terms_.erase(it);
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExpPoly& ExpPoly::operator*=(cd c) {
  if (std::abs(c) <= kPrune) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (std::abs(it->second) <= kPrune) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
  ExpPoly r = *this;
  r += o;
  return r;
}

ExpPoly ExpPoly::operator-(const ExpPoly& o) const {
  ExpPoly r = *this;
  r -= o;
  return r;
}

ExpPoly ExpPoly::operator*(cd c) const {
  ExpPoly r = *this;
  r *= c;
  return r;
}

ExpPoly ExpPoly::operator-() const { return *this * cd(-1.0); }

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
  ExpPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(multiply(ma, mb), ca * cb);
  return r;
}

ExpPoly ExpPoly::diff(const std::string& var) const {
  ExpPoly r;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, k] : m) {
      if (v == var) r.add_term(m, c * cd(0.0, static_cast<double>(k)));
    }
  }
  return r;
}

cd ExpPoly::eval(const Assignment& a) const {
  cd sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double angle = 0.0;
    for (const auto& [v, k] : m) {
      auto it = a.find(v);
      if (it == a.end()) throw UnboundVariable(v);
      angle += k * it->second;
    }
    sum += c * std::polar(1.0, angle);
  }
  return sum;
}

ExpPoly ExpPoly::substitute(const Assignment& a) const {
  ExpPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    double angle = 0.0;
    for (const auto& [v, k] : m) {
      auto it = a.find(v);
      if (it == a.end()) {
        rest.emplace_back(v, k);
      } else {
        angle += k * it->second;
      }
    }
    r.add_term(rest, c * std::polar(1.0, angle));
  }
  return r;
}

std::string ExpPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag())
       << "i)";
    if (!m.empty()) {
      os << "*exp(i*(";
      bool f = true;
      for (const auto& [v, k] : m) {
        if (!f) os << "+";
        f = false;
        os << k << "*" << v;
      }
      os << "))";
    }
  }
  return os.str();
}

}  // namespace zxdiff
