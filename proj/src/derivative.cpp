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

#include "zxdiff/derivative.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "zxdiff/errors.hpp"
#include "zxdiff/gadgets.hpp"

namespace zxdiff {

namespace {

PhaseExpr q(int k) { return PhaseExpr::quarter_turns(k); }

int sign(int k) { return k > 0 ? 1 : -1; }

// c -> [ones | i k e^{i alpha} |->] for alpha = k*var + rest, k = +-1.
Term x_state_derivative(const PhaseExpr& alpha, int k) {
  Term body = compose(hadamard(), z_spider(1, 1, alpha));
  Term scal = controlled_scalar(-1, k > 0 ? 2 : 6);
  return tensor(sqrt2(), compose(tensor(body, scal), z_spider(1, 2)));
}

class Deriver {
 public:
  explicit Deriver(std::string var) : var_(std::move(var)) {}

  ControlledState operator()(const Term& t) {
    auto it = memo_.find(t.node());
    if (it != memo_.end()) return it->second.second;
    ControlledState r = compute(t);
    memo_.emplace(t.node(), std::make_pair(t, r));
    return r;
  }

 private:
  ControlledState compute(const Term& t) {
    if (!t.depends_on(var_)) return cs_zero(t.inputs() + t.outputs());
    switch (t.op()) {
      case Op::Gen:
        return gen(t.gen());
      case Op::Compose: {
        const Term& later = t.lhs();
        const Term& earlier = t.rhs();
        const int n = earlier.inputs(), m = earlier.outputs(), k = later.outputs();
        // d(later . earlier) = d(later) . earlier + later . d(earlier)
        std::vector<ControlledState> parts;
        if (earlier.depends_on(var_))
          parts.push_back(cs_compose((*this)(earlier), controlize_(later), n, m, k));
        if (later.depends_on(var_))
          parts.push_back(cs_compose(controlize_(earlier), (*this)(later), n, m, k));
        return parts.size() == 1 ? parts[0] : cs_sum(parts[0], parts[1]);
      }
      case Op::Tensor: {
        const Term& L = t.lhs();
        const Term& R = t.rhs();
        std::vector<ControlledState> parts;
        if (L.depends_on(var_)) parts.push_back(cs_tensor((*this)(L), controlize_(R)));
        if (R.depends_on(var_)) parts.push_back(cs_tensor(controlize_(L), (*this)(R)));
        ControlledState s = parts.size() == 1 ? parts[0] : cs_sum(parts[0], parts[1]);
        return cs_permute(s, tensor_vec_order(L, R));
      }
    }
    throw InvalidArity("unreachable");
  }

  ControlledState gen(const Generator& g) {
    const int k = g.phase.coeff(var_);
    if (g.kind == GenKind::X && g.inputs == 0 && g.outputs == 1) {
      if (k == 1 || k == -1)
        return ControlledState::trusted(x_state_derivative(g.phase, k));
      // X(0,1,k v + c) = X(|k|+1,1,0) . (X(0,1,+-v)^|k| (x) X(0,1,c))
      const int s = sign(k);
      Term parts = tensor(tensor_power(x_spider(0, 1, PhaseExpr::variable(var_, s)),
                                       std::abs(k)),
                          x_spider(0, 1, g.phase.without(var_)));
      return (*this)(compose(x_spider(std::abs(k) + 1, 1), parts));
    }
    if (g.kind == GenKind::X) {
      Term split = compose(x_spider(g.inputs + 1, g.outputs),
                           tensor(identities(g.inputs), x_spider(0, 1, g.phase)));
      return (*this)(split);
    }
    Term recolored = sequence({tensor_power(hadamard(), g.inputs),
                               x_spider(g.inputs, g.outputs, g.phase),
                               tensor_power(hadamard(), g.outputs)});
    return (*this)(recolored);
  }

  std::string var_;
  Controlizer controlize_;
  std::unordered_map<const Node*, std::pair<Term, ControlledState>> memo_;
};

// A variable-free map together with the signs of the parameter inputs it
// expects after its ordinary inputs.
struct Hat {
  Term body;
  std::vector<int> signs;
};

Hat factor_rec(const Term& t, const std::string& var) {
  switch (t.op()) {
    case Op::Gen: {
      const Generator& g = t.gen();
      const int k = g.is_spider() ? g.phase.coeff(var) : 0;
      if (k == 0) return {t, {}};
      const int a = std::abs(k);
      Generator h = g;
      h.inputs = g.inputs + a;
      h.phase = g.phase.without(var);
      Term body = gen_term(h);
      if (g.kind == GenKind::Z)
        body = compose(body, tensor(identities(g.inputs), tensor_power(hadamard(), a)));
      return {body, std::vector<int>(a, sign(k))};
    }
    case Op::Compose: {
      Hat later = factor_rec(t.lhs(), var);
      Hat earlier = factor_rec(t.rhs(), var);
      const int p1 = static_cast<int>(later.signs.size());
      Term body = compose(later.body, tensor(earlier.body, identities(p1)));
      std::vector<int> signs = earlier.signs;
      signs.insert(signs.end(), later.signs.begin(), later.signs.end());
      return {body, signs};
    }
    case Op::Tensor: {
      Hat L = factor_rec(t.lhs(), var);
      Hat R = factor_rec(t.rhs(), var);
      const int a = t.lhs().inputs(), c = t.rhs().inputs();
      const int pl = static_cast<int>(L.signs.size());
      const int pr = static_cast<int>(R.signs.size());
      // inputs [a c pL pR] -> [a pL c pR]
      std::vector<int> order;
      for (int i = 0; i < a; ++i) order.push_back(i);
      for (int i = 0; i < pl; ++i) order.push_back(a + c + i);
      for (int i = 0; i < c; ++i) order.push_back(a + i);
      for (int i = 0; i < pr; ++i) order.push_back(a + c + pl + i);
      std::vector<int> signs = L.signs;
      signs.insert(signs.end(), R.signs.begin(), R.signs.end());
      return {compose(tensor(L.body, R.body), permutation(order)), signs};
    }
  }
  throw InvalidArity("unreachable");
}

// b starts in |1>; after each wire with bit 1 the |0> amplitude of b moves
// by +1 (or -1 once b has passed a Z). Reading <0| returns the count.
Term counter_chain(const std::vector<bool>& z_before, int wires) {
  Term step = compose(ctriangle(), swap());
  Term t = tensor(ket1(), identities(wires));
  for (int i = 0; i < wires; ++i) {
    if (z_before[i])
      t = compose(tensor_all({identities(i), z_gate(), identities(wires - i)}), t);
    t = compose(tensor_all({identities(i), step, identities(wires - i - 1)}), t);
  }
  if (z_before[wires])
    t = compose(tensor(identities(wires), z_gate()), t);
  return compose(tensor(identities(wires), bra0()), t);
}

Term zero_of(const Term& t) { return tensor(zero_scalar(), t); }

}  // namespace

ControlledState cderiv(const Term& t, const std::string& var) {
  return Deriver(var)(t);
}

Term partial_c(const Term& t, const std::string& var) {
  return uncontrol(cderiv(t, var), t.inputs(), t.outputs());
}

Term FactoredForm::rebuild() const {
  return compose(d2, tensor(d1, x_beta(n, m, var)));
}

FactoredForm factor_beta(const Term& t, const std::string& var) {
  Hat h = factor_rec(t, var);
  const int in = t.inputs();
  const int p = static_cast<int>(h.signs.size());
  // Parameter j of the body reads input in + (its rank among same-sign
  // parameters, plus ones first).
  FactoredForm f;
  f.var = var;
  f.n = static_cast<int>(std::count(h.signs.begin(), h.signs.end(), 1));
  f.m = p - f.n;
  std::vector<int> order(in + p);
  for (int i = 0; i < in; ++i) order[i] = i;
  int next_plus = 0, next_minus = f.n;
  for (int j = 0; j < p; ++j)
    order[in + j] = in + (h.signs[j] > 0 ? next_plus++ : next_minus++);
  f.d1 = identities(in);
  f.d2 = compose(h.body, permutation(order));
  return f;
}

Term delta_diagram(int n, int m) {
  if (n < 0 || m < 0) throw InvalidArity("negative arity");
  std::vector<bool> z(n + m + 1, false);
  z[n] = true;
  return counter_chain(z, n + m);
}

Term dzx_x(int n, int m, const std::string& var) {
  if (n < 0 || m < 0 || n + m == 0)
    throw InvalidArity("dzx_x needs n + m >= 1");
  const int w = n + m;
  Term hs = tensor_power(hadamard(), w);
  Term body = sequence({x_beta(n, m, var), hs, delta_diagram(n, m), hs});
  return tensor(phase_scalar(q(2)), body);
}

Term partial_zx(const Term& t, const std::string& var) {
  FactoredForm f = factor_beta(t, var);
  if (f.n + f.m == 0) return zero_of(t);
  return compose(f.d2, tensor(f.d1, dzx_x(f.n, f.m, var)));
}

Term dpair_y(int k, const std::string& var) {
  if (k < 1) throw InvalidArity("dpair_y needs at least one pair");
  // Per pair (u, v): Z, count u, Z, count v  ->  adds v - u.
  std::vector<bool> z(2 * k + 1, false);
  for (int j = 0; j < k; ++j) z[2 * j] = z[2 * j + 1] = true;
  Term hs = tensor_power(hadamard(), 2 * k);
  Term body = sequence({y_beta(k, var), hs, counter_chain(z, 2 * k), hs});
  return tensor(phase_scalar(q(2)), body);
}

Term partial_pair(const Term& t, const std::string& var) {
  FactoredForm f = factor_beta(t, var);
  if (f.n + f.m == 0) return zero_of(t);
  const int k = std::max(f.n, f.m);
  // y_beta(k) wires: u_j = 2j (-var), v_j = 2j + 1 (+var). Unmatched states
  // are closed with <+|, on which both X(0,1,+-var) evaluate to 1.
  std::vector<int> order;
  for (int j = 0; j < f.n; ++j) order.push_back(2 * j + 1);
  for (int j = 0; j < f.m; ++j) order.push_back(2 * j);
  for (int j = f.m; j < k; ++j) order.push_back(2 * j);
  for (int j = f.n; j < k; ++j) order.push_back(2 * j + 1);
  const int extra = 2 * k - f.n - f.m;
  Term plus_effect = tensor(inv_sqrt2(), z_spider(1, 0));
  Term closed = sequence({dpair_y(k, var), permutation(order),
                          tensor(identities(f.n + f.m), tensor_power(plus_effect, extra))});
  return compose(f.d2, tensor(f.d1, closed));
}

}  // namespace zxdiff
