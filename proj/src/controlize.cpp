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

#include "zxdiff/controlize.hpp"

#include <numbers>
#include <random>
#include <unordered_map>

#include "zxdiff/errors.hpp"
#include "zxdiff/gadgets.hpp"
#include "zxdiff/semantics.hpp"

namespace zxdiff {

namespace {

PhaseExpr q(int k) { return PhaseExpr::quarter_turns(k); }

Term half() { return sqrt2_power(-2); }

// Controlled factors (1, 2), (1, sqrt2) and their inverses.
Term c_two() { return compose(z_spider(1, 0), triangle()); }
Term c_sqrt2() {
  return sequence({z_spider(1, 1, q(-1)), triangle(), z_spider(1, 0, q(2))});
}
Term c_inv_sqrt2() { return tensor(inv_sqrt2(), compose(c_sqrt2(), not_gate())); }
Term c_half() { return tensor(half(), compose(c_two(), not_gate())); }

// c -> [ones | |00> + |11>], shared by identity, cup and cap.
Term bend_gadget() {
  return tensor(sqrt2(),
                compose(x_spider(1, 2, q(4)), dagger(triangle())));
}

// c -> [ones | |+> + e^{i alpha}|->]
Term x_state_gadget(const PhaseExpr& alpha) {
  Term body = sequence({triangle(), z_spider(1, 1, alpha), hadamard()});
  return tensor(sqrt2(), compose(tensor(body, c_inv_sqrt2()), z_spider(1, 2)));
}

// c -> [ones | vec(X(n,m,0))], vec = 2^{1-k/2} * (even parity indicator).
Term parity_gadget(int k) {
  Term g = compose(x_spider(1, k, q(4)), dagger(triangle()));
  return tensor(sqrt2_power(k - 1),
                compose(tensor(g, controlled_scalar(2 - k)), z_spider(1, 2)));
}

// c -> [ones | |0>|+> + |1>|->]
Term hadamard_gadget() {
  Term front = tensor_all({z_spider(0, 2), identity(), controlled_scalar(-1)});
  Term body = sequence({z_spider(1, 2), front, tensor(identity(), and_gate()),
                        tensor(identity(), hadamard())});
  return tensor(sqrt2(), body);
}

ControlledState controlize_gen(const Generator& g);

}  // namespace

ControlledState ControlledState::from_term(const Term& t) {
  if (t.inputs() != 1) throw WrongArity("controlled state must have one input");
  if (!is_controlled_state(t))
    throw NotControlledState("diagram does not map |0> to the all-ones vector");
  return ControlledState(t);
}

ControlledState ControlledState::trusted(const Term& t) {
  if (t.inputs() != 1) throw WrongArity("controlled state must have one input");
  return ControlledState(t);
}

NamedScalar named_scalar(ScalarKind kind, const PhaseExpr& theta) {
  switch (kind) {
    case ScalarKind::Sqrt2: return {kind, {}, sqrt2()};
    case ScalarKind::InvSqrt2: return {kind, {}, inv_sqrt2()};
    case ScalarKind::Two: return {kind, {}, z_spider(0, 0)};
    case ScalarKind::ZeroControlled: return {kind, {}, bra0()};
    case ScalarKind::Phase: return {kind, theta, phase_scalar(theta)};
    case ScalarKind::I: return {kind, q(2), phase_scalar(q(2))};
    case ScalarKind::MinusI: return {kind, q(6), phase_scalar(q(6))};
  }
  throw InvalidArity("unknown scalar");
}

Term controlled_scalar(int sqrt2_pow, int quarter_turns) {
  std::vector<Term> factors;
  const int pairs = std::abs(sqrt2_pow) / 2;
  for (int i = 0; i < pairs; ++i) factors.push_back(sqrt2_pow > 0 ? c_two() : c_half());
  if (sqrt2_pow % 2 != 0) factors.push_back(sqrt2_pow > 0 ? c_sqrt2() : c_inv_sqrt2());
  const int r = static_cast<int>(factors.size());
  return compose(tensor_all(factors), z_spider(1, r, q(quarter_turns)));
}

bool is_controlled_state(const Term& t, double tol, std::uint64_t seed) {
  if (t.inputs() != 1) throw WrongArity("controlled state must have one input");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  CMatrix e0(2, 1);
  e0.at(0, 0) = 1.0;
  const int trials = t.variables().empty() ? 1 : 3;
  for (int s = 0; s < trials; ++s) {
    Assignment a;
    for (const auto& v : t.variables()) a[v] = angle(rng);
    CMatrix col = apply(t, e0, a);
    for (const auto& x : col.data)
      if (std::abs(x - cd(1.0)) > tol) return false;
  }
  return true;
}

ControlledState cs_tensor(const ControlledState& a, const ControlledState& b) {
  return ControlledState::trusted(
      compose(tensor(a.term(), b.term()), z_spider(1, 2)));
}

ControlledState cs_sum(const ControlledState& a, const ControlledState& b) {
  if (a.n() != b.n()) throw WrongArity("cs_sum needs equal output counts");
  const int n = a.n();
  // |0> -> |00>, |1> -> |01> + |10>
  Term no_both = compose(tensor_all({identity(), nand_effect(2), identity()}),
                         tensor(z_spider(1, 2), z_spider(1, 2)));
  Term split = compose(no_both, tensor(sqrt2(), x_spider(1, 2)));
  std::vector<int> interleave(2 * n);
  for (int i = 0; i < n; ++i) {
    interleave[2 * i] = i;
    interleave[2 * i + 1] = n + i;
  }
  Term merged = sequence({split, tensor(a.term(), b.term()),
                          permutation(interleave),
                          tensor_power(z_spider(2, 1), n)});
  return ControlledState::trusted(merged);
}

ControlledState cs_permute(const ControlledState& c, const std::vector<int>& perm) {
  return ControlledState::trusted(compose(permutation(perm), c.term()));
}

ControlledState cs_compose(const ControlledState& a, const ControlledState& b,
                           int n, int m, int k) {
  if (a.n() != n + m || b.n() != m + k)
    throw WrongArity("cs_compose arity mismatch");
  Term body = compose(tensor_all({a.term(), b.term(), controlled_scalar(2 * m)}),
                      z_spider(1, 3));
  // wires: n | m (from a) | m (from b) | k
  std::vector<int> order;
  for (int i = 0; i < n; ++i) order.push_back(i);
  for (int i = 0; i < k; ++i) order.push_back(n + 2 * m + i);
  for (int i = 0; i < m; ++i) {
    order.push_back(n + i);
    order.push_back(n + m + i);
  }
  Term contract = tensor(identities(n + k), tensor_power(cup(), m));
  Term t = sequence({body, permutation(order), contract});
  return ControlledState::trusted(tensor(sqrt2_power(-2 * m), t));
}

ControlledState cs_zero(int n) {
  return ControlledState::trusted(tensor(bra0(), ones(n)));
}

namespace {

ControlledState controlize_gen(const Generator& g) {
  switch (g.kind) {
    case GenKind::Empty:
      return ControlledState::trusted(z_spider(1, 0));
    case GenKind::Id:
    case GenKind::Cup:
    case GenKind::Cap:
      return ControlledState::trusted(bend_gadget());
    case GenKind::Swap: {
      ControlledState b = ControlledState::trusted(bend_gadget());
      return cs_permute(cs_tensor(b, b), {0, 2, 3, 1});
    }
    case GenKind::H:
      return ControlledState::trusted(hadamard_gadget());
    case GenKind::X:
    case GenKind::Z:
      break;
  }
  // Spiders are handled through decompositions in controlize().
  throw InvalidArity("controlize_gen called on a spider");
}

}  // namespace

ControlledState Controlizer::operator()(const Term& t) {
  auto it = memo_.find(t.node());
  if (it != memo_.end()) return it->second.second;
  ControlledState r = ControlledState::trusted(z_spider(1, 0));
  switch (t.op()) {
    case Op::Gen: {
      const Generator& g = t.gen();
      if (g.kind == GenKind::X && g.phase.is_zero()) {
        r = ControlledState::trusted(parity_gadget(g.inputs + g.outputs));
      } else if (g.kind == GenKind::X && g.inputs == 0 && g.outputs == 1) {
        r = ControlledState::trusted(x_state_gadget(g.phase));
      } else if (g.kind == GenKind::X) {
        // X(n,m,a) = X(n+1,m,0) . (Id^n (x) X(0,1,a))
        Term split = compose(x_spider(g.inputs + 1, g.outputs),
                             tensor(identities(g.inputs), x_spider(0, 1, g.phase)));
        r = (*this)(split);
      } else if (g.kind == GenKind::Z) {
        Term recolored = sequence({tensor_power(hadamard(), g.inputs),
                                   x_spider(g.inputs, g.outputs, g.phase),
                                   tensor_power(hadamard(), g.outputs)});
        r = (*this)(recolored);
      } else {
        r = controlize_gen(g);
      }
      break;
    }
    case Op::Compose: {
      const Term& later = t.lhs();
      const Term& earlier = t.rhs();
      r = cs_compose((*this)(earlier), (*this)(later), earlier.inputs(),
                     earlier.outputs(), later.outputs());
      break;
    }
    case Op::Tensor: {
      const Term& L = t.lhs();
      const Term& R = t.rhs();
      r = cs_permute(cs_tensor((*this)(L), (*this)(R)),
                     tensor_vec_order(L, R));
      break;
    }
  }
  memo_.emplace(t.node(), std::make_pair(t, r));
  return r;
}

std::vector<int> tensor_vec_order(const Term& L, const Term& R) {
  const int a = L.inputs(), b = L.outputs(), c = R.inputs(), e = R.outputs();
  // [a_in b_out c_in e_out] -> [a_in c_in b_out e_out]
  std::vector<int> order;
  for (int i = 0; i < a; ++i) order.push_back(i);
  for (int i = 0; i < c; ++i) order.push_back(a + b + i);
  for (int i = 0; i < b; ++i) order.push_back(a + i);
  for (int i = 0; i < e; ++i) order.push_back(a + b + c + i);
  return order;
}

ControlledState controlize(const Term& d) { return Controlizer()(d); }

Term uncontrol(const ControlledState& c, int n, int m) {
  if (n < 0 || m < 0 || c.n() != n + m)
    throw WrongArity("uncontrol: controlled state has " + std::to_string(c.n()) +
                     " outputs, expected " + std::to_string(n + m));
  Term state = compose(c.term(), ket1());
  // wires: i_1..i_n j_1..j_m y_1..y_n
  std::vector<int> order;
  for (int i = 0; i < n; ++i) {
    order.push_back(i);
    order.push_back(n + m + i);
  }
  for (int j = 0; j < m; ++j) order.push_back(n + j);
  return sequence({tensor(state, identities(n)), permutation(order),
                   tensor(tensor_power(cup(), n), identities(m))});
}

Term add(const Term& d1, const Term& d2) {
  if (d1.inputs() != d2.inputs() || d1.outputs() != d2.outputs())
    throw WrongArity("add: arities differ");
  if (d1.inputs() + d1.outputs() > kMaxSymbolicWires)
    throw TooLarge("add: too many boundary wires");
  return uncontrol(cs_sum(controlize(d1), controlize(d2)), d1.inputs(),
                   d1.outputs());
}

}  // namespace zxdiff
