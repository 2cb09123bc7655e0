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

#include "zxdiff/term.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "zxdiff/errors.hpp"

namespace zxdiff {

const char* gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::Z: return "z";
    case GenKind::X: return "x";
    case GenKind::H: return "h";
    case GenKind::Id: return "id";
    case GenKind::Swap: return "swap";
    case GenKind::Cup: return "cup";
    case GenKind::Cap: return "cap";
    case GenKind::Empty: return "empty";
  }
  return "?";
}

namespace {

std::shared_ptr<const Node> make_gen_node(const Generator& g) {
  auto n = std::make_shared<Node>();
  n->op = Op::Gen;
  n->gen = g;
  n->in = g.inputs;
  n->out = g.outputs;
  n->count = g.kind == GenKind::Empty ? 0 : 1;
  n->vars = g.phase.variables();
  switch (g.kind) {
    case GenKind::Id:
      n->wiring = true;
      n->perm = {0};
      break;
    case GenKind::Swap:
      n->wiring = true;
      n->perm = {1, 0};
      break;
    case GenKind::Empty:
      n->wiring = true;
      break;
    default:
      break;
  }
  return n;
}

const Term& empty_singleton() {
  static const Term t(make_gen_node(Generator{}));
  return t;
}

}  // namespace

Term::Term() : node_(empty_singleton().node_) {}

Op Term::op() const { return node_->op; }
int Term::inputs() const { return node_->in; }
int Term::outputs() const { return node_->out; }
const Generator& Term::gen() const { return node_->gen; }
const Term& Term::lhs() const { return node_->a; }
const Term& Term::rhs() const { return node_->b; }
bool Term::is_wiring() const { return node_->wiring; }
const std::vector<int>& Term::wiring() const { return node_->perm; }
std::size_t Term::generator_count() const { return node_->count; }
const std::set<std::string>& Term::variables() const { return node_->vars; }
bool Term::depends_on(const std::string& var) const {
  return node_->vars.count(var) > 0;
}

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (op() != o.op() || inputs() != o.inputs() || outputs() != o.outputs())
    return false;
  if (op() == Op::Gen) return gen() == o.gen();
  return lhs() == o.lhs() && rhs() == o.rhs();
}

Term gen_term(const Generator& g) {
  int want_in = g.inputs, want_out = g.outputs;
  switch (g.kind) {
    case GenKind::Z:
    case GenKind::X:
      if (g.inputs < 0 || g.outputs < 0)
        throw InvalidArity("spider arities must be non-negative");
      break;
    case GenKind::H:
    case GenKind::Id:
      want_in = want_out = 1;
      break;
    case GenKind::Swap:
      want_in = want_out = 2;
      break;
    case GenKind::Cup:
      want_in = 2;
      want_out = 0;
      break;
    case GenKind::Cap:
      want_in = 0;
      want_out = 2;
      break;
    case GenKind::Empty:
      want_in = want_out = 0;
      break;
  }
  if (g.inputs != want_in || g.outputs != want_out)
    throw InvalidArity(std::string("bad arity for generator ") +
                       gen_kind_name(g.kind));
  if (!g.is_spider() && !g.phase.is_zero())
    throw InvalidArity(std::string("phase on non-spider generator ") +
                       gen_kind_name(g.kind));
  return Term(make_gen_node(g));
}

Term z_spider(int n, int m, const PhaseExpr& phase) {
  return gen_term({GenKind::Z, n, m, phase});
}
Term x_spider(int n, int m, const PhaseExpr& phase) {
  return gen_term({GenKind::X, n, m, phase});
}
Term hadamard() { return gen_term({GenKind::H, 1, 1, {}}); }
Term identity() { return gen_term({GenKind::Id, 1, 1, {}}); }
Term swap() { return gen_term({GenKind::Swap, 2, 2, {}}); }
Term cup() { return gen_term({GenKind::Cup, 2, 0, {}}); }
Term cap() { return gen_term({GenKind::Cap, 0, 2, {}}); }
Term empty() { return Term(); }

Term compose(const Term& later, const Term& earlier) {
  if (earlier.outputs() != later.inputs()) {
    throw ArityMismatch("compose: earlier has " +
                        std::to_string(earlier.outputs()) +
                        " outputs, later expects " +
                        std::to_string(later.inputs()));
  }
  auto n = std::make_shared<Node>();
  n->op = Op::Compose;
  n->a = later;
  n->b = earlier;
  n->in = earlier.inputs();
  n->out = later.outputs();
  n->count = later.generator_count() + earlier.generator_count();
  n->vars = later.variables();
  n->vars.insert(earlier.variables().begin(), earlier.variables().end());
  if (later.is_wiring() && earlier.is_wiring()) {
    n->wiring = true;
    const auto& lp = later.wiring();
    const auto& ep = earlier.wiring();
    n->perm.resize(lp.size());
    for (std::size_t j = 0; j < lp.size(); ++j) n->perm[j] = ep[lp[j]];
  }
  return Term(std::move(n));
}

Term tensor(const Term& left, const Term& right) {
  auto n = std::make_shared<Node>();
  n->op = Op::Tensor;
  n->a = left;
  n->b = right;
  n->in = left.inputs() + right.inputs();
  n->out = left.outputs() + right.outputs();
  n->count = left.generator_count() + right.generator_count();
  n->vars = left.variables();
  n->vars.insert(right.variables().begin(), right.variables().end());
  if (left.is_wiring() && right.is_wiring()) {
    n->wiring = true;
    n->perm = left.wiring();
    for (int p : right.wiring()) n->perm.push_back(p + left.inputs());
  }
  return Term(std::move(n));
}

Term sequence(const std::vector<Term>& earliest_first) {
  if (earliest_first.empty()) return empty();
  Term t = earliest_first.front();
  for (std::size_t i = 1; i < earliest_first.size(); ++i)
    t = compose(earliest_first[i], t);
  return t;
}

Term tensor_all(const std::vector<Term>& terms) {
  if (terms.empty()) return empty();
  Term t = terms.back();
  for (std::size_t i = terms.size() - 1; i-- > 0;) t = tensor(terms[i], t);
  return t;
}

Term tensor_power(const Term& t, int k) {
  if (k <= 0) return empty();
  Term r = t;
  for (int i = 1; i < k; ++i) r = tensor(t, r);
  return r;
}

Term identities(int k) { return tensor_power(identity(), k); }

Term permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]++) throw InvalidArity("not a permutation");
  }
  // cur[j] = input wire currently at position j; sort positions by their
  // destination using odd-even transposition layers.
  std::vector<int> dest(n);
  for (int j = 0; j < n; ++j) dest[perm[j]] = j;
  std::vector<int> cur(n);
  for (int j = 0; j < n; ++j) cur[j] = j;
  Term t = identities(n);
  bool sorted = false;
  for (int round = 0; !sorted; ++round) {
    sorted = true;
    for (int parity = 0; parity < 2; ++parity) {
      std::vector<Term> layer;
      bool any = false;
      int j = 0;
      if (parity == 1 && n > 0) {
        layer.push_back(identity());
        j = 1;
      }
      while (j < n) {
        if (j + 1 < n && dest[cur[j]] > dest[cur[j + 1]]) {
          std::swap(cur[j], cur[j + 1]);
          layer.push_back(swap());
          any = true;
          j += 2;
        } else {
          layer.push_back(identity());
          j += 1;
        }
      }
      if (any) {
        t = compose(tensor_all(layer), t);
        sorted = false;
      }
    }
  }
  return t;
}

namespace {

// sqrt(2) = X(1,0,0) . Z(0,1,0)
Term sqrt2_term() { return compose(x_spider(1, 0), z_spider(0, 1)); }

// [[1,1],[1,e^{i theta}]] up to a factor sqrt(2), theta = q * pi/4 with q even.
Term hbox_core(int q) {
  Term gadget = compose(z_spider(1, 0, PhaseExpr::quarter_turns(-q / 2)),
                        x_spider(2, 1));
  Term nodes = tensor(z_spider(0, 2, PhaseExpr::quarter_turns(q / 2)),
                      z_spider(1, 1, PhaseExpr::quarter_turns(q / 2)));
  return compose(tensor(identity(), gadget), nodes);
}

}  // namespace

Term triangle() {
  // [[1,1],[1,0]] = 2^{-1/2} hbox(pi/2) H hbox(-pi/2), then a NOT in front.
  Term body = sequence({x_spider(1, 1, PhaseExpr::quarter_turns(4)),
                        hbox_core(-2), hadamard(), hbox_core(2)});
  return tensor(sqrt2_term(), body);
}

Term x_beta(int n, int m, const std::string& var) {
  std::vector<Term> parts;
  for (int i = 0; i < n; ++i)
    parts.push_back(x_spider(0, 1, PhaseExpr::variable(var, 1)));
  for (int i = 0; i < m; ++i)
    parts.push_back(x_spider(0, 1, PhaseExpr::variable(var, -1)));
  return tensor_all(parts);
}

Term y_beta(int n, const std::string& var) {
  std::vector<Term> parts;
  for (int i = 0; i < n; ++i) {
    parts.push_back(x_spider(0, 1, PhaseExpr::variable(var, -1)));
    parts.push_back(x_spider(0, 1, PhaseExpr::variable(var, 1)));
  }
  return tensor_all(parts);
}

namespace {

// Rebuilds a term bottom-up, rewriting generators with `f`. Shared subterms
// are rebuilt once.
Term rebuild(const Term& t, const std::function<Term(const Generator&)>& f,
             bool flip) {
  std::unordered_map<const Node*, Term> memo;
  std::function<Term(const Term&)> go = [&](const Term& u) -> Term {
    auto it = memo.find(u.node());
    if (it != memo.end()) return it->second;
    Term r;
    switch (u.op()) {
      case Op::Gen:
        r = f(u.gen());
        break;
      case Op::Compose:
        r = flip ? compose(go(u.rhs()), go(u.lhs()))
                 : compose(go(u.lhs()), go(u.rhs()));
        break;
      case Op::Tensor:
        r = tensor(go(u.lhs()), go(u.rhs()));
        break;
    }
    memo.emplace(u.node(), r);
    return r;
  };
  return go(t);
}

}  // namespace

Term substitute(const Term& t, const Assignment& a) {
  for (const auto& v : t.variables()) {
    if (!a.count(v)) throw UnboundVariable(v);
  }
  return rebuild(
      t,
      [&](const Generator& g) {
        if (!g.is_spider() || g.phase.is_constant()) return gen_term(g);
        Generator h = g;
        h.phase = g.phase.substitute(a);
        return gen_term(h);
      },
      false);
}

Term dagger(const Term& t) {
  return rebuild(
      t,
      [](const Generator& g) {
        Generator h = g;
        std::swap(h.inputs, h.outputs);
        h.phase = -g.phase;
        if (g.kind == GenKind::Cup) h.kind = GenKind::Cap;
        if (g.kind == GenKind::Cap) h.kind = GenKind::Cup;
        return gen_term(h);
      },
      true);
}

Term color_swap(const Term& t) {
  return rebuild(
      t,
      [](const Generator& g) {
        Generator h = g;
        if (g.kind == GenKind::Z) h.kind = GenKind::X;
        if (g.kind == GenKind::X) h.kind = GenKind::Z;
        return gen_term(h);
      },
      false);
}

std::string to_string(const Term& t) {
  std::ostringstream os;
  std::function<void(const Term&)> go = [&](const Term& u) {
    switch (u.op()) {
      case Op::Gen: {
        const auto& g = u.gen();
        os << gen_kind_name(g.kind);
        if (g.is_spider()) {
          os << "(" << g.inputs << "," << g.outputs << ","
             << g.phase.to_string() << ")";
        }
        break;
      }
      case Op::Compose:
        os << "(";
        go(u.lhs());
        os << " . ";
        go(u.rhs());
        os << ")";
        break;
      case Op::Tensor:
        os << "(";
        go(u.lhs());
        os << " x ";
        go(u.rhs());
        os << ")";
        break;
    }
  };
  go(t);
  return os.str();
}

}  // namespace zxdiff
