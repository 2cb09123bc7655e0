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

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "zxdiff/phase.hpp"

namespace zxdiff {

enum class GenKind { Z, X, H, Id, Swap, Cup, Cap, Empty };

const char* gen_kind_name(GenKind k);

struct Generator {
  GenKind kind = GenKind::Empty;
  int inputs = 0;
  int outputs = 0;
  PhaseExpr phase;  // spiders only

  bool is_spider() const { return kind == GenKind::Z || kind == GenKind::X; }
  bool operator==(const Generator& o) const {
    return kind == o.kind && inputs == o.inputs && outputs == o.outputs &&
           phase == o.phase;
  }
};

class Term;

enum class Op { Gen, Compose, Tensor };

struct Node;

// Immutable ZX term. Copies share structure; every constructed term is
// arity-correct.
class Term {
 public:
  Term();  // the empty diagram

  Op op() const;
  int inputs() const;
  int outputs() const;
  const Generator& gen() const;  // Op::Gen only
  // Compose: lhs() is the later map, rhs() the earlier one.
  // Tensor: lhs() owns the most significant wires.
  const Term& lhs() const;
  const Term& rhs() const;

  // Built only from Id, Swap and Empty.
  bool is_wiring() const;
  // Output wire j carries input wire perm[j]. Requires is_wiring().
  const std::vector<int>& wiring() const;
  std::size_t generator_count() const;
  const std::set<std::string>& variables() const;
  bool depends_on(const std::string& var) const;

  const Node* node() const { return node_.get(); }

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

 private:
  std::shared_ptr<const Node> node_;
};

struct Node {
  Op op = Op::Gen;
  Generator gen;
  Term a{std::shared_ptr<const Node>()};
  Term b{std::shared_ptr<const Node>()};
  int in = 0, out = 0;
  bool wiring = false;
  std::vector<int> perm;
  std::size_t count = 0;
  std::set<std::string> vars;
};

Term gen_term(const Generator& g);
Term z_spider(int n, int m, const PhaseExpr& phase = {});
Term x_spider(int n, int m, const PhaseExpr& phase = {});
Term hadamard();
Term identity();
Term swap();
Term cup();  // 2 -> 0
Term cap();  // 0 -> 2
Term empty();

// Throws ArityMismatch when outputs(earlier) != inputs(later).
Term compose(const Term& later, const Term& earlier);
Term tensor(const Term& left, const Term& right);
// Left to right: first element is applied first.
Term sequence(const std::vector<Term>& earliest_first);
Term tensor_all(const std::vector<Term>& terms);
Term tensor_power(const Term& t, int k);
Term identities(int k);

// Output wire j carries input wire perm[j]; built from swaps.
Term permutation(const std::vector<int>& perm);

// The triangle, [[1,1],[0,1]], as a spider/Hadamard decomposition.
Term triangle();

// n states X(0,1,var) followed by m states X(0,1,-var).
Term x_beta(int n, int m, const std::string& var);
// n pairs (X(0,1,-var), X(0,1,var)).
Term y_beta(int n, const std::string& var);

Term substitute(const Term& t, const Assignment& a);
// Conjugate transpose: flips the diagram and negates phases.
Term dagger(const Term& t);
// Exchanges Z and X spiders.
Term color_swap(const Term& t);

std::string to_string(const Term& t);

}  // namespace zxdiff
