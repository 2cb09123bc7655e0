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

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zxdiff/term.hpp"

namespace zxdiff {

// A diagram C : 1 -> n with C|0> = (1,...,1). C|1> is the stored vector.
class ControlledState {
 public:
  // Checks the defining equation numerically; throws WrongArity or
  // NotControlledState.
  static ControlledState from_term(const Term& t);
  // For constructions that hold by design.
  static ControlledState trusted(const Term& t);

  const Term& term() const { return term_; }
  int n() const { return term_.outputs(); }

 private:
  explicit ControlledState(Term t) : term_(std::move(t)) {}
  Term term_;
};

enum class ScalarKind { Sqrt2, InvSqrt2, Two, ZeroControlled, Phase, I, MinusI };

struct NamedScalar {
  ScalarKind kind;
  PhaseExpr theta;  // Phase only
  Term term;        // ZeroControlled is the effect <0| : 1 -> 0
};

NamedScalar named_scalar(ScalarKind kind, const PhaseExpr& theta = {});

// Effect 1 -> 0 sending |0> to 1 and |1> to sqrt(2)^k e^{i q pi/4}.
Term controlled_scalar(int sqrt2_pow, int quarter_turns = 0);

bool is_controlled_state(const Term& t, double tol = 1e-9,
                         std::uint64_t seed = 0x5eed);

// |1> -> a|1> (x) b|1>
ControlledState cs_tensor(const ControlledState& a, const ControlledState& b);
// |1> -> a|1> + b|1>; WrongArity unless both have the same n.
ControlledState cs_sum(const ControlledState& a, const ControlledState& b);
// Reorders outputs: output j carries output perm[j] of c.
ControlledState cs_permute(const ControlledState& c, const std::vector<int>& perm);
// Given a|1> = vec(D1) for D1 : n -> m and b|1> = vec(D3) for D3 : m -> k,
// returns the controlled state of vec(D3 . D1).
ControlledState cs_compose(const ControlledState& a, const ControlledState& b,
                           int n, int m, int k);
// |1> -> 0
ControlledState cs_zero(int n);

// vec(D) lists the n inputs first, then the m outputs.
ControlledState controlize(const Term& d);

// Controlizer with a memo over shared subterms; reuse one instance when
// controlizing many pieces of the same diagram.
class Controlizer {
 public:
  ControlledState operator()(const Term& d);

 private:
  std::unordered_map<const Node*, std::pair<Term, ControlledState>> memo_;
};

// Output order taking vec(L) (x) vec(R) to vec(L (x) R).
std::vector<int> tensor_vec_order(const Term& L, const Term& R);
Term uncontrol(const ControlledState& c, int n, int m);
// A diagram whose interpretation is [[d1]] + [[d2]].
Term add(const Term& d1, const Term& d2);

}  // namespace zxdiff
