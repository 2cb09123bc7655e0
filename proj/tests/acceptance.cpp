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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "support/oracle.hpp"
#include "support/random_terms.hpp"
#include "zxdiff/catalog.hpp"
#include "zxdiff/controlize.hpp"
#include "zxdiff/derivative.hpp"
#include "zxdiff/gadgets.hpp"
#include "zxdiff/hamiltonian.hpp"
#include "zxdiff/semantics.hpp"
#include "zxdiff/serialize.hpp"

#ifndef ZXDIFF_CLI_PATH
#error "ZXDIFF_CLI_PATH must point at the zxdiff executable"
#endif

using namespace zxdiff;

namespace {

constexpr double kPi = std::numbers::pi;
const cd kI(0, 1);

struct Outcome {
  bool ok = true;
  std::string detail;
  void check(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

CMatrix column(std::vector<cd> v) {
  CMatrix m(v.size(), 1);
  m.data = std::move(v);
  return m;
}

CMatrix diag(std::vector<cd> d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

std::vector<Term> generators() {
  const PhaseExpr b = PhaseExpr::variable("beta");
  std::vector<Term> g = {hadamard(), identity(), swap(), cup(), cap(), empty()};
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; n + m <= 4; ++m)
      for (const PhaseExpr& p : {PhaseExpr(), PhaseExpr::quarter_turns(4),
                                 PhaseExpr::quarter_turns(3) + b, b.scaled(-2)}) {
        g.push_back(z_spider(n, m, p));
        g.push_back(x_spider(n, m, p));
      }
  return g;
}

Outcome axiom_soundness() {
  Outcome o;
  auto catalog = equation_catalog();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    EquationCheck r = check_equation(catalog[i], 0xA11CE + i, 10, 1e-9);
    o.check(r.passed, r.name);
  }
  o.detail = o.ok ? std::to_string(catalog.size()) + " equations" : o.detail;
  return o;
}

Outcome controlizer_contract() {
  Outcome o;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  std::vector<Term> terms = generators();
  const std::size_t gens = terms.size();
  for (int i = 0; i < 50; ++i) terms.push_back(testing::random_term(rng));
  for (const Term& t : terms) {
    ControlledState c = controlize(t);
    o.check(is_controlled_state(c.term(), 1e-9, rng()), "not controlled: " + to_string(t));
    Term back = uncontrol(c, t.inputs(), t.outputs());
    Assignment a{{"beta", angle(rng)}};
    o.check(oracle::max_diff(oracle::dense(t, a), evaluate(back, a)) <= 1e-9,
            "reconstruction: " + to_string(t));
  }
  if (o.ok) o.detail = std::to_string(gens) + " generators, 50 random terms";
  return o;
}

Outcome addition() {
  Outcome o;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  for (int i = 0; i < 50; ++i) {
    Term a = testing::random_term(rng);
    Term b = testing::pad_to_arity(testing::random_term(rng), a.inputs(), a.outputs());
    Assignment at{{"beta", angle(rng)}};
    oracle::Dense da = oracle::dense(a, at), db = oracle::dense(b, at);
    for (std::size_t k = 0; k < da.v.size(); ++k) da.v[k] += db.v[k];
    o.check(oracle::max_diff(da, evaluate(add(a, b), at)) <= 1e-9, "sum: " + to_string(a));
  }
  CMatrix ex = evaluate(add(cap(), x_spider(0, 2, PhaseExpr::quarter_turns(4))), {});
  o.check(max_abs_diff(ex, column({1, 1, 1, 1})) <= 1e-9, "worked example 2|++>");
  if (o.ok) o.detail = "50 random pairs, cap + X(0,2,pi) = (1,1,1,1)";
  return o;
}

Outcome base_cases() {
  Outcome o;
  const double s = 1 / std::sqrt(2.0);
  const cd pm[4] = {0.5, -0.5, 0.5, -0.5};
  const cd mp[4] = {0.5, 0.5, -0.5, -0.5};
  for (double b : {0.0, 0.7, kPi / 2, kPi}) {
    Assignment a{{"beta", b}};
    cd e = std::exp(kI * b);
    CMatrix x = column({kI * e * s, -kI * e * s});
    std::vector<cd> y(4);
    for (int k = 0; k < 4; ++k) y[k] = kI * (e * pm[k] - std::conj(e) * mp[k]);
    o.check(max_abs_diff(evaluate(partial_c(x_beta(1, 0, "beta"), "beta"), a), x) <= 1e-9,
            "controlizer derivative of x_beta(1,0)");
    o.check(max_abs_diff(evaluate(partial_zx(x_beta(1, 0, "beta"), "beta"), a), x) <= 1e-9,
            "factored derivative of x_beta(1,0)");
    o.check(max_abs_diff(evaluate(partial_pair(y_beta(1, "beta"), "beta"), a), column(y)) <= 1e-9,
            "pair derivative of y_beta(1)");
  }
  if (o.ok) o.detail = "beta in {0, 0.7, pi/2, pi}";
  return o;
}

Outcome four_way() {
  Outcome o;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  for (int i = 0; i < 20; ++i) {
    Term t = testing::random_dependent_term(rng);
    Term pc = partial_c(t, "beta"), pz = partial_zx(t, "beta"), pp = partial_pair(t, "beta");
    ParamMatrix dm = dM(interp(t), "beta");
    for (int k = 0; k < 5; ++k) {
      Assignment a{{"beta", angle(rng)}};
      std::vector<CMatrix> all = {evaluate(pc, a), evaluate(pz, a), evaluate(pp, a), eval(dm, a),
                                  finite_diff(t, "beta", a, 1e-6)};
      for (std::size_t p = 0; p < all.size(); ++p)
        for (std::size_t q = p + 1; q < all.size(); ++q)
          o.check(max_abs_diff(all[p], all[q]) <= 1e-5,
                  "methods " + std::to_string(p) + "," + std::to_string(q) + " on " + to_string(t));
    }
  }
  if (o.ok) o.detail = "20 terms x 5 points";
  return o;
}

Outcome oracle_identity() {
  Outcome o;
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; n + m <= 4; ++m) {
      Term x = x_beta(n, m, "beta");
      ParamMatrix d = dM(interp(x), "beta");
      for (double b : {0.0, 0.4, 2.5}) {
        Assignment a{{"beta", b}};
        CMatrix rhs = scale(matmul(delta_tilde(n, m), evaluate(x, a)), kI);
        o.check(max_abs_diff(eval(d, a), rhs) <= 1e-9,
                "x_beta(" + std::to_string(n) + "," + std::to_string(m) + ")");
      }
    }
  // controlled triangle: |0x> -> |0x>, |10> -> |10>, |11> -> |10> + |11>
  CMatrix table(4, 4);
  table.at(0, 0) = table.at(1, 1) = table.at(2, 2) = table.at(2, 3) = table.at(3, 3) = 1.0;
  o.check(max_abs_diff(ctriangle_matrix(), table) == 0.0, "controlled-triangle matrix");
  o.check(max_abs_diff(evaluate(ctriangle(), {}), table) <= 1e-9, "controlled-triangle diagram");
  if (o.ok) o.detail = "n+m <= 4, controlled-triangle table";
  return o;
}

Outcome hamiltonian_pipeline() {
  Outcome o;
  IsingHamiltonian ex{2, {{0, 1}, {1, -1}}, {{{0, 1}, 1}}};
  o.check(max_abs_diff(evaluate(hamiltonian_diagram(ex), {}), diag({1, 1, -3, 1})) <= 1e-9,
          "Z1 - Z2 + Z1Z2");
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int i = 0; i < 10; ++i) {
    // 2 qubits with |h| <= 2, 3 qubits with h in {-1, 0, 1}
    const int n = i < 5 ? 2 : 3;
    std::uniform_int_distribution<int> coef(n == 2 ? -2 : -1, n == 2 ? 2 : 1);
    IsingHamiltonian h{n, {}, {}};
    for (int q = 0; q < n; ++q)
      if (int c = coef(rng)) h.linear[q] = c;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (int c = coef(rng)) h.quadratic[{p, q}] = c;
    o.check(max_abs_diff(evaluate(hamiltonian_diagram(h), {}), ising_matrix(h)) <= 1e-9,
            "random Hamiltonian " + std::to_string(i));
    Term u = evolution_diagram(h);
    double b1 = angle(rng), b2 = angle(rng);
    CMatrix prod = matmul(evaluate(u, {{"beta", b1}}), evaluate(u, {{"beta", b2}}));
    o.check(max_abs_diff(prod, evaluate(u, {{"beta", b1 + b2}})) <= 1e-9,
            "group law " + std::to_string(i));
  }
  if (o.ok) o.detail = "worked example, 10 random Hamiltonians, group law";
  return o;
}

std::string run_cli(const std::string& args) {
  std::string cmd = std::string(ZXDIFF_CLI_PATH) + " " + args + " 2>&1";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, p)) out.append(buf, k);
  int status = pclose(p);
  return out + "\nstatus " + std::to_string(status);
}

Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "zxdiff_acceptance";
  fs::create_directories(dir);
  std::mt19937_64 rng(8);
  Term t = testing::random_dependent_term(rng);
  std::ofstream(dir / "t.zx") << serialize_term(t);
  std::ofstream(dir / "h.json") << R"({"n":2,"linear":{"1":1,"2":-1},"quadratic":{"1,2":1}})";
  const std::string f = (dir / "t.zx").string(), h = (dir / "h.json").string();
  for (const std::string& args :
       std::vector<std::string>{"axioms-check --seed 17", "check-cs " + f + " --seed 17", "controlize " + f + " --seed 17",
        "diff " + f + " --method pair --seed 17", "diff " + f + " --method controlizer --at 0.3",
        "add " + f + " " + f + " --seed 17", "ising " + h + " --emit evolution --seed 17",
        "export " + f + " --format tikz"}) {
    std::string first = run_cli(args), second = run_cli(args);
    o.check(first == second && !first.empty(), args);
  }
  fs::remove_all(dir);
  if (o.ok) o.detail = "8 commands run twice";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom soundness", axiom_soundness},
      {"controlizer contract", controlizer_contract},
      {"addition", addition},
      {"derivative base cases", base_cases},
      {"four-way derivative equivalence", four_way},
      {"diagonal weight identity", oracle_identity},
      {"hamiltonian pipeline", hamiltonian_pipeline},
      {"cli determinism", determinism},
  };
  int failed = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d %s (%s) %.1fs\n", o.ok ? "PASS" : "FAIL", ++index, name.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
