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

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zxdiff/catalog.hpp"
#include "zxdiff/controlize.hpp"
#include "zxdiff/derivative.hpp"
#include "zxdiff/errors.hpp"
#include "zxdiff/hamiltonian.hpp"
#include "zxdiff/semantics.hpp"
#include "zxdiff/serialize.hpp"

namespace zxdiff::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error("IoError", what) {}
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Term read_term(const std::string& path) { return parse_term(read_input(path)); }

IsingHamiltonian read_hamiltonian(const std::string& path) {
  json j;
  try {
    j = json::parse(read_input(path));
  } catch (const json::parse_error& e) {
    throw SyntaxError(0, e.what());
  }
  return hamiltonian_from_json(j);
}

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("bad number '" + s + "' in --at");
  }
  if (used != s.size()) throw UsageError("bad number '" + s + "' in --at");
  return v;
}

// "--at 0.1,0.2" binds the variables in sorted order; "--at a=0.1,b=0.2"
// binds by name. Missing variables surface later as UnboundVariable.
Assignment parse_at(const std::string& at, const std::set<std::string>& vars) {
  Assignment a;
  if (at.empty()) return a;
  std::vector<std::string> parts;
  std::stringstream ss(at);
  for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
  bool named = at.find('=') != std::string::npos;
  if (named) {
    for (const auto& p : parts) {
      auto eq = p.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("mixed or empty name in --at");
      a[p.substr(0, eq)] = parse_number(p.substr(eq + 1));
    }
    return a;
  }
  if (parts.size() > vars.size() && !(vars.empty() && parts.size() == 1))
    throw UsageError("--at has " + std::to_string(parts.size()) + " values for " +
                     std::to_string(vars.size()) + " variables");
  auto it = vars.begin();
  for (const auto& p : parts) {
    double v = parse_number(p);
    if (it != vars.end()) a[*it++] = v;
  }
  return a;
}

// Rounds away float noise so printed matrices stay readable.
CMatrix tidy(CMatrix m) {
  for (auto& z : m.data) {
    double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
    double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
    z = cd(re, im);
  }
  return m;
}

void emit_matrix(std::ostream& out, const CMatrix& m) {
  out << matrix_to_json(tidy(m)).dump() << '\n';
}

void emit_term(std::ostream& out, const Term& t) { out << serialize_term(t) << '\n'; }

struct Options {
  std::string file, file2;
  std::string var = "beta";
  std::string at;
  std::string method = "controlizer";
  std::string emit = "evolution";
  std::string format = "json";
  std::uint64_t seed = 0;
  double tol = -1.0;
  bool eval = false;
};

// Prints either the diagram or its matrix at --at.
void emit_result(std::ostream& out, const Term& t, const Options& o) {
  if (o.eval || !o.at.empty()) {
    emit_matrix(out, evaluate(t, parse_at(o.at, t.variables())));
  } else {
    emit_term(out, t);
  }
}

int cmd_interp(const Options& o, std::ostream& out, bool force_eval) {
  Term t = read_term(o.file);
  if (force_eval || o.eval) {
    emit_matrix(out, evaluate(t, parse_at(o.at, t.variables())));
  } else {
    out << param_matrix_to_json(interp(t)).dump() << '\n';
  }
  return 0;
}

int cmd_add(const Options& o, std::ostream& out) {
  Term a = read_term(o.file), b = read_term(o.file2);
  emit_result(out, add(a, b), o);
  return 0;
}

int cmd_controlize(const Options& o, std::ostream& out) {
  emit_result(out, controlize(read_term(o.file)).term(), o);
  return 0;
}

int cmd_check_cs(const Options& o, std::ostream& out) {
  Term t = read_term(o.file);
  bool ok = is_controlled_state(t, o.tol < 0 ? 1e-9 : o.tol, o.seed);
  out << (ok ? "yes" : "no") << '\n';
  return ok ? 0 : 1;
}

int cmd_diff(const Options& o, std::ostream& out) {
  Term t = read_term(o.file);
  if (o.method == "matrix") {
    ParamMatrix d = dM(interp(t), o.var);
    if (o.eval || !o.at.empty()) {
      std::set<std::string> vars = t.variables();
      emit_matrix(out, eval(d, parse_at(o.at, vars)));
    } else {
      out << param_matrix_to_json(d).dump() << '\n';
    }
    return 0;
  }
  Term d = o.method == "controlizer" ? partial_c(t, o.var)
           : o.method == "factored"  ? partial_zx(t, o.var)
                                     : partial_pair(t, o.var);
  if (o.eval || !o.at.empty()) {
    // The derivative may have dropped the variable; bind against the input.
    std::set<std::string> vars = t.variables();
    emit_matrix(out, evaluate(d, parse_at(o.at, vars)));
  } else {
    emit_term(out, d);
  }
  return 0;
}

int cmd_ising(const Options& o, std::ostream& out) {
  IsingHamiltonian h = read_hamiltonian(o.file);
  if (o.emit == "matrix") {
    emit_matrix(out, ising_matrix(h));
  } else if (o.emit == "hamiltonian") {
    emit_result(out, hamiltonian_diagram(h), o);
  } else {
    emit_result(out, evolution_diagram(h, o.var), o);
  }
  return 0;
}

int cmd_axioms_check(const Options& o, std::ostream& out) {
  double tol = o.tol < 0 ? 1e-9 : o.tol;
  int failed = 0, index = 0;
  auto catalog = equation_catalog();
  for (const auto& e : catalog) {
    EquationCheck r = check_equation(e, o.seed + index++, 10, tol);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", r.max_diff);
    out << (r.passed ? "ok   " : "FAIL ") << source_name(e.source) << ' ' << e.name << ' '
        << buf << '\n';
    failed += !r.passed;
  }
  out << (catalog.size() - failed) << '/' << catalog.size() << " equations hold\n";
  return failed ? 1 : 0;
}

int cmd_export(const Options& o, std::ostream& out) {
  Term t = read_term(o.file);
  if (o.format == "dot") {
    out << to_dot(t);
  } else if (o.format == "tikz") {
    out << to_tikz(t);
  } else {
    emit_term(out, t);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Addition and differentiation of parametrized ZX-diagrams", "zxdiff"};
  app.require_subcommand(1);
  Options o;

  auto file = [&](CLI::App* c) { c->add_option("file", o.file, "diagram file, - for stdin")->required(); };
  auto at = [&](CLI::App* c) {
    c->add_option("--at", o.at, "values: v1,v2 (variables in sorted order) or name=value,...");
  };
  auto ev = [&](CLI::App* c) { c->add_flag("--eval", o.eval, "print the matrix instead of the diagram"); };

  auto* interp_c = app.add_subcommand("interp", "symbolic matrix of a diagram");
  file(interp_c); at(interp_c); ev(interp_c);
  auto* eval_c = app.add_subcommand("eval", "numeric matrix of a diagram");
  file(eval_c); at(eval_c);
  auto* add_c = app.add_subcommand("add", "diagram for the sum of two diagrams");
  file(add_c);
  add_c->add_option("file2", o.file2, "second diagram")->required();
  at(add_c); ev(add_c);
  auto* ctl_c = app.add_subcommand("controlize", "controlled state of a diagram");
  file(ctl_c); at(ctl_c); ev(ctl_c);
  auto* cs_c = app.add_subcommand("check-cs", "test whether a 0->n diagram is a controlled state");
  file(cs_c);
  auto* diff_c = app.add_subcommand("diff", "derivative of a diagram");
  file(diff_c); at(diff_c); ev(diff_c);
  diff_c->add_option("--method", o.method)
      ->check(CLI::IsMember({"controlizer", "factored", "pair", "matrix"}));
  auto* ising_c = app.add_subcommand("ising", "diagrams of an Ising Hamiltonian");
  ising_c->add_option("file", o.file, "Hamiltonian JSON, - for stdin")->required();
  at(ising_c); ev(ising_c);
  ising_c->add_option("--emit", o.emit)
      ->check(CLI::IsMember({"evolution", "hamiltonian", "matrix"}));
  auto* ax_c = app.add_subcommand("axioms-check", "check every catalog equation numerically");
  auto* ex_c = app.add_subcommand("export", "write a diagram as JSON, DOT or TikZ");
  file(ex_c);
  ex_c->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot", "tikz"}));

  // Shared flags, accepted everywhere for scripting convenience.
  for (auto* c : {interp_c, eval_c, add_c, ctl_c, cs_c, diff_c, ising_c, ax_c, ex_c}) {
    c->add_option("--var", o.var, "variable name")->capture_default_str();
    c->add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
    c->add_option("--tol", o.tol, "tolerance");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (interp_c->parsed()) return cmd_interp(o, out, false);
    if (eval_c->parsed()) return cmd_interp(o, out, true);
    if (add_c->parsed()) return cmd_add(o, out);
    if (ctl_c->parsed()) return cmd_controlize(o, out);
    if (cs_c->parsed()) return cmd_check_cs(o, out);
    if (diff_c->parsed()) return cmd_diff(o, out);
    if (ising_c->parsed()) return cmd_ising(o, out);
    if (ax_c->parsed()) return cmd_axioms_check(o, out);
    if (ex_c->parsed()) return cmd_export(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace zxdiff::cli
