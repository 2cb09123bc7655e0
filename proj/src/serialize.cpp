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

#include "zxdiff/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "zxdiff/errors.hpp"

namespace zxdiff {

using nlohmann::json;

namespace {

void only_keys(const json& j, const std::set<std::string>& allowed,
               const std::string& where) {
  if (!j.is_object()) throw SyntaxError(0, where + ": expected an object");
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) throw SyntaxError(0, where + ": unknown field '" + k + "'");
  }
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw SyntaxError(0, where + ": missing field '" + key + "'");
  return *it;
}

int int_field(const json& j, const std::string& key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer())
    throw SyntaxError(0, where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

GenKind kind_from_name(const std::string& s, const std::string& where) {
  static const std::map<std::string, GenKind> kinds = {
      {"z", GenKind::Z},       {"x", GenKind::X},     {"h", GenKind::H},
      {"id", GenKind::Id},     {"swap", GenKind::Swap}, {"cup", GenKind::Cup},
      {"cap", GenKind::Cap},   {"empty", GenKind::Empty}};
  auto it = kinds.find(s);
  if (it == kinds.end()) throw SyntaxError(0, where + ": unknown generator '" + s + "'");
  return it->second;
}

Term from_json_at(const json& j, const std::string& where) {
  if (!j.is_object()) throw SyntaxError(0, where + ": expected an object");
  const json& opj = field(j, "op", where);
  if (!opj.is_string()) throw SyntaxError(0, where + ": 'op' must be a string");
  const std::string op = opj.get<std::string>();
  if (op == "compose") {
    only_keys(j, {"op", "later", "earlier"}, where);
    Term later = from_json_at(field(j, "later", where), where + "/later");
    Term earlier = from_json_at(field(j, "earlier", where), where + "/earlier");
    return compose(later, earlier);
  }
  if (op == "tensor") {
    only_keys(j, {"op", "left", "right"}, where);
    Term left = from_json_at(field(j, "left", where), where + "/left");
    Term right = from_json_at(field(j, "right", where), where + "/right");
    return tensor(left, right);
  }
  if (op != "gen") throw SyntaxError(0, where + ": unknown op '" + op + "'");
  const json& kj = field(j, "kind", where);
  if (!kj.is_string()) throw SyntaxError(0, where + ": 'kind' must be a string");
  Generator g;
  g.kind = kind_from_name(kj.get<std::string>(), where);
  if (g.is_spider()) {
    only_keys(j, {"op", "kind", "inputs", "outputs", "phase"}, where);
    g.inputs = int_field(j, "inputs", where);
    g.outputs = int_field(j, "outputs", where);
    if (j.contains("phase")) g.phase = phase_from_json(j.at("phase"));
  } else {
    only_keys(j, {"op", "kind"}, where);
    switch (g.kind) {
      case GenKind::H:
      case GenKind::Id: g.inputs = g.outputs = 1; break;
      case GenKind::Swap: g.inputs = g.outputs = 2; break;
      case GenKind::Cup: g.inputs = 2; break;
      case GenKind::Cap: g.outputs = 2; break;
      default: break;
    }
  }
  return gen_term(g);
}

}  // namespace

json phase_to_json(const PhaseExpr& p) {
  json j;
  j["const_q"] = p.quarter();
  j["coeffs"] = json::object();
  for (const auto& [v, k] : p.coeffs()) j["coeffs"][v] = k;
  if (p.offset() != 0.0) j["const_rad"] = p.offset();
  return j;
}

PhaseExpr phase_from_json(const json& j) {
  only_keys(j, {"const_q", "coeffs", "const_rad"}, "phase");
  PhaseExpr p;
  if (j.contains("const_q")) p = PhaseExpr::quarter_turns(int_field(j, "const_q", "phase"));
  if (j.contains("coeffs")) {
    const json& c = j.at("coeffs");
    if (!c.is_object()) throw SyntaxError(0, "phase: 'coeffs' must be an object");
    for (const auto& [v, k] : c.items()) {
      if (!k.is_number()) throw SyntaxError(0, "phase: coefficient of '" + v + "' is not a number");
      if (!k.is_number_integer()) {
        double d = k.get<double>();
        if (d != std::floor(d))
          throw NotLinear("coefficient of '" + v + "' is not an integer");
      }
      if (v.empty()) throw SyntaxError(0, "phase: empty variable name");
      p = p + PhaseExpr::variable(v, static_cast<int>(k.get<double>()));
    }
  }
  if (j.contains("const_rad")) {
    if (!j.at("const_rad").is_number()) throw SyntaxError(0, "phase: 'const_rad' must be a number");
    p = p + PhaseExpr::radians(j.at("const_rad").get<double>());
  }
  return p;
}

json term_to_json(const Term& t) {
  switch (t.op()) {
    case Op::Compose:
      return {{"op", "compose"}, {"later", term_to_json(t.lhs())},
              {"earlier", term_to_json(t.rhs())}};
    case Op::Tensor:
      return {{"op", "tensor"}, {"left", term_to_json(t.lhs())},
              {"right", term_to_json(t.rhs())}};
    case Op::Gen: {
      const Generator& g = t.gen();
      json j = {{"op", "gen"}, {"kind", gen_kind_name(g.kind)}};
      if (g.is_spider()) {
        j["inputs"] = g.inputs;
        j["outputs"] = g.outputs;
        j["phase"] = phase_to_json(g.phase);
      }
      return j;
    }
  }
  return {};
}

Term term_from_json(const json& j) { return from_json_at(j, "$"); }

Term parse_term(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + upto, '\n'));
    throw SyntaxError(line, e.what());
  }
  try {
    return term_from_json(j);
  } catch (const InvalidArity& e) {
    throw SyntaxError(0, e.what());
  }
}

std::string serialize_term(const Term& t) { return term_to_json(t).dump(); }

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j)
      row.push_back({{"re", m.at(i, j).real()}, {"im", m.at(i, j).imag()}});
    rows.push_back(row);
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw SyntaxError(0, "matrix: expected an array of rows");
  CMatrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols)
      throw SyntaxError(0, "matrix: ragged rows");
    for (std::size_t c = 0; c < m.cols; ++c) {
      const json& e = j[r][c];
      only_keys(e, {"re", "im"}, "matrix entry");
      m.at(r, c) = cd(e.value("re", 0.0), e.value("im", 0.0));
    }
  }
  return m;
}

json param_matrix_to_json(const ParamMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) {
      json entry = json::array();
      for (const auto& [mono, c] : m.at(i, j).terms()) {
        json e = {{"re", c.real()}, {"im", c.imag()}, {"exp", json::object()}};
        for (const auto& [v, k] : mono) e["exp"][v] = k;
        entry.push_back(e);
      }
      row.push_back(entry);
    }
    rows.push_back(row);
  }
  return rows;
}

IsingHamiltonian hamiltonian_from_json(const json& j) {
  only_keys(j, {"n", "linear", "quadratic"}, "hamiltonian");
  IsingHamiltonian h;
  h.n = int_field(j, "n", "hamiltonian");
  auto index = [](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw SyntaxError(0, "hamiltonian: bad qubit index '" + s + "'");
    }
    if (used != s.size()) throw SyntaxError(0, "hamiltonian: bad qubit index '" + s + "'");
    return v - 1;
  };
  auto coefficient = [](const json& v, const std::string& key) {
    if (!v.is_number_integer())
      throw SyntaxError(0, "hamiltonian: coefficient of '" + key + "' must be an integer");
    return v.get<int>();
  };
  if (j.contains("linear")) {
    if (!j.at("linear").is_object()) throw SyntaxError(0, "hamiltonian: 'linear' must be an object");
    for (const auto& [k, v] : j.at("linear").items()) h.linear[index(k)] = coefficient(v, k);
  }
  if (j.contains("quadratic")) {
    if (!j.at("quadratic").is_object())
      throw SyntaxError(0, "hamiltonian: 'quadratic' must be an object");
    for (const auto& [k, v] : j.at("quadratic").items()) {
      auto comma = k.find(',');
      if (comma == std::string::npos)
        throw SyntaxError(0, "hamiltonian: quadratic key '" + k + "' must be 'i,j'");
      h.quadratic[{index(k.substr(0, comma)), index(k.substr(comma + 1))}] = coefficient(v, k);
    }
  }
  h.validate();
  return h;
}

json hamiltonian_to_json(const IsingHamiltonian& h) {
  json j = {{"n", h.n}, {"linear", json::object()}, {"quadratic", json::object()}};
  for (const auto& [i, c] : h.linear) j["linear"][std::to_string(i + 1)] = c;
  for (const auto& [ij, c] : h.quadratic)
    j["quadratic"][std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1)] = c;
  return j;
}

namespace {

// Undirected multigraph of a term: spiders and Hadamards become vertices,
// identities, swaps, cups and caps only route wires.
struct Drawing {
  struct Vertex {
    std::string kind;  // z, x, h, in, out, loop
    std::string label;
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;
};

Drawing draw(const Term& t) {
  std::vector<int> parent;
  std::vector<int> owner;  // vertex attached to a slot end, or -1
  auto slot = [&](int vertex) {
    parent.push_back(static_cast<int>(parent.size()));
    owner.push_back(vertex);
    return static_cast<int>(parent.size()) - 1;
  };
  std::function<int(int)> find = [&](int s) {
    while (parent[s] != s) s = parent[s] = parent[parent[s]];
    return s;
  };
  Drawing d;
  auto vertex = [&](std::string kind, std::string label) {
    d.vertices.push_back({std::move(kind), std::move(label)});
    return static_cast<int>(d.vertices.size()) - 1;
  };
  struct Ends {
    std::vector<int> in, out;
  };
  std::function<Ends(const Term&)> go = [&](const Term& u) -> Ends {
    switch (u.op()) {
      case Op::Compose: {
        Ends e = go(u.rhs());
        Ends l = go(u.lhs());
        for (std::size_t i = 0; i < e.out.size(); ++i)
          parent[find(e.out[i])] = find(l.in[i]);
        return {e.in, l.out};
      }
      case Op::Tensor: {
        Ends a = go(u.lhs());
        Ends b = go(u.rhs());
        a.in.insert(a.in.end(), b.in.begin(), b.in.end());
        a.out.insert(a.out.end(), b.out.begin(), b.out.end());
        return a;
      }
      case Op::Gen: {
        const Generator& g = u.gen();
        Ends e;
        switch (g.kind) {
          case GenKind::Empty:
            break;
          case GenKind::Id: {
            int s = slot(-1);
            e = {{s}, {s}};
            break;
          }
          case GenKind::Swap: {
            int a = slot(-1), b = slot(-1);
            e = {{a, b}, {b, a}};
            break;
          }
          case GenKind::Cup: {
            int s = slot(-1);
            e = {{s, s}, {}};
            break;
          }
          case GenKind::Cap: {
            int s = slot(-1);
            e = {{}, {s, s}};
            break;
          }
          default: {
            int v = vertex(gen_kind_name(g.kind),
                           g.is_spider() && !g.phase.is_zero() ? g.phase.to_string() : "");
            for (int i = 0; i < g.inputs; ++i) e.in.push_back(slot(v));
            for (int i = 0; i < g.outputs; ++i) e.out.push_back(slot(v));
          }
        }
        return e;
      }
    }
    return {};
  };
  Ends top = go(t);
  for (std::size_t i = 0; i < top.in.size(); ++i) {
    int s = slot(vertex("in", "in" + std::to_string(i)));
    parent[s] = find(top.in[i]);
  }
  for (std::size_t i = 0; i < top.out.size(); ++i) {
    int s = slot(vertex("out", "out" + std::to_string(i)));
    parent[s] = find(top.out[i]);
  }
  std::map<int, std::vector<int>> ends;
  std::set<int> roots;
  for (std::size_t s = 0; s < parent.size(); ++s) {
    int r = find(static_cast<int>(s));
    roots.insert(r);
    if (owner[s] >= 0) ends[r].push_back(owner[s]);
  }
  for (int r : roots) {
    auto it = ends.find(r);
    if (it == ends.end()) {
      int v = vertex("loop", "");
      d.edges.emplace_back(v, v);
      continue;
    }
    const auto& vs = it->second;
    for (std::size_t k = 0; k + 1 < vs.size(); k += 2) d.edges.emplace_back(vs[k], vs[k + 1]);
  }
  return d;
}

}  // namespace

std::string to_dot(const Term& t) {
  Drawing d = draw(t);
  std::ostringstream os;
  os << "graph zx {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    const auto& v = d.vertices[i];
    os << "  v" << i << " [";
    if (v.kind == "z") {
      os << "shape=circle, style=filled, fillcolor=\"#99dd99\", label=\"" << v.label << "\"";
    } else if (v.kind == "x") {
      os << "shape=circle, style=filled, fillcolor=\"#ff8888\", label=\"" << v.label << "\"";
    } else if (v.kind == "h") {
      os << "shape=square, style=filled, fillcolor=\"#ffff66\", label=\"\"";
    } else if (v.kind == "loop") {
      os << "shape=point, label=\"\"";
    } else {
      os << "shape=plaintext, label=\"" << v.label << "\"";
    }
    os << "];\n";
  }
  for (const auto& [a, b] : d.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_tikz(const Term& t) {
  Drawing d = draw(t);
  const int n = static_cast<int>(d.vertices.size());
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : d.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Columns by distance from the inputs; outputs go to the last column.
  std::vector<int> col(n, -1);
  std::queue<int> bfs;
  for (int i = 0; i < n; ++i)
    if (d.vertices[i].kind == "in") {
      col[i] = 0;
      bfs.push(i);
    }
  for (int round = 0; round < 2; ++round) {
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int w : adj[v])
        if (col[w] < 0) {
          col[w] = col[v] + 1;
          bfs.push(w);
        }
    }
    for (int i = 0; i < n; ++i)
      if (col[i] < 0) {
        col[i] = 1;
        bfs.push(i);
      }
  }
  int last = 0;
  for (int i = 0; i < n; ++i)
    if (d.vertices[i].kind != "out") last = std::max(last, col[i]);
  for (int i = 0; i < n; ++i)
    if (d.vertices[i].kind == "out") col[i] = last + 1;
  std::map<int, int> used;
  std::ostringstream os;
  os << "\\begin{tikzpicture}\n";
  for (int i = 0; i < n; ++i) {
    const auto& v = d.vertices[i];
    int row = used[col[i]]++;
    std::string style = v.kind == "z"   ? "zspider"
                        : v.kind == "x" ? "xspider"
                        : v.kind == "h" ? "hadamard"
                                        : "boundary";
    os << "  \\node[" << style << "] (v" << i << ") at (" << col[i] << "," << -row
       << ") {" << (v.kind == "in" || v.kind == "out" ? "" : v.label) << "};\n";
  }
  for (const auto& [a, b] : d.edges) {
    if (a == b) {
      os << "  \\draw (v" << a << ") to[loop above] (v" << b << ");\n";
    } else {
      os << "  \\draw (v" << a << ") -- (v" << b << ");\n";
    }
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace zxdiff
