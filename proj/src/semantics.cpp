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

#include "zxdiff/semantics.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "zxdiff/errors.hpp"

namespace zxdiff {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

bool is_zero(const cd& c) { return c == cd(0.0); }
bool is_zero(const ExpPoly& p) { return p.is_zero(); }

void check_size(std::size_t rows, std::size_t cols) {
  if (rows * cols > kMaxEntries)
    throw TooLarge("intermediate tensor with " + std::to_string(rows) + "x" +
                   std::to_string(cols) + " entries");
}

bool is_identity_wiring(const Term& t) {
  if (!t.is_wiring()) return false;
  const auto& p = t.wiring();
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p[j] != static_cast<int>(j)) return false;
  return true;
}

// Interprets terms by pushing a block of column vectors through them.
template <class S>
class Evaluator {
 public:
  explicit Evaluator(const Assignment* a) : assignment_(a) {}

  Matrix<S> run(const Term& t, Matrix<S> m) {
    check_size(m.rows, m.cols);
    switch (t.op()) {
      case Op::Gen:
        return apply_gen(t.gen(), std::move(m));
      case Op::Compose:
        if (t.is_wiring()) return apply_wiring(t, std::move(m));
        return run(t.lhs(), run(t.rhs(), std::move(m)));
      case Op::Tensor:
        if (t.is_wiring()) return apply_wiring(t, std::move(m));
        return apply_tensor(t, std::move(m));
    }
    return m;
  }

  // Applies t, through its cached dense matrix when that is cheaper.
  Matrix<S> run_maybe_dense(const Term& t, Matrix<S> m) {
    if (is_identity_wiring(t)) return m;
    if (t.op() != Op::Gen && !t.is_wiring() &&
        (std::size_t{1} << t.inputs()) < m.cols &&
        t.inputs() + t.outputs() <= 20) {
      return multiply(dense(t), m);
    }
    return run(t, std::move(m));
  }

  const Matrix<S>& dense(const Term& t) {
    auto it = cache_.find(t.node());
    if (it != cache_.end()) return it->second;
    Matrix<S> d = run(t, Matrix<S>::identity(std::size_t{1} << t.inputs()));
    return cache_.emplace(t.node(), std::move(d)).first->second;
  }

 private:
  S phase(const PhaseExpr& p) const {
    if constexpr (std::is_same_v<S, cd>) {
      return std::polar(1.0, p.value(*assignment_));
    } else {
      return ExpPoly::exp_i(p);
    }
  }

  static Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
    check_size(a.rows, b.cols);
    Matrix<S> out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
      S* orow = &out.data[i * b.cols];
      for (std::size_t k = 0; k < a.cols; ++k) {
        const S& aik = a.data[i * a.cols + k];
        if (is_zero(aik)) continue;
        const S* brow = &b.data[k * b.cols];
        for (std::size_t j = 0; j < b.cols; ++j) {
          if (is_zero(brow[j])) continue;
          orow[j] += aik * brow[j];
        }
      }
    }
    return out;
  }

  Matrix<S> apply_wiring(const Term& t, Matrix<S> m) {
    if (is_identity_wiring(t)) return m;
    const auto& p = t.wiring();
    const int n = static_cast<int>(p.size());
    Matrix<S> out(m.rows, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r) {
      std::size_t o = 0;
      for (int j = 0; j < n; ++j) {
        std::size_t bit = (r >> (n - 1 - p[j])) & 1u;
        o |= bit << (n - 1 - j);
      }
      std::copy(m.data.begin() + r * m.cols, m.data.begin() + (r + 1) * m.cols,
                out.data.begin() + o * m.cols);
    }
    return out;
  }

  Matrix<S> apply_gen(const Generator& g, Matrix<S> m) {
    const std::size_t K = m.cols;
    switch (g.kind) {
      case GenKind::Id:
      case GenKind::Empty:
        return m;
      case GenKind::Swap: {
        Matrix<S> out = m;
        std::copy(m.data.begin() + 1 * K, m.data.begin() + 2 * K,
                  out.data.begin() + 2 * K);
        std::copy(m.data.begin() + 2 * K, m.data.begin() + 3 * K,
                  out.data.begin() + 1 * K);
        return out;
      }
      case GenKind::H: {
        Matrix<S> out(2, K);
        for (std::size_t k = 0; k < K; ++k) {
          out.data[k] = (m.data[k] + m.data[K + k]) * cd(kInvSqrt2);
          out.data[K + k] = (m.data[k] - m.data[K + k]) * cd(kInvSqrt2);
        }
        return out;
      }
      case GenKind::Cup: {
        Matrix<S> out(1, K);
        for (std::size_t k = 0; k < K; ++k)
          out.data[k] = m.data[k] + m.data[3 * K + k];
        return out;
      }
      case GenKind::Cap: {
        Matrix<S> out(4, K);
        for (std::size_t k = 0; k < K; ++k) {
          out.data[k] = m.data[k];
          out.data[3 * K + k] = m.data[k];
        }
        return out;
      }
      case GenKind::Z: {
        const std::size_t rows = std::size_t{1} << g.outputs;
        const std::size_t last_in = (std::size_t{1} << g.inputs) - 1;
        check_size(rows, K);
        Matrix<S> out(rows, K);
        S e = phase(g.phase);
        for (std::size_t k = 0; k < K; ++k) {
          out.data[k] += m.data[k];
          out.data[(rows - 1) * K + k] += e * m.data[last_in * K + k];
        }
        return out;
      }
      case GenKind::X: {
        const std::size_t rows = std::size_t{1} << g.outputs;
        check_size(rows, K);
        Matrix<S> out(rows, K);
        S e = phase(g.phase);
        const cd s(std::pow(2.0, -(g.inputs + g.outputs) / 2.0));
        std::vector<S> even(K), odd(K);
        for (std::size_t y = 0; y < m.rows; ++y) {
          auto& acc = (std::popcount(y) & 1) ? odd : even;
          for (std::size_t k = 0; k < K; ++k) acc[k] += m.data[y * K + k];
        }
        for (std::size_t k = 0; k < K; ++k) {
          S plus = (even[k] + odd[k]) * s;
          S minus = e * (even[k] - odd[k]) * s;
          for (std::size_t x = 0; x < rows; ++x) {
            out.data[x * K + k] =
                (std::popcount(x) & 1) ? plus - minus : plus + minus;
          }
        }
        return out;
      }
    }
    return m;
  }

  Matrix<S> apply_tensor(const Term& t, Matrix<S> m) {
    const Term& L = t.lhs();
    const Term& R = t.rhs();
    const std::size_t A = std::size_t{1} << L.inputs();
    const std::size_t C = std::size_t{1} << R.inputs();
    const std::size_t D = std::size_t{1} << R.outputs();
    const std::size_t K = m.cols;

    // R acts on the low wires of every block: regroup to C x (A*K).
    Matrix<S> mid;
    if (is_identity_wiring(R)) {
      mid = std::move(m);
    } else {
      Matrix<S> low(C, A * K);
      if (A == 1) {
        low = std::move(m);
      } else {
        for (std::size_t hi = 0; hi < A; ++hi)
          for (std::size_t lo = 0; lo < C; ++lo)
            std::copy(m.data.begin() + (hi * C + lo) * K,
                      m.data.begin() + (hi * C + lo + 1) * K,
                      low.data.begin() + lo * A * K + hi * K);
        m = Matrix<S>();
      }
      Matrix<S> r = run_maybe_dense(R, std::move(low));
      if (A == 1) {
        mid = std::move(r);
      } else {
        mid = Matrix<S>(A * D, K);
        for (std::size_t hi = 0; hi < A; ++hi)
          for (std::size_t lo = 0; lo < D; ++lo)
            std::copy(r.data.begin() + lo * A * K + hi * K,
                      r.data.begin() + lo * A * K + (hi + 1) * K,
                      mid.data.begin() + (hi * D + lo) * K);
      }
    }
    if (is_identity_wiring(L)) return mid;
    // L acts on the high wires: mid is already A x (D*K) in row-major order.
    mid.cols = D * K;
    mid.rows = A;
    Matrix<S> out = run_maybe_dense(L, std::move(mid));
    out.cols = K;
    out.rows = out.data.size() / K;
    return out;
  }

  const Assignment* assignment_;
  std::unordered_map<const Node*, Matrix<S>> cache_;
};

}  // namespace

ParamMatrix interp(const Term& t) {
  if (t.inputs() + t.outputs() > kMaxSymbolicWires)
    throw TooLarge("diagram has " + std::to_string(t.inputs() + t.outputs()) +
                   " boundary wires");
  Evaluator<ExpPoly> ev(nullptr);
  return ev.run(t, ParamMatrix::identity(std::size_t{1} << t.inputs()));
}

CMatrix apply(const Term& t, const CMatrix& input, const Assignment& a) {
  for (const auto& v : t.variables())
    if (!a.count(v)) throw UnboundVariable(v);
  Evaluator<cd> ev(&a);
  return ev.run(t, input);
}

CMatrix evaluate(const Term& t, const Assignment& a) {
  if (t.inputs() + t.outputs() > kMaxNumericWires)
    throw TooLarge("diagram has " + std::to_string(t.inputs() + t.outputs()) +
                   " boundary wires");
  for (const auto& v : t.variables())
    if (!a.count(v)) throw UnboundVariable(v);
  Evaluator<cd> ev(&a);
  const std::size_t n = std::size_t{1} << t.inputs();
  if (t.inputs() <= 2) return ev.run(t, CMatrix::identity(n));
  // One column at a time keeps intermediate tensors small; shared dense
  // subterms stay cached across columns.
  CMatrix out(std::size_t{1} << t.outputs(), n);
  for (std::size_t j = 0; j < n; ++j) {
    CMatrix e(n, 1);
    e.at(j, 0) = 1.0;
    CMatrix col = ev.run(t, std::move(e));
    for (std::size_t i = 0; i < out.rows; ++i) out.at(i, j) = col.at(i, 0);
  }
  return out;
}

cd scalar_value(const Term& t, const Assignment& a) {
  if (t.inputs() != 0 || t.outputs() != 0)
    throw WrongArity("scalar_value expects a 0 -> 0 diagram");
  return evaluate(t, a).at(0, 0);
}

ParamMatrix dM(const ParamMatrix& m, const std::string& var) {
  ParamMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) out.data[i] = m.data[i].diff(var);
  return out;
}

CMatrix eval(const ParamMatrix& m, const Assignment& a) {
  CMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) out.data[i] = m.data[i].eval(a);
  return out;
}

ParamMatrix substitute(const ParamMatrix& m, const Assignment& a) {
  ParamMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i)
    out.data[i] = m.data[i].substitute(a);
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw WrongArity("matrix shapes differ");
  double d = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    d = std::max(d, std::abs(a.data[i] - b.data[i]));
  return d;
}

bool approx_eq(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  return max_abs_diff(a, b) <= tol;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols != b.rows) throw WrongArity("matmul shape mismatch");
  CMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      cd aik = a.at(i, k);
      if (aik == cd(0.0)) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      for (std::size_t k = 0; k < b.rows; ++k)
        for (std::size_t l = 0; l < b.cols; ++l)
          out.at(i * b.rows + k, j * b.cols + l) = a.at(i, j) * b.at(k, l);
  return out;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix out(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out.at(j, i) = std::conj(a.at(i, j));
  return out;
}

CMatrix scale(const CMatrix& a, cd s) {
  CMatrix out = a;
  for (auto& v : out.data) v *= s;
  return out;
}

CMatrix add(const CMatrix& a, const CMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw WrongArity("add shape mismatch");
  CMatrix out = a;
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] += b.data[i];
  return out;
}

CMatrix delta_matrix(int n, int m) {
  if (n < 0 || m < 0) throw InvalidArity("negative arity");
  if (n + m > kMaxSymbolicWires) throw TooLarge("delta_matrix too large");
  const std::size_t dim = std::size_t{1} << (n + m);
  CMatrix out(dim, dim);
  const std::size_t low_mask = (std::size_t{1} << m) - 1;
  for (std::size_t x = 0; x < dim; ++x) {
    int plus = std::popcount(x >> m);
    int minus = std::popcount(x & low_mask);
    out.at(x, x) = static_cast<double>(plus - minus);
  }
  return out;
}

CMatrix delta_tilde(int n, int m) {
  CMatrix h(1, 1);
  h.at(0, 0) = 1.0;
  CMatrix h1(2, 2);
  h1.at(0, 0) = h1.at(0, 1) = h1.at(1, 0) = kInvSqrt2;
  h1.at(1, 1) = -kInvSqrt2;
  for (int i = 0; i < n + m; ++i) h = kron(h, h1);
  return matmul(h, matmul(delta_matrix(n, m), h));
}

CMatrix triangle_matrix() {
  CMatrix t(2, 2);
  t.at(0, 0) = t.at(0, 1) = t.at(1, 1) = 1.0;
  return t;
}

CMatrix ctriangle_matrix() {
  CMatrix c = CMatrix::identity(4);
  c.at(2, 3) = 1.0;  // |1><1| (x) |0><1|
  return c;
}

CMatrix finite_diff(const Term& t, const std::string& var, const Assignment& at,
                    double step) {
  Assignment lo = at, hi = at;
  lo[var] -= step;
  hi[var] += step;
  CMatrix d = add(evaluate(t, hi), scale(evaluate(t, lo), -1.0));
  return scale(d, 1.0 / (2.0 * step));
}

}  // namespace zxdiff
