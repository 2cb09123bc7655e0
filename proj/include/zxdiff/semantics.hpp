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

#include <complex>
#include <string>
#include <vector>

#include "zxdiff/exp_poly.hpp"
#include "zxdiff/phase.hpp"
#include "zxdiff/term.hpp"

namespace zxdiff {

// Dense row-major matrix. Row index bits follow wire order: wire 0 is the
// most significant bit.
template <class S>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<S> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  S& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const S& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = S(1.0);
    return m;
  }
};

using CMatrix = Matrix<cd>;
using ParamMatrix = Matrix<ExpPoly>;

// Boundary caps. Symbolic interpretation is limited to diagrams with at most
// kMaxSymbolicWires inputs plus outputs, numeric evaluation to
// kMaxNumericWires; intermediate tensors are capped at kMaxEntries entries.
inline constexpr int kMaxSymbolicWires = 12;
inline constexpr int kMaxNumericWires = 22;
inline constexpr std::size_t kMaxEntries = std::size_t{1} << 26;

// Symbolic interpretation as a matrix of exponential polynomials.
ParamMatrix interp(const Term& t);
// Numeric interpretation at a point; every variable must be bound.
CMatrix evaluate(const Term& t, const Assignment& a);
// Numeric action of t on the columns of `input` (2^inputs(t) rows).
CMatrix apply(const Term& t, const CMatrix& input, const Assignment& a);
// The value of a 0 -> 0 diagram.
cd scalar_value(const Term& t, const Assignment& a);

ParamMatrix dM(const ParamMatrix& m, const std::string& var);
CMatrix eval(const ParamMatrix& m, const Assignment& a);
ParamMatrix substitute(const ParamMatrix& m, const Assignment& a);

double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool approx_eq(const CMatrix& a, const CMatrix& b, double tol);

CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
CMatrix scale(const CMatrix& a, cd s);
CMatrix add(const CMatrix& a, const CMatrix& b);

// diag(|x^+| - |x^-|) over n+m wires, first n wires counted positively.
CMatrix delta_matrix(int n, int m);
// H^{(x)(n+m)} delta_matrix(n,m) H^{(x)(n+m)}.
CMatrix delta_tilde(int n, int m);
// [[1,1],[0,1]]
CMatrix triangle_matrix();
// Controlled triangle on (control, target): identity on |0>, triangle on |1>.
CMatrix ctriangle_matrix();

// Central finite difference of the numeric interpretation in `var`.
CMatrix finite_diff(const Term& t, const std::string& var, const Assignment& at,
                    double step = 1e-5);

}  // namespace zxdiff
