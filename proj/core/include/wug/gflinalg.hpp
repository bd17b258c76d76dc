/*
   Copyright 2026 The wug authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/// @file gflinalg.hpp
/// Dense linear algebra over F_p (p < 256) for the window-model membership
/// decisions: solve A x = b and extract a cokernel functional on failure.

#ifndef WUG_GFLINALG_HPP
#define WUG_GFLINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace wug {

struct GfSolveResult {
  bool solvable = false;
  std::vector<uint8_t> x;           // a solution when solvable (size = #cols)
  std::vector<uint8_t> functional;  // row functional f with f A = 0, f b != 0 otherwise (size = #rows)
};

/// Solve A x = b over F_p. A is row-major, rows x cols.
inline GfSolveResult gf_solve(int p, int rows, int cols, std::vector<uint8_t> A,
                              std::vector<uint8_t> b) {
  auto inv = [p](int v) {
    int r = 1, base = v % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  // track row operations: L is rows x rows with L*A_orig = A_current
  std::vector<uint8_t> L(static_cast<size_t>(rows) * static_cast<size_t>(rows), 0);
  for (int i = 0; i < rows; ++i) L[static_cast<size_t>(i) * rows + i] = 1;
  std::vector<int> pivot_col_of_row(static_cast<size_t>(rows), -1);
  std::vector<int> pivot_row_of_col(static_cast<size_t>(cols), -1);

  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (A[static_cast<size_t>(i) * cols + c]) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r) {
      for (int j = 0; j < cols; ++j) std::swap(A[static_cast<size_t>(sel) * cols + j], A[static_cast<size_t>(r) * cols + j]);
      for (int j = 0; j < rows; ++j) std::swap(L[static_cast<size_t>(sel) * rows + j], L[static_cast<size_t>(r) * rows + j]);
      std::swap(b[static_cast<size_t>(sel)], b[static_cast<size_t>(r)]);
    }
    int piv = A[static_cast<size_t>(r) * cols + c];
    int pinv = inv(piv);
    for (int j = 0; j < cols; ++j)
      A[static_cast<size_t>(r) * cols + j] = static_cast<uint8_t>(A[static_cast<size_t>(r) * cols + j] * pinv % p);
    for (int j = 0; j < rows; ++j)
      L[static_cast<size_t>(r) * rows + j] = static_cast<uint8_t>(L[static_cast<size_t>(r) * rows + j] * pinv % p);
    b[static_cast<size_t>(r)] = static_cast<uint8_t>(b[static_cast<size_t>(r)] * pinv % p);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      int f = A[static_cast<size_t>(i) * cols + c];
      if (!f) continue;
      for (int j = 0; j < cols; ++j) {
        int t = (A[static_cast<size_t>(i) * cols + j] - f * A[static_cast<size_t>(r) * cols + j]) % p;
        A[static_cast<size_t>(i) * cols + j] = static_cast<uint8_t>(t < 0 ? t + p : t);
      }
      for (int j = 0; j < rows; ++j) {
        int t = (L[static_cast<size_t>(i) * rows + j] - f * L[static_cast<size_t>(r) * rows + j]) % p;
        L[static_cast<size_t>(i) * rows + j] = static_cast<uint8_t>(t < 0 ? t + p : t);
      }
      int tb = (b[static_cast<size_t>(i)] - f * b[static_cast<size_t>(r)]) % p;
      b[static_cast<size_t>(i)] = static_cast<uint8_t>(tb < 0 ? tb + p : tb);
    }
    pivot_col_of_row[static_cast<size_t>(r)] = c;
    pivot_row_of_col[static_cast<size_t>(c)] = r;
    ++r;
  }
  GfSolveResult out;
  // inconsistent row: zero A-row with nonzero b entry -> functional is that L-row
  for (int i = r; i < rows; ++i) {
    if (b[static_cast<size_t>(i)]) {
      out.solvable = false;
      out.functional.assign(L.begin() + static_cast<long>(i) * rows, L.begin() + static_cast<long>(i + 1) * rows);
      return out;
    }
  }
  out.solvable = true;
  out.x.assign(static_cast<size_t>(cols), 0);
  for (int c = 0; c < cols; ++c) {
    int pr = pivot_row_of_col[static_cast<size_t>(c)];
    if (pr >= 0) out.x[static_cast<size_t>(c)] = b[static_cast<size_t>(pr)];
  }
  return out;
}

}  // namespace wug

#endif  // WUG_GFLINALG_HPP
