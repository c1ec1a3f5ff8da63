#pragma once

#include <vector>

#include "pfeq/ratfunc.hpp"

namespace pfeq {

template <class F>
struct LinearSolveResult {
  bool consistent = true;
  bool underdetermined = false;
  int rank = 0;
  std::vector<F> solution;     // free variables set to zero
  std::vector<F> certificate;  // on inconsistency: reduced row [coeffs..., rhs]
};

// Exact solve of A x = b over the fraction field F = K(x): rows are cleared of
// denominators and eliminated fraction-free (Bareiss), so all intermediate
// entries stay polynomial.
template <class K>
LinearSolveResult<RationalFunction<K>> solve_linear(
    const std::vector<std::vector<RationalFunction<K>>>& A,
    const std::vector<RationalFunction<K>>& b) {
  using F = RationalFunction<K>;
  using P = Polynomial<K>;
  const int m = static_cast<int>(A.size());
  const int n = m ? static_cast<int>(A[0].size()) : 0;
  if (static_cast<int>(b.size()) != m) throw MathError("solve_linear: shape mismatch");

  // clear denominators row by row; column n holds the right-hand side
  std::vector<std::vector<P>> M(m, std::vector<P>(n + 1));
  for (int i = 0; i < m; ++i) {
    P l(1L);
    for (int j = 0; j < n; ++j) l = lcm(l, A[i][j].den());
    l = lcm(l, b[i].den());
    for (int j = 0; j < n; ++j) M[i][j] = A[i][j].num() * (l / A[i][j].den());
    M[i][n] = b[i].num() * (l / b[i].den());
  }

  std::vector<int> pivot_row_of_col(n, -1);
  P prev_pivot(1L);
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    // pick the nonzero pivot of smallest degree to limit growth
    int best = -1;
    for (int i = row; i < m; ++i) {
      if (M[i][col].is_zero_poly()) continue;
      if (best < 0 || M[i][col].degree() < M[best][col].degree()) best = i;
    }
    if (best < 0) continue;  // free column
    std::swap(M[row], M[best]);
    const P& piv = M[row][col];
    for (int i = row + 1; i < m; ++i) {
      for (int j = col + 1; j <= n; ++j)
        M[i][j] = (M[i][j] * piv - M[i][col] * M[row][j]) / prev_pivot;
      M[i][col] = P();
    }
    prev_pivot = piv;
    pivot_row_of_col[col] = row;
    ++row;
  }
  const int rank = row;

  LinearSolveResult<F> out;
  out.rank = rank;
  out.underdetermined = rank < n;

  // inconsistency: a zero coefficient row with a nonzero right-hand side
  for (int i = rank; i < m; ++i) {
    if (!M[i][n].is_zero_poly()) {
      out.consistent = false;
      out.certificate.reserve(n + 1);
      for (int j = 0; j <= n; ++j) out.certificate.push_back(F(M[i][j]));
      return out;
    }
  }

  out.solution.assign(n, F(0));
  for (int col = n - 1; col >= 0; --col) {
    int r = pivot_row_of_col[col];
    if (r < 0) continue;  // free, stays zero
    F acc(M[r][n]);
    for (int j = col + 1; j < n; ++j)
      acc -= F(M[r][j]) * out.solution[j];
    out.solution[col] = acc / F(M[r][col]);
  }
  return out;
}

}  // namespace pfeq
