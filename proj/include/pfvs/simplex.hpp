#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pfvs/errors.hpp"
#include "pfvs/rational.hpp"

namespace pfvs {

// Dense two-phase simplex over exact rationals: maximize c^T x subject to
// Ax <= b, x >= 0.  Entering and leaving variables follow Bland's rule
// (smallest label), which cannot cycle, so exactness doubles as a
// termination proof.  Layout: D is the tableau with the objective in row m,
// the feasibility objective in row m+1, and the artificial column at n.
struct LpSolver {
  int m, n;
  std::vector<int> N, B;
  std::vector<std::vector<Rat>> D;

  LpSolver(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
           const std::vector<Rat>& c)
      : m(static_cast<int>(b.size())),
        n(static_cast<int>(c.size())),
        N(n + 1),
        B(m),
        D(m + 2, std::vector<Rat>(n + 2, 0)) {
    for (int i = 0; i < m; ++i) {
      B[i] = n + i;
      for (int j = 0; j < n; ++j) D[i][j] = A[i][j];
      D[i][n] = -1;
      D[i][n + 1] = b[i];
    }
    for (int j = 0; j < n; ++j) {
      N[j] = j;
      D[m][j] = -c[j];
    }
    N[n] = -1;
    D[m + 1][n] = 1;
  }

  void pivot(int r, int s) {
    Rat inv = Rat(1) / D[r][s];
    for (int i = 0; i < m + 2; ++i)
      if (i != r && D[i][s] != 0) {
        Rat inv2 = D[i][s] * inv;
        for (int j = 0; j < n + 2; ++j) D[i][j] -= D[r][j] * inv2;
        D[i][s] = D[r][s] * inv2;
      }
    for (int j = 0; j < n + 2; ++j)
      if (j != s) D[r][j] *= inv;
    for (int i = 0; i < m + 2; ++i)
      if (i != r) D[i][s] *= -inv;
    D[r][s] = inv;
    std::swap(B[r], N[s]);
  }

  // phase 1 optimizes the real objective, phase 2 drives the artificial
  // variable to zero.  Returns false when unbounded in the chosen row.
  bool simplex(int phase) {
    int x = m + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j < n + 1; ++j) {
        if (phase == 1 && N[j] == -1) continue;
        if (D[x][j] < 0 && (s == -1 || N[j] < N[s])) s = j;
      }
      if (s == -1) return true;
      int r = -1;
      for (int i = 0; i < m; ++i) {
        if (D[i][s] <= 0) continue;
        if (r == -1) {
          r = i;
          continue;
        }
        Rat a = D[i][n + 1] * D[r][s], b2 = D[r][n + 1] * D[i][s];
        if (a < b2 || (a == b2 && B[i] < B[r])) r = i;
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  // Optimum and an optimal point, or nullopt when infeasible; throws on an
  // unbounded objective (the callers' programs are all bounded).
  std::optional<Rat> solve(std::vector<Rat>& x) {
    int r = 0;
    for (int i = 1; i < m; ++i)
      if (D[i][n + 1] < D[r][n + 1]) r = i;
    if (m > 0 && D[r][n + 1] < 0) {
      pivot(r, n);
      bool ok = simplex(2);
      internal_check(ok, "feasibility phase cannot be unbounded");
      if (D[m + 1][n + 1] != 0) return std::nullopt;
      for (int i = 0; i < m; ++i)
        if (B[i] == -1) {
          int s = -1;
          for (int j = 0; j < n + 1; ++j)
            if (D[i][j] != 0 && (s == -1 || N[j] < N[s])) s = j;
          if (s != -1) pivot(i, s);
        }
    }
    if (!simplex(1)) throw InternalError("objective is unbounded");
    x.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
      if (B[i] < n) x[B[i]] = D[i][n + 1];
    return D[m][n + 1];
  }
};

}  // namespace pfvs
