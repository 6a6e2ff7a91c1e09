#pragma once

#include <vector>

namespace pqkt {

/// Least-squares solution of a dense row-major system A x ~= b.
struct LsqResult {
  std::vector<double> x;
  double residual = 0.0;  // max-abs of A x - b
  int rank = 0;           // numerical rank of A at rank_tol
};

/// Column-pivoted Householder QR least squares. rank_tol is relative to the
/// largest column norm; free directions (beyond the numerical rank) get
/// coefficient zero, so a full-rank system has a unique answer.
LsqResult solve_least_squares(std::vector<double> a, int rows, int cols,
                              std::vector<double> b, double rank_tol = 1e-10);

}  // namespace pqkt
