#include "pqkt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pqkt/poly.hpp"

namespace pqkt {

LsqResult solve_least_squares(std::vector<double> a, int rows, int cols,
                              std::vector<double> b, double rank_tol) {
  if (static_cast<int>(a.size()) != rows * cols || static_cast<int>(b.size()) != rows)
    throw Error("solve_least_squares: shape mismatch");
  const std::vector<double> a0 = a;
  const std::vector<double> b0 = b;

  std::vector<int> perm(cols);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> colnorm2(cols, 0.0);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) colnorm2[j] += a[i * cols + j] * a[i * cols + j];
  double max_norm = 0.0;
  for (double c : colnorm2) max_norm = std::max(max_norm, std::sqrt(c));
  const double thresh = std::max(max_norm * rank_tol, 1e-300);

  const int kmax = std::min(rows, cols);
  int rank = 0;
  std::vector<double> rdiag(kmax, 0.0);
  for (int k = 0; k < kmax; ++k) {
    // pivot: column with largest remaining norm (recomputed for stability)
    int piv = k;
    double best = -1.0;
    for (int j = k; j < cols; ++j) {
      double s = 0.0;
      for (int i = k; i < rows; ++i) s += a[i * cols + j] * a[i * cols + j];
      if (s > best) {
        best = s;
        piv = j;
      }
    }
    if (piv != k) {
      for (int i = 0; i < rows; ++i) std::swap(a[i * cols + k], a[i * cols + piv]);
      std::swap(perm[k], perm[piv]);
    }
    const double nrm = std::sqrt(best);
    if (nrm <= thresh) break;
    ++rank;
    // Householder vector for column k, stored below the diagonal
    double alpha = (a[k * cols + k] >= 0.0) ? -nrm : nrm;
    double vk = a[k * cols + k] - alpha;
    a[k * cols + k] = vk;
    double vnorm2 = vk * vk;
    for (int i = k + 1; i < rows; ++i) vnorm2 += a[i * cols + k] * a[i * cols + k];
    rdiag[k] = alpha;
    if (vnorm2 > 0.0) {
      for (int j = k + 1; j < cols; ++j) {
        double dot = 0.0;
        for (int i = k; i < rows; ++i) dot += a[i * cols + k] * a[i * cols + j];
        const double f = 2.0 * dot / vnorm2;
        for (int i = k; i < rows; ++i) a[i * cols + j] -= f * a[i * cols + k];
      }
      double dot = 0.0;
      for (int i = k; i < rows; ++i) dot += a[i * cols + k] * b[i];
      const double f = 2.0 * dot / vnorm2;
      for (int i = k; i < rows; ++i) b[i] -= f * a[i * cols + k];
    }
  }

  // back-substitute on the rank x rank upper triangle
  std::vector<double> y(cols, 0.0);
  for (int k = rank - 1; k >= 0; --k) {
    double s = b[k];
    for (int j = k + 1; j < rank; ++j) s -= a[k * cols + j] * y[j];
    y[k] = s / rdiag[k];
  }
  LsqResult out;
  out.rank = rank;
  out.x.assign(cols, 0.0);
  for (int k = 0; k < cols; ++k)
    if (k < rank) out.x[perm[k]] = y[k];

  double res = 0.0;
  for (int i = 0; i < rows; ++i) {
    double s = -b0[i];
    for (int j = 0; j < cols; ++j) s += a0[i * cols + j] * out.x[j];
    res = std::max(res, std::abs(s));
  }
  out.residual = res;
  return out;
}

}  // namespace pqkt
