#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqkt/linalg.hpp"
#include "pqkt/rng.hpp"

using namespace pqkt;

TEST_CASE("square full-rank system solves exactly") {
  // rows of a 3x3 well-conditioned matrix, x = (1, -2, 3)
  std::vector<double> a = {2, 1, 0, 1, 3, -1, 0, -1, 4};
  std::vector<double> x0 = {1, -2, 3};
  std::vector<double> b(3, 0.0);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) b[r] += a[3 * r + c] * x0[c];
  LsqResult res = solve_least_squares(a, 3, 3, b);
  CHECK(res.rank == 3);
  CHECK(res.residual < 1e-13);
  for (int c = 0; c < 3; ++c) CHECK(res.x[c] == doctest::Approx(x0[c]));
}

TEST_CASE("consistent overdetermined system recovers the generator") {
  Rng rng(17);
  const int rows = 40, cols = 6;
  std::vector<double> x0(cols);
  for (double& v : x0) v = rng.uniform(-2, 2);
  std::vector<double> a(rows * cols), b(rows, 0.0);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      a[r * cols + c] = rng.uniform(-1, 1);
      b[r] += a[r * cols + c] * x0[c];
    }
  LsqResult res = solve_least_squares(a, rows, cols, b);
  CHECK(res.rank == cols);
  CHECK(res.residual < 1e-12);
  for (int c = 0; c < cols; ++c)
    CHECK(res.x[c] == doctest::Approx(x0[c]).epsilon(1e-10));
}

TEST_CASE("rank deficiency is detected and free directions zeroed") {
  // column 2 = column 0 + column 1
  std::vector<double> a = {1, 0, 1, 0, 1, 1, 2, 1, 3, 1, 2, 3};
  std::vector<double> b = {1, 1, 3, 3};
  LsqResult res = solve_least_squares(a, 4, 3, b);
  CHECK(res.rank == 2);
  // the reported x must still reproduce b
  for (int r = 0; r < 4; ++r) {
    double ax = 0;
    for (int c = 0; c < 3; ++c) ax += a[r * 3 + c] * res.x[c];
    CHECK(ax == doctest::Approx(b[r]).epsilon(1e-10));
  }
}

TEST_CASE("inconsistent system reports the true residual") {
  // x column of ones against alternating b: best fit mean, residual 1
  std::vector<double> a = {1, 1, 1, 1};
  std::vector<double> b = {1, -1, 1, -1};
  LsqResult res = solve_least_squares(a, 4, 1, b);
  CHECK(res.x[0] == doctest::Approx(0.0));
  CHECK(res.residual == doctest::Approx(1.0));
}
