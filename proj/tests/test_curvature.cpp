#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqkt/analysis.hpp"
#include "pqkt/catalog.hpp"
#include "pqkt/connections.hpp"
#include "pqkt/rng.hpp"

using namespace pqkt;

namespace {

double v0(const Jet& x) {
  double m = 0;
  for (double v : x.data(0)) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

TEST_CASE("curvature vanishes on the flat model") {
  auto s = flat_model(2);
  for (const ChartPoint& p : sample_points(8, 3, 1)) {
    PointData d = analyze(*s, p);
    CHECK(v0(d.Rup) < 1e-13);
    CHECK(v0(d.Rg4) < 1e-13);
    CHECK(std::abs(d.scal) < 1e-12);
  }
}

TEST_CASE("curvature matches a finite-difference Christoffel oracle") {
  auto s = frame_deformed_model(1, 13);
  const ChartPoint p{{0.05, 0.2, -0.15, 0.1}};
  const int dim = 4;
  const Jet g = s->metric_jet(p, 2);
  const Jet gamma = levi_civita_christoffel(g, invert_matrix_jet(g));
  const Jet r = curvature_up(gamma);
  const double h = 1e-5;
  // dGamma[v][l][i][j] by central differences of order-0 Christoffels
  auto christoffel0 = [&](const ChartPoint& q) {
    const Jet gq = s->metric_jet(q, 1);
    return levi_civita_christoffel(gq, invert_matrix_jet(gq));
  };
  std::vector<Jet> dgam;
  for (int v = 0; v < dim; ++v) {
    ChartPoint hi = p, lo = p;
    hi.coords[v] += h;
    lo.coords[v] -= h;
    dgam.push_back((1.0 / (2 * h)) *
                   (christoffel0(hi).truncated(0) - christoffel0(lo).truncated(0)));
  }
  const Jet g0 = gamma.truncated(0);
  for (int l = 0; l < dim; ++l)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) {
          // R(d_i, d_j) d_k = (d_i Gamma_j - d_j Gamma_i + [Gamma_i, Gamma_j]) k
          double want = dgam[i].v({l, j, k}) - dgam[j].v({l, i, k});
          for (int m = 0; m < dim; ++m)
            want += g0.v({l, i, m}) * g0.v({m, j, k}) -
                    g0.v({l, j, m}) * g0.v({m, i, k});
          CHECK(r.v({l, i, j, k}) == doctest::Approx(want).epsilon(5e-5));
        }
}

TEST_CASE("Levi-Civita curvature has the classical symmetries") {
  auto s = conformal_model(flat_model(2), default_conformal_factor(8));
  for (const ChartPoint& p : sample_points(8, 2, 3)) {
    PointData d = analyze(*s, p);
    CHECK(v0(d.Rg4 + permute(d.Rg4, {1, 0, 2, 3})) < 1e-11);
    CHECK(v0(d.Rg4 + permute(d.Rg4, {0, 1, 3, 2})) < 1e-11);
    CHECK(v0(d.Rg4 - permute(d.Rg4, {2, 3, 0, 1})) < 1e-11);
    CHECK(v0(cyclic3(d.Rg4)) < 1e-11);
    CHECK(v0(d.ric_g - permute(d.ric_g, {1, 0})) < 1e-11);
  }
}

TEST_CASE("scalar traces agree with naive double contraction") {
  auto s = conformal_model(flat_model(2), default_conformal_factor(8));
  const ChartPoint p = sample_points(8, 1, 8)[0];
  PointData d = analyze(*s, p);
  double naive = 0;
  for (int i = 0; i < d.dim; ++i)
    for (int k = 0; k < d.dim; ++k)
      naive += d.ginv.v({i, k}) * d.ric_g.v({i, k});
  CHECK(d.scal_g == doctest::Approx(naive).epsilon(1e-10));
}

TEST_CASE("torsion-connection curvature invariants are consistent") {
  auto s = conformal_model(flat_model(2), default_conformal_factor(8));
  const ChartPoint p = sample_points(8, 1, 12)[0];
  PointData d = analyze(*s, p);
  REQUIRE(d.pqkt_layer);
  // R4 antisymmetric in both pairs even with torsion (metric connection)
  CHECK(v0(d.R4 + permute(d.R4, {1, 0, 2, 3})) < 1e-10);
  CHECK(v0(d.R4 + permute(d.R4, {0, 1, 3, 2})) < 1e-10);
  // dT is a genuine 4-form
  CHECK(v0(d.dT + permute(d.dT, {1, 0, 2, 3})) < 1e-10);
  CHECK(v0(d.dT + permute(d.dT, {0, 1, 3, 2})) < 1e-10);
  CHECK(v0(d.dT - permute(d.dT, {2, 3, 0, 1})) < 1e-10);
}
