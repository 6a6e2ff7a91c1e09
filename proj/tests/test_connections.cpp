#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqkt/analysis.hpp"
#include "pqkt/catalog.hpp"
#include "pqkt/connections.hpp"
#include "pqkt/rng.hpp"
#include "pqkt/suites.hpp"

using namespace pqkt;

namespace {

double v0(const Jet& x) {
  double m = 0;
  for (double v : x.data(0)) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

TEST_CASE("Levi-Civita is torsion-free and metric") {
  auto s = frame_deformed_model(2, 11);
  for (const ChartPoint& p : sample_points(8, 4, 2)) {
    const Jet g = s->metric_jet(p, 2);
    const Jet gamma = levi_civita_christoffel(g, invert_matrix_jet(g));
    CHECK(v0(torsion_of(gamma)) < 1e-11);
    CHECK(v0(cov_deriv_form(g.truncated(1), gamma)) < 1e-11);
  }
}

TEST_CASE("Levi-Civita matches a finite-difference metric oracle") {
  auto s = frame_deformed_model(1, 7);
  const ChartPoint p{{0.1, -0.25, 0.2, 0.05}};
  const int dim = 4;
  const Jet g = s->metric_jet(p, 1);
  const Jet gamma = levi_civita_christoffel(g, invert_matrix_jet(g));
  const double h = 1e-6;
  // dg[v][i][j] by central differences, then the textbook formula
  std::vector<double> dg(dim * dim * dim);
  for (int v = 0; v < dim; ++v) {
    ChartPoint hi = p, lo = p;
    hi.coords[v] += h;
    lo.coords[v] -= h;
    const Jet ghi = s->metric_jet(hi, 0), glo = s->metric_jet(lo, 0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        dg[(v * dim + i) * dim + j] =
            (ghi.v({i, j}) - glo.v({i, j})) / (2 * h);
  }
  const Jet ginv0 = invert_matrix_jet(s->metric_jet(p, 0));
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        double want = 0;
        for (int l = 0; l < dim; ++l)
          want += 0.5 * ginv0.v({k, l}) *
                  (dg[(i * dim + j) * dim + l] + dg[(j * dim + i) * dim + l] -
                   dg[(l * dim + i) * dim + j]);
        CHECK(gamma.v({k, i, j}) == doctest::Approx(want).epsilon(1e-5));
      }
}

TEST_CASE("structure-preserving connection annihilates the whole triple") {
  auto s = frame_deformed_model(2, 3);
  for (const ChartPoint& p : sample_points(8, 3, 5)) {
    PointData d = analyze(*s, p);
    CpData h = cp_connection(d.j);
    CHECK(v0(h.gamma_direct - h.gamma) < 1e-10);
    for (int a = 0; a < 3; ++a)
      CHECK(v0(nabla_endo(d.j[a].truncated(1), h.gamma.truncated(0))) < 1e-10);
    CHECK(bundle_residual(h.gamma.truncated(0), d.j) < 1e-10);
  }
}

TEST_CASE("torsion connection is metric with totally skew torsion") {
  auto s = conformal_model(flat_model(2), default_conformal_factor(8));
  for (const ChartPoint& p : sample_points(8, 3, 6)) {
    PointData d = analyze(*s, p);
    REQUIRE(d.pqkt_layer);
    CHECK(v0(cov_deriv_form(d.g.truncated(1), d.gamma.truncated(0))) < 1e-10);
    // total skewness of the (0,3) torsion
    CHECK(v0(d.T3 + permute(d.T3, {1, 0, 2})) < 1e-12);
    CHECK(v0(d.T3 + permute(d.T3, {0, 2, 1})) < 1e-12);
    // and it preserves the bundle, with the extracted sp(1) forms fitting
    OmegaFit fit = extract_omega(d.gamma.truncated(0), d.j);
    CHECK(fit.residual < 1e-10);
  }
}

TEST_CASE("flat model: every connection collapses to zero") {
  auto s = flat_model(2);
  const ChartPoint p{std::vector<double>(8, 0.2)};
  PointData d = analyze(*s, p);
  CHECK(v0(d.gamma_g) == 0.0);
  CHECK(v0(d.gamma) < 1e-14);
  CpData h = cp_connection(d.j);
  CHECK(v0(h.gamma) < 1e-14);
  CHECK(v0(h.torsion) < 1e-14);
  CHECK(v0(curvature_up(d.gamma_g.truncated(1))) == 0.0);
}

TEST_CASE("uniqueness oracle pins the torsion connection") {
  auto s = conformal_model(flat_model(2), default_conformal_factor(8));
  const ChartPoint p = sample_points(8, 1, 9)[0];
  PointData d = analyze(*s, p);
  UniquenessResult u = uniqueness_oracle(d);
  CHECK(u.rank == u.unknowns);
  CHECK(u.lsq_residual < 1e-9);
  CHECK(u.match_residual < 1e-9);
}
