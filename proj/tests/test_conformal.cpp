#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pqkt/analysis.hpp"
#include "pqkt/catalog.hpp"
#include "pqkt/conformal.hpp"
#include "pqkt/rng.hpp"

using namespace pqkt;

namespace {

double v0(const Jet& x) {
  double m = 0;
  for (double v : x.data(0)) m = std::max(m, std::abs(v));
  return m;
}

PolyField generic_factor(int dim) {
  PolyField f = PolyField::constant(dim, 1.0);
  f += 0.1 * PolyField::coordinate(dim, 0);
  f += 0.05 * PolyField::coordinate(dim, 1);
  f += 0.07 * (PolyField::coordinate(dim, 2) * PolyField::coordinate(dim, 3));
  return f;
}

Jet factor_jet(const PolyField& f, const ChartPoint& p, int order) {
  PolyTensor t(f.dim(), 0);
  t.component(std::initializer_list<int>{}) = f;
  return t.eval_jet(p, order);
}

}  // namespace

TEST_CASE("dlog matches finite differences of log f") {
  const PolyField f = generic_factor(8);
  const ChartPoint p{{0.2, -0.3, 0.1, 0.4, 0.0, 0.25, -0.1, 0.3}};
  const Jet dl = dlog(factor_jet(f, p, 1));
  const double h = 1e-6;
  for (int v = 0; v < 8; ++v) {
    ChartPoint hi = p, lo = p;
    hi.coords[v] += h;
    lo.coords[v] -= h;
    const double fd = (std::log(f.eval(hi)) - std::log(f.eval(lo))) / (2 * h);
    CHECK(dl.v({v}) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("transport rescales the metric and keeps metricity") {
  auto base = flat_model(2);
  const PolyField f = generic_factor(8);
  for (const ChartPoint& p : sample_points(8, 3, 2)) {
    PointData d = analyze(*base, p);
    const Jet fj = factor_jet(f, p, 2);
    TransportData t = transport_connection(d.g, d.ginv, d.j, d.gamma, fj);
    CHECK(v0(t.g_bar - contract(fj, d.g, {})) < 1e-13);
    CHECK(v0(contract(t.g_bar, t.ginv_bar, {{1, 0}}, 0) -
             contract(d.g, d.ginv, {{1, 0}}, 0)) < 1e-12);
    CHECK(v0(cov_deriv_form(t.g_bar.truncated(1), t.gamma_bar.truncated(0))) < 1e-11);
    // the transported torsion is totally skew
    CHECK(v0(t.T3_bar + permute(t.T3_bar, {1, 0, 2})) < 1e-12);
    CHECK(v0(t.T3_bar + permute(t.T3_bar, {0, 2, 1})) < 1e-12);
  }
}

TEST_CASE("transported connection equals the rescaled model's own") {
  auto base = flat_model(2);
  const PolyField f = generic_factor(8);
  auto rescaled = conformal_model(base, f);
  for (const ChartPoint& p : sample_points(8, 2, 3)) {
    PointData lo = analyze(*base, p);
    PointData hi = analyze(*rescaled, p);
    TransportData t =
        transport_connection(lo.g, lo.ginv, lo.j, lo.gamma, factor_jet(f, p, 2));
    CHECK(v0(t.gamma_bar - hi.gamma) < 1e-10);
    CHECK(v0(t.T3_bar - hi.T3) < 1e-10);
  }
}

TEST_CASE("transport by f then 1/f is the identity") {
  auto s = conformal_model(flat_model(2), default_conformal_factor(8));
  const PolyField f = generic_factor(8);
  for (const ChartPoint& p : sample_points(8, 2, 4)) {
    PointData d = analyze(*s, p);
    const Jet fj = factor_jet(f, p, 2);
    TransportData up = transport_connection(d.g, d.ginv, d.j, d.gamma, fj);
    TransportData down = transport_connection(up.g_bar, up.ginv_bar, d.j,
                                              up.gamma_bar, reciprocal_jet(fj));
    CHECK(v0(down.g_bar - d.g) < 1e-11);
    CHECK(v0(down.gamma_bar - d.gamma) < 1e-9);
    CHECK(v0(down.T3_bar - d.T3) < 1e-10);
  }
}

TEST_CASE("torsion 1-form shifts by 2n+1 halves of d log f") {
  // t_bar = t - (2n+1) d ln f with n = 2: coefficient 5
  auto base = flat_model(2);
  const PolyField f = generic_factor(8);
  auto rescaled = conformal_model(base, f);
  for (const ChartPoint& p : sample_points(8, 3, 5)) {
    PointData lo = analyze(*base, p);
    PointData hi = analyze(*rescaled, p);
    const Jet dln = dlog(factor_jet(f, p, 1));
    CHECK(v0(hi.t - lo.t + 5.0 * dln) < 1e-11);
  }
}
