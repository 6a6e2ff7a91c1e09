#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqkt/catalog.hpp"
#include "pqkt/forms.hpp"
#include "pqkt/frame.hpp"
#include "pqkt/rng.hpp"

using namespace pqkt;

namespace {

double v0(const Jet& x) {
  double m = 0;
  for (double v : x.data(0)) m = std::max(m, std::abs(v));
  return m;
}

PolyTensor random_form(int dim, int rank, std::uint64_t seed) {
  Rng rng(seed);
  PolyTensor t(dim, rank);
  std::vector<int> idx(rank, 0);
  const int total = static_cast<int>(ipow(dim, rank));
  for (int c = 0; c < total; ++c) {
    int rem = c;
    for (int s = rank - 1; s >= 0; --s) { idx[s] = rem % dim; rem /= dim; }
    PolyField f(dim);
    std::vector<int> e1(dim, 0), e2(dim, 0);
    e1[rng.next() % dim] = 1;
    e2[rng.next() % dim] = 1;
    e2[rng.next() % dim] += 1;
    f.add_term(std::move(e1), rng.uniform(-1, 1));
    f.add_term(std::move(e2), rng.uniform(-0.5, 0.5));
    t.component(std::span<const int>(idx)) = f;
  }
  return t;
}

}  // namespace

TEST_CASE("exterior derivative of a 1-form matches the component formula") {
  const int dim = 4;
  PolyTensor t = random_form(dim, 1, 9);
  const ChartPoint p{{0.2, -0.1, 0.3, 0.15}};
  const Jet psi = t.eval_jet(p, 2);
  const Jet d = exterior_deriv(psi);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      // layout: tensor index first, derivative index last
      const int dpsi_j_by_i[] = {j, i}, dpsi_i_by_j[] = {i, j};
      CHECK(d.v({i, j}) == doctest::Approx(psi.at(1, dpsi_j_by_i) -
                                           psi.at(1, dpsi_i_by_j)).epsilon(1e-13));
    }
}

TEST_CASE("d squared is zero") {
  const int dim = 4;
  PolyTensor t = random_form(dim, 1, 13);
  const ChartPoint p{{-0.3, 0.1, 0.05, 0.4}};
  CHECK(v0(exterior_deriv(exterior_deriv(t.eval_jet(p, 3)))) < 1e-13);

  PolyTensor t2 = random_form(dim, 2, 15);
  // antisymmetrize so it is a genuine 2-form
  const Jet raw = t2.eval_jet(p, 2);
  const Jet f2 = raw - permute(raw, {1, 0});
  CHECK(v0(exterior_deriv(exterior_deriv(f2))) < 1e-13);
}

TEST_CASE("wedges evaluate to their defining formulas on random vectors") {
  const int dim = 4;
  const ChartPoint p{{0.1, 0.2, 0.3, -0.2}};
  const Jet a = random_form(dim, 1, 21).eval_jet(p, 0);
  const Jet b = random_form(dim, 1, 22).eval_jet(p, 0);
  const Jet raw = random_form(dim, 2, 23).eval_jet(p, 0);
  const Jet f = raw - permute(raw, {1, 0});

  Rng rng(40);
  std::vector<double> x(dim), y(dim), z(dim);
  for (int i = 0; i < dim; ++i) {
    x[i] = rng.uniform(-1, 1);
    y[i] = rng.uniform(-1, 1);
    z[i] = rng.uniform(-1, 1);
  }
  const double ax = eval_on(a, {&x}), ay = eval_on(a, {&y}), az = eval_on(a, {&z});
  const double bx = eval_on(b, {&x}), by = eval_on(b, {&y});
  CHECK(eval_on(wedge11(a, b), {&x, &y}) == doctest::Approx(ax * by - ay * bx));
  const double want = ax * eval_on(f, {&y, &z}) + ay * eval_on(f, {&z, &x}) +
                      az * eval_on(f, {&x, &y});
  CHECK(eval_on(wedge12(a, f), {&x, &y, &z}) == doctest::Approx(want));
}

TEST_CASE("g-contraction traces equal naive adapted-frame sums") {
  auto model = frame_deformed_model(1, 6);
  const ChartPoint p{{0.12, -0.2, 0.31, 0.07}};
  const Jet g = model->metric_jet(p, 0);
  const Jet ginv = invert_matrix_jet(g);
  std::array<Jet, 3> j = {model->cstruct_jet(0, p, 0),
                          model->cstruct_jet(1, p, 0),
                          model->cstruct_jet(2, p, 0)};
  const FrameData fr = build_adapted_frame(g, j);
  const Jet psi = random_form(4, 2, 33).eval_jet(p, 0);

  double naive = 0, naive_j = 0;
  for (std::size_t i = 0; i < fr.e.size(); ++i) {
    naive += fr.eps[i] * eval_on(psi, {&fr.e[i], &fr.e[i]});
    std::vector<double> je(fr.e.size(), 0.0);
    for (std::size_t r = 0; r < je.size(); ++r)
      for (std::size_t c = 0; c < je.size(); ++c)
        je[r] += j[1].v({static_cast<int>(r), static_cast<int>(c)}) * fr.e[i][c];
    naive_j += fr.eps[i] * eval_on(psi, {&fr.e[i], &je});
  }
  CHECK(eps_trace(psi, ginv, 0, 1).data(0)[0] ==
        doctest::Approx(naive).epsilon(1e-10));
  CHECK(eps_j_trace(psi, ginv, j[1], 0, 1).data(0)[0] ==
        doctest::Approx(naive_j).epsilon(1e-10));
}

TEST_CASE("type projector reproduces the mixed part") {
  auto model = flat_model(1);
  const ChartPoint p{{0, 0, 0, 0}};
  const Jet j = model->cstruct_jet(0, p, 0);  // J_1, eps = +1
  const Jet raw = random_form(4, 3, 44).eval_jet(p, 0);
  Jet psi(4, 3, 0);
  // alternate raw over its three slots
  psi = raw - permute(raw, {1, 0, 2}) - permute(raw, {0, 2, 1}) -
        permute(raw, {2, 1, 0}) + permute(raw, {1, 2, 0}) + permute(raw, {2, 0, 1});
  const Jet mixed = proj3_mixed(psi, j, 1.0);
  // the mixed part satisfies the type condition and projecting is idempotent
  CHECK(type3_residual(mixed, j, 1.0) < 1e-12);
  CHECK(v0(proj3_mixed(mixed, j, 1.0) - mixed) < 1e-12);
}
