#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqkt/jet.hpp"
#include "pqkt/rng.hpp"

using namespace pqkt;

namespace {

// random cubic polynomial entries, small coefficients
PolyTensor random_tensor(int dim, int rank, std::uint64_t seed) {
  Rng rng(seed);
  PolyTensor t(dim, rank);
  std::vector<int> idx(rank, 0);
  const int total = static_cast<int>(ipow(dim, rank));
  for (int c = 0; c < total; ++c) {
    int rem = c;
    for (int s = rank - 1; s >= 0; --s) { idx[s] = rem % dim; rem /= dim; }
    PolyField f = PolyField::constant(dim, rng.uniform(-1, 1));
    for (int term = 0; term < 3; ++term) {
      std::vector<int> exps(dim, 0);
      const int deg = 1 + static_cast<int>(rng.next() % 3);
      for (int d = 0; d < deg; ++d) exps[rng.next() % dim] += 1;
      f.add_term(std::move(exps), rng.uniform(-0.5, 0.5));
    }
    t.component(std::span<const int>(idx)) = f;
  }
  return t;
}

ChartPoint pt(std::initializer_list<double> c) { return ChartPoint{c}; }

}  // namespace

TEST_CASE("jet first derivatives match central differences") {
  const int dim = 4;
  PolyTensor t = random_tensor(dim, 2, 11);
  const ChartPoint p = pt({0.13, -0.27, 0.31, 0.05});
  const Jet j = t.eval_jet(p, 1);
  const double h = 1e-5;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int v = 0; v < dim; ++v) {
        ChartPoint hi = p, lo = p;
        hi.coords[v] += h;
        lo.coords[v] -= h;
        const double fd = (t.eval_jet(hi, 0).v({a, b}) -
                           t.eval_jet(lo, 0).v({a, b})) / (2 * h);
        const int idx[] = {a, b, v};
        CHECK(j.at(1, idx) == doctest::Approx(fd).epsilon(1e-7));
      }
}

TEST_CASE("jet second derivatives match differences of first") {
  const int dim = 3;
  PolyTensor t = random_tensor(dim, 1, 23);
  const ChartPoint p = pt({-0.2, 0.4, 0.1});
  const Jet j = t.eval_jet(p, 2);
  const double h = 1e-5;
  for (int a = 0; a < dim; ++a)
    for (int v = 0; v < dim; ++v)
      for (int w = 0; w < dim; ++w) {
        ChartPoint hi = p, lo = p;
        hi.coords[w] += h;
        lo.coords[w] -= h;
        const int d1[] = {a, v};
        const double fd = (t.eval_jet(hi, 1).at(1, d1) -
                           t.eval_jet(lo, 1).at(1, d1)) / (2 * h);
        const int d2[] = {a, v, w};
        CHECK(j.at(2, d2) == doctest::Approx(fd).epsilon(1e-6));
      }
}

TEST_CASE("contract obeys the Leibniz rule against finite differences") {
  const int dim = 3;
  PolyTensor ta = random_tensor(dim, 2, 5);
  PolyTensor tb = random_tensor(dim, 2, 7);
  const ChartPoint p = pt({0.21, -0.17, 0.33});
  const Jet c = contract(ta.eval_jet(p, 1), tb.eval_jet(p, 1), {{1, 0}});
  REQUIRE(c.order() >= 1);
  const double h = 1e-5;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int v = 0; v < dim; ++v) {
        ChartPoint hi = p, lo = p;
        hi.coords[v] += h;
        lo.coords[v] -= h;
        const Jet chi = contract(ta.eval_jet(hi, 0), tb.eval_jet(hi, 0), {{1, 0}});
        const Jet clo = contract(ta.eval_jet(lo, 0), tb.eval_jet(lo, 0), {{1, 0}});
        const double fd = (chi.v({a, b}) - clo.v({a, b})) / (2 * h);
        const int idx[] = {a, b, v};
        CHECK(c.at(1, idx) == doctest::Approx(fd).epsilon(1e-7));
      }
}

TEST_CASE("permute: result index i reads input slot perm[i]") {
  const int dim = 3;
  Jet a(dim, 3, 0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) a.v({i, j, k}) = 100 * i + 10 * j + k;
  const Jet b = permute(a, {1, 2, 0});
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y)
      for (int z = 0; z < dim; ++z)
        CHECK(b.v({x, y, z}) == a.v({z, x, y}));
}

TEST_CASE("deriv_slot exposes exact polynomial derivatives") {
  const int dim = 3;
  PolyTensor t = random_tensor(dim, 1, 31);
  const ChartPoint p = pt({0.1, 0.2, -0.3});
  const Jet d = deriv_slot(t.eval_jet(p, 2));
  for (int a = 0; a < dim; ++a)
    for (int v = 0; v < dim; ++v) {
      int idx[] = {a};
      const double exact =
          t.component(std::span<const int>(idx)).derivative(v).eval(p);
      CHECK(d.v({a, v}) == doctest::Approx(exact).epsilon(1e-14));
    }
}

TEST_CASE("invert_matrix_jet multiplies back to the identity jet") {
  const int dim = 4;
  Rng rng(3);
  PolyTensor t(dim, 2);
  for (int i = 0; i < dim; ++i) {
    t.component({i, i}) += PolyField::constant(dim, 1.0);
    for (int j = 0; j < dim; ++j)
      t.component({i, j}) +=
          rng.uniform(-0.1, 0.1) * PolyField::coordinate(dim, (i + j) % dim);
  }
  const ChartPoint p = pt({0.3, -0.2, 0.1, 0.4});
  const Jet a = t.eval_jet(p, 2);
  const Jet prod = contract(a, invert_matrix_jet(a), {{1, 0}});
  double worst = 0;
  for (int o = 0; o <= 2; ++o)
    for (std::size_t k = 0; k < prod.data(o).size(); ++k) {
      double want = 0;
      if (o == 0 && k % (dim + 1) == 0) want = 1.0;
      worst = std::max(worst, std::abs(prod.data(o)[k] - want));
    }
  CHECK(worst < 1e-12);
}

TEST_CASE("truncation and arithmetic keep orders consistent") {
  const int dim = 3;
  PolyTensor t = random_tensor(dim, 2, 41);
  const ChartPoint p = pt({0.0, 0.5, -0.5});
  const Jet a = t.eval_jet(p, 2);
  const Jet b = a.truncated(1);
  CHECK(b.order() == 1);
  CHECK((a + (-1.0) * a).max_abs() == 0.0);
  const Jet s = 2.0 * a - a;
  for (int o = 0; o <= 2; ++o)
    for (std::size_t k = 0; k < s.data(o).size(); ++k)
      CHECK(s.data(o)[k] == doctest::Approx(a.data(o)[k]));
}
