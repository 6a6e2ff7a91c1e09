#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqkt/poly.hpp"

using namespace pqkt;

TEST_CASE("evaluation of assembled polynomials") {
  // 2 + 3 x0 - x1^2 x2
  PolyField f = PolyField::constant(3, 2.0);
  f += 3.0 * PolyField::coordinate(3, 0);
  PolyField q = PolyField::coordinate(3, 1) * PolyField::coordinate(3, 1) *
                PolyField::coordinate(3, 2);
  f -= q;
  const ChartPoint p{{0.5, -2.0, 3.0}};
  CHECK(f.eval(p) == doctest::Approx(2.0 + 1.5 - 4.0 * 3.0));
}

TEST_CASE("derivative is exact") {
  PolyField f(2);
  f.add_term({3, 1}, 2.0);   // 2 x^3 y
  f.add_term({0, 2}, -1.0);  // -y^2
  const PolyField fx = f.derivative(0);  // 6 x^2 y
  const PolyField fy = f.derivative(1);  // 2 x^3 - 2 y
  const ChartPoint p{{1.5, -0.5}};
  CHECK(fx.eval(p) == doctest::Approx(6.0 * 2.25 * -0.5));
  CHECK(fy.eval(p) == doctest::Approx(2.0 * 3.375 + 1.0));
  CHECK(f.derivative(0).derivative(0).derivative(0).derivative(0).is_zero());
}

TEST_CASE("product rule holds at sample points") {
  PolyField a(2), b(2);
  a.add_term({2, 0}, 1.0);
  a.add_term({0, 1}, -3.0);
  b.add_term({1, 1}, 2.0);
  b.add_term({0, 0}, 0.5);
  const PolyField ab = a * b;
  for (double x : {-0.7, 0.0, 1.3})
    for (double y : {-1.1, 0.4}) {
      const ChartPoint p{{x, y}};
      CHECK(ab.eval(p) == doctest::Approx(a.eval(p) * b.eval(p)));
      CHECK(ab.derivative(0).eval(p) ==
            doctest::Approx(a.derivative(0).eval(p) * b.eval(p) +
                            a.eval(p) * b.derivative(0).eval(p)));
    }
}

TEST_CASE("zero coefficients are dropped") {
  PolyField f(2);
  f.add_term({1, 0}, 1.0);
  f.add_term({1, 0}, -1.0);
  CHECK(f.is_zero());
  CHECK((f + f).terms().empty());
}
