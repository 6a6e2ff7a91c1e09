#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pqkt {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Point in a single chart. coords.size() must equal the chart dimension.
struct ChartPoint {
  std::vector<double> coords;
};

/// Exact multivariate polynomial over chart coordinates.
///
/// Terms are kept in a map from exponent multi-index to coefficient; zero
/// coefficients are never stored, so differentiation and arithmetic stay
/// exact up to float rounding.
class PolyField {
public:
  PolyField() = default;
  explicit PolyField(int dim) : dim_(dim) {}

  static PolyField constant(int dim, double c);
  /// The coordinate function x_var.
  static PolyField coordinate(int dim, int var);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * x^exps to the polynomial.
  void add_term(std::vector<int> exps, double coeff);

  PolyField& operator+=(const PolyField& o);
  PolyField& operator-=(const PolyField& o);
  PolyField& operator*=(double s);
  friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
  friend PolyField operator-(PolyField a, const PolyField& b) { return a -= b; }
  friend PolyField operator*(PolyField a, double s) { return a *= s; }
  friend PolyField operator*(double s, PolyField a) { return a *= s; }
  friend PolyField operator*(const PolyField& a, const PolyField& b);

  /// Exact partial derivative with respect to coordinate var.
  PolyField derivative(int var) const;

  double eval(const ChartPoint& p) const;

  const std::map<std::vector<int>, double>& terms() const { return terms_; }

private:
  int dim_ = 0;
  std::map<std::vector<int>, double> terms_;
};

}  // namespace pqkt
