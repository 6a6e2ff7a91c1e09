#include "pqkt/poly.hpp"

#include <cmath>

namespace pqkt {

PolyField PolyField::constant(int dim, double c) {
  PolyField p(dim);
  p.add_term(std::vector<int>(dim, 0), c);
  return p;
}

PolyField PolyField::coordinate(int dim, int var) {
  if (var < 0 || var >= dim) throw Error("PolyField::coordinate: var out of range");
  PolyField p(dim);
  std::vector<int> e(dim, 0);
  e[var] = 1;
  p.add_term(std::move(e), 1.0);
  return p;
}

void PolyField::add_term(std::vector<int> exps, double coeff) {
  if (static_cast<int>(exps.size()) != dim_) throw Error("PolyField::add_term: exponent length mismatch");
  for (int e : exps)
    if (e < 0) throw Error("PolyField::add_term: negative exponent");
  auto [it, inserted] = terms_.try_emplace(std::move(exps), coeff);
  if (!inserted) it->second += coeff;
  if (it->second == 0.0) terms_.erase(it);
}

PolyField& PolyField::operator+=(const PolyField& o) {
  if (dim_ != o.dim_) {
    if (is_zero() && terms_.empty()) dim_ = o.dim_;
    else throw Error("PolyField: dimension mismatch");
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PolyField& PolyField::operator-=(const PolyField& o) {
  if (dim_ != o.dim_) {
    if (is_zero() && terms_.empty()) dim_ = o.dim_;
    else throw Error("PolyField: dimension mismatch");
  }
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PolyField& PolyField::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

PolyField operator*(const PolyField& a, const PolyField& b) {
  if (a.dim_ != b.dim_) throw Error("PolyField: dimension mismatch");
  PolyField r(a.dim_);
  std::vector<int> e(a.dim_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

PolyField PolyField::derivative(int var) const {
  if (var < 0 || var >= dim_) throw Error("PolyField::derivative: var out of range");
  PolyField r(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    std::vector<int> de = e;
    de[var] -= 1;
    r.add_term(std::move(de), c * e[var]);
  }
  return r;
}

double PolyField::eval(const ChartPoint& p) const {
  if (static_cast<int>(p.coords.size()) != dim_) throw Error("PolyField::eval: point dimension mismatch");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = c;
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < e[i]; ++k) m *= p.coords[i];
    acc += m;
  }
  return acc;
}

}  // namespace pqkt
