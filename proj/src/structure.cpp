#include "pqkt/structure.hpp"

namespace pqkt {

namespace {

Jet constant_matrix_jet(const std::vector<double>& m, int dim, int order) {
  Jet j(dim, 2, order);
  j.data(0) = m;
  return j;
}

}  // namespace

FlatStructure::FlatStructure(int n) : Structure(n) {
  const int d = dim();
  gdiag_.assign(d, 1.0);
  for (int i = 2 * n; i < d; ++i) gdiag_[i] = -1.0;
  for (auto& m : j_) m.assign(static_cast<std::size_t>(d) * d, 0.0);
  auto set = [&](int alpha, int from, int to, double s) {
    j_[alpha][static_cast<std::size_t>(to) * d + from] = s;
  };
  for (int i = 0; i < n; ++i) {
    const int a = i, b = n + i, c = 2 * n + i, e = 3 * n + i;
    // J1 (para): a <-> c, b <-> e
    set(0, a, c, 1.0);
    set(0, c, a, 1.0);
    set(0, b, e, 1.0);
    set(0, e, b, 1.0);
    // J2 (para): a <-> e, b <-> -c
    set(1, a, e, 1.0);
    set(1, e, a, 1.0);
    set(1, b, c, -1.0);
    set(1, c, b, -1.0);
    // J3 = J1 J2 (complex): a -> b -> -a, c -> -e -> -c
    set(2, a, b, 1.0);
    set(2, b, a, -1.0);
    set(2, c, e, -1.0);
    set(2, e, c, 1.0);
  }
}

Jet FlatStructure::metric_jet(const ChartPoint& p, int order) const {
  if (static_cast<int>(p.coords.size()) != dim()) throw Error("metric_jet: point dimension mismatch");
  Jet g(dim(), 2, order);
  for (int i = 0; i < dim(); ++i) g.data(0)[static_cast<std::size_t>(i) * dim() + i] = gdiag_[i];
  return g;
}

Jet FlatStructure::cstruct_jet(int alpha, const ChartPoint& p, int order) const {
  if (static_cast<int>(p.coords.size()) != dim()) throw Error("cstruct_jet: point dimension mismatch");
  return constant_matrix_jet(j_[alpha], dim(), order);
}

DeformedStructure::DeformedStructure(int n, PolyTensor frame)
    : Structure(n), flat_(n), frame_(std::move(frame)) {
  if (frame_.dim() != dim() || frame_.rank() != 2) throw Error("DeformedStructure: frame must be a (1,1) field on the chart");
}

Jet DeformedStructure::frame_inverse(const ChartPoint& p, int order) const {
  return invert_matrix_jet(frame_.eval_jet(p, order));
}

Jet DeformedStructure::metric_jet(const ChartPoint& p, int order) const {
  const Jet einv = frame_inverse(p, order);
  const Jet g0 = flat_.metric_jet(p, order);
  // g_ab = (E^{-1})^c_a g0_cd (E^{-1})^d_b
  const Jet t = contract(g0, einv, {{0, 0}}, order);
  return contract(t, einv, {{0, 0}}, order);
}

Jet DeformedStructure::cstruct_jet(int alpha, const ChartPoint& p, int order) const {
  const Jet e = frame_.eval_jet(p, order);
  const Jet einv = frame_inverse(p, order);
  const Jet j0 = flat_.cstruct_jet(alpha, p, order);
  return contract(contract(e, j0, {{1, 0}}, order), einv, {{1, 0}}, order);
}

Jet reciprocal_jet(const Jet& s) {
  if (s.rank() != 0) throw Error("reciprocal_jet: scalar jet required");
  const double v = s.data(0)[0];
  if (v == 0.0) throw Error("reciprocal_jet: zero value");
  const int dim = s.dim();
  Jet r(dim, 0, s.order());
  r.data(0)[0] = 1.0 / v;
  std::vector<int> d(kMaxJetOrder, 0);
  for (int o = 1; o <= s.order(); ++o) {
    const std::size_t dtuples = ipow(dim, o);
    for (std::size_t dt = 0; dt < dtuples; ++dt) {
      std::size_t rem = dt;
      for (int i = o - 1; i >= 0; --i) {
        d[i] = static_cast<int>(rem % dim);
        rem /= dim;
      }
      double acc = 0.0;
      for (int mask = 1; mask < (1 << o); ++mask) {
        int os = 0;
        std::size_t ds = 0, dc = 0;
        for (int bit = 0; bit < o; ++bit) {
          if (mask & (1 << bit)) {
            ds = ds * dim + d[bit];
            ++os;
          } else {
            dc = dc * dim + d[bit];
          }
        }
        acc += s.data(os)[ds] * r.data(o - os)[dc];
      }
      r.data(o)[dt] = -acc / v;
    }
  }
  return r;
}

ConformalStructure::ConformalStructure(std::shared_ptr<const Structure> base, PolyField f,
                                       bool reciprocal)
    : Structure(base->n()), base_(std::move(base)), f_(std::move(f)), reciprocal_(reciprocal) {
  if (f_.dim() != dim()) throw Error("ConformalStructure: factor dimension mismatch");
}

Jet ConformalStructure::factor_jet(const ChartPoint& p, int order) const {
  PolyTensor scalar(dim(), 0);
  scalar.component(std::initializer_list<int>{}) = f_;
  Jet s = scalar.eval_jet(p, order);
  if (s.data(0)[0] <= 0.0) throw Error("ConformalStructure: nonpositive factor at sample point");
  return reciprocal_ ? reciprocal_jet(s) : s;
}

Jet ConformalStructure::metric_jet(const ChartPoint& p, int order) const {
  return contract(factor_jet(p, order), base_->metric_jet(p, order), {}, order);
}

Jet ConformalStructure::cstruct_jet(int alpha, const ChartPoint& p, int order) const {
  return base_->cstruct_jet(alpha, p, order);
}

}  // namespace pqkt
