#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "pqkt/poly.hpp"

namespace pqkt {

inline std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

constexpr int kMaxJetOrder = 3;

/// Value and exact partial derivatives of a tensor field at a point.
///
/// data(o) is a dense array over (tensor indices, derivative indices),
/// row-major with the first slot slowest. Derivative entries are stored for
/// every index tuple but are symmetric under permutation of the derivative
/// indices. Variance of the tensor slots is the caller's convention; all
/// slots range over the chart dimension.
class Jet {
public:
  Jet() = default;
  Jet(int dim, int rank, int order);

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  int order() const { return order_; }

  std::vector<double>& data(int o) { return data_[o]; }
  const std::vector<double>& data(int o) const { return data_[o]; }

  double& at(int o, std::span<const int> idx);
  double at(int o, std::span<const int> idx) const;

  /// Order-0 access by tensor indices only.
  double& v(std::span<const int> idx) { return at(0, idx); }
  double v(std::span<const int> idx) const { return at(0, idx); }
  double& v(std::initializer_list<int> idx) { return at(0, std::span<const int>(idx.begin(), idx.size())); }
  double v(std::initializer_list<int> idx) const { return at(0, std::span<const int>(idx.begin(), idx.size())); }

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(double s);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  Jet operator-() const;

  /// Truncate to a lower order.
  Jet truncated(int order) const;

  double max_abs() const;

private:
  int dim_ = 0;
  int rank_ = 0;
  int order_ = -1;
  std::array<std::vector<double>, kMaxJetOrder + 1> data_;
};

/// Contracted tensor product with Leibniz handling of derivative slots.
/// pairs lists (slot of a, slot of b) to contract; remaining slots appear as
/// a's free slots followed by b's free slots. Result order is
/// min(a.order, b.order, ...) unless capped by max_order.
Jet contract(const Jet& a, const Jet& b,
             std::initializer_list<std::pair<int, int>> pairs,
             int max_order = kMaxJetOrder);

/// Permute tensor slots: the i-th result index feeds input slot perm[i], so
/// permute(a, {1,2,0}) gives out[x,y,z] = a[z,x,y].
Jet permute(const Jet& a, std::span<const int> perm);
Jet permute(const Jet& a, std::initializer_list<int> perm);

/// Reinterpret the first derivative index as a trailing tensor slot, so a
/// rank-r order-k jet of T becomes the rank-(r+1) order-(k-1) jet of dT with
/// the derivative direction last.
Jet deriv_slot(const Jet& a);

/// Inverse of a rank-2 jet, propagated order by order from A * A^{-1} = Id.
/// Throws Error when the value is singular or badly conditioned.
Jet invert_matrix_jet(const Jet& a, double cond_limit = 1e12);

/// Contract tensor slots of an order-0 jet against vectors; a null entry
/// leaves that slot free.
Jet apply_vectors(const Jet& value, std::span<const std::vector<double>* const> vecs);
double eval_on(const Jet& value, std::initializer_list<const std::vector<double>*> vecs);

/// Tensor field with polynomial components; evaluates exact jets.
class PolyTensor {
public:
  PolyTensor() = default;
  PolyTensor(int dim, int rank);

  int dim() const { return dim_; }
  int rank() const { return rank_; }

  PolyField& component(std::span<const int> idx);
  const PolyField& component(std::span<const int> idx) const;
  PolyField& component(std::initializer_list<int> idx);

  /// Exact jet at p. order must be <= kMaxJetOrder.
  Jet eval_jet(const ChartPoint& p, int order) const;

private:
  int dim_ = 0;
  int rank_ = 0;
  std::vector<PolyField> comps_;
  // derivative cache: derivs_[k] holds all order-k partials, indexed by
  // (component, sorted derivative tuple expanded dense)
  mutable std::vector<std::vector<PolyField>> deriv_cache_;
  void ensure_derivs(int order) const;
};

}  // namespace pqkt
