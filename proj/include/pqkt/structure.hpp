#pragma once

#include <array>
#include <memory>

#include "pqkt/jet.hpp"

namespace pqkt {

/// epsilon_1 = epsilon_2 = 1, epsilon_3 = -1
inline constexpr std::array<double, 3> kEps = {1.0, 1.0, -1.0};

/// cyclic successor / predecessor in (0,1,2)
inline int cyc_next(int a) { return (a + 1) % 3; }
inline int cyc_prev(int a) { return (a + 2) % 3; }

/// Almost paraquaternionic Hermitian structure on a 4n-dimensional chart:
/// neutral metric g and endomorphism triple (J_1, J_2, J_3) with
/// J_a^2 = eps_a, J_a J_b = -J_b J_a = -eps_c J_c (cyclic), and
/// g(J_a X, J_a Y) = -eps_a g(X, Y). Backends expose exact jets at a point.
class Structure {
public:
  explicit Structure(int n) : n_(n) {}
  virtual ~Structure() = default;

  int n() const { return n_; }
  int dim() const { return 4 * n_; }

  /// (0,2) metric jet, layout g[i][j].
  virtual Jet metric_jet(const ChartPoint& p, int order) const = 0;
  /// (1,1) jet of J_alpha (alpha in 0..2), layout J[upper][lower].
  virtual Jet cstruct_jet(int alpha, const ChartPoint& p, int order) const = 0;

private:
  int n_;
};

/// Constant standard blocks on R^{4n}: coordinates split into quadruple
/// families (i, n+i, 2n+i, 3n+i) with
///   J3 e_i = e_{n+i},  J1 e_i = e_{2n+i},  J2 e_i = e_{3n+i}
/// and g = diag(+1 x 2n, -1 x 2n).
class FlatStructure : public Structure {
public:
  explicit FlatStructure(int n);

  Jet metric_jet(const ChartPoint& p, int order) const override;
  Jet cstruct_jet(int alpha, const ChartPoint& p, int order) const override;

  const std::vector<double>& j_matrix(int alpha) const { return j_[alpha]; }
  const std::vector<double>& g_diag() const { return gdiag_; }

private:
  std::array<std::vector<double>, 3> j_;  // dense dim x dim
  std::vector<double> gdiag_;
};

/// Conjugation of the flat structure by a polynomial frame E(x):
/// J_a = E J_a^0 E^{-1}, g = E^{-T} g_0 E^{-1}. The algebra and metric
/// compatibility hold identically wherever E is invertible; integrability
/// generically does not survive.
class DeformedStructure : public Structure {
public:
  DeformedStructure(int n, PolyTensor frame);

  Jet metric_jet(const ChartPoint& p, int order) const override;
  Jet cstruct_jet(int alpha, const ChartPoint& p, int order) const override;

  const PolyTensor& frame() const { return frame_; }

private:
  Jet frame_inverse(const ChartPoint& p, int order) const;
  FlatStructure flat_;
  PolyTensor frame_;  // E[upper][lower]
};

/// Metric rescaling g -> s * g with s = f or s = 1/f for a positive
/// polynomial f; the J's are untouched.
class ConformalStructure : public Structure {
public:
  ConformalStructure(std::shared_ptr<const Structure> base, PolyField f,
                     bool reciprocal = false);

  Jet metric_jet(const ChartPoint& p, int order) const override;
  Jet cstruct_jet(int alpha, const ChartPoint& p, int order) const override;

  /// scalar jet of the factor (f or 1/f); throws if f <= 0 at p
  Jet factor_jet(const ChartPoint& p, int order) const;
  const PolyField& factor_poly() const { return f_; }
  bool reciprocal() const { return reciprocal_; }
  const Structure& base() const { return *base_; }
  std::shared_ptr<const Structure> base_ptr() const { return base_; }

private:
  std::shared_ptr<const Structure> base_;
  PolyField f_;
  bool reciprocal_;
};

/// order-`order` jet of 1/s given the jet of a nonvanishing scalar s
Jet reciprocal_jet(const Jet& s);

}  // namespace pqkt
