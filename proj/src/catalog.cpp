#include "pqkt/catalog.hpp"

#include "pqkt/rng.hpp"

namespace pqkt {

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::Flat: return "flat";
    case ModelKind::FrameDeformed: return "frame-deformed";
    case ModelKind::DiffeoPushforward: return "diffeo-pushforward";
    case ModelKind::Conformal: return "conformal";
  }
  throw Error("unknown model kind");
}

ModelKind model_kind_from_string(const std::string& s) {
  if (s == "flat") return ModelKind::Flat;
  if (s == "frame-deformed") return ModelKind::FrameDeformed;
  if (s == "diffeo-pushforward") return ModelKind::DiffeoPushforward;
  if (s == "conformal") return ModelKind::Conformal;
  throw Error("unknown model kind: " + s);
}

PolyField default_conformal_factor(int dim) {
  PolyField f = PolyField::constant(dim, 1.0);
  f += 0.1 * PolyField::coordinate(dim, 0);
  return f;
}

std::shared_ptr<const Structure> flat_model(int n) {
  return std::make_shared<FlatStructure>(n);
}

std::shared_ptr<const Structure> frame_deformed_model(int n, std::uint64_t seed,
                                                      double magnitude) {
  const int dim = 4 * n;
  Rng rng(seed * 0x9e37u + 0xdeadbeefULL);
  PolyTensor e(dim, 2);
  for (int i = 0; i < dim; ++i)
    e.component({i, i}) += PolyField::constant(dim, 1.0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      if (rng.uniform(0.0, 1.0) > 0.4) continue;
      const int k = static_cast<int>(rng.next() % dim);
      const double c = rng.uniform(-magnitude, magnitude);
      e.component({i, j}) += c * PolyField::coordinate(dim, k);
    }
  return std::make_shared<DeformedStructure>(n, std::move(e));
}

std::shared_ptr<const Structure> diffeo_model(int n, std::uint64_t seed, double magnitude) {
  // phi^i = x_i + sum c x_j x_k with j,k > i has a unipotent upper-triangular
  // Jacobian E(x). The pullback of the constant triple under phi is
  // E^{-1} J E, which is integrable; E^{-1} is polynomial because E - Id is
  // nilpotent, so conjugate by the exact inverse frame.
  const int dim = 4 * n;
  Rng rng(seed * 0x85ebu + 0xc0ffeeULL);
  PolyTensor e(dim, 2);
  for (int i = 0; i < dim; ++i)
    e.component({i, i}) += PolyField::constant(dim, 1.0);
  for (int i = 0; i < dim - 2; ++i) {
    const int terms = 1 + static_cast<int>(rng.next() % 3);
    for (int t = 0; t < terms; ++t) {
      const int j = i + 1 + static_cast<int>(rng.next() % (dim - i - 1));
      const int k = i + 1 + static_cast<int>(rng.next() % (dim - i - 1));
      const double c = rng.uniform(-magnitude, magnitude);
      // d/dx_j (c x_j x_k) and d/dx_k contributions of phi^i
      e.component({i, j}) += c * PolyField::coordinate(dim, k);
      e.component({i, k}) += c * PolyField::coordinate(dim, j);
    }
  }
  // E^{-1} = sum_k (Id - E)^k, a finite sum since Id - E is strictly upper
  // triangular
  PolyTensor nilp(dim, 2);  // Id - E
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      nilp.component({i, j}) -= e.component({i, j});
      if (i == j) nilp.component({i, j}) += PolyField::constant(dim, 1.0);
    }
  PolyTensor einv(dim, 2), power(dim, 2);
  for (int i = 0; i < dim; ++i) {
    einv.component({i, i}) += PolyField::constant(dim, 1.0);
    power.component({i, i}) += PolyField::constant(dim, 1.0);
  }
  for (int k = 1; k < dim; ++k) {
    PolyTensor next(dim, 2);
    bool nonzero = false;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        PolyField acc(dim);
        for (int l = 0; l < dim; ++l)
          acc += power.component({i, l}) * nilp.component({l, j});
        nonzero = nonzero || !acc.is_zero();
        next.component({i, j}) = std::move(acc);
      }
    if (!nonzero) break;
    power = next;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        einv.component({i, j}) += next.component({i, j});
  }
  return std::make_shared<DeformedStructure>(n, std::move(einv));
}

std::shared_ptr<const Structure> conformal_model(std::shared_ptr<const Structure> base,
                                                 PolyField f) {
  return std::make_shared<ConformalStructure>(std::move(base), std::move(f));
}

std::shared_ptr<const Structure> ModelSpec::build() const {
  switch (kind) {
    case ModelKind::Flat: return flat_model(n);
    case ModelKind::FrameDeformed: return frame_deformed_model(n, seed, magnitude);
    case ModelKind::DiffeoPushforward: return diffeo_model(n, seed, magnitude);
    case ModelKind::Conformal: {
      PolyField f = factor.is_zero() ? default_conformal_factor(4 * n) : factor;
      return conformal_model(flat_model(n), std::move(f));
    }
  }
  throw Error("unknown model kind");
}

}  // namespace pqkt
