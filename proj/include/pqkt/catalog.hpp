#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "pqkt/structure.hpp"

namespace pqkt {

enum class ModelKind { Flat, FrameDeformed, DiffeoPushforward, Conformal };

std::string to_string(ModelKind k);
ModelKind model_kind_from_string(const std::string& s);

/// Declarative recipe for a test manifold.
struct ModelSpec {
  ModelKind kind = ModelKind::Flat;
  int n = 2;
  std::uint64_t seed = 1;
  double magnitude = 0.08;  // deformation scale for the non-flat kinds
  PolyField factor;         // conformal factor; empty means 1 + x_1/10

  std::shared_ptr<const Structure> build() const;
};

std::shared_ptr<const Structure> flat_model(int n);
/// random polynomial frame E = Id + O(magnitude); generically non-integrable
std::shared_ptr<const Structure> frame_deformed_model(int n, std::uint64_t seed,
                                                      double magnitude = 0.08);
/// frame = Jacobian of a polynomial shear diffeomorphism; integrable triple
std::shared_ptr<const Structure> diffeo_model(int n, std::uint64_t seed,
                                              double magnitude = 0.08);
std::shared_ptr<const Structure> conformal_model(std::shared_ptr<const Structure> base,
                                                 PolyField f);

/// 1 + x_1 / 10 on a 4n-dimensional chart
PolyField default_conformal_factor(int dim);

}  // namespace pqkt
