#pragma once

#include <array>
#include <cstdint>

#include "pqkt/structure.hpp"

namespace pqkt {

/// Orthonormal frame organized in quadruples: for i < n,
///   e_i (unit, +1), e_{n+i} = J3 e_i (+1), e_{2n+i} = J1 e_i (-1),
///   e_{3n+i} = J2 e_i (-1),
/// so g(e_i, e_j) = eps_i delta_ij with eps = (+1 x 2n, -1 x 2n).
struct FrameData {
  std::vector<std::vector<double>> e;
  std::vector<double> eps;
};

/// Paraquaternionic Gram-Schmidt at a point, from order-0 jets of g and the
/// J triple. Candidates are coordinate directions first, then pseudo-random
/// ones from `seed`; a candidate whose residual square-norm is negative is
/// replaced by its J1 image (which flips the sign). Throws after bounded
/// retries when no candidate clears `pivot_threshold`.
FrameData build_adapted_frame(const Jet& g, const std::array<Jet, 3>& j,
                              std::uint64_t seed = 7,
                              double pivot_threshold = 1e-6);

/// g(u, v) for an order-0 metric jet
double metric_pairing(const Jet& g, const std::vector<double>& u,
                      const std::vector<double>& v);

}  // namespace pqkt
