#pragma once

#include <array>

#include "pqkt/jet.hpp"

namespace pqkt {

/// d ln f as a rank-1 jet, for a nonvanishing scalar jet f
Jet dlog(const Jet& f);

struct TransportData {
  Jet g_bar, ginv_bar;
  Jet gamma_bar;  // Christoffels of the transported connection
  Jet T3_bar;     // its torsion 3-form (lowered with g_bar)
};

/// Direct conformal transport of a metric paraquaternionic connection with
/// skew torsion: gbar(nbar_X Y, Z) = f g(n_X Y, Z)
///   + (df(X)g(Y,Z) + df(Y)g(X,Z) - df(Z)g(X,Y))/2
///   - (1/2) sum_a eps_a (J_a df ^ F_a)(X,Y,Z).
TransportData transport_connection(const Jet& g, const Jet& ginv,
                                   const std::array<Jet, 3>& j,
                                   const Jet& gamma, const Jet& f);

}  // namespace pqkt
