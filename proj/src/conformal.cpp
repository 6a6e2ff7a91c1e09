#include "pqkt/conformal.hpp"

#include "pqkt/analysis.hpp"
#include "pqkt/connections.hpp"
#include "pqkt/forms.hpp"
#include "pqkt/structure.hpp"

namespace pqkt {

Jet dlog(const Jet& f) {
  return contract(reciprocal_jet(f), deriv_slot(f), {});
}

TransportData transport_connection(const Jet& g, const Jet& ginv,
                                   const std::array<Jet, 3>& j,
                                   const Jet& gamma, const Jet& f) {
  const Jet df = deriv_slot(f);
  Jet rhs = contract(f, contract(gamma, g, {{0, 0}}), {});
  const Jet dgt = contract(df, g, {});  // [a,b,c] = df_a g_bc
  rhs += 0.5 * (dgt + permute(dgt, {1, 0, 2}) - permute(dgt, {1, 2, 0}));
  for (int a = 0; a < 3; ++a) {
    const Jet fa = contract(g, j[a], {{1, 0}});
    rhs -= 0.5 * kEps[a] * wedge12(j1(df, j[a]), fa);
  }
  TransportData out;
  out.g_bar = contract(f, g, {});
  out.ginv_bar = contract(reciprocal_jet(f), ginv, {});
  out.gamma_bar = contract(out.ginv_bar, rhs, {{1, 2}});
  out.T3_bar = contract(torsion_of(out.gamma_bar), out.g_bar, {{0, 0}});
  return out;
}

}  // namespace pqkt
