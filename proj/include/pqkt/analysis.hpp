#pragma once

#include <array>

#include "pqkt/connections.hpp"
#include "pqkt/structure.hpp"

namespace pqkt {

/// Everything the identity suites consume at one sample point. All traces are
/// g-contractions (equivalently, eps-weighted adapted-frame sums). 1-forms,
/// 2-forms, ... are (0,r) jets; covariant derivatives carry the derivative
/// slot first.
struct PointData {
  int n = 0, dim = 0;
  ChartPoint p;

  Jet g, ginv;           // order 3
  std::array<Jet, 3> j;  // order 3
  Jet gamma_g;           // Levi-Civita, order 2

  std::array<Jet, 3> F;         // Kaehler forms, order 3
  std::array<Jet, 3> dF;        // order 2
  std::array<Jet, 3> dFp, dFm;  // type parts w.r.t. J_alpha, order 1
  std::array<Jet, 3> delta_F;   // codifferentials, order 1
  std::array<Jet, 3> theta;     // Lee forms, order 1
  std::array<std::array<Jet, 3>, 3> theta_cross;  // theta_{alpha,beta}, order 1

  // the PQKT layer; only populated when n > 1 (c2/c7 have 1/(1-n))
  bool pqkt_layer = false;
  std::array<Jet, 3> K, C, A, omega;  // order 1
  std::array<Jet, 3> T_candidate;     // torsion of Thm 3.2 built from each alpha
  Jet T3;                             // torsion 3-form (alpha = 1 formula), order 1
  Jet Tup;                            // (1,2) torsion, order 1
  Jet gamma;                          // PQKT Christoffels, order 1
  std::array<Jet, 3> t_alpha;         // order 1
  Jet t;                              // torsion 1-form, order 1

  Jet nabla_T, nabla_g_T;  // [a,x,y,z], order 0
  Jet dT;                  // order 0
  Jet delta_T;             // 2-form, order 0
  Jet nabla_t, nabla_g_t;  // [a,x], order 0
  Jet dt;                  // order 0
  double delta_t = 0;
  std::array<Jet, 3> domega;  // order 0

  Jet Rup, R4, Rg4;  // curvatures, order 0
  Jet ric, ric_g;
  std::array<Jet, 3> rho, rho_g, rho_star;
  double scal = 0, scal_g = 0;
  std::array<double, 3> scal_alpha{}, scal_g_alpha{};
  std::array<std::array<double, 3>, 3> scal_ab{}, scal_g_ab{};

  Jet G4;                    // G[x,y,z,u] = g(T(x,y), T(z,u))
  std::array<Jet, 3> L;      // L_alpha(X,Y) = sum eps_i g(T(X,e_i),T(Y,J_a e_i))
  Jet B4, D4;                // Bianchi projector, pair-symmetry defect
  std::array<Jet, 3> dT_alpha;  // (dT)_alpha(X,Y) = sum eps_i dT(X,Y,e_i,J_a e_i)
  double normT2 = 0, normt2 = 0;
};

PointData analyze(const Structure& s, const ChartPoint& p);

/// 1-form action (J psi)(X) = -psi(J X) for a rank-1 jet
inline Jet j1(const Jet& th, const Jet& jm) { return -1.0 * compose_form(th, jm); }

/// scalar value of a rank-0 jet
inline double scalar0(const Jet& s) { return s.data(0)[0]; }

/// the Bianchi cyclic sum over the first three slots of a rank-4 jet
Jet cyclic3(const Jet& r);

/// pointwise extraction of the sp(1) 1-forms from nabla J_alpha =
/// omega_beta x J_gamma + eps_gamma omega_gamma x J_beta, by least squares
/// over all three alpha. Returns omega[alpha][a] and the fit residual.
struct OmegaFit {
  std::array<std::vector<double>, 3> omega;
  double residual = 0;
};
OmegaFit extract_omega(const Jet& gamma, const std::array<Jet, 3>& j);

}  // namespace pqkt
