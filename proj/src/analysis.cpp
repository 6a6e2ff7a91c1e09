#include "pqkt/analysis.hpp"

#include "pqkt/linalg.hpp"

namespace pqkt {

Jet cyclic3(const Jet& r) {
  return r + permute(r, {1, 2, 0, 3}) + permute(r, {2, 0, 1, 3});
}

OmegaFit extract_omega(const Jet& gamma, const std::array<Jet, 3>& j) {
  const int dim = gamma.dim();
  OmegaFit fit;
  for (int a = 0; a < 3; ++a) fit.omega[a].assign(dim, 0.0);
  std::array<Jet, 3> nj;
  for (int a = 0; a < 3; ++a) nj[a] = cov_deriv_endo(j[a], gamma);
  const int rows = 3 * dim * dim;
  for (int a = 0; a < dim; ++a) {
    std::vector<double> mat(static_cast<std::size_t>(rows) * 3, 0.0);
    std::vector<double> rhs(rows);
    for (int al = 0; al < 3; ++al) {
      const int be = cyc_next(al), ga = cyc_prev(al);
      for (int m = 0; m < dim; ++m)
        for (int x = 0; x < dim; ++x) {
          const std::size_t row =
              (static_cast<std::size_t>(al) * dim + m) * dim + x;
          mat[row * 3 + be] = j[ga].v({m, x});
          mat[row * 3 + ga] = kEps[ga] * j[be].v({m, x});
          rhs[row] = nj[al].v({a, m, x});
        }
    }
    LsqResult r = solve_least_squares(std::move(mat), rows, 3, std::move(rhs));
    for (int al = 0; al < 3; ++al) fit.omega[al][a] = r.x[al];
    if (r.residual > fit.residual) fit.residual = r.residual;
  }
  return fit;
}

PointData analyze(const Structure& s, const ChartPoint& p) {
  PointData d;
  d.n = s.n();
  d.dim = s.dim();
  d.p = p;

  d.g = s.metric_jet(p, 3);
  d.ginv = invert_matrix_jet(d.g);
  for (int a = 0; a < 3; ++a) d.j[a] = s.cstruct_jet(a, p, 3);
  d.gamma_g = levi_civita_christoffel(d.g, d.ginv);

  for (int a = 0; a < 3; ++a) {
    d.F[a] = contract(d.g, d.j[a], {{1, 0}});
    d.dF[a] = exterior_deriv(d.F[a]);
    const Jet df1 = d.dF[a].truncated(1);
    d.dFp[a] = proj3_mixed(df1, d.j[a], kEps[a]);
    d.dFm[a] = df1 - d.dFp[a];
    const Jet covf = cov_deriv_form(d.F[a].truncated(2), d.gamma_g.truncated(1));
    d.delta_F[a] = -1.0 * eps_trace(covf, d.ginv, 0, 1);
    d.theta[a] = -kEps[a] * compose_form(d.delta_F[a], d.j[a]);
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      d.theta_cross[a][b] =
          kEps[a] * 0.5 * eps_j_trace(d.dFp[a], d.ginv, d.j[b], 1, 2);

  if (d.n < 2) return d;  // 1/(1-n) formulas need n > 1
  d.pqkt_layer = true;

  for (int b = 0; b < 3; ++b) {
    const int a = cyc_prev(b), c = cyc_next(b);
    Jet w = j1(d.theta[c] - d.theta[b] + (1.0 / (1.0 - d.n)) * d.theta[a], d.j[b]);
    w *= 0.5 * kEps[a];
    w += (0.5 / (1.0 - d.n)) * kEps[b] * d.theta_cross[a][c];
    d.omega[b] = w;
  }
  for (int a = 0; a < 3; ++a) {
    const int b = cyc_next(a), c = cyc_prev(a);
    // K_alpha = 1/(1-n) (eps_a J_b theta_a + eps_b theta_{a,c})
    Jet base = j1(d.theta[a], d.j[b]) + kEps[a] * kEps[b] * d.theta_cross[a][c];
    base *= kEps[a] / (1.0 - d.n);
    d.K[a] = base;
    const Jet jw = j1(d.omega[c], d.j[a]);
    d.C[a] = d.omega[b] + kEps[a] * jw;
    d.A[a] = d.omega[b] - kEps[a] * jw;
  }

  for (int a = 0; a < 3; ++a) {
    const int b = cyc_next(a), c = cyc_prev(a);
    Jet tc = form_j_action(d.j[a], d.dFp[a]);
    tc -= 0.5 * (kEps[a] * wedge12(j1(d.K[a], d.j[a]), d.F[c].truncated(1)) +
                 kEps[c] * wedge12(d.K[a], d.F[b].truncated(1)));
    d.T_candidate[a] = tc;
  }
  d.T3 = d.T_candidate[0];
  d.Tup = contract(d.ginv, d.T3, {{1, 2}});
  d.gamma = d.gamma_g.truncated(1) + 0.5 * d.Tup.truncated(1);

  for (int a = 0; a < 3; ++a)
    d.t_alpha[a] = kEps[a] * 0.5 * eps_j_trace(d.T3, d.ginv, d.j[a], 1, 2);
  d.t = j1(d.t_alpha[0], d.j[0]);

  d.nabla_T = cov_deriv_form(d.T3, d.gamma);
  d.nabla_g_T = cov_deriv_form(d.T3, d.gamma_g.truncated(1));
  d.dT = exterior_deriv(d.T3);
  d.delta_T = -1.0 * eps_trace(d.nabla_g_T, d.ginv, 0, 1);
  d.nabla_t = cov_deriv_form(d.t, d.gamma);
  d.nabla_g_t = cov_deriv_form(d.t, d.gamma_g.truncated(1));
  d.dt = exterior_deriv(d.t);
  d.delta_t = -scalar0(eps_trace(d.nabla_g_t, d.ginv, 0, 1));
  for (int a = 0; a < 3; ++a) d.domega[a] = exterior_deriv(d.omega[a]);

  d.Rup = curvature_up(d.gamma);
  d.R4 = contract(d.Rup, d.g, {{0, 0}}, 0);
  d.Rg4 = curvature_04(d.gamma_g.truncated(1), d.g);
  d.ric = eps_trace(d.R4, d.ginv, 0, 3);
  d.ric_g = eps_trace(d.Rg4, d.ginv, 0, 3);
  for (int a = 0; a < 3; ++a) {
    d.rho[a] = 0.5 * eps_j_trace(d.R4, d.ginv, d.j[a], 2, 3);
    d.rho_g[a] = 0.5 * eps_j_trace(d.Rg4, d.ginv, d.j[a], 2, 3);
    d.rho_star[a] = contract(d.rho_g[a], d.j[a], {{1, 0}});
  }
  d.scal = scalar0(contract(d.ric, d.ginv, {{0, 0}, {1, 1}}));
  d.scal_g = scalar0(contract(d.ric_g, d.ginv, {{0, 0}, {1, 1}}));
  for (int a = 0; a < 3; ++a) {
    d.scal_alpha[a] = -scalar0(eps_j_trace(d.ric, d.ginv, d.j[a], 0, 1));
    d.scal_g_alpha[a] = -scalar0(eps_j_trace(d.ric_g, d.ginv, d.j[a], 0, 1));
    for (int b = 0; b < 3; ++b) {
      d.scal_ab[a][b] =
          kEps[a] * scalar0(eps_j_trace(d.rho[a], d.ginv, d.j[b], 0, 1));
      d.scal_g_ab[a][b] =
          kEps[a] * scalar0(eps_j_trace(d.rho_g[a], d.ginv, d.j[b], 0, 1));
    }
  }

  const Jet m = contract(d.T3, d.ginv, {{2, 0}}, 1);  // [x,y,c-up]
  d.G4 = contract(m, d.T3, {{2, 2}}, 0);
  for (int a = 0; a < 3; ++a) d.L[a] = eps_j_trace(d.G4, d.ginv, d.j[a], 1, 3);
  d.B4 = cyclic3(d.R4);
  d.D4 = d.R4 - permute(d.R4, {2, 3, 0, 1});
  for (int a = 0; a < 3; ++a)
    d.dT_alpha[a] = eps_j_trace(d.dT, d.ginv, d.j[a], 2, 3);
  d.normT2 =
      scalar0(eps_trace(eps_trace(d.G4, d.ginv, 0, 2), d.ginv, 0, 1));
  d.normt2 = scalar0(contract(contract(d.t, d.ginv, {{0, 0}}), d.t, {{0, 0}}));
  return d;
}

}  // namespace pqkt
