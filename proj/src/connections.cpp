#include "pqkt/connections.hpp"

#include "pqkt/linalg.hpp"

namespace pqkt {

Jet levi_civita_christoffel(const Jet& g, const Jet& ginv) {
  const Jet dg = deriv_slot(g);  // [i, j, a] = d_a g_ij
  // S[l,i,j] = d_i g_lj + d_j g_li - d_l g_ij
  Jet s = permute(dg, {0, 2, 1});
  s += dg;
  s -= permute(dg, {2, 0, 1});
  Jet gamma = contract(ginv, s, {{1, 0}});
  gamma *= 0.5;
  return gamma;
}

namespace {

// L[m,i,j] = A^l_i d_l B^m_j
Jet lead(const Jet& a, const Jet& db) {
  return permute(contract(a, db, {{0, 2}}), {1, 0, 2});
}

// G[m,i,j] = A^m_l d_j B^l_i
Jet grad_term(const Jet& a, const Jet& db) { return contract(a, db, {{1, 0}}); }

Jet swap_last(const Jet& t) { return permute(t, {0, 2, 1}); }

// bracket of the vector fields A d_i, B d_j: [A d_i, B d_j]^m
Jet vf_bracket(const Jet& a, const Jet& da, const Jet& b, const Jet& db) {
  return lead(a, db) - swap_last(lead(b, da));
}

// value-slot composition (J P)[m,i,j] = J^m_a P^a_{ij}
Jet jc(const Jet& j, const Jet& p) { return contract(j, p, {{1, 0}}); }

}  // namespace

Jet nijenhuis_tensor(const Jet& j) {
  const Jet dj = deriv_slot(j);
  const Jet l = lead(j, dj);
  const Jet g = grad_term(j, dj);
  Jet n = l - swap_last(l);
  n += g;
  n -= swap_last(g);
  return n;
}

Jet nijenhuis_bracket(const Jet& a, const Jet& b) {
  const Jet da = deriv_slot(a);
  const Jet db = deriv_slot(b);
  Jet s = lead(a, db) + lead(b, da) + grad_term(a, db) + grad_term(b, da);
  return s - swap_last(s);
}

Jet torsion_of(const Jet& gamma) { return gamma - swap_last(gamma); }

CpData cp_connection(const std::array<Jet, 3>& j) {
  const int dim = j[0].dim();
  const int order = j[0].order() - 1;
  std::array<Jet, 3> dj = {deriv_slot(j[0]), deriv_slot(j[1]), deriv_slot(j[2])};

  CpData out;
  Jet g0(dim, 3, order);
  for (int a = 0; a < 3; ++a) {
    const int b = cyc_next(a), c = cyc_prev(a);
    g0 += jc(j[a], vf_bracket(j[b], dj[b], j[c], dj[c]) -
                       vf_bracket(j[c], dj[c], j[b], dj[b]));
    // [J_a d_i, d_j]^m = -d_j J^m_i, [d_i, J_a d_j]^m = d_i J^m_j
    const Jet br_j_id = -swap_last(permute(dj[a], {0, 2, 1}));
    const Jet br_id_j = permute(dj[a], {0, 2, 1});
    g0 -= 2.0 * kEps[a] * jc(j[a], br_j_id - br_id_j);
  }
  g0 *= 1.0 / 12.0;
  out.gamma0 = g0;

  Jet th(dim, 3, order);
  for (int a = 0; a < 3; ++a) th += kEps[a] * nijenhuis_bracket(j[a], j[a]);
  th *= -1.0 / 12.0;
  out.torsion = th;
  out.gamma = g0 + 0.5 * th;

  // the remaining chunk of the defining formula, for the two-path check
  Jet chunk(dim, 3, order);
  for (int a = 0; a < 3; ++a) {
    const Jet br_j_id = -swap_last(permute(dj[a], {0, 2, 1}));
    const Jet br_id_j = permute(dj[a], {0, 2, 1});
    chunk += kEps[a] * (vf_bracket(j[a], dj[a], j[a], dj[a]) -
                        jc(j[a], br_j_id) - jc(j[a], br_id_j));
  }
  chunk *= -1.0 / 12.0;
  out.gamma_direct = g0 + chunk;
  return out;
}

Jet curvature_up(const Jet& gamma) {
  const Jet dg = deriv_slot(gamma);  // [l, j, k, a]
  const Jet td = permute(dg, {0, 3, 1, 2});  // [l,i,j,k] = d_i Gamma^l_jk
  const Jet tq = contract(gamma, gamma, {{2, 0}}, gamma.order() - 1);
  Jet r = td - permute(td, {0, 2, 1, 3});
  r += tq;
  r -= permute(tq, {0, 2, 1, 3});
  return r;
}

Jet curvature_04(const Jet& gamma, const Jet& g) {
  return contract(curvature_up(gamma), g, {{0, 0}});
}

Jet trace_form(const Jet& p, const Jet& g, const Jet& ginv, const Jet& j, int n) {
  const Jet pl = contract(p, g, {{0, 0}});  // [x, a, c] = g(P(x,a), d_c)
  Jet b = eps_j_trace(pl, ginv, j, 1, 2);
  b *= -1.0 / (2.0 * n - 1.0);
  return b;
}

CanonicalPData canonical_p_connection(const Jet& gamma, const Jet& torsion,
                                      const Jet& t_h, const Jet& g,
                                      const Jet& ginv,
                                      const std::array<Jet, 3>& j, int n) {
  const int dim = gamma.dim();
  CanonicalPData out;

  std::array<Jet, 3> b_forms;
  for (int a = 0; a < 3; ++a) b_forms[a] = trace_form(torsion, g, ginv, j[a], n);
  Jet b(dim, 1, b_forms[0].order());
  for (int a = 0; a < 3; ++a) b += kEps[a] * compose_form(b_forms[a], j[a]);

  Jet gp = gamma;
  for (int a = 0; a < 3; ++a) {
    Jet coeff = kEps[a] * b_forms[a] - (kEps[a] / 3.0) * compose_form(b, j[a]);
    gp += permute(contract(coeff, j[a], {}), {1, 0, 2});
  }
  Jet quad(dim, 3, torsion.order());
  for (int a = 0; a < 3; ++a) {
    const Jet jt = jc(j[a], torsion);
    quad += torsion - kEps[a] * j_slots(torsion, j[a], {1, 2}) +
            kEps[a] * j_slots(jt, j[a], {2}) + kEps[a] * j_slots(jt, j[a], {1});
  }
  quad *= -1.0 / 12.0;
  gp += quad;
  out.gamma = gp;
  out.torsion = torsion_of(gp);

  // closed form: T^P = T^H + alternation of C^H, C^H = sum eps_a a_a x J_a
  Jet ch(dim, 3, t_h.order());
  for (int a = 0; a < 3; ++a) {
    out.a_h[a] = trace_form(t_h, g, ginv, j[a], n);
    ch += kEps[a] * permute(contract(out.a_h[a], j[a], {}), {1, 0, 2});
  }
  out.torsion_formula = t_h + ch - swap_last(ch);

  Jet tt13(dim, 1, out.a_h[0].order());
  for (int a = 0; a < 3; ++a) tt13 += kEps[a] * compose_form(out.a_h[a], j[a]);
  out.tt13_residual = tt13.truncated(0).max_abs();
  return out;
}

double bundle_residual(const Jet& gamma, const std::array<Jet, 3>& j) {
  const int dim = gamma.dim();
  double worst = 0.0;
  for (int al = 0; al < 3; ++al) {
    const Jet nj = cov_deriv_endo(j[al], gamma);  // [a,m,x]
    for (int a = 0; a < dim; ++a) {
      std::vector<double> mat(static_cast<std::size_t>(dim) * dim * 3);
      std::vector<double> rhs(static_cast<std::size_t>(dim) * dim);
      for (int m = 0; m < dim; ++m)
        for (int x = 0; x < dim; ++x) {
          const std::size_t row = static_cast<std::size_t>(m) * dim + x;
          for (int be = 0; be < 3; ++be)
            mat[row * 3 + be] = j[be].v({m, x});
          rhs[row] = nj.v({a, m, x});
        }
      const LsqResult r = solve_least_squares(std::move(mat),
                                              dim * dim, 3, std::move(rhs));
      if (r.residual > worst) worst = r.residual;
    }
  }
  return worst;
}

}  // namespace pqkt
