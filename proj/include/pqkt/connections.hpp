#pragma once

#include <array>

#include "pqkt/forms.hpp"
#include "pqkt/jet.hpp"
#include "pqkt/structure.hpp"

namespace pqkt {

// Christoffel symbols live in rank-3 jets with layout [upper k, lower i,
// lower j]; vector-valued torsions in [value m, x, y].

/// Levi-Civita Christoffel symbols of g.
Jet levi_civita_christoffel(const Jet& g, const Jet& ginv);

/// N^m_{ij} of an endomorphism jet (needs order >= 1).
Jet nijenhuis_tensor(const Jet& j);

/// [[A,B]]^m_{ij}; satisfies [[J,J]] = 2 N.
Jet nijenhuis_bracket(const Jet& a, const Jet& b);

/// torsion of a connection, T^m_{ij} = Gamma^m_{ij} - Gamma^m_{ji}
Jet torsion_of(const Jet& gamma);

struct CpData {
  Jet gamma0;        // torsion-free part
  Jet torsion;       // T^H = -(1/6) sum eps_a N_a
  Jet gamma;         // gamma0 + T^H/2
  Jet gamma_direct;  // same connection assembled term by term from brackets
};

/// The connection preserving an almost hyper-paracomplex triple, its
/// torsion-free part and torsion.
CpData cp_connection(const std::array<Jet, 3>& j);

/// R^l_{ijk} components of R(d_i,d_j)d_k, layout [l,i,j,k]; needs the
/// Christoffel jet at order >= 1.
Jet curvature_up(const Jet& gamma);

/// (0,4) curvature R(X,Y,Z,V) = g(R(X,Y)Z, V), layout [i,j,k,v]
Jet curvature_04(const Jet& gamma, const Jet& g);

/// b_a(X) = -1/(2n-1) sum_i eps_i g(P(X,e_i), J_a e_i) for a vector-valued
/// 2-form P[m,x,y] (the trace 1-forms of Prop 2.4)
Jet trace_form(const Jet& p, const Jet& g, const Jet& ginv, const Jet& j, int n);

struct CanonicalPData {
  Jet gamma;                 // nabla^P
  Jet torsion;               // its torsion (antisymmetrized gamma)
  Jet torsion_formula;       // T^H + alternation of C^H (Prop 2.4)
  std::array<Jet, 3> a_h;    // structure 1-forms of the input torsion
  double tt13_residual = 0;  // | sum eps_a a_a o J_a |
};

/// nabla^P built from a bundle-preserving connection with torsion `torsion`
/// (vector-valued, [m,x,y]); `t_h` is the cp_connection torsion of the same
/// triple, used for the closed-form torsion expression.
CanonicalPData canonical_p_connection(const Jet& gamma, const Jet& torsion,
                                      const Jet& t_h, const Jet& g,
                                      const Jet& ginv,
                                      const std::array<Jet, 3>& j, int n);

/// How far nabla is from preserving span{J_1,J_2,J_3}: max least-squares
/// residual of fitting each nabla_a J_alpha in that span.
double bundle_residual(const Jet& gamma, const std::array<Jet, 3>& j);

/// covariant derivative of J as [a, m, x], for a (1,1) jet and Christoffels
inline Jet nabla_endo(const Jet& j, const Jet& gamma) { return cov_deriv_endo(j, gamma); }

}  // namespace pqkt
