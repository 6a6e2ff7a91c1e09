#pragma once

#include "pqkt/jet.hpp"

namespace pqkt {

// Conventions used throughout:
//  - a k-form is a (0,k) jet; d is the unnormalized alternating sum
//    (d psi)(X_0..X_k) = sum_i (-1)^i X_i psi(..no X_i..);
//  - (a ^ b)(X,Y) = a(X) b(Y) - a(Y) b(X) for 1-forms;
//  - (a ^ F)(X,Y,Z) = a(X)F(Y,Z) + a(Y)F(Z,X) + a(Z)F(X,Y);
//  - J acts on an r-form by (J psi)(X_1..X_r) = (-1)^r psi(J X_1,..,J X_r).

Jet exterior_deriv(const Jet& psi);
Jet wedge11(const Jet& a, const Jet& b);
Jet wedge12(const Jet& a, const Jet& f);

/// psi with J substituted into the listed slots (slot order preserved).
Jet j_slots(const Jet& psi, const Jet& j, std::span<const int> slots);
Jet j_slots(const Jet& psi, const Jet& j, std::initializer_list<int> slots);

/// (-1)^r psi(J., .., J.)
Jet form_j_action(const Jet& j, const Jet& psi);
/// a(J .) for a 1-form (plain composition, no sign)
Jet compose_form(const Jet& a, const Jet& j);

/// (1,2)+(2,1) part of a 3-form with respect to J (J^2 = eps)
Jet proj3_mixed(const Jet& psi, const Jet& j, double eps);
/// residual of the (1,2)+(2,1) type condition
/// psi(JX,JY,Z)+psi(JX,Y,JZ)+psi(X,JY,JZ)+eps psi(X,Y,Z) = 0
double type3_residual(const Jet& psi, const Jet& j, double eps);
/// residual of the (2,2) type condition for a 4-form (same sum over the
/// first three slots)
double type4_22_residual(const Jet& psi, const Jet& j, double eps);

enum class Part2 { P11, P20, P02 };
/// type part of a vector-valued 2-form P[m][x][y] with respect to J
Jet project_v2(const Jet& p, const Jet& j, double eps, Part2 part);

/// covariant derivative of a (0,r) tensor, derivative slot first:
/// C[a, i_1..i_r] = d_a psi - sum_s Gamma^c_{a i_s} psi[.. c ..]
Jet cov_deriv_form(const Jet& psi, const Jet& gamma);
/// covariant derivative of a (1,1) tensor, result [a, m, j]
Jet cov_deriv_endo(const Jet& t, const Jet& gamma);

/// sum_i eps_i psi(.., e_i, .., e_i, ..) as the g^{ab} contraction of the
/// two listed slots (frame independent)
Jet eps_trace(const Jet& psi, const Jet& ginv, int s1, int s2);
/// sum_i eps_i psi(.., e_i, .., J e_i, ..)
Jet eps_j_trace(const Jet& psi, const Jet& ginv, const Jet& j, int s1, int s2);

}  // namespace pqkt
