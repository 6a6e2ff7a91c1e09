#include "pqkt/forms.hpp"

#include <numeric>

namespace pqkt {

Jet exterior_deriv(const Jet& psi) {
  const int r = psi.rank();
  const Jet d = deriv_slot(psi);  // [i_1..i_r, a]
  Jet out;
  for (int i = 0; i <= r; ++i) {
    // term_i[a_0..a_r] = d[a_0..no a_i..a_r, a_i]
    std::vector<int> perm(r + 1);
    for (int jj = 0; jj <= r; ++jj) {
      if (jj < i) perm[jj] = jj;
      else if (jj == i) perm[jj] = r;
      else perm[jj] = jj - 1;
    }
    Jet term = permute(d, std::span<const int>(perm.data(), perm.size()));
    if (i % 2 == 1) term *= -1.0;
    if (i == 0) out = std::move(term);
    else out += term;
  }
  return out;
}

Jet wedge11(const Jet& a, const Jet& b) {
  const Jet t = contract(a, b, {});
  return t - permute(t, {1, 0});
}

Jet wedge12(const Jet& a, const Jet& f) {
  const Jet t = contract(a, f, {});
  return t + permute(t, {1, 2, 0}) + permute(t, {2, 0, 1});
}

Jet j_slots(const Jet& psi, const Jet& j, std::span<const int> slots) {
  Jet cur = psi;
  const int r = psi.rank();
  for (int s : slots) {
    Jet raw = contract(cur, j, {{s, 0}});
    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) {
      if (i < s) perm[i] = i;
      else if (i == s) perm[i] = r - 1;
      else perm[i] = i - 1;
    }
    cur = permute(raw, std::span<const int>(perm.data(), perm.size()));
  }
  return cur;
}

Jet j_slots(const Jet& psi, const Jet& j, std::initializer_list<int> slots) {
  return j_slots(psi, j, std::span<const int>(slots.begin(), slots.size()));
}

Jet form_j_action(const Jet& j, const Jet& psi) {
  const int r = psi.rank();
  Jet cur = psi;
  for (int s = 0; s < r; ++s) cur = contract(cur, j, {{0, 0}});
  if (r % 2 == 1) cur *= -1.0;
  return cur;
}

Jet compose_form(const Jet& a, const Jet& j) { return contract(a, j, {{0, 0}}); }

namespace {

Jet three_slot_sum(const Jet& psi, const Jet& j) {
  return j_slots(psi, j, {0, 1}) + j_slots(psi, j, {0, 2}) + j_slots(psi, j, {1, 2});
}

}  // namespace

Jet proj3_mixed(const Jet& psi, const Jet& j, double eps) {
  Jet a = three_slot_sum(psi, j);
  a *= -eps;
  a += 3.0 * psi;
  a *= 0.25;
  return a;
}

double type3_residual(const Jet& psi, const Jet& j, double eps) {
  Jet r = three_slot_sum(psi, j);
  r += eps * psi;
  return r.truncated(0).max_abs();
}

double type4_22_residual(const Jet& psi, const Jet& j, double eps) {
  Jet r = three_slot_sum(psi, j);
  r += eps * psi;
  return r.truncated(0).max_abs();
}

Jet project_v2(const Jet& p, const Jet& j, double eps, Part2 part) {
  const Jet pjj = j_slots(p, j, {1, 2});
  if (part == Part2::P11) return 0.5 * (p - eps * pjj);
  const Jet jp = contract(j, p, {{1, 0}});  // J applied to the value slot
  const Jet mixed = j_slots(jp, j, {1}) + j_slots(jp, j, {2});
  if (part == Part2::P20) return 0.25 * (p + eps * pjj + eps * mixed);
  return 0.25 * (p + eps * pjj - eps * mixed);
}

Jet cov_deriv_form(const Jet& psi, const Jet& gamma) {
  const int r = psi.rank();
  const Jet d = deriv_slot(psi);
  std::vector<int> perm(r + 1);
  perm[0] = r;
  for (int i = 1; i <= r; ++i) perm[i] = i - 1;
  Jet out = permute(d, std::span<const int>(perm.data(), perm.size()));
  for (int s = 0; s < r; ++s) {
    // Gamma^c_{a i_s} psi[.. c ..]; raw slots: psi-others, a, i_s
    Jet raw = contract(psi, gamma, {{s, 0}});
    perm[0] = r - 1;
    for (int k = 0; k < r; ++k) {
      if (k == s) perm[k + 1] = r;
      else perm[k + 1] = (k < s) ? k : k - 1;
    }
    out -= permute(raw, std::span<const int>(perm.data(), perm.size()));
  }
  return out;
}

Jet cov_deriv_endo(const Jet& t, const Jet& gamma) {
  const Jet d = deriv_slot(t);             // [m, j, a]
  Jet out = permute(d, {2, 0, 1});         // [a, m, j]
  out += permute(contract(gamma, t, {{2, 0}}), {1, 0, 2});  // Gamma^m_{ac} t^c_j
  out -= permute(contract(gamma, t, {{0, 1}}), {0, 2, 1});  // Gamma^c_{aj} t^m_c
  return out;
}

Jet eps_trace(const Jet& psi, const Jet& ginv, int s1, int s2) {
  return contract(psi, ginv, {{s1, 0}, {s2, 1}});
}

Jet eps_j_trace(const Jet& psi, const Jet& ginv, const Jet& j, int s1, int s2) {
  const Jet m = contract(ginv, j, {{1, 1}});  // M^{ac} = g^{ab} J^c_b
  return contract(psi, m, {{s1, 0}, {s2, 1}});
}

}  // namespace pqkt
