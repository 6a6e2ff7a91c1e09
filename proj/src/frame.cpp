#include "pqkt/frame.hpp"

#include <cmath>

#include "pqkt/rng.hpp"

namespace pqkt {

double metric_pairing(const Jet& g, const std::vector<double>& u,
                      const std::vector<double>& v) {
  const int d = g.dim();
  double s = 0.0;
  for (int i = 0; i < d; ++i) {
    if (u[i] == 0.0) continue;
    for (int j = 0; j < d; ++j) s += u[i] * g.data(0)[static_cast<std::size_t>(i) * d + j] * v[j];
  }
  return s;
}

namespace {

std::vector<double> mat_apply(const Jet& j, const std::vector<double>& v) {
  const int d = j.dim();
  std::vector<double> r(d, 0.0);
  for (int m = 0; m < d; ++m)
    for (int k = 0; k < d; ++k) r[m] += j.data(0)[static_cast<std::size_t>(m) * d + k] * v[k];
  return r;
}

}  // namespace

FrameData build_adapted_frame(const Jet& g, const std::array<Jet, 3>& j,
                              std::uint64_t seed, double pivot_threshold) {
  const int d = g.dim();
  const int n = d / 4;
  FrameData f;
  f.e.assign(d, {});
  f.eps.assign(d, 0.0);

  Rng rng(seed);
  std::vector<std::vector<double>> chosen;  // all frame vectors so far
  std::vector<double> chosen_eps;

  int candidate_index = 0;
  const int max_candidates = 64 * d;
  for (int q = 0; q < n; ++q) {
    std::vector<double> v;
    double norm2 = 0.0;
    bool found = false;
    while (candidate_index < max_candidates) {
      if (candidate_index < d) {
        v.assign(d, 0.0);
        v[candidate_index] = 1.0;
      } else {
        v.resize(d);
        for (double& x : v) x = rng.uniform(-1.0, 1.0);
      }
      ++candidate_index;
      // project out everything already chosen (g(e_k, e_k) = eps_k)
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        const double c = chosen_eps[k] * metric_pairing(g, v, chosen[k]);
        for (int i = 0; i < d; ++i) v[i] -= c * chosen[k][i];
      }
      norm2 = metric_pairing(g, v, v);
      if (std::abs(norm2) > pivot_threshold) {
        found = true;
        break;
      }
    }
    if (!found) throw Error("build_adapted_frame: no usable pivot direction");
    if (norm2 < 0.0) {
      // J1 flips the sign of g(v, v) and stays orthogonal to the previous
      // quadruples (they are J-invariant subspaces)
      v = mat_apply(j[0], v);
      norm2 = metric_pairing(g, v, v);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& x : v) x *= inv;

    f.e[q] = v;
    f.e[n + q] = mat_apply(j[2], v);
    f.e[2 * n + q] = mat_apply(j[0], v);
    f.e[3 * n + q] = mat_apply(j[1], v);
    f.eps[q] = 1.0;
    f.eps[n + q] = 1.0;
    f.eps[2 * n + q] = -1.0;
    f.eps[3 * n + q] = -1.0;
    for (int s = 0; s < 4; ++s) {
      chosen.push_back(f.e[s * n + q]);
      chosen_eps.push_back(f.eps[s * n + q]);
    }
  }
  return f;
}

}  // namespace pqkt
