#include "pqkt/jet.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>

namespace pqkt {

Jet::Jet(int dim, int rank, int order) : dim_(dim), rank_(rank), order_(order) {
  if (order < 0 || order > kMaxJetOrder) throw Error("Jet: unsupported order");
  for (int o = 0; o <= order; ++o) data_[o].assign(ipow(dim, rank + o), 0.0);
}

double& Jet::at(int o, std::span<const int> idx) {
  std::size_t f = 0;
  for (int i : idx) f = f * dim_ + i;
  return data_[o][f];
}

double Jet::at(int o, std::span<const int> idx) const {
  std::size_t f = 0;
  for (int i : idx) f = f * dim_ + i;
  return data_[o][f];
}

Jet& Jet::operator+=(const Jet& o) {
  if (dim_ != o.dim_ || rank_ != o.rank_) throw Error("Jet: shape mismatch in +=");
  order_ = std::min(order_, o.order_);
  for (int k = 0; k <= order_; ++k)
    for (std::size_t i = 0; i < data_[k].size(); ++i) data_[k][i] += o.data_[k][i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  if (dim_ != o.dim_ || rank_ != o.rank_) throw Error("Jet: shape mismatch in -=");
  order_ = std::min(order_, o.order_);
  for (int k = 0; k <= order_; ++k)
    for (std::size_t i = 0; i < data_[k].size(); ++i) data_[k][i] -= o.data_[k][i];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (int k = 0; k <= order_; ++k)
    for (double& x : data_[k]) x *= s;
  return *this;
}

Jet Jet::operator-() const {
  Jet r = *this;
  r *= -1.0;
  return r;
}

Jet Jet::truncated(int order) const {
  if (order > order_) throw Error("Jet::truncated: order exceeds stored order");
  Jet r(dim_, rank_, order);
  for (int o = 0; o <= order; ++o) r.data_[o] = data_[o];
  return r;
}

double Jet::max_abs() const {
  double m = 0.0;
  for (int o = 0; o <= order_; ++o)
    for (double x : data_[o]) m = std::max(m, std::abs(x));
  return m;
}

Jet contract(const Jet& a, const Jet& b,
             std::initializer_list<std::pair<int, int>> pairs, int max_order) {
  const int dim = a.dim();
  if (dim != b.dim()) throw Error("contract: dimension mismatch");
  const int k = static_cast<int>(pairs.size());
  const int ra = a.rank(), rb = b.rank();
  std::vector<int> apair, bpair;
  std::vector<bool> apaired(ra, false), bpaired(rb, false);
  for (auto [sa, sb] : pairs) {
    if (sa < 0 || sa >= ra || sb < 0 || sb >= rb) throw Error("contract: slot out of range");
    apair.push_back(sa);
    bpair.push_back(sb);
    apaired[sa] = true;
    bpaired[sb] = true;
  }
  std::vector<int> afree, bfree;
  for (int s = 0; s < ra; ++s)
    if (!apaired[s]) afree.push_back(s);
  for (int s = 0; s < rb; ++s)
    if (!bpaired[s]) bfree.push_back(s);
  const int rr = ra + rb - 2 * k;
  const int ro = std::min({a.order(), b.order(), max_order});
  Jet r(dim, rr, ro);

  // strides of a and b flat layouts (tensor slots then derivative slots)
  auto strides = [&](int rank, int ord) {
    std::vector<std::size_t> st(rank + ord);
    std::size_t s = 1;
    for (int i = rank + ord - 1; i >= 0; --i) {
      st[i] = s;
      s *= dim;
    }
    return st;
  };

  // stride tables per derivative order, hoisted out of the hot loops
  std::vector<std::vector<std::size_t>> sta_all(ro + 1), stb_all(ro + 1);
  for (int oo = 0; oo <= ro; ++oo) {
    sta_all[oo] = strides(ra, oo);
    stb_all[oo] = strides(rb, oo);
  }

  std::vector<int> ridx(rr + ro, 0);
  std::vector<int> c(std::max(k, 1), 0);
  for (int o = 0; o <= ro; ++o) {
    auto& out = r.data(o);
    const std::size_t nout = out.size();
    std::fill(ridx.begin(), ridx.end(), 0);
    for (std::size_t f = 0; f < nout; ++f) {
      const int* rfree = ridx.data();
      const int* d = ridx.data() + rr;
      double acc = 0.0;
      for (int mask = 0; mask < (1 << o); ++mask) {
        const int oa = __builtin_popcount(static_cast<unsigned>(mask));
        const int ob = o - oa;
        const auto& sta = sta_all[oa];
        const auto& stb = stb_all[ob];
        // base indices from free slots
        std::size_t base_a = 0, base_b = 0;
        for (int i = 0; i < static_cast<int>(afree.size()); ++i) base_a += sta[afree[i]] * rfree[i];
        for (int i = 0; i < static_cast<int>(bfree.size()); ++i)
          base_b += stb[bfree[i]] * rfree[afree.size() + i];
        // derivative slots
        {
          int pa = 0, pb = 0;
          for (int bit = 0; bit < o; ++bit) {
            if (mask & (1 << bit)) base_a += sta[ra + pa++] * d[bit];
            else base_b += stb[rb + pb++] * d[bit];
          }
        }
        const double* da = a.data(oa).data();
        const double* db = b.data(ob).data();
        if (k == 1) {
          const std::size_t sa = sta[apair[0]], sb = stb[bpair[0]];
          std::size_t ia = base_a, ib = base_b;
          for (int j = 0; j < dim; ++j, ia += sa, ib += sb) acc += da[ia] * db[ib];
        } else if (k == 0) {
          acc += da[base_a] * db[base_b];
        } else {
          std::fill(c.begin(), c.end(), 0);
          while (true) {
            std::size_t ia = base_a, ib = base_b;
            for (int j = 0; j < k; ++j) {
              ia += sta[apair[j]] * c[j];
              ib += stb[bpair[j]] * c[j];
            }
            acc += da[ia] * db[ib];
            int j = k - 1;
            for (; j >= 0; --j) {
              if (++c[j] < dim) break;
              c[j] = 0;
            }
            if (j < 0) break;
          }
        }
      }
      out[f] = acc;
      // advance ridx (row-major odometer over rr + o slots)
      for (int i = rr + o - 1; i >= 0; --i) {
        if (++ridx[i] < dim) break;
        ridx[i] = 0;
      }
    }
  }
  return r;
}

Jet permute(const Jet& a, std::span<const int> perm) {
  const int rank = a.rank();
  if (static_cast<int>(perm.size()) != rank) throw Error("permute: bad permutation size");
  const int dim = a.dim();
  Jet r(dim, rank, a.order());
  std::vector<std::size_t> st(rank);
  {
    std::size_t s = 1;
    for (int i = rank - 1; i >= 0; --i) {
      st[i] = s;
      s *= dim;
    }
  }
  std::vector<int> idx(rank);
  for (int o = 0; o <= a.order(); ++o) {
    const std::size_t dtuples = ipow(dim, o);
    const std::size_t tsize = ipow(dim, rank);
    auto& out = r.data(o);
    const auto& in = a.data(o);
    for (std::size_t t = 0; t < tsize; ++t) {
      std::size_t rem = t;
      for (int i = rank - 1; i >= 0; --i) {
        idx[i] = static_cast<int>(rem % dim);
        rem /= dim;
      }
      std::size_t src = 0;
      for (int i = 0; i < rank; ++i) src += st[i] * idx[i];  // src == t
      std::size_t dst = 0;
      for (int i = 0; i < rank; ++i) dst += st[i] * 0;  // recomputed below
      // destination index i takes input slot perm[i]
      dst = 0;
      for (int i = 0; i < rank; ++i) dst = dst * dim + idx[perm[i]];
      for (std::size_t dd = 0; dd < dtuples; ++dd) out[dst * dtuples + dd] = in[src * dtuples + dd];
    }
  }
  return r;
}

Jet permute(const Jet& a, std::initializer_list<int> perm) {
  return permute(a, std::span<const int>(perm.begin(), perm.size()));
}

Jet deriv_slot(const Jet& a) {
  if (a.order() < 1) throw Error("deriv_slot: order-0 jet has no derivatives");
  Jet r(a.dim(), a.rank() + 1, a.order() - 1);
  for (int o = 0; o < a.order(); ++o) r.data(o) = a.data(o + 1);
  return r;
}

Jet invert_matrix_jet(const Jet& a, double cond_limit) {
  if (a.rank() != 2) throw Error("invert_matrix_jet: rank-2 jet required");
  const int n = a.dim();
  const int order = a.order();
  Jet r(n, 2, order);

  // Gauss-Jordan inverse of the value with partial pivoting.
  std::vector<double> m(a.data(0));
  std::vector<double> inv(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  double norm_a = 0.0;
  for (double x : m) norm_a = std::max(norm_a, std::abs(x));
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(m[row * n + col]) > std::abs(m[piv * n + col])) piv = row;
    if (std::abs(m[piv * n + col]) < 1e-300) throw Error("invert_matrix_jet: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m[piv * n + j], m[col * n + j]);
        std::swap(inv[piv * n + j], inv[col * n + j]);
      }
    }
    const double d = m[col * n + col];
    for (int j = 0; j < n; ++j) {
      m[col * n + j] /= d;
      inv[col * n + j] /= d;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      const double f = m[row * n + col];
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        m[row * n + j] -= f * m[col * n + j];
        inv[row * n + j] -= f * inv[col * n + j];
      }
    }
  }
  double norm_inv = 0.0;
  for (double x : inv) norm_inv = std::max(norm_inv, std::abs(x));
  if (norm_a * norm_inv * n > cond_limit) throw Error("invert_matrix_jet: degenerate metric (ill-conditioned)");
  r.data(0) = inv;

  // Higher orders from the order-o part of A * B = Id:
  //   B_d = -B0 * sum_{nonempty S subset of d} A_S B_{d\S}
  std::vector<int> d(kMaxJetOrder, 0);
  for (int o = 1; o <= order; ++o) {
    const std::size_t dtuples = ipow(n, o);
    auto& out = r.data(o);
    for (std::size_t dt = 0; dt < dtuples; ++dt) {
      std::size_t rem = dt;
      for (int i = o - 1; i >= 0; --i) {
        d[i] = static_cast<int>(rem % n);
        rem /= n;
      }
      std::vector<double> rhs(static_cast<std::size_t>(n) * n, 0.0);
      for (int mask = 1; mask < (1 << o); ++mask) {
        const int os = __builtin_popcount(static_cast<unsigned>(mask));
        const int oc = o - os;
        std::size_t ds = 0, dc = 0;
        for (int bit = 0; bit < o; ++bit) {
          if (mask & (1 << bit)) ds = ds * n + d[bit];
          else dc = dc * n + d[bit];
        }
        const double* A = a.data(os).data();
        const double* B = r.data(oc).data();
        const std::size_t dts = ipow(n, os), dtc = ipow(n, oc);
        for (int i = 0; i < n; ++i)
          for (int l = 0; l < n; ++l) {
            const double av = A[(static_cast<std::size_t>(i) * n + l) * dts + ds];
            if (av == 0.0) continue;
            for (int j = 0; j < n; ++j)
              rhs[i * n + j] += av * B[(static_cast<std::size_t>(l) * n + j) * dtc + dc];
          }
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double acc = 0.0;
          for (int l = 0; l < n; ++l) acc += inv[i * n + l] * rhs[l * n + j];
          out[(static_cast<std::size_t>(i) * n + j) * dtuples + dt] = -acc;
        }
    }
  }
  return r;
}

Jet apply_vectors(const Jet& value, std::span<const std::vector<double>* const> vecs) {
  if (value.order() != 0) throw Error("apply_vectors: order-0 jet required");
  if (static_cast<int>(vecs.size()) != value.rank()) throw Error("apply_vectors: slot count mismatch");
  Jet cur = value;
  int slot = 0;
  for (const std::vector<double>* v : vecs) {
    if (!v) {
      ++slot;
      continue;
    }
    Jet vj(cur.dim(), 1, 0);
    vj.data(0) = *v;
    cur = contract(cur, vj, {{slot, 0}});
  }
  return cur;
}

double eval_on(const Jet& value, std::initializer_list<const std::vector<double>*> vecs) {
  Jet r = apply_vectors(value, std::span<const std::vector<double>* const>(vecs.begin(), vecs.size()));
  if (r.rank() != 0) throw Error("eval_on: not fully contracted");
  return r.data(0)[0];
}

PolyTensor::PolyTensor(int dim, int rank) : dim_(dim), rank_(rank) {
  comps_.assign(ipow(dim, rank), PolyField(dim));
}

PolyField& PolyTensor::component(std::span<const int> idx) {
  std::size_t f = 0;
  for (int i : idx) f = f * dim_ + i;
  deriv_cache_.clear();
  return comps_[f];
}

const PolyField& PolyTensor::component(std::span<const int> idx) const {
  std::size_t f = 0;
  for (int i : idx) f = f * dim_ + i;
  return comps_[f];
}

PolyField& PolyTensor::component(std::initializer_list<int> idx) {
  return component(std::span<const int>(idx.begin(), idx.size()));
}

void PolyTensor::ensure_derivs(int order) const {
  // deriv_cache_[o-1][comp * n_sorted(o) + sorted tuple rank] for o = 1..order,
  // where sorted tuples are enumerated in nondecreasing lexicographic order.
  while (static_cast<int>(deriv_cache_.size()) < order) {
    const int o = static_cast<int>(deriv_cache_.size()) + 1;
    // enumerate nondecreasing tuples of length o
    std::vector<std::vector<int>> tuples;
    std::vector<int> t(o, 0);
    while (true) {
      tuples.push_back(t);
      int i = o - 1;
      for (; i >= 0; --i) {
        if (++t[i] < dim_) {
          for (int j = i + 1; j < o; ++j) t[j] = t[i];
          break;
        }
      }
      if (i < 0) break;
    }
    std::vector<PolyField> level;
    level.reserve(comps_.size() * tuples.size());
    for (std::size_t c = 0; c < comps_.size(); ++c) {
      for (const auto& tp : tuples) {
        if (o == 1) {
          level.push_back(comps_[c].derivative(tp[0]));
        } else {
          // parent: tuple without last entry, differentiate by last
          std::vector<int> parent(tp.begin(), tp.end() - 1);
          // locate parent rank in previous level's tuple enumeration
          const auto& prev = deriv_cache_[o - 2];
          // recompute parent position by re-enumeration
          std::size_t pos = 0;
          std::vector<int> q(o - 1, 0);
          while (q != parent) {
            int i = o - 2;
            for (; i >= 0; --i) {
              if (++q[i] < dim_) {
                for (int j = i + 1; j < o - 1; ++j) q[j] = q[i];
                break;
              }
            }
            ++pos;
          }
          const std::size_t per = prev.size() / comps_.size();
          level.push_back(prev[c * per + pos].derivative(tp[o - 1]));
        }
      }
    }
    deriv_cache_.push_back(std::move(level));
  }
}

Jet PolyTensor::eval_jet(const ChartPoint& p, int order) const {
  if (order > kMaxJetOrder) throw Error("eval_jet: unsupported order");
  if (static_cast<int>(p.coords.size()) != dim_) throw Error("eval_jet: point dimension mismatch");
  ensure_derivs(order);
  Jet r(dim_, rank_, order);
  for (std::size_t c = 0; c < comps_.size(); ++c) r.data(0)[c] = comps_[c].eval(p);
  for (int o = 1; o <= order; ++o) {
    // map dense tuple -> sorted tuple position
    std::vector<std::vector<int>> tuples;
    std::vector<int> t(o, 0);
    while (true) {
      tuples.push_back(t);
      int i = o - 1;
      for (; i >= 0; --i) {
        if (++t[i] < dim_) {
          for (int j = i + 1; j < o; ++j) t[j] = t[i];
          break;
        }
      }
      if (i < 0) break;
    }
    std::map<std::vector<int>, std::size_t> pos;
    for (std::size_t i = 0; i < tuples.size(); ++i) pos[tuples[i]] = i;

    const std::size_t dtuples = ipow(dim_, o);
    const auto& level = deriv_cache_[o - 1];
    const std::size_t per = level.size() / comps_.size();
    // evaluate each sorted tuple once per component, then scatter
    std::vector<double> vals(per);
    std::vector<int> d(o);
    auto& out = r.data(o);
    for (std::size_t c = 0; c < comps_.size(); ++c) {
      for (std::size_t i = 0; i < per; ++i) vals[i] = level[c * per + i].eval(p);
      for (std::size_t dt = 0; dt < dtuples; ++dt) {
        std::size_t rem = dt;
        for (int i = o - 1; i >= 0; --i) {
          d[i] = static_cast<int>(rem % dim_);
          rem /= dim_;
        }
        std::vector<int> sd = d;
        std::sort(sd.begin(), sd.end());
        out[c * dtuples + dt] = vals[pos.at(sd)];
      }
    }
  }
  return r;
}

}  // namespace pqkt
