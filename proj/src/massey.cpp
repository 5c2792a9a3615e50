#include "ybx/massey.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace ybx {

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::diagonal: return "diagonal";
    case FamilyKind::horizontal: return "horizontal";
    case FamilyKind::vertical: return "vertical";
    case FamilyKind::a_rect: return "a_rect";
  }
  return "?";
}

namespace {

RectangleFamily make_family(FamilyKind kind, std::size_t k, std::size_t m, std::size_t base, int sign,
                            long long hu, long long hv, std::size_t x, std::size_t y, std::size_t z,
                            std::size_t d) {
  RectangleFamily f;
  f.kind = kind;
  f.k = k;
  f.m = m;
  f.base = base;
  f.sign = sign;
  f.hol_u = hu;
  f.hol_v = hv;
  f.x = x;
  f.y = y;
  f.z = z;
  f.d = d;
  // MP(e_x, e_y, e_z) = c e_d dualizes to -c e_{x,d} ⊗ e_{z,y}.
  f.target = {x, d, z, y};
  return f;
}

}  // namespace

bool develop_rectangle(const SquareTiledSurface& s, std::size_t a, std::size_t k, std::size_t m) {
  if (k == 0 || m == 0) throw std::invalid_argument("develop_rectangle: k and m must be positive");
  const auto& c1 = s.abd.c1;
  const auto& c2 = s.abd.c2;
  // Right then down.
  std::vector<std::size_t> row_first(k * m), col_first(k * m);
  std::size_t start = a;
  for (std::size_t x = 0; x < k; ++x) {
    std::size_t cell = start;
    for (std::size_t y = 0; y < m; ++y) {
      row_first[x * m + y] = cell;
      cell = c2(cell);
    }
    start = c1(start);
  }
  // Down then right.
  start = a;
  for (std::size_t y = 0; y < m; ++y) {
    std::size_t cell = start;
    for (std::size_t x = 0; x < k; ++x) {
      col_first[x * m + y] = cell;
      cell = c1(cell);
    }
    start = c2(start);
  }
  if (row_first != col_first) return false;
  for (std::size_t cell : row_first)
    if (!s.punctures[s.puncture_of[cell]].filled) return false;
  return true;
}

std::vector<RectangleFamily> enumerate_rectangles(const SquareTiledSurface& s) {
  const std::size_t n = s.abd.n;
  std::vector<RectangleFamily> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(make_family(FamilyKind::diagonal, 0, 0, i, 1, 0, 0, i, i, i, i));
  for (std::size_t k = 1; k < n; ++k) {
    const Permutation ck = s.abd.c1.power(static_cast<long>(k));
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(make_family(FamilyKind::horizontal, k, 0, i, 1, static_cast<long long>(k), 0, ck(i), i, i, ck(i)));
  }
  for (std::size_t m = 1; m < n; ++m) {
    const Permutation cm = s.abd.c2.power(static_cast<long>(m));
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(make_family(FamilyKind::vertical, 0, m, i, 1, 0, static_cast<long long>(m), i, i, cm(i), cm(i)));
  }
  for (std::size_t k = 1; k < n; ++k) {
    const Permutation ck = s.abd.c1.power(static_cast<long>(k));
    for (std::size_t m = 1; m < n; ++m) {
      const Permutation cm = s.abd.c2.power(static_cast<long>(m));
      for (std::size_t a = 0; a < n; ++a) {
        if (!develop_rectangle(s, a, k, m)) continue;
        const long long kk = static_cast<long long>(k), mm = static_cast<long long>(m);
        const std::size_t c1a = ck(a), c2a = cm(a), c12a = ck(cm(a));
        out.push_back(make_family(FamilyKind::a_rect, k, m, a, 1, kk, mm, c1a, a, c2a, c12a));
        out.push_back(make_family(FamilyKind::a_rect, k, m, a, -1, -kk, -mm, c2a, c12a, c1a, a));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RectangleFamily& p, const RectangleFamily& q) {
    return std::tie(p.kind, p.k, p.m, p.base, p.sign) < std::tie(q.kind, q.k, q.m, q.base, q.sign);
  });
  return out;
}

MasseyTensor massey_tensor(const SquareTiledSurface& s, const Field& field, const ExactScalar& qu,
                           const ExactScalar& qv) {
  const std::size_t n = s.abd.n;
  const long long two_n = 2 * static_cast<long long>(n);
  if (qu.is_zero() || qv.is_zero()) throw PoleError("pole: q = 0");
  const ExactScalar one = field.one(), zero = field.zero();
  const ExactScalar eu = qu.pow(two_n), ev = qv.pow(two_n);
  if (eu == one) throw PoleError("pole: e^u = 1");
  if (ev == one) throw PoleError("pole: e^v = 1");
  // h_1 = (e^u / (e^u - 1)) m_0 and h_2 = (1 / (e^v - 1)) n_0.
  const ExactScalar h1 = eu / (eu - one);
  const ExactScalar h2 = one / (ev - one);

  MasseyTensor out{Tensor2(field, n), {}};
  for (const auto& f : enumerate_rectangles(s)) {
    // Holonomy e^{(a u + b v)/n} = q_u^{2a} q_v^{2b}.
    const ExactScalar hol = qu.pow(2 * f.hol_u) * qv.pow(2 * f.hol_v);
    MasseyTerm t{f, zero, zero, zero, zero, zero};
    switch (f.kind) {
      case FamilyKind::diagonal:
        t.mu3 = one;
        t.h1_correction = h1;
        t.h2_correction = h2 * ev;
        break;
      case FamilyKind::horizontal:
        t.mu3 = hol;
        t.h1_correction = h1 * hol;
        break;
      case FamilyKind::vertical:
        t.mu3 = hol;
        t.h2_correction = h2 * hol * ev;
        break;
      case FamilyKind::a_rect:
        t.mu3 = f.sign > 0 ? hol : -hol;
        break;
    }
    t.mp = t.mu3 - t.h1_correction - t.h2_correction;
    t.contribution = -t.mp;
    out.total.at(f.target[0], f.target[1], f.target[2], f.target[3]) += t.contribution;
    out.breakdown.push_back(std::move(t));
  }
  return out;
}

MasseyN1Steps massey_n1_breakdown(const ExactScalar& qu, const ExactScalar& qv) {
  const Field field = qu.field();
  if (qu.is_zero() || qv.is_zero()) throw PoleError("pole: q = 0");
  const ExactScalar one = field.one();
  const ExactScalar eu = qu.pow(2), ev = qv.pow(2);
  if (eu == one || ev == one) throw PoleError("pole: e^u = 1 or e^v = 1");
  MasseyN1Steps st{eu, one, eu / (eu - one), one / (ev - one), one, one, ev, one, one};
  st.combination = st.mu3 - st.h1 * st.mu2_p22_m0 - st.h2 * st.mu2_n0_p11;
  st.r_coefficient = -st.combination;
  return st;
}

NovikovResult novikov_check(std::complex<double> u, std::complex<double> v, int L) {
  if (!(u.real() > 0.0) || !(v.real() > 0.0))
    throw std::invalid_argument("novikov_check: series converges only for Re u > 0 and Re v > 0");
  if (L < 0) throw std::invalid_argument("novikov_check: negative truncation");
  // Novikov parameter q = e^{-1}; areas a1 - a2 = Re u, b1 - b2 = Re v; angles
  // alpha2 - alpha1 = -Im u, beta2 - beta1 = -Im v.
  const double q = std::exp(-1.0);
  const double da = u.real(), db = v.real();
  const double dalpha = -u.imag(), dbeta = -v.imag();
  const std::complex<double> i(0.0, 1.0);
  std::complex<double> sum_u = 0.0, sum_v = 0.0;
  for (int l = 1; l <= L; ++l) {
    sum_u += std::exp(static_cast<double>(l) * i * dalpha) * std::pow(q, l * da);
    sum_v += std::exp(static_cast<double>(l) * i * dbeta) * std::pow(q, l * db);
  }
  NovikovResult res;
  res.partial_sum = -std::pow(q, da * db) * (1.0 + sum_u + sum_v);
  res.closed_form = std::exp(-da * db) * (1.0 / (1.0 - std::exp(u)) + 1.0 / (std::exp(-v) - 1.0));
  res.error = std::abs(res.partial_sum - res.closed_form);
  return res;
}

}  // namespace ybx
