#include "ybx/bundle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ybx {

namespace {

std::size_t mod(long long a, std::size_t r) {
  const long long rr = static_cast<long long>(r);
  return static_cast<std::size_t>(((a % rr) + rr) % rr);
}

}  // namespace

BundleData::BundleData(std::size_t r_, std::size_t n_, std::vector<std::vector<long long>> m_, ExactScalar lambda_)
    : r(r_), n(n_), m(std::move(m_)), lambda(std::move(lambda_)) {
  if (r == 0 || n == 0) throw std::invalid_argument("bundle: r and n must be positive");
  if (m.size() != r) throw std::invalid_argument("bundle: m must have r rows");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("bundle: every row of m must have n entries");
  if (lambda.is_zero()) throw std::invalid_argument("bundle: lambda must be nonzero");
}

UnrolledSequence::UnrolledSequence(const BundleData& b) : r_(b.r), n_(b.n), m_(b.m) {}

long long UnrolledSequence::operator()(long long t) const {
  const long long nn = static_cast<long long>(n_);
  // t = q n + j with 0 <= j < n.
  const long long j = ((t % nn) + nn) % nn;
  const long long q = (t - j) / nn;
  return m_[mod(-q, r_)][static_cast<std::size_t>(j)];
}

UnrolledSequence unroll_d(const BundleData& b) { return UnrolledSequence(b); }

SimplicityReport simplicity(const BundleData& b) {
  SimplicityReport rep;
  for (std::size_t j = 0; j < b.n; ++j) {
    long long lo = b.m[0][j], hi = b.m[0][j];
    for (const auto& row : b.m) {
      lo = std::min(lo, row[j]);
      hi = std::max(hi, row[j]);
    }
    if (hi - lo > 1) {
      rep.spread_ok = false;
      rep.detail += "column " + std::to_string(j) + " has spread " + std::to_string(hi - lo) + "; ";
    }
  }
  const UnrolledSequence d(b);
  const long long period = static_cast<long long>(d.period());
  const long long nn = static_cast<long long>(b.n);
  for (std::size_t q = 1; q < b.r; ++q) {
    std::vector<long long> nonzero;
    for (long long t = 0; t < period; ++t) {
      const long long diff = d(static_cast<long long>(q) * nn + t) - d(t);
      if (diff != 0) nonzero.push_back(diff);
    }
    bool ok = !nonzero.empty();
    for (std::size_t x = 0; ok && x < nonzero.size(); ++x) {
      const long long cur = nonzero[x], next = nonzero[(x + 1) % nonzero.size()];
      ok = (cur == 1 || cur == -1) && cur == -next;
    }
    if (!ok) {
      rep.bad_shifts.push_back(q);
      rep.detail += nonzero.empty() ? "shift " + std::to_string(q) + " has zero difference sequence; "
                                    : "shift " + std::to_string(q) + " does not alternate; ";
    }
  }
  return rep;
}

bool is_simple(const BundleData& b) { return simplicity(b).simple(); }

std::string to_string(BundleType t) {
  switch (t) {
    case BundleType::positive: return "positive";
    case BundleType::nonnegative: return "nonnegative";
    case BundleType::neither: return "neither";
  }
  return "?";
}

BundleType type_check(const BundleData& b) {
  bool positive = true, nonnegative = true;
  for (const auto& row : b.m)
    for (long long x : row) {
      positive = positive && x > 0;
      nonnegative = nonnegative && x >= 0;
    }
  return positive ? BundleType::positive : nonnegative ? BundleType::nonnegative : BundleType::neither;
}

BundleData twist(const BundleData& b, long long N) {
  BundleData out = b;
  for (auto& row : out.m)
    for (auto& x : row) x += N;
  return out;
}

bool precedes(const BundleData& b, std::size_t i, std::size_t i2) {
  if (i == i2) return false;
  const UnrolledSequence d(b);
  const long long nn = static_cast<long long>(b.n);
  const long long period = static_cast<long long>(d.period());
  const long long ii = static_cast<long long>(i), ii2 = static_cast<long long>(i2);
  for (long long j = 0; j < period; ++j) {
    const long long diff = d(j - ii * nn) - d(j - ii2 * nn);
    if (diff != 0) return diff < 0;
  }
  throw IncomparableRows("rows " + std::to_string(i) + " and " + std::to_string(i2) +
                         " are incomparable; the bundle is not simple");
}

std::vector<std::size_t> order_prec(const BundleData& b) {
  std::vector<std::size_t> chain(b.r);
  for (std::size_t i = 0; i < b.r; ++i) chain[i] = i;
  for (std::size_t i = 0; i < b.r; ++i)
    for (std::size_t j = i + 1; j < b.r; ++j)
      if (precedes(b, i, j) == precedes(b, j, i)) throw IncomparableRows("≺ is not antisymmetric");
  std::stable_sort(chain.begin(), chain.end(), [&](std::size_t x, std::size_t y) { return precedes(b, x, y); });
  for (std::size_t x = 0; x < chain.size(); ++x)
    for (std::size_t y = x + 1; y < chain.size(); ++y)
      if (!precedes(b, chain[x], chain[y])) throw IncomparableRows("≺ is not transitive");
  return chain;
}

ABDStructure abd_of_bundle(const BundleData& b) {
  const SimplicityReport rep = simplicity(b);
  if (!rep.simple()) throw std::invalid_argument("abd_of_bundle: bundle is not simple: " + rep.detail);
  const std::size_t r = b.r;
  const auto chain = order_prec(b);
  std::vector<std::size_t> c1(r), c2(r);
  for (std::size_t x = 0; x < r; ++x) {
    c1[chain[x]] = chain[(x + 1) % r];
    c2[x] = mod(static_cast<long long>(x) - 1, r);
  }
  std::vector<std::size_t> a;
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t prev = mod(static_cast<long long>(i) - 1, r);
    const std::size_t succ_prev = mod(static_cast<long long>(c1[i]) - 1, r);
    if (prev == succ_prev || !precedes(b, prev, succ_prev)) continue;
    // The successor i' = C1(i) must agree with i away from component 0.
    bool same = true;
    for (std::size_t j = 1; j < b.n; ++j) same = same && b.m[i][j] == b.m[c1[i]][j];
    if (same) a.push_back(i);
  }
  ABDStructure out(Permutation(c1), Permutation(c2), a);
  require_valid(out);
  return out;
}

TrigSolution bundle_solution(const BundleData& b, const Field& field) { return TrigSolution(abd_of_bundle(b), field); }

BundleData random_simple_bundle(Rng& rng, std::size_t max_r, std::size_t max_n) {
  if (max_r == 0 || max_n == 0) throw std::invalid_argument("random_simple_bundle: bounds must be positive");
  std::uniform_int_distribution<std::size_t> pick_r(1, max_r), pick_n(1, max_n);
  std::uniform_int_distribution<long long> base(-2, 2), bit(0, 1);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const std::size_t r = pick_r(rng), n = pick_n(rng);
    std::vector<long long> floor(n);
    for (auto& f : floor) f = base(rng);
    std::vector<std::vector<long long>> m(r, std::vector<long long>(n));
    for (auto& row : m)
      for (std::size_t j = 0; j < n; ++j) row[j] = floor[j] + bit(rng);
    BundleData b(r, n, std::move(m), Field::rationals().one());
    if (is_simple(b)) return b;
  }
  throw std::runtime_error("random_simple_bundle: no simple bundle found");
}

}  // namespace ybx
