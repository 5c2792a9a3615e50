#include "ybx/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace ybx {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x : images_) {
    if (x >= images_.size()) throw std::invalid_argument("permutation image out of range");
    if (seen[x]) throw std::invalid_argument("permutation is not injective");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::rotation(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  Permutation result;
  result.images_ = std::move(inv);
  return result;
}

Permutation Permutation::power(long k) const {
  const std::size_t n = size();
  if (n == 0) return *this;
  // Follow each cycle, stepping k places along it.
  std::vector<std::size_t> out(n);
  for (const auto& cyc : cycles()) {
    const long len = static_cast<long>(cyc.size());
    const long shift = ((k % len) + len) % len;
    for (long t = 0; t < len; ++t) out[cyc[t]] = cyc[(t + shift) % len];
  }
  Permutation result;
  result.images_ = std::move(out);
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_transitive_cycle() const {
  const std::size_t n = size();
  if (n == 0) return false;
  std::size_t x = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    x = images_[x];
    if (x == 0) return step == n;
  }
  return false;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw SizeMismatch("compose: permutations on different sets");
  std::vector<std::size_t> images(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) images[x] = p(q(x));
  return Permutation(std::move(images));
}

Permutation commutator(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw SizeMismatch("commutator: permutations on different sets");
  return compose(p.inverse(), compose(q.inverse(), compose(p, q)));
}

CycleType cycle_type(const Permutation& p) {
  CycleType t;
  for (const auto& cyc : p.cycles()) {
    t.lengths.push_back(cyc.size());
    if (cyc.size() == 1) t.fixed_points.push_back(cyc.front());
  }
  std::sort(t.lengths.rbegin(), t.lengths.rend());
  return t;
}

ABDStructure::ABDStructure(Permutation c1_, Permutation c2_, std::vector<std::size_t> a_)
    : n(c1_.size()), c1(std::move(c1_)), c2(std::move(c2_)), a(std::move(a_)) {
  if (c1.size() != c2.size()) throw SizeMismatch("ABD structure: C1 and C2 act on different sets");
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
}

bool ABDStructure::contains(std::size_t x) const { return std::binary_search(a.begin(), a.end(), x); }

std::string to_string(AbdViolation v) {
  switch (v) {
    case AbdViolation::c1_not_transitive: return "c1 is not a single n-cycle";
    case AbdViolation::c2_not_transitive: return "c2 is not a single n-cycle";
    case AbdViolation::a_not_proper: return "a is not a proper subset";
    case AbdViolation::a_out_of_range: return "a has an element outside {0..n-1}";
    case AbdViolation::not_commuting_on_a: return "c1 c2 != c2 c1 at some element of a";
  }
  return "unknown";
}

ValidationReport validate_abd(const ABDStructure& s) {
  ValidationReport report;
  if (!s.c1.is_transitive_cycle()) report.violations.push_back(AbdViolation::c1_not_transitive);
  if (!s.c2.is_transitive_cycle()) report.violations.push_back(AbdViolation::c2_not_transitive);
  if (s.a.size() >= s.n) report.violations.push_back(AbdViolation::a_not_proper);
  bool out_of_range = false;
  for (std::size_t x : s.a) {
    if (x >= s.n) {
      out_of_range = true;
      continue;
    }
    if (s.c1(s.c2(x)) != s.c2(s.c1(x))) report.noncommuting_points.push_back(x);
  }
  if (out_of_range) report.violations.push_back(AbdViolation::a_out_of_range);
  if (!report.noncommuting_points.empty()) report.violations.push_back(AbdViolation::not_commuting_on_a);
  return report;
}

void require_valid(const ABDStructure& s) {
  const auto report = validate_abd(s);
  if (report.valid()) return;
  std::string msg = "invalid ABD structure:";
  for (auto v : report.violations) msg += " [" + to_string(v) + "]";
  throw InvalidStructure(msg);
}

std::vector<std::size_t> a_km(const ABDStructure& s, std::size_t k, std::size_t m) {
  if (k == 0 || m == 0) throw std::invalid_argument("a_km: k and m must be positive");
  std::vector<std::size_t> out;
  for (std::size_t x : s.a) {
    bool inside = true;
    std::size_t row = x;  // C2^j (x)
    for (std::size_t j = 0; j < m && inside; ++j, row = s.c2(row)) {
      std::size_t y = row;  // C1^i C2^j (x)
      for (std::size_t i = 0; i < k && inside; ++i, y = s.c1(y)) inside = s.contains(y);
    }
    if (inside) out.push_back(x);
  }
  return out;
}

ABDStructure relabel(const ABDStructure& s, const Permutation& sigma) {
  const Permutation inv = sigma.inverse();
  std::vector<std::size_t> a;
  for (std::size_t x : s.a) a.push_back(sigma(x));
  return ABDStructure(compose(sigma, compose(s.c1, inv)), compose(sigma, compose(s.c2, inv)), std::move(a));
}

std::optional<Permutation> abd_isomorphic(const ABDStructure& s1, const ABDStructure& s2) {
  if (s1.n != s2.n || s1.a.size() != s2.a.size() || s1.n == 0) return std::nullopt;
  const std::size_t n = s1.n;
  // sigma(C1^t(0)) = C1'^t(sigma(0)) pins sigma once sigma(0) is chosen.
  for (std::size_t target = 0; target < n; ++target) {
    std::vector<std::size_t> images(n, n);
    std::size_t x = 0, y = target;
    bool ok = true;
    for (std::size_t t = 0; t < n && ok; ++t) {
      if (images[x] != n) {
        ok = images[x] == y;
        break;
      }
      images[x] = y;
      x = s1.c1(x);
      y = s2.c1(y);
    }
    if (!ok || std::count(images.begin(), images.end(), n) != 0) continue;
    std::vector<bool> hit(n, false);
    for (auto v : images) hit[v] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) continue;
    Permutation sigma(images);
    if (compose(sigma, s1.c1) != compose(s2.c1, sigma)) continue;
    if (compose(sigma, s1.c2) != compose(s2.c2, sigma)) continue;
    bool a_ok = true;
    for (std::size_t p : s1.a) a_ok = a_ok && s2.contains(sigma(p));
    if (a_ok) return sigma;
  }
  return std::nullopt;
}

std::pair<PairSet, PairSet> gamma_pair(const ABDStructure& s) {
  PairSet g1, g2;
  for (std::size_t x : s.a) {
    g1.emplace_back(x, s.c1(x));
    g2.emplace_back(s.c2(x), s.c1(s.c2(x)));
  }
  std::sort(g1.begin(), g1.end());
  std::sort(g2.begin(), g2.end());
  return {g1, g2};
}

std::vector<Permutation> all_transitive_cycles(std::size_t n) {
  std::vector<Permutation> out;
  if (n == 0) return out;
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  do {
    Permutation p(images);
    if (p.is_transitive_cycle()) out.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<ABDStructure> all_abd_structures(std::size_t n) {
  std::vector<ABDStructure> out;
  const auto cycles = all_transitive_cycles(n);
  for (const auto& c1 : cycles) {
    for (const auto& c2 : cycles) {
      std::vector<std::size_t> admissible;
      for (std::size_t x = 0; x < n; ++x)
        if (c1(c2(x)) == c2(c1(x))) admissible.push_back(x);
      const std::size_t subsets = std::size_t{1} << admissible.size();
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<std::size_t> a;
        for (std::size_t b = 0; b < admissible.size(); ++b)
          if (mask >> b & 1) a.push_back(admissible[b]);
        if (a.size() == n) continue;
        out.emplace_back(c1, c2, std::move(a));
      }
    }
  }
  return out;
}

}  // namespace ybx
