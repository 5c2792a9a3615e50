#include "ybx/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ybx {

namespace {

std::size_t slot(std::size_t square, Corner c) { return 4 * square + static_cast<std::size_t>(c); }

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

SquareTiledSurface build_surface(const ABDStructure& abd) {
  require_valid(abd);
  const std::size_t n = abd.n;
  UnionFind uf(4 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t right = abd.c1(i), below = abd.c2(i);
    uf.unite(slot(i, Corner::bottom_right), slot(right, Corner::bottom_left));
    uf.unite(slot(i, Corner::top_right), slot(right, Corner::top_left));
    uf.unite(slot(i, Corner::bottom_left), slot(below, Corner::top_left));
    uf.unite(slot(i, Corner::bottom_right), slot(below, Corner::top_right));
  }

  std::map<std::size_t, Puncture> by_root;
  for (std::size_t i = 0; i < n; ++i)
    for (Corner c : {Corner::bottom_right, Corner::bottom_left, Corner::top_left, Corner::top_right}) {
      Puncture& p = by_root[uf.find(slot(i, c))];
      p.corners.push_back({i, c});
      if (c == Corner::bottom_right) p.labels.push_back(i);
    }

  SquareTiledSurface s;
  s.abd = abd;
  for (auto& [root, p] : by_root) {
    std::sort(p.labels.begin(), p.labels.end());
    std::sort(p.corners.begin(), p.corners.end());
    s.punctures.push_back(std::move(p));
  }
  std::sort(s.punctures.begin(), s.punctures.end(),
            [](const Puncture& x, const Puncture& y) { return x.labels.front() < y.labels.front(); });

  // The walk must reproduce the cycles of the commutator.
  std::set<std::vector<std::size_t>> walked, algebraic;
  for (const auto& p : s.punctures) walked.insert(p.labels);
  for (auto cyc : commutator(abd.c2, abd.c1).cycles()) {
    std::sort(cyc.begin(), cyc.end());
    algebraic.insert(cyc);
  }
  if (walked != algebraic) throw std::logic_error("corner walk disagrees with the cycles of [C2, C1]");

  s.puncture_of.assign(n, 0);
  for (std::size_t idx = 0; idx < s.punctures.size(); ++idx) {
    auto& p = s.punctures[idx];
    for (std::size_t label : p.labels) s.puncture_of[label] = idx;
    p.filled = p.labels.size() == 1 && abd.contains(p.labels.front());
  }
  return s;
}

PunctureAnalysis puncture_analysis(const SquareTiledSurface& s) {
  PunctureAnalysis out;
  out.b = s.punctures.size();
  for (const auto& p : s.punctures) {
    const std::size_t e = p.ramification();
    ++out.b_k[e];
    out.ramification.push_back(e);
    out.polygon_sides.push_back(p.corners.size());
    if (e == 1) out.unramified.push_back(p.labels.front());
  }
  std::sort(out.unramified.begin(), out.unramified.end());
  return out;
}

Topology topological_invariants(const SquareTiledSurface& s) {
  const std::size_t n = s.abd.n;
  Topology t;
  t.chi = -static_cast<long long>(n);
  // 2 - 2g - b = -n
  const long long b = static_cast<long long>(s.punctures.size());
  t.genus = (static_cast<long long>(n) - b + 2) / 2;

  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : {s.abd.c1(x), s.abd.c2(x)})
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
  }
  t.connected = reached == n;
  return t;
}

FilledSurface fill_punctures(const SquareTiledSurface& s, const std::vector<std::size_t>& a) {
  std::set<std::size_t> chosen;
  for (std::size_t x : a) {
    if (x >= s.abd.n) throw std::invalid_argument("fill_punctures: label out of range");
    if (s.punctures[s.puncture_of[x]].ramification() != 1)
      throw std::invalid_argument("fill_punctures: label " + std::to_string(x) + " is a ramified puncture");
    chosen.insert(x);
  }
  const Topology t = topological_invariants(s);
  FilledSurface out;
  out.punctures = s.punctures.size() - chosen.size();
  out.genus = t.genus;
  out.chi = t.chi + static_cast<long long>(chosen.size());
  out.filled.assign(chosen.begin(), chosen.end());
  return out;
}

}  // namespace ybx
