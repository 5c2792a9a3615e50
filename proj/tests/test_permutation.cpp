#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "ybx/permutation.hpp"
#include "ybx/scalar.hpp"

using namespace ybx;

namespace {

// C1 = (1 4 2 3), C2 = (1 2 3 4) in 1-based notation.
const Permutation kC1({3, 2, 0, 1});
const Permutation kC2({1, 2, 3, 0});

std::vector<Permutation> all_bijections(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool brute_isomorphic(const ABDStructure& x, const ABDStructure& y) {
  if (x.n != y.n) return false;
  for (const auto& s : all_bijections(x.n))
    if (relabel(x, s) == y) return true;
  return false;
}

}  // namespace

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 2}), std::invalid_argument);
}

TEST(Permutation, ComposeAppliesRightFactorFirst) {
  const Permutation p({1, 0, 2}), q({0, 2, 1});
  // p(q(1)) = p(2) = 2
  EXPECT_EQ(compose(p, q)(1), 2u);
  EXPECT_EQ(compose(q, p)(1), 0u);
}

TEST(Permutation, InverseAndPowers) {
  EXPECT_TRUE(compose(kC1, kC1.inverse()).is_identity());
  EXPECT_TRUE(kC1.power(4).is_identity());
  EXPECT_EQ(kC1.power(-1), kC1.inverse());
  EXPECT_EQ(kC1.power(5), kC1);
  EXPECT_THROW(compose(kC1, Permutation::identity(3)), SizeMismatch);
}

TEST(Permutation, ExampleCommutatorHasFixedPointAndThreeCycle) {
  // [C1, C2] = C1^-1 C2^-1 C1 C2, worked out by hand.
  EXPECT_EQ(commutator(kC1, kC2), Permutation({3, 0, 2, 1}));
  const CycleType ct = cycle_type(commutator(kC1, kC2));
  EXPECT_EQ(ct.lengths, (std::vector<std::size_t>{3, 1}));
  EXPECT_EQ(ct.fixed_points, (std::vector<std::size_t>{2}));
}

TEST(Permutation, CyclesStartAtSmallestElement) {
  const auto cycles = kC1.cycles();
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0], (std::vector<std::size_t>{0, 3, 1, 2}));
  EXPECT_TRUE(kC1.is_transitive_cycle());
  EXPECT_FALSE(Permutation({1, 0, 2}).is_transitive_cycle());
}

TEST(Abd, ExampleValidity) {
  EXPECT_TRUE(validate_abd(ABDStructure(kC1, kC2, {})).valid());
  EXPECT_TRUE(validate_abd(ABDStructure(kC1, kC2, {2})).valid());
  const ValidationReport bad = validate_abd(ABDStructure(kC1, kC2, {0}));
  ASSERT_FALSE(bad.valid());
  EXPECT_EQ(bad.violations, (std::vector<AbdViolation>{AbdViolation::not_commuting_on_a}));
  EXPECT_EQ(bad.noncommuting_points, (std::vector<std::size_t>{0}));
}

TEST(Abd, ReportsEachViolation) {
  const ValidationReport r = validate_abd(ABDStructure(Permutation({1, 0, 2}), Permutation({1, 2, 0}), {0, 1, 2}));
  EXPECT_NE(std::find(r.violations.begin(), r.violations.end(), AbdViolation::c1_not_transitive), r.violations.end());
  EXPECT_NE(std::find(r.violations.begin(), r.violations.end(), AbdViolation::a_not_proper), r.violations.end());
  EXPECT_THROW(require_valid(ABDStructure(kC1, kC2, {0})), InvalidStructure);
}

TEST(Abd, AkmForExample) {
  const ABDStructure s(kC1, kC2, {2});
  EXPECT_EQ(a_km(s, 1, 1), (std::vector<std::size_t>{2}));
  for (std::size_t k = 1; k < 4; ++k)
    for (std::size_t m = 1; m < 4; ++m)
      if (k > 1 || m > 1) EXPECT_TRUE(a_km(s, k, m).empty()) << k << "," << m;
  EXPECT_THROW(a_km(s, 0, 1), std::invalid_argument);
}

TEST(Abd, AkmCommutingCaseIsEverythingWhenTranslatesStayInA) {
  const Permutation c = Permutation::rotation(3);
  const ABDStructure s(c, c, {0, 1});
  // Translates of 0 by C1^i C2^j with i, j < 2 are 0, 1, 1, 2.
  EXPECT_EQ(a_km(s, 1, 1), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(a_km(s, 2, 1), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(a_km(s, 2, 2).empty());
}

TEST(Abd, CatalogSizes) {
  // n = 2: one cycle, commuting everywhere, three proper subsets.
  // n = 3: four cycle pairs, all commuting, seven proper subsets each.
  EXPECT_EQ(all_abd_structures(1).size(), 1u);
  EXPECT_EQ(all_abd_structures(2).size(), 3u);
  EXPECT_EQ(all_abd_structures(3).size(), 28u);
  EXPECT_EQ(all_abd_structures(4).size(), 228u);
  for (const auto& s : all_abd_structures(4)) EXPECT_TRUE(validate_abd(s).valid());
}

TEST(Abd, TransitiveCycleCount) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t fact = 1;
    for (std::size_t i = 2; i < n; ++i) fact *= i;
    EXPECT_EQ(all_transitive_cycles(n).size(), fact);
  }
}

TEST(Abd, GammaPair) {
  const ABDStructure s(kC1, kC2, {2});
  const auto [g1, g2] = gamma_pair(s);
  EXPECT_EQ(g1, (PairSet{{2, 0}}));
  // (C2 x, C1 C2 x) for x = 2: (3, 1).
  EXPECT_EQ(g2, (PairSet{{3, 1}}));
}

TEST(Abd, IsomorphismAgreesWithBruteForce) {
  Rng rng = derive_rng(11, 0);
  const auto corpus = all_abd_structures(4);
  const auto bij = all_bijections(4);
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1), pick_b(0, bij.size() - 1);
  for (int t = 0; t < 40; ++t) {
    const ABDStructure& x = corpus[pick(rng)];
    const ABDStructure y = t % 2 ? relabel(x, bij[pick_b(rng)]) : corpus[pick(rng)];
    const auto sigma = abd_isomorphic(x, y);
    EXPECT_EQ(sigma.has_value(), brute_isomorphic(x, y));
    if (sigma) EXPECT_EQ(relabel(x, *sigma), y);
  }
}

TEST(Abd, RelabelPreservesValidity) {
  const ABDStructure s(kC1, kC2, {2});
  const ABDStructure t = relabel(s, Permutation({2, 0, 3, 1}));
  EXPECT_TRUE(validate_abd(t).valid());
  EXPECT_TRUE(abd_isomorphic(s, t).has_value());
  EXPECT_FALSE(abd_isomorphic(s, ABDStructure(kC1, kC2, {})).has_value());
}
