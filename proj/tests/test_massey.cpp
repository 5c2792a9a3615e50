#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"
#include "ybx/massey.hpp"
#include "ybx/suite.hpp"

using namespace ybx;

namespace {
const Field Q = Field::rationals();
const Field P = Field::prime_field(kDefaultPrime);
const ABDStructure kExample(Permutation({3, 2, 0, 1}), Permutation({1, 2, 3, 0}), {2});

std::size_t count_kind(const std::vector<RectangleFamily>& fs, FamilyKind k) {
  return static_cast<std::size_t>(std::count_if(fs.begin(), fs.end(), [k](const auto& f) { return f.kind == k; }));
}
}  // namespace

TEST(Rectangles, DevelopmentMatchesAkmExhaustively) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& c1 : all_transitive_cycles(n))
      for (const auto& c2 : all_transitive_cycles(n)) {
        // The largest admissible a: all commuting points except one when every point commutes.
        std::vector<std::size_t> a = cycle_type(commutator(c1, c2)).fixed_points;
        if (a.size() == n) a.pop_back();
        const ABDStructure abd(c1, c2, a);
        const SquareTiledSurface s = build_surface(abd);
        for (std::size_t k = 1; k < n; ++k)
          for (std::size_t m = 1; m < n; ++m) {
            const std::vector<std::size_t> akm = a_km(abd, k, m);
            for (std::size_t x = 0; x < n; ++x)
              ASSERT_EQ(develop_rectangle(s, x, k, m), std::binary_search(akm.begin(), akm.end(), x))
                  << "n=" << n << " k=" << k << " m=" << m << " x=" << x;
          }
      }
}

TEST(Rectangles, FamilyCounts) {
  Rng rng = derive_rng(41, 0);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 6;
    const ABDStructure abd = ybx::testing::random_abd(n, rng);
    const auto fs = enumerate_rectangles(build_surface(abd));
    std::size_t expected_a = 0;
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t m = 1; m < n; ++m) expected_a += 2 * a_km(abd, k, m).size();
    EXPECT_EQ(count_kind(fs, FamilyKind::diagonal), n);
    EXPECT_EQ(count_kind(fs, FamilyKind::horizontal), n * (n - 1));
    EXPECT_EQ(count_kind(fs, FamilyKind::vertical), n * (n - 1));
    EXPECT_EQ(count_kind(fs, FamilyKind::a_rect), expected_a);
  }
}

TEST(Rectangles, ExamplePair) {
  const auto fs = enumerate_rectangles(build_surface(kExample));
  std::vector<RectangleFamily> a_rects;
  for (const auto& f : fs)
    if (f.kind == FamilyKind::a_rect) a_rects.push_back(f);
  ASSERT_EQ(a_rects.size(), 2u);
  EXPECT_EQ(a_rects[0].sign, -1);
  EXPECT_EQ(a_rects[0].target, (Index4{3, 2, 0, 1}));
  EXPECT_EQ(a_rects[0].hol_u, -1);
  EXPECT_EQ(a_rects[1].sign, 1);
  EXPECT_EQ(a_rects[1].target, (Index4{0, 1, 3, 2}));
  EXPECT_EQ(a_rects[1].hol_v, 1);
  EXPECT_EQ(to_string(FamilyKind::a_rect), "a_rect");
}

TEST(Massey, TensorEqualsFormulaOnCatalog) {
  for (const Field& f : {Q, P}) {
    Rng rng = derive_rng(43, f.is_rational() ? 0 : 1);
    for (const auto& abd : builtin_catalog(4)) {
      const ExactScalar qu = sample_q(f, abd.n, rng), qv = sample_q(f, abd.n, rng);
      const MasseyTensor mt = massey_tensor(build_surface(abd), f, qu, qv);
      EXPECT_EQ(mt.total, TrigSolution(abd, f)(qu, qv));
      Tensor2 sum(f, abd.n);
      for (const auto& t : mt.breakdown) {
        EXPECT_EQ(t.contribution, -(t.mu3 - t.h1_correction - t.h2_correction));
        sum.at(t.family.target[0], t.family.target[1], t.family.target[2], t.family.target[3]) += t.contribution;
      }
      EXPECT_EQ(sum, mt.total);
    }
  }
}

TEST(Massey, RandomLargerStructures) {
  Rng rng = derive_rng(44, 0);
  for (int t = 0; t < 20; ++t) {
    const ABDStructure abd = ybx::testing::random_abd(5 + t % 2, rng);
    const ExactScalar qu = sample_q(P, abd.n, rng), qv = sample_q(P, abd.n, rng);
    EXPECT_EQ(massey_tensor(build_surface(abd), P, qu, qv).total, TrigSolution(abd, P)(qu, qv));
  }
}

TEST(Massey, ScalarCaseSteps) {
  // q_u = 2, q_v = 3: e^u = 4, e^v = 9.
  const MasseyN1Steps st = massey_n1_breakdown(Q.from_int(2), Q.from_int(3));
  EXPECT_EQ(st.mu2_q12_p11, Q.from_int(4));
  EXPECT_EQ(st.mu2_p22_q12, Q.one());
  EXPECT_EQ(st.h1, Q.from_fraction(4, 3));
  EXPECT_EQ(st.h2, Q.from_fraction(1, 8));
  EXPECT_EQ(st.mu3, Q.one());
  EXPECT_EQ(st.mu2_n0_p11, Q.from_int(9));
  EXPECT_EQ(st.combination, Q.one() + Q.from_fraction(4, -3) + Q.from_fraction(9, -8));
  EXPECT_EQ(st.r_coefficient, Q.from_fraction(35, 24));
  EXPECT_THROW(massey_n1_breakdown(Q.one(), Q.from_int(3)), PoleError);
}

TEST(Novikov, ConvergesToClosedForm) {
  using C = std::complex<double>;
  for (const auto& [u, v] : std::vector<std::pair<C, C>>{{1.0, 1.0}, {{2.0, 0.5}, {2.0, 0.5}}, {1.5, 1.0}}) {
    const NovikovResult r = novikov_check(u, v, 60);
    EXPECT_LT(r.error, 1e-10);
    double prev = novikov_check(u, v, 0).error;
    for (int L = 1; L <= 40; ++L) {
      const double e = novikov_check(u, v, L).error;
      EXPECT_LE(e, prev + 1e-13);
      prev = e;
    }
  }
  // Closed form at u = v = 1: e^{-1}(1/(1-e) + 1/(e^{-1}-1)).
  const double e = std::exp(1.0);
  const double expected = (1.0 / (1.0 - e) + 1.0 / (1.0 / e - 1.0)) / e;
  EXPECT_NEAR(novikov_check(1.0, 1.0, 5).closed_form.real(), expected, 1e-14);
}

TEST(Novikov, RejectsNonConvergentInput) {
  EXPECT_THROW(novikov_check({0.0, 1.0}, 1.0, 10), std::invalid_argument);
  EXPECT_THROW(novikov_check(1.0, -1.0, 10), std::invalid_argument);
  EXPECT_THROW(novikov_check(1.0, 1.0, -1), std::invalid_argument);
}
