// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "ybx/bundle.hpp"
#include "ybx/massey.hpp"
#include "ybx/suite.hpp"
#include "ybx/surface.hpp"
#include "ybx/trig_solution.hpp"

using namespace ybx;

namespace {

const Field kQ = Field::rationals();
const Field kP = Field::prime_field(kDefaultPrime);
constexpr int kRationalBits = 16;
constexpr std::uint64_t kSeed = 20240601;

const Permutation kExampleC1({3, 2, 0, 1});  // (1 4 2 3)
const Permutation kExampleC2({1, 2, 3, 0});  // (1 2 3 4)
const Permutation kPairC1({1, 2, 3, 0});     // (1 2 3 4)
const Permutation kPairC2({2, 3, 1, 0});     // (1 3 2 4)

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

Sampling sampling(std::size_t points, std::uint64_t salt) { return Sampling{points, kSeed + salt, kRationalBits}; }

std::string describe(const ABDStructure& s) {
  std::ostringstream out;
  out << "n=" << s.n << " c1=[";
  for (std::size_t x : s.c1.images()) out << x << ' ';
  out << "] c2=[";
  for (std::size_t x : s.c2.images()) out << x << ' ';
  out << "] a={";
  for (std::size_t x : s.a) out << x << ' ';
  out << '}';
  return out.str();
}

const std::vector<ABDStructure>& corpus() {
  static const std::vector<ABDStructure> c = builtin_catalog(4);
  return c;
}

bool pinned(const ABDStructure& s) {
  return (s.c1 == kExampleC1 && s.c2 == kExampleC2) || (s.c1 == kPairC1 && s.c2 == kPairC2);
}

// The full corpus for F_p; the n <= 3 part plus the pinned pairs for Q.
std::vector<ABDStructure> corpus_for(const Field& f) {
  if (!f.is_rational()) return corpus();
  std::vector<ABDStructure> out;
  for (const auto& s : corpus())
    if (s.n <= 3 || pinned(s)) out.push_back(s);
  return out;
}

Index4 random_index(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  return {pick(rng), pick(rng), pick(rng), pick(rng)};
}

void check_solution(Outcome& o, const Evaluator& r, const std::string& label, std::uint64_t salt) {
  const CheckReport a = check_aybe(r, sampling(25, salt));
  o.require(a.pass(), label + " aybe " + std::to_string(a.failures) + "/25");
  const CheckReport s = check_skew(r, sampling(25, salt));
  o.require(s.pass(), label + " skew " + std::to_string(s.failures) + "/25");
}

void check_residues(Outcome& o, const TrigSolution& sol, const Field& f, const ABDStructure& s, Rng& rng) {
  for (int t = 0; t < 3; ++t) {
    const ExactScalar other = sample_q(f, s.n, rng, kRationalBits);
    const LaurentData lu = laurent_expansion(sol, Variable::u, other);
    const LaurentData lv = laurent_expansion(sol, Variable::v, other);
    o.require(lu.valuation == -1 && lv.valuation == -1, describe(s) + " valuation");
    o.require(lu.residue == Tensor2::unit(f, s.n), describe(s) + " residue in u");
    o.require(lv.residue == Tensor2::transposition_P(f, s.n), describe(s) + " residue in v");
  }
}

// ---------------------------------------------------------------------------

void criterion_aybe(Outcome& o) {
  std::size_t runs = 0, mutants = 0;
  std::uint64_t salt = 0;
  for (const Field& f : {kQ, kP}) {
    Rng pick = derive_rng(kSeed, 100 + (f.is_rational() ? 0 : 1));
    for (const auto& s : corpus()) {
      const Evaluator r = TrigSolution(s, f).evaluator();
      const CheckReport rep = check_aybe(r, sampling(25, ++salt));
      o.require(rep.pass(), f.name() + " " + describe(s));
      ++runs;
      const Evaluator bad = mutate_one_coefficient(r, 3, random_index(s.n, pick));
      const CheckReport mrep = check_aybe(bad, sampling(25, salt));
      o.require(mrep.failures >= 24, "mutant undetected " + f.name() + " " + describe(s));
      ++mutants;
    }
  }
  o.detail << runs << " structure-backend runs at 25 points, " << mutants << " mutants detected at >= 24/25";
}

void criterion_skew(Outcome& o) {
  std::size_t runs = 0;
  std::uint64_t salt = 1000;
  for (const Field& f : {kQ, kP}) {
    Rng pick = derive_rng(kSeed, 200 + (f.is_rational() ? 0 : 1));
    for (const auto& s : corpus()) {
      const Evaluator r = TrigSolution(s, f).evaluator();
      o.require(check_skew(r, sampling(25, ++salt)).pass(), f.name() + " " + describe(s));
      const Evaluator bad = mutate_one_coefficient(r, 3, random_index(s.n, pick));
      o.require(check_skew(bad, sampling(25, salt)).failures >= 24, "mutant undetected " + describe(s));
      ++runs;
    }
  }
  o.detail << runs << " structure-backend runs at 25 points, mutants detected";
}

void criterion_residues(Outcome& o) {
  std::size_t runs = 0;
  for (const Field& f : {kQ, kP}) {
    Rng rng = derive_rng(kSeed, 300 + (f.is_rational() ? 0 : 1));
    for (const auto& s : corpus()) {
      check_residues(o, TrigSolution(s, f), f, s, rng);
      ++runs;
    }
  }
  o.detail << runs << " structure-backend runs, 3 expansion points each";
}

void criterion_scalar_case(Outcome& o) {
  const ABDStructure trivial(Permutation::identity(1), Permutation::identity(1), {});
  for (const Field& f : {kQ, kP}) {
    Rng rng = derive_rng(kSeed, 400 + (f.is_rational() ? 0 : 1));
    const TrigSolution sol(trivial, f);
    for (int t = 0; t < 5; ++t) {
      const ExactScalar qu = sample_q(f, 1, rng, kRationalBits), qv = sample_q(f, 1, rng, kRationalBits);
      // n = 1: q = e^{u/2}, so e^u = q_u^2 and e^{-v} = q_v^{-2}.
      const ExactScalar eu = qu * qu, emv = (qv * qv).inverse();
      const ExactScalar expected = (eu - f.one()).inverse() + (f.one() - emv).inverse();
      o.require(sol(qu, qv).at(0, 0, 0, 0) == expected, f.name() + " eval_r point " + std::to_string(t));
      o.require(massey_n1_breakdown(qu, qv).r_coefficient == expected, f.name() + " massey point " + std::to_string(t));
    }
  }
  o.detail << "5 points per backend, eval_r and Massey breakdown both exact";
}

void criterion_massey(Outcome& o) {
  std::size_t evaluations = 0;
  for (const Field& f : {kQ, kP}) {
    Rng rng = derive_rng(kSeed, 500 + (f.is_rational() ? 0 : 1));
    for (const auto& s : corpus()) {
      const SquareTiledSurface surf = build_surface(s);
      const TrigSolution sol(s, f);
      for (int t = 0; t < 10; ++t) {
        const ExactScalar qu = sample_q(f, s.n, rng, kRationalBits), qv = sample_q(f, s.n, rng, kRationalBits);
        o.require(massey_tensor(surf, f, qu, qv).total == sol(qu, qv), f.name() + " " + describe(s));
        ++evaluations;
      }
    }
  }
  o.detail << evaluations << " exact tensor comparisons";
}

void criterion_rectangles(Outcome& o) {
  std::size_t triples = 0;
  for (const auto& s : corpus()) {
    const SquareTiledSurface surf = build_surface(s);
    for (std::size_t k = 1; k < s.n; ++k)
      for (std::size_t m = 1; m < s.n; ++m) {
        const auto akm = a_km(s, k, m);
        for (std::size_t x = 0; x < s.n; ++x) {
          const bool in = std::binary_search(akm.begin(), akm.end(), x);
          o.require(develop_rectangle(surf, x, k, m) == in, describe(s) + " k=" + std::to_string(k) +
                                                                " m=" + std::to_string(m) + " a=" + std::to_string(x));
          ++triples;
        }
      }
  }
  o.detail << triples << " (a,k,m) triples";
}

void criterion_surface(Outcome& o) {
  const SquareTiledSurface ex = build_surface(ABDStructure(kExampleC1, kExampleC2, {}));
  const PunctureAnalysis pa = puncture_analysis(ex);
  const Topology top = topological_invariants(ex);
  o.require(pa.b == 2, "example b");
  o.require(pa.b_k == std::map<std::size_t, std::size_t>{{1, 1}, {3, 1}}, "example b_k");
  o.require(top.chi == -4 && top.genus == 2, "example chi/genus");
  o.require(pa.unramified == std::vector<std::size_t>{2}, "example fillable set");
  std::size_t commuting = 0;
  for (const auto& s : corpus()) {
    const SquareTiledSurface surf = build_surface(s);
    const Topology t = topological_invariants(surf);
    const long long b = static_cast<long long>(puncture_analysis(surf).b);
    o.require(2 - 2 * t.genus - b == -static_cast<long long>(s.n), "euler " + describe(s));
    if (commutator(s.c1, s.c2).is_identity()) {
      ++commuting;
      o.require(t.genus == 1, "commuting genus " + describe(s));
    }
  }
  o.detail << "example b=2 b1=1 b3=1 chi=-4 g=2 fillable {3} (1-based); " << corpus().size()
           << " structures, " << commuting << " commuting with g=1";
}

void criterion_hat(Outcome& o) {
  std::size_t runs = 0;
  std::uint64_t salt = 8000;
  for (const Field& f : {kQ, kP}) {
    Rng rng = derive_rng(kSeed, 800 + (f.is_rational() ? 0 : 1));
    for (const auto& s : corpus()) {
      const Evaluator r = TrigSolution(s, f).evaluator();
      const Evaluator h = hat_involution(r);
      check_solution(o, h, "hat " + f.name() + " " + describe(s), ++salt);
      const Evaluator hh = hat_involution(h);
      for (int t = 0; t < 10; ++t) {
        const ExactScalar qu = sample_q(f, s.n, rng, kRationalBits), qv = sample_q(f, s.n, rng, kRationalBits);
        o.require(hh(qu, qv) == r(qu, qv).flip(), "hat-hat " + describe(s));
      }
      ++runs;
    }
  }
  o.detail << runs << " structure-backend runs: hat passes AYBE and skew, hat-hat = flip at 10 points";
}

void criterion_cybe(Outcome& o) {
  std::size_t runs = 0;
  std::uint64_t salt = 9000;
  for (const Field& f : {kP, kQ})
    for (const auto& s : corpus_for(f)) {
      const CheckReport rep = check_cybe(projected_r0(TrigSolution(s, f)), s.n, f, sampling(25, ++salt));
      o.require(rep.pass(), f.name() + " " + describe(s));
      ++runs;
    }
  o.detail << runs << " runs at 25 points (F_p full corpus, Q n<=3 plus pinned)";
}

void criterion_qybe(Outcome& o) {
  std::size_t runs = 0;
  std::uint64_t salt = 10000;
  for (const Field& f : {kP, kQ})
    for (const auto& s : corpus_for(f)) {
      const QybeReports q = check_qybe_unitarity(TrigSolution(s, f).evaluator(), sampling(25, ++salt));
      o.require(q.unitarity.pass(), "unitarity " + f.name() + " " + describe(s));
      o.require(q.qybe.pass(), "qybe " + f.name() + " " + describe(s));
      ++runs;
    }
  const double shadow = n1_unitarity_float_residual(1.0, 0.7);
  o.require(shadow < 1e-9, "float shadow " + std::to_string(shadow));
  o.detail << runs << " runs at 25 points; n=1 float residual at (1, 0.7) = " << shadow;
}

void criterion_nondegeneracy(Outcome& o) {
  std::size_t runs = 0;
  std::uint64_t salt = 11000;
  for (const Field& f : {kP, kQ})
    for (const auto& s : corpus_for(f)) {
      const CheckReport rep = check_strong_nondegeneracy(TrigSolution(s, f).evaluator(), sampling(10, ++salt));
      o.require(rep.pass(), "degenerate point " + f.name() + " " + describe(s));
      ++runs;
    }
  o.detail << runs << " runs at 10 points, no degenerate point";
}

void criterion_bundles(Outcome& o) {
  Rng rng = derive_rng(kSeed, 1200);
  std::uint64_t salt = 12000;
  for (int t = 0; t < 100; ++t) {
    const BundleData b = random_simple_bundle(rng, 4, 3);
    const ABDStructure s = abd_of_bundle(b);
    o.require(validate_abd(s).valid(), "invalid structure from bundle " + std::to_string(t));
    bool in_group = false;
    for (std::size_t k = 0; k < s.n; ++k) in_group = in_group || s.c1.power(static_cast<long>(k)) == s.c2;
    o.require(in_group, "C2 not a power of C1 for bundle " + std::to_string(t));
    o.require(topological_invariants(build_surface(s)).genus == 1, "genus for bundle " + std::to_string(t));
    for (const Field& f : {kQ, kP}) {
      const TrigSolution sol = bundle_solution(b, f);
      check_solution(o, sol.evaluator(), "bundle " + std::to_string(t) + " " + f.name(), ++salt);
      Rng res_rng = derive_rng(kSeed, salt);
      check_residues(o, sol, f, s, res_rng);
    }
  }
  const BundleData reg(2, 1, {{0}, {1}}, kQ.one());
  const ABDStructure rs = abd_of_bundle(reg);
  o.require(order_prec(reg) == std::vector<std::size_t>{0, 1}, "regression order");
  o.require(rs.c1 == Permutation({1, 0}) && rs.c2 == Permutation({1, 0}), "regression permutations");
  o.require(rs.a == std::vector<std::size_t>{1}, "regression a");
  o.detail << "100 random simple bundles (r<=4, n<=3) on both backends; regression r=2 n=1 m=(0,1) matches";
}

void criterion_isomorphism(Outcome& o) {
  Rng rng = derive_rng(kSeed, 1300);
  std::size_t iso = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t) % 6;
    const ABDStructure x = ybx::testing::random_abd(n, rng);
    ABDStructure y = ybx::testing::relabel_or_mutate(x, t % 2 == 0, rng);
    bool brute = false;
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), 0);
    do brute = brute || relabel(x, Permutation(images)) == y;
    while (!brute && std::next_permutation(images.begin(), images.end()));
    const auto sigma = abd_isomorphic(x, y);
    o.require(sigma.has_value() == brute, "pair " + std::to_string(t) + ": " + describe(x) + " vs " + describe(y));
    if (sigma) o.require(relabel(x, *sigma) == y, "witness for pair " + std::to_string(t));
    iso += brute ? 1 : 0;
  }
  o.detail << "50 pairs with n<=6, " << iso << " isomorphic by brute force";
}

void criterion_novikov(Outcome& o) {
  using C = std::complex<double>;
  const std::vector<std::pair<C, C>> points{
      {{1.0, 0.0}, {1.0, 0.0}}, {{2.0, 0.5}, {2.0, 0.5}}, {{1.5, 0.0}, {1.0, 0.0}},
      {{1.0, 3.0}, {1.0, 3.0}}, {{2.0, 0.0}, {1.2, 0.0}}};
  double worst = 0.0;
  for (const auto& [u, v] : points) {
    const double err = novikov_check(u, v, 60).error;
    worst = std::max(worst, err);
    o.require(err < 1e-10, "error at L=60 is " + std::to_string(err));
    double prev = novikov_check(u, v, 0).error;
    for (int L = 1; L <= 60; ++L) {
      const double e = novikov_check(u, v, L).error;
      o.require(e <= prev + 1e-13, "not monotone at L=" + std::to_string(L));
      prev = e;
    }
  }
  o.detail << "5 points, max error at L=60 is " << worst << ", monotone in L";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AYBE exactness", criterion_aybe},
      {"skew-symmetry", criterion_skew},
      {"residue structure", criterion_residues},
      {"n=1 closed form", criterion_scalar_case},
      {"Massey tensor equals closed form", criterion_massey},
      {"rectangle development equals A(k,m)", criterion_rectangles},
      {"surface topology", criterion_surface},
      {"involution closure", criterion_hat},
      {"CYBE limit", criterion_cybe},
      {"QYBE and unitarity", criterion_qybe},
      {"strong nondegeneracy", criterion_nondegeneracy},
      {"bundle chain", criterion_bundles},
      {"ABD isomorphism", criterion_isomorphism},
      {"Novikov series", criterion_novikov},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.1f s\n", criteria.size() - failed, criteria.size(), total);
  return failed == 0 ? 0 : 1;
}
