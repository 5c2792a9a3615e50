#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ybx/laurent_jet.hpp"
#include "ybx/permutation.hpp"
#include "ybx/scalar.hpp"
#include "ybx/tensor.hpp"

namespace ybx {

/// Raised when a sampled point hits a pole (q^{2n} = 1 or a vanishing denominator).
class PoleError : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

using Index4 = std::array<std::size_t, 4>;

template <class T>
struct Term {
  Index4 index;  // (i, j, k, l) for e_ij ⊗ e_kl
  T coeff;
};

/// A Mat_n ⊗ Mat_n valued function of (q_u, q_v) with q_u = e^{u/2n}, q_v = e^{v/2n}.
struct Evaluator {
  std::size_t n = 0;
  Field field = Field::rationals();
  std::function<Tensor2(const ExactScalar& qu, const ExactScalar& qv)> fn;

  Tensor2 operator()(const ExactScalar& qu, const ExactScalar& qv) const { return fn(qu, qv); }
};

/// The trigonometric solution attached to a valid ABD structure.
class TrigSolution {
 public:
  /// Throws InvalidStructure if `abd` is not valid.
  TrigSolution(ABDStructure abd, Field field);

  const ABDStructure& abd() const { return abd_; }
  std::size_t n() const { return abd_.n; }
  const Field& field() const { return field_; }

  /// Summands of r(u, v) with e^{u/n} = q_u^2 and e^{v/n} = q_v^2, one per
  /// family member; indices may repeat. T is ExactScalar or LaurentJet.
  template <class T>
  std::vector<Term<T>> terms(const T& qu, const T& qv) const;

  /// Throws PoleError when q_u^{2n} = 1 or q_v^{2n} = 1.
  Tensor2 operator()(const ExactScalar& qu, const ExactScalar& qv) const;
  Evaluator evaluator() const;

 private:
  ABDStructure abd_;
  Field field_;
};

template <class T>
std::vector<Term<T>> TrigSolution::terms(const T& qu, const T& qv) const {
  const std::size_t n = abd_.n;
  const long long two_n = 2 * static_cast<long long>(n);
  const T one = qu.one();
  const T eu = qu.pow(two_n);
  const T ev = qv.pow(two_n);
  const T pole_u = (eu - one).inverse();             // 1/(e^u - 1)
  const T pole_v_neg = (one - ev.inverse()).inverse();  // 1/(1 - e^{-v})
  const T pole_v = (ev - one).inverse();             // 1/(e^v - 1)

  std::vector<Term<T>> out;
  const T diag = pole_u + pole_v_neg;
  for (std::size_t i = 0; i < n; ++i) out.push_back({{i, i, i, i}, diag});

  for (std::size_t k = 1; k < n; ++k) {
    const Permutation ck = abd_.c1.power(static_cast<long>(k));
    const T w = pole_u * qu.pow(2 * static_cast<long long>(k));
    for (std::size_t i = 0; i < n; ++i) out.push_back({{ck(i), ck(i), i, i}, w});
  }
  for (std::size_t m = 1; m < n; ++m) {
    const Permutation cm = abd_.c2.power(static_cast<long>(m));
    const T w = pole_v * qv.pow(2 * static_cast<long long>(m));
    for (std::size_t i = 0; i < n; ++i) out.push_back({{i, cm(i), cm(i), i}, w});
  }
  for (std::size_t k = 1; k < n; ++k) {
    const Permutation ck = abd_.c1.power(static_cast<long>(k));
    for (std::size_t m = 1; m < n; ++m) {
      const auto members = a_km(abd_, k, m);
      if (members.empty()) continue;
      const Permutation cm = abd_.c2.power(static_cast<long>(m));
      const T w = qu.pow(2 * static_cast<long long>(k)) * qv.pow(2 * static_cast<long long>(m));
      const T w_inv = w.inverse();
      for (std::size_t a : members) {
        const std::size_t c2a = cm(a), c1a = ck(a), c12a = ck(cm(a));
        out.push_back({{c2a, a, c1a, c12a}, w_inv});
        out.push_back({{c1a, c12a, c2a, a}, -w});
      }
    }
  }
  return out;
}

/// Sums terms sharing an index.
template <class T>
std::map<Index4, T> collect_terms(const std::vector<Term<T>>& terms) {
  std::map<Index4, T> out;
  for (const auto& t : terms) {
    auto it = out.find(t.index);
    if (it == out.end())
      out.emplace(t.index, t.coeff);
    else
      it->second += t.coeff;
  }
  return out;
}

/// (u, v) -> transpose(r(v, u)) · P.
Evaluator hat_involution(const Evaluator& r);

struct GaugeTransform {
  SquareMatrix phi;
};
/// r -> (phi ⊗ phi) r (phi ⊗ phi)^{-1} pointwise. Throws ArithmeticError if phi is singular.
Evaluator gauge_transform(const Evaluator& r, const GaugeTransform& g);

/// Adds `delta` to one coefficient of every evaluation (default index (0,0,0,0)).
Evaluator mutate_one_coefficient(const Evaluator& r, long long delta = 3, Index4 index = {0, 0, 0, 0});

/// Point budget of a randomized identity check. Point t draws from derive_rng(seed, t).
struct Sampling {
  std::size_t points = 25;
  std::uint64_t seed = 7;
  /// Height of sampled rationals; ignored in Z/p.
  int rational_bits = 31;
};

struct CheckReport {
  std::string check;
  std::size_t points = 0;
  std::size_t failures = 0;
  std::uint64_t seed = 0;
  std::string backend;
  /// Largest number of nonzero residual entries over the sampled points.
  std::size_t max_nonzero = 0;
  double seconds = 0.0;
  std::vector<std::string> notes;
  bool pass() const { return failures == 0; }
};

CheckReport check_aybe(const Evaluator& r, const Sampling& sampling);
/// flip(r(-u, -v)) + r(u, v) = 0.
CheckReport check_skew(const Evaluator& r, const Sampling& sampling);
/// r and transpose(r)·P invertible as n^2 x n^2 matrices at every point.
CheckReport check_strong_nondegeneracy(const Evaluator& r, const Sampling& sampling);

enum class Variable { u, v };

struct LaurentData {
  int valuation = 0;  // minimum over entries
  Tensor2 residue;    // coefficient of t^{-1}
  Tensor2 constant;   // coefficient of t^0
};
/// Expands r in the chosen variable at 0 with q = exp_jet(1/(2n), order), the
/// other variable fixed at `other_q`. Throws ArithmeticError if the valuation
/// drops below -1 or order < 2.
LaurentData laurent_expansion(const TrigSolution& sol, Variable which, const ExactScalar& other_q, int order = 4);
Tensor2 residue(const TrigSolution& sol, Variable which, const ExactScalar& other_q, int order = 4);

/// r_0(v): constant term of the u-expansion at q_v.
Tensor2 r0(const TrigSolution& sol, const ExactScalar& qv, int order = 4);

using ConstantTermFn = std::function<Tensor2(const ExactScalar& qv)>;
/// (pr ⊗ pr) r_0 of the solution.
ConstantTermFn projected_r0(const TrigSolution& sol, int order = 4);
/// [r^12(v), r^13(v+v')] + [r^12(v), r^23(v')] + [r^13(v+v'), r^23(v')] = 0.
CheckReport check_cybe(const ConstantTermFn& rbar, std::size_t n, const Field& field, const Sampling& sampling);

enum class QybeReading { fixed_u, literal };

/// sigma(u,v) = (e^{u/2}-e^{-u/2})(e^{v/2}-e^{-v/2}) / (e^{u/2}-e^{-u/2}+e^{v/2}-e^{-v/2}).
ExactScalar qybe_sigma(std::size_t n, const ExactScalar& qu, const ExactScalar& qv);

struct QybeReports {
  CheckReport unitarity;
  CheckReport qybe;
};
/// R = sigma r. Unitarity: R(u,v) flip(R(u,-v)) = 1⊗1. QYBE (fixed_u):
/// R12(u,v) R13(u,v+v') R23(u,v') = R23(u,v') R13(u,v+v') R12(u,v); the
/// literal reading takes the first factor as R12(u,u).
QybeReports check_qybe_unitarity(const Evaluator& r, const Sampling& sampling,
                                 QybeReading reading = QybeReading::fixed_u);

/// |R(u,v) R(u,-v) - 1| for n = 1 in double precision.
double n1_unitarity_float_residual(double u, double v);

/// Samples nonzero q with q^{2n} != 1.
ExactScalar sample_q(const Field& field, std::size_t n, Rng& rng, int rational_bits = 31);

}  // namespace ybx
