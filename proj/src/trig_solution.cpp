#include "ybx/trig_solution.hpp"

#include <chrono>
#include <cmath>

namespace ybx {

namespace {

constexpr int kResampleLimit = 64;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

CheckReport start_report(const std::string& name, const Field& field, const Sampling& sampling) {
  CheckReport rep;
  rep.check = name;
  rep.points = sampling.points;
  rep.seed = sampling.seed;
  rep.backend = field.name();
  return rep;
}

// Runs `body(rng)` once per point on the child stream of that point. A point
// that lands on a pole is redrawn from the same stream.
template <class Body>
void for_each_point(CheckReport& rep, const Sampling& sampling, Body body) {
  const auto start = Clock::now();
  for (std::size_t t = 0; t < sampling.points; ++t) {
    Rng rng = derive_rng(sampling.seed, t);
    int tries = 0;
    for (;;) {
      try {
        const std::size_t nz = body(rng);
        rep.max_nonzero = std::max(rep.max_nonzero, nz);
        if (nz != 0) ++rep.failures;
        break;
      } catch (const PoleError&) {
        if (++tries >= kResampleLimit) throw;
      }
    }
  }
  rep.seconds = seconds_since(start);
}

ExactScalar checked_inverse(const ExactScalar& x, const char* what) {
  if (x.is_zero()) throw PoleError(std::string("pole: ") + what);
  return x.inverse();
}

ExactScalar draw(const Field& field, std::size_t n, const Sampling& sampling, Rng& rng) {
  return sample_q(field, n, rng, sampling.rational_bits);
}

}  // namespace

TrigSolution::TrigSolution(ABDStructure abd, Field field) : abd_(std::move(abd)), field_(field) {
  require_valid(abd_);
}

Tensor2 TrigSolution::operator()(const ExactScalar& qu, const ExactScalar& qv) const {
  const long long two_n = 2 * static_cast<long long>(abd_.n);
  if (qu.is_zero() || qv.is_zero()) throw PoleError("pole: q = 0");
  if ((qu.pow(two_n) - qu.one()).is_zero()) throw PoleError("pole: e^u = 1");
  if ((qv.pow(two_n) - qv.one()).is_zero()) throw PoleError("pole: e^v = 1");
  Tensor2 out(field_, abd_.n);
  for (const auto& t : terms(qu, qv)) out.at(t.index[0], t.index[1], t.index[2], t.index[3]) += t.coeff;
  return out;
}

Evaluator TrigSolution::evaluator() const {
  TrigSolution self = *this;
  return Evaluator{abd_.n, field_, [self](const ExactScalar& qu, const ExactScalar& qv) { return self(qu, qv); }};
}

Evaluator hat_involution(const Evaluator& r) {
  const Tensor2 p = Tensor2::transposition_P(r.field, r.n);
  Evaluator out = r;
  out.fn = [r, p](const ExactScalar& qu, const ExactScalar& qv) { return r(qv, qu).transpose() * p; };
  return out;
}

Evaluator gauge_transform(const Evaluator& r, const GaugeTransform& g) {
  if (g.phi.size() != r.n) throw SizeMismatch("gauge matrix size differs from r");
  const SquareMatrix inv = g.phi.inverse();
  const Tensor2 left = Tensor2::kronecker(g.phi, g.phi);
  const Tensor2 right = Tensor2::kronecker(inv, inv);
  Evaluator out = r;
  out.fn = [r, left, right](const ExactScalar& qu, const ExactScalar& qv) { return left * r(qu, qv) * right; };
  return out;
}

Evaluator mutate_one_coefficient(const Evaluator& r, long long delta, Index4 index) {
  for (std::size_t x : index)
    if (x >= r.n) throw std::out_of_range("mutation index outside Mat_n ⊗ Mat_n");
  const ExactScalar d = r.field.from_int(delta);
  Evaluator out = r;
  out.fn = [r, d, index](const ExactScalar& qu, const ExactScalar& qv) {
    Tensor2 t = r(qu, qv);
    t.at(index[0], index[1], index[2], index[3]) += d;
    return t;
  };
  return out;
}

ExactScalar sample_q(const Field& field, std::size_t n, Rng& rng, int rational_bits) {
  const IntPolynomial forbidden[] = {IntPolynomial::root_of_unity(static_cast<unsigned>(2 * n))};
  return sample_point(field, rng, forbidden, 1000, rational_bits);
}

CheckReport check_aybe(const Evaluator& r, const Sampling& sampling) {
  CheckReport rep = start_report("aybe", r.field, sampling);
  for_each_point(rep, sampling, [&](Rng& rng) {
    const ExactScalar u = draw(r.field, r.n, sampling, rng), u2 = draw(r.field, r.n, sampling, rng);
    const ExactScalar v = draw(r.field, r.n, sampling, rng), v2 = draw(r.field, r.n, sampling, rng);
    const ExactScalar uu = u * u2, vv = v * v2;
    const Tensor3 res = aybe_combine(r(u2.inverse(), v), r(uu, vv), r(uu, v2), r(u, v), r(u, vv), r(u2, v2));
    return res.nonzero_count();
  });
  return rep;
}

CheckReport check_skew(const Evaluator& r, const Sampling& sampling) {
  CheckReport rep = start_report("skew", r.field, sampling);
  for_each_point(rep, sampling, [&](Rng& rng) {
    const ExactScalar u = draw(r.field, r.n, sampling, rng), v = draw(r.field, r.n, sampling, rng);
    return (r(u.inverse(), v.inverse()).flip() + r(u, v)).nonzero_count();
  });
  return rep;
}

CheckReport check_strong_nondegeneracy(const Evaluator& r, const Sampling& sampling) {
  CheckReport rep = start_report("nondegeneracy", r.field, sampling);
  const Tensor2 p = Tensor2::transposition_P(r.field, r.n);
  for_each_point(rep, sampling, [&](Rng& rng) {
    const ExactScalar u = draw(r.field, r.n, sampling, rng), v = draw(r.field, r.n, sampling, rng);
    const Tensor2 t = r(u, v);
    std::size_t bad = 0;
    if (!tensor_rank(t).invertible) ++bad;
    if (!tensor_rank(t.transpose() * p).invertible) ++bad;
    return bad;
  });
  return rep;
}

LaurentData laurent_expansion(const TrigSolution& sol, Variable which, const ExactScalar& other_q, int order) {
  if (order < 2) throw ArithmeticError("laurent_expansion needs jet order >= 2");
  const std::size_t n = sol.n();
  const Field& field = sol.field();
  const std::string var = which == Variable::u ? "u" : "v";
  const LaurentJet q = exp_jet(field, 1, 2 * static_cast<long long>(n), order, var);
  const LaurentJet other = LaurentJet::constant(other_q, var);
  std::map<Index4, LaurentJet> entries;
  try {
    entries = collect_terms(which == Variable::u ? sol.terms(q, other) : sol.terms(other, q));
  } catch (const ArithmeticError& e) {
    throw PoleError(std::string("pole in the fixed variable: ") + e.what());
  }
  LaurentData out{0, Tensor2(field, n), Tensor2(field, n)};
  for (const auto& [idx, jet] : entries) {
    if (jet.is_zero()) continue;
    if (jet.valuation() < -1) throw ArithmeticError("pole of order above one in r");
    out.valuation = std::min(out.valuation, jet.valuation());
    out.residue.at(idx[0], idx[1], idx[2], idx[3]) = jet.coefficient(-1);
    out.constant.at(idx[0], idx[1], idx[2], idx[3]) = jet.coefficient(0);
  }
  return out;
}

Tensor2 residue(const TrigSolution& sol, Variable which, const ExactScalar& other_q, int order) {
  return laurent_expansion(sol, which, other_q, order).residue;
}

Tensor2 r0(const TrigSolution& sol, const ExactScalar& qv, int order) {
  return laurent_expansion(sol, Variable::u, qv, order).constant;
}

ConstantTermFn projected_r0(const TrigSolution& sol, int order) {
  return [sol, order](const ExactScalar& qv) { return r0(sol, qv, order).sl_projection(); };
}

CheckReport check_cybe(const ConstantTermFn& rbar, std::size_t n, const Field& field, const Sampling& sampling) {
  CheckReport rep = start_report("cybe", field, sampling);
  for_each_point(rep, sampling, [&](Rng& rng) {
    const ExactScalar v = draw(field, n, sampling, rng), v2 = draw(field, n, sampling, rng);
    const Tensor3 a12 = Tensor3::embed(rbar(v), Slot::s12);
    const Tensor3 a13 = Tensor3::embed(rbar(v * v2), Slot::s13);
    const Tensor3 a23 = Tensor3::embed(rbar(v2), Slot::s23);
    return (bracket(a12, a13) + bracket(a12, a23) + bracket(a13, a23)).nonzero_count();
  });
  return rep;
}

ExactScalar qybe_sigma(std::size_t n, const ExactScalar& qu, const ExactScalar& qv) {
  const long long nn = static_cast<long long>(n);
  const ExactScalar su = qu.pow(nn) - qu.pow(-nn);
  const ExactScalar sv = qv.pow(nn) - qv.pow(-nn);
  return su * sv * checked_inverse(su + sv, "sigma denominator");
}

QybeReports check_qybe_unitarity(const Evaluator& r, const Sampling& sampling, QybeReading reading) {
  auto big_r = [&](const ExactScalar& qu, const ExactScalar& qv) { return qybe_sigma(r.n, qu, qv) * r(qu, qv); };
  QybeReports out{start_report("unitarity", r.field, sampling),
                  start_report(reading == QybeReading::fixed_u ? "qybe" : "qybe-literal", r.field, sampling)};
  const Tensor2 one = Tensor2::unit(r.field, r.n);
  for_each_point(out.unitarity, sampling, [&](Rng& rng) {
    const ExactScalar u = draw(r.field, r.n, sampling, rng), v = draw(r.field, r.n, sampling, rng);
    return (big_r(u, v) * big_r(u, v.inverse()).flip() - one).nonzero_count();
  });
  for_each_point(out.qybe, sampling, [&](Rng& rng) {
    const ExactScalar u = draw(r.field, r.n, sampling, rng);
    const ExactScalar v = draw(r.field, r.n, sampling, rng), v2 = draw(r.field, r.n, sampling, rng);
    const Tensor2 first = reading == QybeReading::fixed_u ? big_r(u, v) : big_r(u, u);
    const Tensor3 r12 = Tensor3::embed(first, Slot::s12);
    const Tensor3 r13 = Tensor3::embed(big_r(u, v * v2), Slot::s13);
    const Tensor3 r23 = Tensor3::embed(big_r(u, v2), Slot::s23);
    return (r12 * r13 * r23 - r23 * r13 * r12).nonzero_count();
  });
  return out;
}

double n1_unitarity_float_residual(double u, double v) {
  auto r = [](double a, double b) { return 1.0 / (std::exp(a) - 1.0) + 1.0 / (1.0 - std::exp(-b)); };
  auto sigma = [](double a, double b) {
    const double sa = 2.0 * std::sinh(a / 2.0), sb = 2.0 * std::sinh(b / 2.0);
    return sa * sb / (sa + sb);
  };
  return std::abs(sigma(u, v) * r(u, v) * sigma(u, -v) * r(u, -v) - 1.0);
}

}  // namespace ybx
