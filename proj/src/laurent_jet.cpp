#include "ybx/laurent_jet.hpp"

#include <algorithm>

namespace ybx {

namespace {

int add_precision(int a, int b) {
  // Keeps kExact absorbing under addition of degrees.
  if (a >= LaurentJet::kExact || b >= LaurentJet::kExact) return LaurentJet::kExact;
  return a + b;
}

}  // namespace

LaurentJet::LaurentJet(Field field, std::string variable) : field_(field), variable_(std::move(variable)) {}

LaurentJet::LaurentJet(int valuation, std::vector<ExactScalar> coeffs, int precision, std::string variable)
    : field_(coeffs.empty() ? Field::rationals() : coeffs.front().field()),
      variable_(std::move(variable)),
      valuation_(valuation),
      coeffs_(std::move(coeffs)),
      precision_(precision) {
  if (valuation_ + static_cast<int>(coeffs_.size()) > precision_)
    coeffs_.resize(static_cast<std::size_t>(std::max(0, precision_ - valuation_)), field_.zero());
  normalize();
}

LaurentJet LaurentJet::constant(const ExactScalar& c, std::string variable) {
  return LaurentJet(0, {c}, kExact, std::move(variable));
}

LaurentJet LaurentJet::monomial(const ExactScalar& c, int degree, std::string variable) {
  return LaurentJet(degree, {c}, kExact, std::move(variable));
}

void LaurentJet::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  valuation_ += static_cast<int>(lead);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void LaurentJet::check_same(const LaurentJet& b) const {
  if (variable_ != b.variable_) throw BackendMismatch("jets in different variables");
  if (!(field_ == b.field_) && !is_zero() && !b.is_zero()) throw BackendMismatch("jets over different fields");
}

ExactScalar LaurentJet::coefficient(int k) const {
  if (k >= precision_) throw ArithmeticError("jet coefficient t^" + std::to_string(k) + " beyond tracked precision");
  if (is_zero() || k < valuation_) return field_.zero();
  const std::size_t idx = static_cast<std::size_t>(k - valuation_);
  return idx < coeffs_.size() ? coeffs_[idx] : field_.zero();
}

LaurentJet LaurentJet::operator-() const {
  LaurentJet r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentJet& LaurentJet::operator+=(const LaurentJet& b) {
  check_same(b);
  if (is_zero() && !b.is_zero()) field_ = b.field_;
  const int prec = std::min(precision_, b.precision_);
  if (b.is_zero() && is_zero()) {
    precision_ = prec;
    return *this;
  }
  const int lo = std::min(is_zero() ? b.valuation_ : valuation_, b.is_zero() ? valuation_ : b.valuation_);
  int hi = lo;
  if (!is_zero()) hi = std::max(hi, valuation_ + static_cast<int>(coeffs_.size()));
  if (!b.is_zero()) hi = std::max(hi, b.valuation_ + static_cast<int>(b.coeffs_.size()));
  hi = std::min(hi, prec);
  std::vector<ExactScalar> out;
  out.reserve(static_cast<std::size_t>(std::max(0, hi - lo)));
  for (int k = lo; k < hi; ++k) {
    ExactScalar c = field_.zero();
    if (!is_zero() && k >= valuation_ && k < valuation_ + static_cast<int>(coeffs_.size()))
      c += coeffs_[static_cast<std::size_t>(k - valuation_)];
    if (!b.is_zero() && k >= b.valuation_ && k < b.valuation_ + static_cast<int>(b.coeffs_.size()))
      c += b.coeffs_[static_cast<std::size_t>(k - b.valuation_)];
    out.push_back(std::move(c));
  }
  valuation_ = lo;
  coeffs_ = std::move(out);
  precision_ = prec;
  normalize();
  return *this;
}

LaurentJet& LaurentJet::operator-=(const LaurentJet& b) { return *this += -b; }

LaurentJet& LaurentJet::operator*=(const LaurentJet& b) {
  check_same(b);
  if (is_zero() && !b.is_zero()) field_ = b.field_;
  // Error terms: (A + O(t^pa)) (B + O(t^pb)) = AB + O(t^min(va + pb, vb + pa)).
  const int va = valuation(), vb = b.valuation();
  const int prec = std::min(add_precision(va, b.precision_), add_precision(vb, precision_));
  if (is_zero() || b.is_zero()) {
    coeffs_.clear();
    precision_ = prec;
    return *this;
  }
  const int lo = va + vb;
  const int hi = std::min(lo + static_cast<int>(coeffs_.size() + b.coeffs_.size()) - 1, prec);
  std::vector<ExactScalar> out(static_cast<std::size_t>(std::max(0, hi - lo)), field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && static_cast<int>(i + j) < hi - lo; ++j)
      out[i + j] += coeffs_[i] * b.coeffs_[j];
  }
  valuation_ = lo;
  coeffs_ = std::move(out);
  precision_ = prec;
  normalize();
  return *this;
}

LaurentJet LaurentJet::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of a jet that vanishes to known order");
  // Relative precision is preserved: t^v (c0 + c1 t + ...)^-1 known to the same number of terms.
  const int v = valuation_;
  if (is_exact()) {
    if (coeffs_.size() == 1) return LaurentJet(-v, {coeffs_.front().inverse()}, kExact, variable_);
    throw ArithmeticError("inverse of an exact polynomial jet has no finite truncation");
  }
  const int rel = precision_ - v;
  std::vector<ExactScalar> out(static_cast<std::size_t>(rel), field_.zero());
  const ExactScalar lead_inv = coeffs_.front().inverse();
  for (int k = 0; k < rel; ++k) {
    ExactScalar acc = k == 0 ? field_.one() : field_.zero();
    for (int j = 1; j <= k && j < static_cast<int>(coeffs_.size()); ++j)
      acc -= coeffs_[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = acc * lead_inv;
  }
  return LaurentJet(-v, std::move(out), -v + rel, variable_);
}

LaurentJet& LaurentJet::operator/=(const LaurentJet& b) { return *this *= b.inverse(); }

LaurentJet LaurentJet::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  LaurentJet result = one();
  LaurentJet base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

bool LaurentJet::agrees_with(const LaurentJet& b) const {
  const int prec = std::min(precision_, b.precision_);
  int lo = std::min(valuation(), b.valuation());
  if (lo >= prec) return true;
  int hi = prec;
  if (prec >= kExact) {
    hi = std::max(is_zero() ? lo : valuation_ + static_cast<int>(coeffs_.size()),
                  b.is_zero() ? lo : b.valuation_ + static_cast<int>(b.coeffs_.size()));
  }
  for (int k = lo; k < hi; ++k)
    if (!(coefficient(k) == b.coefficient(k))) return false;
  return true;
}

std::string LaurentJet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[i].to_string() + ")*" + variable_ + "^" + std::to_string(valuation_ + static_cast<int>(i));
  }
  if (s.empty()) s = "0";
  if (!is_exact()) s += " + O(" + variable_ + "^" + std::to_string(precision_) + ")";
  return s;
}

LaurentJet exp_jet(const Field& field, long long scale_num, long long scale_den, int order,
                   const std::string& variable) {
  if (order < 0) throw std::invalid_argument("exp_jet: negative order");
  if (!field.is_rational() && static_cast<std::uint64_t>(order) >= field.prime())
    throw ArithmeticError("exp_jet: order! is not invertible in the prime field");
  const ExactScalar s = field.from_fraction(scale_num, scale_den);
  std::vector<ExactScalar> coeffs;
  coeffs.reserve(static_cast<std::size_t>(order) + 1);
  ExactScalar term = field.one();
  for (int k = 0; k <= order; ++k) {
    if (k > 0) term = term * s / field.from_int(k);
    coeffs.push_back(term);
  }
  return LaurentJet(0, std::move(coeffs), order + 1, variable);
}

}  // namespace ybx
