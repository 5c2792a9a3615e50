#pragma once

#include <climits>
#include <string>
#include <vector>

#include "ybx/scalar.hpp"

namespace ybx {

/// Truncated Laurent series sum_{k >= valuation} c_k t^k, known exactly for
/// every k < precision(). Constants carry precision kExact.
class LaurentJet {
 public:
  static constexpr int kExact = INT_MAX / 4;

  /// The exact zero series.
  LaurentJet(Field field, std::string variable);
  /// coeffs[i] multiplies t^(valuation + i); known up to (excluding) `precision`.
  LaurentJet(int valuation, std::vector<ExactScalar> coeffs, int precision, std::string variable);

  static LaurentJet constant(const ExactScalar& c, std::string variable);
  static LaurentJet monomial(const ExactScalar& c, int degree, std::string variable);

  const Field& field() const { return field_; }
  const std::string& variable() const { return variable_; }
  /// Leading exponent; equals precision() for a series that is zero to known order.
  int valuation() const { return is_zero() ? precision_ : valuation_; }
  int precision() const { return precision_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact() const { return precision_ >= kExact; }

  /// Coefficient of t^k; throws ArithmeticError if k >= precision().
  ExactScalar coefficient(int k) const;

  LaurentJet one() const { return constant(field_.one(), variable_); }

  LaurentJet operator-() const;
  LaurentJet& operator+=(const LaurentJet& b);
  LaurentJet& operator-=(const LaurentJet& b);
  LaurentJet& operator*=(const LaurentJet& b);
  LaurentJet& operator/=(const LaurentJet& b);
  friend LaurentJet operator+(LaurentJet a, const LaurentJet& b) { return a += b; }
  friend LaurentJet operator-(LaurentJet a, const LaurentJet& b) { return a -= b; }
  friend LaurentJet operator*(LaurentJet a, const LaurentJet& b) { return a *= b; }
  friend LaurentJet operator/(LaurentJet a, const LaurentJet& b) { return a /= b; }

  /// Throws ArithmeticError if the series is zero to known order.
  LaurentJet inverse() const;
  LaurentJet pow(long long k) const;

  /// Coefficient-wise equality on the common known range.
  bool agrees_with(const LaurentJet& b) const;

  std::string to_string() const;

 private:
  void normalize();
  void check_same(const LaurentJet& b) const;

  Field field_;
  std::string variable_;
  int valuation_ = 0;
  std::vector<ExactScalar> coeffs_;  // coeffs_.front() != 0 unless empty
  int precision_ = kExact;
};

/// exp(scale * t) truncated after t^order. Throws ArithmeticError when the
/// field cannot invert order! (prime field with p <= order).
LaurentJet exp_jet(const Field& field, long long scale_num, long long scale_den, int order,
                   const std::string& variable = "u");

}  // namespace ybx
