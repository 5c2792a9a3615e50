#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ybx {

class ExactScalar;

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BackendMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Backend descriptor: the rationals, or Z/p for a prime 10^9 < p < 2^63.
class Field {
 public:
  enum class Kind { rational, prime };

  static Field rationals() { return Field(Kind::rational, 0); }
  /// Throws std::invalid_argument if p is not a prime in (10^9, 2^63).
  static Field prime_field(std::uint64_t p);
  /// Parses the CLI selector "q" or "fp:<prime>".
  static Field parse(const std::string& selector);

  Kind kind() const { return kind_; }
  std::uint64_t prime() const { return prime_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  std::string name() const;

  ExactScalar zero() const;
  ExactScalar one() const;
  ExactScalar from_int(long long v) const;
  ExactScalar from_fraction(long long num, long long den) const;
  ExactScalar from_mpq(const mpq_class& q) const;
  /// Parses "p/q" or "p".
  ExactScalar parse_scalar(const std::string& text) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class ExactScalar;
  Field(Kind kind, std::uint64_t p) : kind_(kind), prime_(p) {}
  Kind kind_;
  std::uint64_t prime_;
};

/// The prime used when no backend is named on the command line.
inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;  // 2^61 - 1

bool is_prime_u64(std::uint64_t n);

/// An element of a Field. Values of different backends never mix.
class ExactScalar {
 public:
  struct Residue {
    std::uint64_t value;
    std::uint64_t prime;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  explicit ExactScalar(mpq_class q);
  ExactScalar(std::uint64_t residue, std::uint64_t prime);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& b);
  ExactScalar& operator-=(const ExactScalar& b);
  ExactScalar& operator*=(const ExactScalar& b);
  /// Throws ArithmeticError on division by zero.
  ExactScalar& operator/=(const ExactScalar& b);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b);

  ExactScalar inverse() const;
  /// Integer powers; negative exponents invert.
  ExactScalar pow(long long k) const;
  ExactScalar one() const { return field().one(); }
  ExactScalar zero() const { return field().zero(); }

  /// "p/q" for rationals (always with a denominator), the residue for Z/p.
  std::string to_string() const;
  /// Only meaningful for the rational backend.
  double to_double() const;

  const mpq_class* rational() const { return std::get_if<mpq_class>(&value_); }
  const Residue* residue() const { return std::get_if<Residue>(&value_); }

 private:
  void check_same(const ExactScalar& b) const;
  std::variant<mpq_class, Residue> value_;
};

using Rng = std::mt19937_64;

/// Deterministic child stream for task `index` of a run seeded by `root`.
Rng derive_rng(std::uint64_t root, std::uint64_t index);

/// Integer-coefficient polynomial in one variable, coeffs[i] multiplies q^i.
struct IntPolynomial {
  std::vector<long long> coeffs;
  ExactScalar evaluate(const ExactScalar& q) const;
  /// q^d - 1.
  static IntPolynomial root_of_unity(unsigned d);
  /// q.
  static IntPolynomial variable();
};

/// Draws a nonzero scalar at which none of `forbidden` vanishes. Rationals are
/// drawn as a/b with |a|, b at most 2^rational_bits; residues uniformly in [2, p).
/// Throws ArithmeticError after `max_tries` rejected draws.
ExactScalar sample_point(const Field& field, Rng& rng, std::span<const IntPolynomial> forbidden = {},
                         int max_tries = 1000, int rational_bits = 31);

}  // namespace ybx
