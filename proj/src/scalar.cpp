#include "ybx/scalar.hpp"

#include <array>
#include <charconv>
#include <limits>

namespace ybx {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_class modulus;
  mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime_field(std::uint64_t p) {
  if (p <= 1000000000ULL) throw std::invalid_argument("prime field modulus must exceed 10^9");
  if (p >= (1ULL << 63)) throw std::invalid_argument("prime field modulus must be below 2^63");
  if (!is_prime_u64(p)) throw std::invalid_argument("prime field modulus " + std::to_string(p) + " is not prime");
  return Field(Kind::prime, p);
}

Field Field::parse(const std::string& selector) {
  if (selector == "q") return rationals();
  if (selector.rfind("fp:", 0) == 0) {
    const std::string digits = selector.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
      throw std::invalid_argument("bad prime in field selector '" + selector + "'");
    return prime_field(p);
  }
  if (selector == "fp") return prime_field(kDefaultPrime);
  throw std::invalid_argument("field selector must be 'q' or 'fp:<prime>', got '" + selector + "'");
}

std::string Field::name() const { return is_rational() ? "q" : "fp:" + std::to_string(prime_); }

ExactScalar Field::zero() const { return from_int(0); }
ExactScalar Field::one() const { return from_int(1); }

ExactScalar Field::from_int(long long v) const {
  if (is_rational()) return ExactScalar(mpq_class(mpz_class(static_cast<long>(v))));
  const long long p = static_cast<long long>(prime_);
  long long r = v % p;
  if (r < 0) r += p;
  return ExactScalar(static_cast<std::uint64_t>(r), prime_);
}

ExactScalar Field::from_fraction(long long num, long long den) const {
  if (den == 0) throw ArithmeticError("zero denominator");
  if (is_rational()) {
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return ExactScalar(std::move(q));
  }
  return from_int(num) / from_int(den);
}

ExactScalar Field::from_mpq(const mpq_class& q) const {
  if (is_rational()) return ExactScalar(q);
  const std::uint64_t den = reduce_mpz(q.get_den(), prime_);
  if (den == 0) throw ArithmeticError("denominator vanishes modulo p");
  return ExactScalar(reduce_mpz(q.get_num(), prime_), prime_) / ExactScalar(den, prime_);
}

ExactScalar Field::parse_scalar(const std::string& text) const {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad scalar '" + text + "'");
  if (q.get_den() == 0) throw ArithmeticError("zero denominator in '" + text + "'");
  q.canonicalize();
  return from_mpq(q);
}

ExactScalar::ExactScalar(mpq_class q) : value_(std::move(q)) {}

ExactScalar::ExactScalar(std::uint64_t residue, std::uint64_t prime) : value_(Residue{residue % prime, prime}) {}

Field ExactScalar::field() const {
  if (auto r = residue()) return Field(Field::Kind::prime, r->prime);
  return Field::rationals();
}

bool ExactScalar::is_zero() const {
  if (auto r = residue()) return r->value == 0;
  return sgn(*rational()) == 0;
}

bool ExactScalar::is_one() const {
  if (auto r = residue()) return r->value == 1;
  return *rational() == 1;
}

void ExactScalar::check_same(const ExactScalar& b) const {
  if (value_.index() != b.value_.index())
    throw BackendMismatch("arithmetic between rational and prime-field scalars");
  if (auto r = residue(); r && r->prime != b.residue()->prime)
    throw BackendMismatch("arithmetic between different prime fields");
}

ExactScalar ExactScalar::operator-() const {
  if (auto r = residue()) return ExactScalar(r->value == 0 ? 0 : r->prime - r->value, r->prime);
  return ExactScalar(mpq_class(-*rational()));
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& b) {
  check_same(b);
  if (auto r = std::get_if<Residue>(&value_)) {
    std::uint64_t s = r->value + b.residue()->value;  // p < 2^63, no overflow
    if (s >= r->prime) s -= r->prime;
    r->value = s;
  } else {
    std::get<mpq_class>(value_) += *b.rational();
  }
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& b) {
  check_same(b);
  if (auto r = std::get_if<Residue>(&value_)) {
    const std::uint64_t bv = b.residue()->value;
    r->value = r->value >= bv ? r->value - bv : r->value + r->prime - bv;
  } else {
    std::get<mpq_class>(value_) -= *b.rational();
  }
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& b) {
  check_same(b);
  if (auto r = std::get_if<Residue>(&value_)) {
    r->value = mulmod(r->value, b.residue()->value, r->prime);
  } else {
    std::get<mpq_class>(value_) *= *b.rational();
  }
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& b) {
  check_same(b);
  return *this *= b.inverse();
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (auto r = residue()) return ExactScalar(powmod(r->value, r->prime - 2, r->prime), r->prime);
  return ExactScalar(mpq_class(1 / *rational()));
}

ExactScalar ExactScalar::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  if (auto r = residue()) return ExactScalar(powmod(r->value, static_cast<std::uint64_t>(k), r->prime), r->prime);
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), rational()->get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(out.get_den_mpz_t(), rational()->get_den_mpz_t(), static_cast<unsigned long>(k));
  return ExactScalar(std::move(out));
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (auto r = a.residue()) return *r == *b.residue();
  return *a.rational() == *b.rational();
}

std::string ExactScalar::to_string() const {
  if (auto r = residue()) return std::to_string(r->value);
  return rational()->get_num().get_str() + "/" + rational()->get_den().get_str();
}

double ExactScalar::to_double() const {
  if (auto r = residue()) return static_cast<double>(r->value);
  return rational()->get_d();
}

Rng derive_rng(std::uint64_t root, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(root), static_cast<std::uint32_t>(root >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

ExactScalar IntPolynomial::evaluate(const ExactScalar& q) const {
  ExactScalar acc = q.zero();
  const Field f = q.field();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * q + f.from_int(*it);
  return acc;
}

IntPolynomial IntPolynomial::root_of_unity(unsigned d) {
  IntPolynomial p;
  p.coeffs.assign(d + 1, 0);
  p.coeffs[0] = -1;
  p.coeffs[d] = 1;
  return p;
}

IntPolynomial IntPolynomial::variable() { return IntPolynomial{{0, 1}}; }

ExactScalar sample_point(const Field& field, Rng& rng, std::span<const IntPolynomial> forbidden, int max_tries,
                         int rational_bits) {
  if (rational_bits < 2 || rational_bits > 62) throw std::invalid_argument("sample_point: rational_bits outside [2, 62]");
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    ExactScalar q = field.zero();
    if (field.is_rational()) {
      std::uniform_int_distribution<long long> num(-(1LL << rational_bits), 1LL << rational_bits);
      std::uniform_int_distribution<long long> den(1, 1LL << rational_bits);
      q = field.from_fraction(num(rng), den(rng));
    } else {
      std::uniform_int_distribution<std::uint64_t> res(2, field.prime() - 1);
      q = ExactScalar(res(rng), field.prime());
    }
    if (q.is_zero()) continue;
    bool ok = true;
    for (const auto& poly : forbidden) ok = ok && !poly.evaluate(q).is_zero();
    if (ok) return q;
  }
  throw ArithmeticError("sample_point: no admissible point after " + std::to_string(max_tries) + " draws");
}

}  // namespace ybx
