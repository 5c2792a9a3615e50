#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ybx/scalar.hpp"

namespace ybx {

/// Dense n x n matrix over a Field.
class SquareMatrix {
 public:
  SquareMatrix(Field field, std::size_t n);
  static SquareMatrix identity(Field field, std::size_t n);
  static SquareMatrix diagonal(const std::vector<ExactScalar>& entries);

  std::size_t size() const { return n_; }
  const Field& field() const { return field_; }
  ExactScalar& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const ExactScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b);

  /// Fraction-free (Bareiss) elimination over the integers after clearing
  /// row denominators for rationals; Gaussian elimination in Z/p.
  ExactScalar determinant() const;
  /// Throws ArithmeticError if singular.
  SquareMatrix inverse() const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<ExactScalar> entries_;
};

/// Element of Mat_n ⊗ Mat_n; entry (i,j,k,l) is the coefficient of e_ij ⊗ e_kl.
/// Dense storage of n^4 scalars: intended for n <= 8.
class Tensor2 {
 public:
  Tensor2(Field field, std::size_t n);

  static Tensor2 unit(Field field, std::size_t n);  // 1 ⊗ 1
  static Tensor2 transposition_P(Field field, std::size_t n);
  static Tensor2 basis(Field field, std::size_t n, std::size_t i, std::size_t j, std::size_t k, std::size_t l);
  /// phi ⊗ phi.
  static Tensor2 kronecker(const SquareMatrix& a, const SquareMatrix& b);

  std::size_t n() const { return n_; }
  const Field& field() const { return field_; }

  ExactScalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) { return entries_[index(i, j, k, l)]; }
  const ExactScalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return entries_[index(i, j, k, l)];
  }
  const std::vector<ExactScalar>& entries() const { return entries_; }

  Tensor2& operator+=(const Tensor2& b);
  Tensor2& operator-=(const Tensor2& b);
  Tensor2& operator*=(const ExactScalar& s);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(Tensor2 a, const ExactScalar& s) { return a *= s; }
  friend Tensor2 operator*(const ExactScalar& s, Tensor2 a) { return a *= s; }
  Tensor2 operator-() const;
  /// Product in the algebra Mat_n ⊗ Mat_n: (a⊗b)(c⊗d) = ac ⊗ bd.
  friend Tensor2 operator*(const Tensor2& a, const Tensor2& b);
  friend bool operator==(const Tensor2& a, const Tensor2& b);

  /// a⊗b -> b⊗a.
  Tensor2 flip() const;
  /// a⊗b -> a^t ⊗ b^t.
  Tensor2 transpose() const;
  /// (pr ⊗ pr), pr(X) = X - tr(X)/n · 1.
  Tensor2 sl_projection() const;

  std::size_t nonzero_count() const;
  bool is_zero() const { return nonzero_count() == 0; }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return ((i * n_ + j) * n_ + k) * n_ + l;
  }
  void check_compatible(const Tensor2& b) const;

  Field field_;
  std::size_t n_;
  std::vector<ExactScalar> entries_;
};

enum class Slot { s12, s13, s23 };

/// Element of Mat_n ⊗ Mat_n ⊗ Mat_n; entry (i,j,k,l,p,q) multiplies e_ij ⊗ e_kl ⊗ e_pq.
/// Stored sparsely: the embedded r-matrices touch only a few of the n^6 slots.
class Tensor3 {
 public:
  Tensor3(Field field, std::size_t n);
  static Tensor3 unit(Field field, std::size_t n);
  /// Places t in the named slots, identity in the omitted one.
  static Tensor3 embed(const Tensor2& t, Slot slot);

  std::size_t n() const { return n_; }
  const Field& field() const { return field_; }
  ExactScalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l, std::size_t p, std::size_t q);
  ExactScalar at(std::size_t i, std::size_t j, std::size_t k, std::size_t l, std::size_t p, std::size_t q) const;

  Tensor3& operator+=(const Tensor3& b);
  Tensor3& operator-=(const Tensor3& b);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Tensor3& a, const Tensor3& b);
  friend bool operator==(const Tensor3& a, const Tensor3& b);

  std::size_t nonzero_count() const;
  bool is_zero() const { return nonzero_count() == 0; }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k, std::size_t l, std::size_t p, std::size_t q) const;
  void check_compatible(const Tensor3& b) const;

  Field field_;
  std::size_t n_;
  std::map<std::size_t, ExactScalar> entries_;  // flat index -> value; zeros may be present
};

/// [a, b] = ab - ba.
Tensor3 bracket(const Tensor3& a, const Tensor3& b);

/// r_a^{12} r_b^{13} - r_c^{23} r_d^{12} + r_e^{13} r_f^{23}.
Tensor3 aybe_combine(const Tensor2& ra, const Tensor2& rb, const Tensor2& rc, const Tensor2& rd, const Tensor2& re,
                     const Tensor2& rf);

struct RankResult {
  ExactScalar determinant;
  bool invertible;
};
/// Determinant of the n^2 x n^2 reshaping M[(i,j),(k,l)] = t(i,j,k,l).
RankResult tensor_rank(const Tensor2& t);

}  // namespace ybx
