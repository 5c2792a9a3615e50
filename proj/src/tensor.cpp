#include "ybx/tensor.hpp"

#include <stdexcept>

#include "ybx/permutation.hpp"

namespace ybx {

SquareMatrix::SquareMatrix(Field field, std::size_t n) : field_(field), n_(n), entries_(n * n, field.zero()) {}

SquareMatrix SquareMatrix::identity(Field field, std::size_t n) {
  SquareMatrix m(field, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

SquareMatrix SquareMatrix::diagonal(const std::vector<ExactScalar>& entries) {
  if (entries.empty()) throw std::invalid_argument("diagonal: empty");
  SquareMatrix m(entries.front().field(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n_ != b.n_ || !(a.field_ == b.field_)) throw std::invalid_argument("matrix product: mismatch");
  SquareMatrix c(a.field_, a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
  return a.n_ == b.n_ && a.field_ == b.field_ && a.entries_ == b.entries_;
}

ExactScalar SquareMatrix::determinant() const {
  const std::size_t n = n_;
  if (n == 0) return field_.one();
  if (!field_.is_rational()) {
    std::vector<ExactScalar> m = entries_;
    ExactScalar det = field_.one();
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && m[pivot * n + col].is_zero()) ++pivot;
      if (pivot == n) return field_.zero();
      if (pivot != col) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
        det = -det;
      }
      det *= m[col * n + col];
      const ExactScalar inv = m[col * n + col].inverse();
      for (std::size_t r = col + 1; r < n; ++r) {
        if (m[r * n + col].is_zero()) continue;
        const ExactScalar f = m[r * n + col] * inv;
        for (std::size_t j = col; j < n; ++j) m[r * n + j] -= f * m[col * n + j];
      }
    }
    return det;
  }
  // Scale each row to integers, then Bareiss: every division below is exact.
  std::vector<mpz_class> m(n * n);
  mpq_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*this)(i, j).rational()->get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = *(*this)(i, j).rational();
      m[i * n + j] = q.get_num() * (l / q.get_den());
    }
  }
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot * n + k] == 0) ++pivot;
      if (pivot == n) return field_.zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[k * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i * n + j] = std::move(v);
      }
    }
    prev = m[k * n + k];
  }
  mpq_class det(m[n * n - 1] * sign);
  det /= scale;
  return ExactScalar(std::move(det));
}

SquareMatrix SquareMatrix::inverse() const {
  const std::size_t n = n_;
  SquareMatrix a = *this;
  SquareMatrix inv = identity(field_, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw ArithmeticError("matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(pivot, j), a(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    const ExactScalar p = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const ExactScalar f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Tensor2::Tensor2(Field field, std::size_t n) : field_(field), n_(n), entries_(n * n * n * n, field.zero()) {}

Tensor2 Tensor2::unit(Field field, std::size_t n) {
  Tensor2 t(field, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) t.at(i, i, k, k) = field.one();
  return t;
}

Tensor2 Tensor2::transposition_P(Field field, std::size_t n) {
  Tensor2 t(field, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.at(i, j, j, i) = field.one();
  return t;
}

Tensor2 Tensor2::basis(Field field, std::size_t n, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  Tensor2 t(field, n);
  t.at(i, j, k, l) = field.one();
  return t;
}

Tensor2 Tensor2::kronecker(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("kronecker: size mismatch");
  const std::size_t n = a.size();
  Tensor2 t(a.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) t.at(i, j, k, l) = a(i, j) * b(k, l);
    }
  return t;
}

void Tensor2::check_compatible(const Tensor2& b) const {
  if (n_ != b.n_) throw std::invalid_argument("tensor size mismatch");
  if (!(field_ == b.field_)) throw BackendMismatch("tensor backend mismatch");
}

Tensor2& Tensor2::operator+=(const Tensor2& b) {
  check_compatible(b);
  for (std::size_t x = 0; x < entries_.size(); ++x)
    if (!b.entries_[x].is_zero()) entries_[x] += b.entries_[x];
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& b) {
  check_compatible(b);
  for (std::size_t x = 0; x < entries_.size(); ++x)
    if (!b.entries_[x].is_zero()) entries_[x] -= b.entries_[x];
  return *this;
}

Tensor2& Tensor2::operator*=(const ExactScalar& s) {
  for (auto& e : entries_)
    if (!e.is_zero()) e *= s;
  return *this;
}

Tensor2 Tensor2::operator-() const {
  Tensor2 t = *this;
  for (auto& e : t.entries_)
    if (!e.is_zero()) e = -e;
  return t;
}

Tensor2 operator*(const Tensor2& a, const Tensor2& b) {
  a.check_compatible(b);
  const std::size_t n = a.n_;
  Tensor2 c(a.field_, n);
  // (e_ij ⊗ e_kl)(e_jb ⊗ e_ld) = e_ib ⊗ e_kd
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const ExactScalar& x = a.at(i, j, k, l);
          if (x.is_zero()) continue;
          for (std::size_t bb = 0; bb < n; ++bb)
            for (std::size_t d = 0; d < n; ++d) {
              const ExactScalar& y = b.at(j, bb, l, d);
              if (!y.is_zero()) c.at(i, bb, k, d) += x * y;
            }
        }
  return c;
}

bool operator==(const Tensor2& a, const Tensor2& b) {
  return a.n_ == b.n_ && a.field_ == b.field_ && a.entries_ == b.entries_;
}

Tensor2 Tensor2::flip() const {
  Tensor2 t(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t l = 0; l < n_; ++l) t.at(k, l, i, j) = at(i, j, k, l);
  return t;
}

Tensor2 Tensor2::transpose() const {
  Tensor2 t(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t l = 0; l < n_; ++l) t.at(j, i, l, k) = at(i, j, k, l);
  return t;
}

Tensor2 Tensor2::sl_projection() const {
  const ExactScalar inv_n = field_.from_int(static_cast<long long>(n_)).inverse();
  // Apply pr in the first slot, then in the second.
  Tensor2 first = *this;
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t l = 0; l < n_; ++l) {
      ExactScalar trace = field_.zero();
      for (std::size_t i = 0; i < n_; ++i) trace += at(i, i, k, l);
      if (trace.is_zero()) continue;
      const ExactScalar shift = trace * inv_n;
      for (std::size_t i = 0; i < n_; ++i) first.at(i, i, k, l) -= shift;
    }
  Tensor2 out = first;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      ExactScalar trace = field_.zero();
      for (std::size_t k = 0; k < n_; ++k) trace += first.at(i, j, k, k);
      if (trace.is_zero()) continue;
      const ExactScalar shift = trace * inv_n;
      for (std::size_t k = 0; k < n_; ++k) out.at(i, j, k, k) -= shift;
    }
  return out;
}

std::size_t Tensor2::nonzero_count() const {
  std::size_t c = 0;
  for (const auto& e : entries_) c += e.is_zero() ? 0 : 1;
  return c;
}

Tensor3::Tensor3(Field field, std::size_t n) : field_(field), n_(n) {}

std::size_t Tensor3::index(std::size_t i, std::size_t j, std::size_t k, std::size_t l, std::size_t p,
                           std::size_t q) const {
  if (i >= n_ || j >= n_ || k >= n_ || l >= n_ || p >= n_ || q >= n_)
    throw std::out_of_range("Tensor3 index out of range");
  return ((((i * n_ + j) * n_ + k) * n_ + l) * n_ + p) * n_ + q;
}

ExactScalar& Tensor3::at(std::size_t i, std::size_t j, std::size_t k, std::size_t l, std::size_t p, std::size_t q) {
  const std::size_t x = index(i, j, k, l, p, q);
  auto it = entries_.find(x);
  if (it == entries_.end()) it = entries_.emplace(x, field_.zero()).first;
  return it->second;
}

ExactScalar Tensor3::at(std::size_t i, std::size_t j, std::size_t k, std::size_t l, std::size_t p,
                        std::size_t q) const {
  auto it = entries_.find(index(i, j, k, l, p, q));
  return it == entries_.end() ? field_.zero() : it->second;
}

Tensor3 Tensor3::unit(Field field, std::size_t n) { return embed(Tensor2::unit(field, n), Slot::s12); }

Tensor3 Tensor3::embed(const Tensor2& t, Slot slot) {
  const std::size_t n = t.n();
  Tensor3 out(t.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const ExactScalar& c = t.at(i, j, k, l);
          if (c.is_zero()) continue;
          for (std::size_t x = 0; x < n; ++x) {
            switch (slot) {
              case Slot::s12: out.at(i, j, k, l, x, x) = c; break;
              case Slot::s13: out.at(i, j, x, x, k, l) = c; break;
              case Slot::s23: out.at(x, x, i, j, k, l) = c; break;
            }
          }
        }
  return out;
}

void Tensor3::check_compatible(const Tensor3& b) const {
  if (n_ != b.n_) throw SizeMismatch("tensor size mismatch");
  if (!(field_ == b.field_)) throw BackendMismatch("tensor backend mismatch");
}

Tensor3& Tensor3::operator+=(const Tensor3& b) {
  check_compatible(b);
  for (const auto& [x, v] : b.entries_) {
    if (v.is_zero()) continue;
    auto it = entries_.find(x);
    if (it == entries_.end())
      entries_.emplace(x, v);
    else
      it->second += v;
  }
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& b) {
  check_compatible(b);
  for (const auto& [x, v] : b.entries_) {
    if (v.is_zero()) continue;
    auto it = entries_.find(x);
    if (it == entries_.end())
      entries_.emplace(x, -v);
    else
      it->second -= v;
  }
  return *this;
}

Tensor3 operator*(const Tensor3& a, const Tensor3& b) {
  a.check_compatible(b);
  const std::size_t n = a.n_;
  const std::size_t n3 = n * n * n;
  Tensor3 c(a.field_, n);
  // View each tensor as an n^3 x n^3 matrix with row (i,k,p) and column (j,l,q).
  auto row_col = [n](std::size_t flat, std::size_t& row, std::size_t& col) {
    std::size_t q = flat % n;
    flat /= n;
    std::size_t p = flat % n;
    flat /= n;
    std::size_t l = flat % n;
    flat /= n;
    std::size_t k = flat % n;
    flat /= n;
    std::size_t j = flat % n;
    std::size_t i = flat / n;
    row = (i * n + k) * n + p;
    col = (j * n + l) * n + q;
  };
  std::vector<std::vector<std::pair<std::size_t, const ExactScalar*>>> b_rows(n3);
  for (const auto& [x, v] : b.entries_) {
    if (v.is_zero()) continue;
    std::size_t row, col;
    row_col(x, row, col);
    b_rows[row].emplace_back(col, &v);
  }
  for (const auto& [x, v] : a.entries_) {
    if (v.is_zero()) continue;
    std::size_t row, mid;
    row_col(x, row, mid);
    const std::size_t i = row / (n * n), k = (row / n) % n, p = row % n;
    for (const auto& [col, y] : b_rows[mid]) {
      const std::size_t j = col / (n * n), l = (col / n) % n, q = col % n;
      c.at(i, j, k, l, p, q) += v * *y;
    }
  }
  return c;
}

bool operator==(const Tensor3& a, const Tensor3& b) {
  if (a.n_ != b.n_ || !(a.field_ == b.field_)) return false;
  return (a - b).is_zero();
}

std::size_t Tensor3::nonzero_count() const {
  std::size_t c = 0;
  for (const auto& [x, v] : entries_) c += v.is_zero() ? 0 : 1;
  return c;
}

Tensor3 bracket(const Tensor3& a, const Tensor3& b) { return a * b - b * a; }

Tensor3 aybe_combine(const Tensor2& ra, const Tensor2& rb, const Tensor2& rc, const Tensor2& rd, const Tensor2& re,
                     const Tensor2& rf) {
  Tensor3 out = Tensor3::embed(ra, Slot::s12) * Tensor3::embed(rb, Slot::s13);
  out -= Tensor3::embed(rc, Slot::s23) * Tensor3::embed(rd, Slot::s12);
  out += Tensor3::embed(re, Slot::s13) * Tensor3::embed(rf, Slot::s23);
  return out;
}

RankResult tensor_rank(const Tensor2& t) {
  const std::size_t n = t.n();
  SquareMatrix m(t.field(), n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) m(i * n + j, k * n + l) = t.at(i, j, k, l);
  ExactScalar det = m.determinant();
  const bool invertible = !det.is_zero();
  return {std::move(det), invertible};
}

}  // namespace ybx
