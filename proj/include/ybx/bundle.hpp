#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ybx/permutation.hpp"
#include "ybx/scalar.hpp"
#include "ybx/trig_solution.hpp"

namespace ybx {

/// Degree data of V^lambda(m) on the cycle of n projective lines.
/// m[i][j] is the degree on component j of the i-th row, i in Z/r.
struct BundleData {
  std::size_t r = 1;
  std::size_t n = 1;
  std::vector<std::vector<long long>> m;
  ExactScalar lambda = Field::rationals().one();

  /// Throws std::invalid_argument on shape errors or lambda = 0.
  BundleData(std::size_t r, std::size_t n, std::vector<std::vector<long long>> m, ExactScalar lambda);

  friend bool operator==(const BundleData&, const BundleData&) = default;
};

/// d_{qn+j} = m[-q mod r][j]; periodic with period rn.
class UnrolledSequence {
 public:
  explicit UnrolledSequence(const BundleData& b);
  long long operator()(long long t) const;
  std::size_t period() const { return r_ * n_; }

 private:
  std::size_t r_, n_;
  std::vector<std::vector<long long>> m_;
};
UnrolledSequence unroll_d(const BundleData& b);

struct SimplicityReport {
  bool spread_ok = true;
  /// Shifts q in 1..r-1 whose difference sequence is zero or fails to alternate.
  std::vector<std::size_t> bad_shifts;
  std::string detail;
  bool simple() const { return spread_ok && bad_shifts.empty(); }
};
SimplicityReport simplicity(const BundleData& b);
bool is_simple(const BundleData& b);

enum class BundleType { positive, nonnegative, neither };
std::string to_string(BundleType t);
BundleType type_check(const BundleData& b);
/// Adds N to every degree.
BundleData twist(const BundleData& b, long long N);

class IncomparableRows : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};
/// True iff i ≺ i'. Throws IncomparableRows if the scan over one period sees only zeros.
bool precedes(const BundleData& b, std::size_t i, std::size_t i2);
/// Z/r sorted by ≺. Throws IncomparableRows if the order is not a strict total order.
std::vector<std::size_t> order_prec(const BundleData& b);

/// Throws std::invalid_argument if b is not simple.
ABDStructure abd_of_bundle(const BundleData& b);
TrigSolution bundle_solution(const BundleData& b, const Field& field);

/// A simple bundle with 1 <= r <= max_r and 1 <= n <= max_n, lambda = 1.
BundleData random_simple_bundle(Rng& rng, std::size_t max_r, std::size_t max_n);

}  // namespace ybx
