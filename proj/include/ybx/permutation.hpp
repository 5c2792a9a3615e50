#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ybx {

/// A bijection of {0, ..., n-1}; images()[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  /// The cycle 0 -> 1 -> ... -> n-1 -> 0.
  static Permutation rotation(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t x) const { return images_.at(x); }
  const std::vector<std::size_t>& images() const { return images_; }

  Permutation inverse() const;
  /// p^k for any integer k (negative powers use the inverse).
  Permutation power(long k) const;
  bool is_identity() const;
  /// True iff the permutation is a single n-cycle.
  bool is_transitive_cycle() const;

  /// Disjoint cycles, each starting at its smallest element, sorted by that element.
  std::vector<std::vector<std::size_t>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (p ∘ q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);
/// [p, q] = p^-1 q^-1 p q.
Permutation commutator(const Permutation& p, const Permutation& q);

struct CycleType {
  std::vector<std::size_t> lengths;  // sorted, descending
  std::vector<std::size_t> fixed_points;
};
CycleType cycle_type(const Permutation& p);

/// Associative Belavin-Drinfeld data (S, C1, C2, A) with S = {0, ..., n-1}.
struct ABDStructure {
  std::size_t n = 0;
  Permutation c1;
  Permutation c2;
  std::vector<std::size_t> a;  // sorted, no duplicates

  ABDStructure() = default;
  ABDStructure(Permutation c1, Permutation c2, std::vector<std::size_t> a);

  bool contains(std::size_t x) const;
  friend bool operator==(const ABDStructure&, const ABDStructure&) = default;
};

enum class AbdViolation {
  c1_not_transitive,
  c2_not_transitive,
  a_not_proper,
  a_out_of_range,
  not_commuting_on_a,
};
std::string to_string(AbdViolation v);

struct ValidationReport {
  std::vector<AbdViolation> violations;
  /// Points of `a` where C1 C2 and C2 C1 disagree.
  std::vector<std::size_t> noncommuting_points;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate_abd(const ABDStructure& s);

class InvalidStructure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
/// Throws InvalidStructure listing the violated invariants.
void require_valid(const ABDStructure& s);

/// A(k, m): the x in a whose translates C1^i C2^j (x), 0 <= i < k, 0 <= j < m, all lie in a.
std::vector<std::size_t> a_km(const ABDStructure& s, std::size_t k, std::size_t m);

/// A relabeling sigma with sigma c1 = c1' sigma, sigma c2 = c2' sigma and sigma(a) = a'.
std::optional<Permutation> abd_isomorphic(const ABDStructure& s1, const ABDStructure& s2);

/// Conjugates both permutations by sigma and maps a through it.
ABDStructure relabel(const ABDStructure& s, const Permutation& sigma);

using PairSet = std::vector<std::pair<std::size_t, std::size_t>>;
/// Gamma1 = {(x, C1 x)}, Gamma2 = {(C2 x, C1 C2 x)} over x in a; both sorted.
std::pair<PairSet, PairSet> gamma_pair(const ABDStructure& s);

/// Every single n-cycle on n points, in lexicographic order of images.
std::vector<Permutation> all_transitive_cycles(std::size_t n);
/// Every valid structure on n points (all cycle pairs, all admissible proper a).
std::vector<ABDStructure> all_abd_structures(std::size_t n);

}  // namespace ybx
