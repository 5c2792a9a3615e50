#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "ybx/surface.hpp"
#include "ybx/tensor.hpp"
#include "ybx/trig_solution.hpp"

namespace ybx {

enum class FamilyKind { diagonal, horizontal, vertical, a_rect };
std::string to_string(FamilyKind k);

/// A class of disks contributing to mu_3. For a_rect, sign +1 is the rectangle
/// with corners (C1^k a, a, C2^m a) and sign -1 the one with corners
/// (C2^m a, C1^k C2^m a, C1^k a).
struct RectangleFamily {
  FamilyKind kind = FamilyKind::diagonal;
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t base = 0;
  int sign = 1;
  /// Holonomy in units of (u/n, v/n).
  long long hol_u = 0;
  long long hol_v = 0;
  /// Inputs (x, y, z) of MP(e_x, e_y, e_z) and its output index d.
  std::size_t x = 0, y = 0, z = 0, d = 0;
  /// Dualized position (x, d, z, y) in Mat_n ⊗ Mat_n.
  Index4 target{};

  friend auto operator<=>(const RectangleFamily&, const RectangleFamily&) = default;
};

/// Sorted by (kind, k, m, base, sign). a_rect families come from develop_rectangle.
std::vector<RectangleFamily> enumerate_rectangles(const SquareTiledSurface& s);

/// Develops the k x m block of squares C1^x C2^y (a) along both path orders and
/// requires the two to agree and every block corner to be a filled puncture.
bool develop_rectangle(const SquareTiledSurface& s, std::size_t a, std::size_t k, std::size_t m);

struct MasseyTerm {
  RectangleFamily family;
  ExactScalar mu3;
  ExactScalar h1_correction;  // mu_2(., h_1)
  ExactScalar h2_correction;  // mu_2(h_2, .)
  ExactScalar mp;             // mu3 - corrections
  ExactScalar contribution;   // -mp, placed at family.target
};

struct MasseyTensor {
  Tensor2 total;
  std::vector<MasseyTerm> breakdown;
};

/// Throws PoleError if q_u^{2n} = 1 or q_v^{2n} = 1.
MasseyTensor massey_tensor(const SquareTiledSurface& s, const Field& field, const ExactScalar& qu,
                           const ExactScalar& qv);

struct MasseyN1Steps {
  ExactScalar mu2_q12_p11;   // e^u m_1
  ExactScalar mu2_p22_q12;   // m_1
  ExactScalar h1;            // e^u / (e^u - 1), coefficient of m_0
  ExactScalar h2;            // 1 / (e^v - 1), coefficient of n_0
  ExactScalar mu3;           // 1
  ExactScalar mu2_p22_m0;    // 1
  ExactScalar mu2_n0_p11;    // e^v
  ExactScalar combination;   // 1 + e^u/(1 - e^u) + e^v/(1 - e^v)
  ExactScalar r_coefficient; // -combination, the e_00 ⊗ e_00 coefficient of r
};
/// For n = 1, e^u = q_u^2 and e^v = q_v^2.
MasseyN1Steps massey_n1_breakdown(const ExactScalar& qu, const ExactScalar& qv);

struct NovikovResult {
  std::complex<double> partial_sum;
  std::complex<double> closed_form;
  double error = 0.0;
};
/// Partial sum of the n = 1 disk series truncated at L, against its closed form.
/// Throws std::invalid_argument unless Re u > 0, Re v > 0 and L >= 0.
NovikovResult novikov_check(std::complex<double> u, std::complex<double> v, int L);

}  // namespace ybx
