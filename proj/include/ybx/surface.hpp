#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ybx/permutation.hpp"

namespace ybx {

enum class Corner { bottom_right, bottom_left, top_left, top_right };

struct CornerRef {
  std::size_t square;
  Corner corner;
  friend auto operator<=>(const CornerRef&, const CornerRef&) = default;
};

/// One point of the compactified surface lying over the corner of the torus.
struct Puncture {
  /// Squares whose bottom-right corner sits here; this is a cycle of [C2, C1].
  std::vector<std::size_t> labels;
  std::vector<CornerRef> corners;  // sorted
  bool filled = false;

  std::size_t ramification() const { return labels.size(); }
};

/// n unit squares; the right edge of i is glued to the left edge of C1(i) and
/// the bottom edge of i to the top edge of C2(i).
struct SquareTiledSurface {
  ABDStructure abd;
  std::vector<Puncture> punctures;          // ordered by smallest label
  std::vector<std::size_t> puncture_of;     // square i -> index of the puncture at its bottom-right corner
};

/// Throws InvalidStructure if `abd` is not valid, and std::logic_error if the
/// corner walk disagrees with the commutator cycles.
SquareTiledSurface build_surface(const ABDStructure& abd);

struct PunctureAnalysis {
  std::size_t b = 0;
  std::map<std::size_t, std::size_t> b_k;    // ramification index -> count
  std::vector<std::size_t> unramified;       // labels of punctures with e = 1, sorted
  std::vector<std::size_t> ramification;     // per puncture, in surface order
  /// Number of sides of the polygon of the L1/L2 decomposition around each puncture (4e).
  std::vector<std::size_t> polygon_sides;
};
PunctureAnalysis puncture_analysis(const SquareTiledSurface& s);

struct Topology {
  long long chi = 0;  // of the punctured surface, always -n
  long long genus = 0;
  bool connected = false;
};
Topology topological_invariants(const SquareTiledSurface& s);

struct FilledSurface {
  std::size_t punctures = 0;
  long long genus = 0;
  long long chi = 0;
  std::vector<std::size_t> filled;
};
/// Partial compactification by the singleton punctures p_a, a in `a`.
/// Throws std::invalid_argument if some a labels a ramified puncture.
FilledSurface fill_punctures(const SquareTiledSurface& s, const std::vector<std::size_t>& a);

}  // namespace ybx
