#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "kptrop/config.hpp"
#include "kptrop/index_set.hpp"
#include "kptrop/wedge.hpp"

namespace kptrop {

struct BBox {
  Rational x0, x1, y0, y1;
};

/// Per-cell argmax of the tropical field over a rectangular grid. Keys are
/// index sets: singletons for the simple class, term sets for the general
/// class.
struct RegionGrid {
  BBox bbox;
  int nx = 0, ny = 0;
  TimeOverrides times;              // frozen coordinates the field was cut at
  std::vector<IndexSet> keys;       // row-major, cell (ix, iy) at iy*nx+ix
  std::vector<bool> tie;            // cell attains its max on >= 2 keys
  std::vector<IndexSet> tie_sets;   // union of tying keys for flagged cells, parallel map
  std::vector<int> tie_index;       // -1 or index into tie_sets

  const IndexSet& key_at(int ix, int iy) const {
    return keys[static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx) +
                static_cast<std::size_t>(ix)];
  }
  Rational cell_cx(int ix) const;
  Rational cell_cy(int iy) const;

  /// Keys of regions that never touch the grid border (candidate bounded
  /// dominating regions; cannot occur in the simple class).
  std::vector<IndexSet> interior_only_keys() const;
};

using FieldSource = std::variant<SolitonConfig, GeneralTau>;

RegionGrid tropical_field(const FieldSource& source, const BBox& bbox, int nx, int ny,
                          const TimeOverrides& times = {});

struct BoundarySegment {
  double x1, y1, x2, y2;
  IndexSet left_key, right_key;
  Rational amplitude;  // tropical amplitude across this boundary
};

struct TriplePointHit {
  double x, y;
  std::vector<IndexSet> keys;
  Rational amplitude;
};

struct BoundaryExtraction {
  std::vector<BoundarySegment> segments;
  std::vector<TriplePointHit> triple_points;
};

/// Tropical amplitude across a boundary between two keys: (2/m^2) * sum of
/// squared p-gaps over the symmetric difference (m = its size).
Rational boundary_amplitude(const std::vector<Rational>& p, const IndexSet& a, const IndexSet& b);

BoundaryExtraction extract_boundaries(const RegionGrid& grid, const FieldSource& source);

/// Floating-point u = 2 hbar^2 (log tau)_xx via the max-phase-factored form;
/// valid for regular sources at any scale.
double exact_u(const FieldSource& source, const SpacetimePoint& point, double hbar = 1.0);

}  // namespace kptrop
