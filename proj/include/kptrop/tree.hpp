#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kptrop/config.hpp"
#include "kptrop/critical.hpp"
#include "kptrop/seq.hpp"

namespace kptrop {

/// Snapshot of a line soliton pattern at a generic event: the visible
/// triple points ordered by decreasing y, plus the derived tree codes.
struct SolitonTree {
  std::vector<std::array<int, 3>> triples;  // top to bottom (decreasing y)
  std::vector<Rational> y_values;           // parallel to triples
  LevelSeq level_code;                      // S_r element for this leveling
  LevelSeq code;                            // Y_r representative
  BinaryTree shape;                         // node ids follow `triples` order

  int nodes() const { return static_cast<int>(triples.size()); }
};

struct DegenerateEvent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Build the tree from the visible triple points at the frozen times
/// (t^(3).. from overrides/config). Throws DegenerateEvent at a visible
/// critical time or tied y-values.
SolitonTree tree_at_event(const SolitonConfig& config, const TimeOverrides& overrides = {});

/// One entry of the decreasing y-sequence.
struct YEntry {
  std::array<int, 3> triple;
};

/// Rule mapping (y_ikl, y_ijk) -> (y_ijl, y_jkl) at t_{ijkl}. The pair must
/// be adjacent after re-sorting is accounted for by the caller; here the
/// pair must literally be adjacent in `sequence`.
std::vector<YEntry> apply_rotation(const std::vector<YEntry>& sequence, const IndexSet& event);

/// Right rotation at the tree node whose left child is internal and whose
/// triple matches (i,k,l) over (i,j,k); used as the structural cross-check.
bool differ_by_one_right_rotation(const SolitonTree& before, const SolitonTree& after,
                                  const IndexSet& event);

}  // namespace kptrop
