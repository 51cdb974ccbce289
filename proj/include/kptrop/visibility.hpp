#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kptrop/config.hpp"
#include "kptrop/critical.hpp"
#include "kptrop/index_set.hpp"

namespace kptrop {

/// Thrown when the analytic pruning rules and the dominance oracle disagree
/// (an implementation bug by construction). CLI maps this to exit code 2.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

struct VisibilityVerdict {
  bool visible = false;
  std::optional<int> dominating_witness;  // strict dominator outside S, if any
  bool generic = true;                    // no outside phase ties the common value
  Rational common;                        // value shared by the phases of S
};

/// Direct dominance test at the coincidence point of S. The oracle.
VisibilityVerdict is_visible(const SolitonConfig& config, const IndexSet& S,
                             const TimeOverrides& overrides = {});

enum class Side { Below, Above };

/// Children of `parent` (one index dropped) that are non-visible on the given
/// side of the parent's critical value. The two sides partition all children.
std::vector<IndexSet> halfline_nonvisible(const IndexSet& parent, Side side);
std::vector<IndexSet> halfline_potentially_visible(const IndexSet& parent, Side side);

/// Grandchildren of `parent` (two indices dropped, per the alternating
/// double-deletion pattern) whose whole critical line is non-visible on the
/// given side of the parent's critical value.
std::vector<IndexSet> two_step_nonvisible(const IndexSet& parent, Side side);

/// The (r, s) instance of the rule, 0 <= r < s within the side's bound;
/// throws on a malformed pair.
IndexSet two_step_nonvisible_line(const IndexSet& parent, int r, int s, Side side);

struct LevelReport {
  std::vector<CriticalValue> visible;    // sorted by value, then by indices
  std::vector<std::pair<IndexSet, IndexSet>> order_relations;  // a < b, from parent orderings
  bool degenerate = false;
  std::vector<IndexSet> boundary_sets;   // sets whose side vs. a parent was a tie
  std::vector<IndexSet> a9_only_kills;   // killed only by the parent-line rule
};

/// All visible index sets per size, from the full set (always visible) down
/// to the requested size. Every verdict is cross-checked against is_visible;
/// disagreement throws ConsistencyError.
std::map<int, LevelReport> visible_cascade(const SolitonConfig& config, int down_to_size,
                                           const TimeOverrides& overrides = {});

/// Visible critical values of t^(size-1), ordered increasingly.
LevelReport prune_level(const SolitonConfig& config, int size,
                        const TimeOverrides& overrides = {});

}  // namespace kptrop
