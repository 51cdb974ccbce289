#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kptrop/config.hpp"
#include "kptrop/index_set.hpp"
#include "kptrop/rational.hpp"

namespace kptrop {

/// The value of t^(n) at which the n+1 phases of `indices` coincide,
/// given the frozen higher times.
struct CriticalValue {
  IndexSet indices;
  Rational value;

  int level() const { return indices.size() - 1; }
};

/// Full coordinates of the coincidence point: t^(1)..t^(m-1) solved for
/// |S| = m, the rest frozen. `common` is the shared phase value there.
struct CriticalPoint {
  IndexSet indices;
  SpacetimePoint coordinates;
  Rational common;
};

/// t^(m-1)_S = -sum_{r=1}^{N+1-m} h_r(p_S) t^(m+r-1) - c_S for |S| = m >= 2.
CriticalValue critical_value(const SolitonConfig& config, const IndexSet& S,
                             const TimeOverrides& overrides = {});

/// Coincidence point via the symmetric-polynomial formula applied level by
/// level (fast path).
CriticalPoint critical_point(const SolitonConfig& config, const IndexSet& S,
                             const TimeOverrides& overrides = {});

/// Same point via exact Gaussian elimination of the phase-equality system
/// (the independent oracle route).
CriticalPoint critical_point_cramer(const SolitonConfig& config, const IndexSet& S,
                                    const TimeOverrides& overrides = {});

/// Both sides of the difference identity
///   cv(S\{i}) - cv(S\{j}) = (p_i - p_j)(t^(m-1) - cv(S)),  |S| = m,
/// where t^(m-1) is the ambient frozen value of that level.
std::pair<Rational, Rational> difference_identity_check(const SolitonConfig& config,
                                                        const IndexSet& S, int i, int j,
                                                        const TimeOverrides& overrides = {});

/// The m children of `parent` (each obtained by dropping one index) with
/// their critical values, sorted ascending by value. Ties are reported.
struct OrderedChildren {
  std::vector<CriticalValue> ordered;
  std::vector<int> deleted;  // deleted index per entry, parallel to `ordered`
  bool degenerate = false;
  std::vector<std::vector<IndexSet>> tie_groups;
};

OrderedChildren order_critical_values(const SolitonConfig& config, const IndexSet& parent,
                                      const TimeOverrides& overrides = {});

/// Factored phase difference on the plane P_{k1..kn} (chain must be given in
/// ascending-p order as k1..k_{n+1}):
///   theta_{k1} - theta_{k_{n+1}} = coefficient * (t^(n) - cv(chain)).
struct FactoredPhaseDifference {
  Rational coefficient;  // -prod_j (p_{k_{n+1}} - p_{k_j})
  CriticalValue pivot;   // cv over the full chain
};

FactoredPhaseDifference phase_difference_on_plane(const SolitonConfig& config,
                                                  const IndexSet& chain,
                                                  const TimeOverrides& overrides = {});

/// Value of t^(m) at which cv(T1) = cv(T2) for |T1| = |T2| = m. Undefined
/// (std::nullopt) when the p-sums over T1 and T2 agree (parallel case).
struct LevelCriticalValue {
  IndexSet left, right;
  Rational value;
};

std::optional<LevelCriticalValue> level_critical_value(const SolitonConfig& config,
                                                       const IndexSet& T1, const IndexSet& T2,
                                                       const TimeOverrides& overrides = {});

}  // namespace kptrop
