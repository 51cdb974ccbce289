#include "kptrop/visibility.hpp"

#include <algorithm>
#include <set>

namespace kptrop {

VisibilityVerdict is_visible(const SolitonConfig& config, const IndexSet& S,
                             const TimeOverrides& overrides) {
  CriticalPoint pt = critical_point(config, S, overrides);
  VisibilityVerdict v;
  v.common = pt.common;
  v.visible = true;
  std::optional<Rational> best;
  for (int m = 1; m <= config.phases(); ++m) {
    if (S.contains(m)) continue;
    Rational val = phase_value(config, m, pt.coordinates);
    if (val == v.common) v.generic = false;
    if (val > v.common && (!best || val > *best)) {
      best = val;
      v.dominating_witness = m;
      v.visible = false;
    }
  }
  return v;
}

std::vector<IndexSet> halfline_nonvisible(const IndexSet& parent, Side side) {
  const int m = parent.size();
  std::vector<IndexSet> out;
  if (side == Side::Below) {
    // drop k_{(m-1)-2r}, r = 0..ceil((m-1)/2)-1   (1-based positions)
    for (int pos = m - 1; pos >= 1; pos -= 2) out.push_back(parent.without(parent[pos - 1]));
  } else {
    // drop k_{m-2r}, r = 0..floor((m-1)/2)
    for (int pos = m; pos >= 1; pos -= 2) out.push_back(parent.without(parent[pos - 1]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexSet> halfline_potentially_visible(const IndexSet& parent, Side side) {
  auto killed = halfline_nonvisible(parent, side);
  std::vector<IndexSet> out;
  for (int k : parent) {
    IndexSet child = parent.without(k);
    if (!std::binary_search(killed.begin(), killed.end(), child)) out.push_back(child);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexSet> two_step_nonvisible(const IndexSet& parent, Side side) {
  const int m = parent.size();
  std::vector<int> positions;  // 1-based positions eligible for deletion
  if (side == Side::Below) {
    for (int pos = m - 1; pos >= 1; pos -= 2) positions.push_back(pos);
  } else {
    for (int pos = m; pos >= 1; pos -= 2) positions.push_back(pos);
  }
  std::vector<IndexSet> out;
  for (std::size_t a = 0; a < positions.size(); ++a)
    for (std::size_t b = a + 1; b < positions.size(); ++b)
      out.push_back(parent.without(parent[positions[a] - 1]).without(parent[positions[b] - 1]));
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet two_step_nonvisible_line(const IndexSet& parent, int r, int s, Side side) {
  const int m = parent.size();
  // Eligible 1-based positions: m-1, m-3, ... below; m, m-2, ... above.
  const int count = side == Side::Below ? m / 2 : (m + 1) / 2;
  if (r < 0 || s <= r || s >= count)
    throw std::invalid_argument("two_step_nonvisible_line: malformed (r, s) pair");
  int top = side == Side::Below ? m - 1 : m;
  int pos_r = top - 2 * r, pos_s = top - 2 * s;
  return parent.without(parent[pos_r - 1]).without(parent[pos_s - 1]);
}

std::map<int, LevelReport> visible_cascade(const SolitonConfig& config, int down_to_size,
                                           const TimeOverrides& overrides) {
  const int top = config.phases();
  if (down_to_size < 2 || down_to_size > top)
    throw std::invalid_argument("visible_cascade: size out of range");

  std::map<int, LevelReport> result;
  std::set<IndexSet> visible_above;  // visible sets of size m+1

  {
    LevelReport full;
    full.visible.push_back(critical_value(config, IndexSet::full(top)));
    result[top] = full;
    visible_above.insert(IndexSet::full(top));
  }

  for (int m = top - 1; m >= down_to_size; --m) {
    LevelReport report;
    std::set<IndexSet> killed_a7, killed_a9, candidates_alive;
    auto parents = subsets_of_size(top, m + 1);

    for (const auto& S : subsets_of_size(top, m)) {
      bool any_visible_parent = false;
      bool a7 = false;
      for (int extra = 1; extra <= top; ++extra) {
        if (S.contains(extra)) continue;
        IndexSet parent = S.with(extra);
        if (visible_above.count(parent)) any_visible_parent = true;
        Rational cv = critical_value(config, parent, overrides).value;
        Rational here = config.frozen_time(m, overrides);
        if (here == cv) continue;  // tie: the half-line rule gives no verdict here
        Side side = here < cv ? Side::Below : Side::Above;
        auto nv = halfline_nonvisible(parent, side);
        if (std::binary_search(nv.begin(), nv.end(), S)) a7 = true;
      }
      if (a7) killed_a7.insert(S);
      if (!any_visible_parent) killed_a9.insert(S);
      if (!a7 && any_visible_parent) candidates_alive.insert(S);
    }

    for (const auto& S : killed_a9)
      if (!killed_a7.count(S)) report.a9_only_kills.push_back(S);

    // Oracle cross-check on every candidate of this size.
    for (const auto& S : subsets_of_size(top, m)) {
      bool analytic = candidates_alive.count(S) > 0;
      VisibilityVerdict oracle = is_visible(config, S, overrides);
      if (!oracle.generic) {
        // Higher-order coincidence at this point. Only a visible one is a
        // degenerate event; a dominated one changes nothing.
        report.boundary_sets.push_back(S);
        if (oracle.visible) report.degenerate = true;
        continue;
      }
      if (analytic != oracle.visible)
        throw ConsistencyError("visibility: analytic and oracle disagree on " + S.str());
      if (analytic)
        report.visible.push_back(critical_value(config, S, overrides));
    }

    std::sort(report.visible.begin(), report.visible.end(), [](const auto& a, const auto& b) {
      if (a.value != b.value) return a.value < b.value;
      return a.indices < b.indices;
    });
    for (std::size_t i = 0; i + 1 < report.visible.size(); ++i)
      if (report.visible[i].value == report.visible[i + 1].value) report.degenerate = true;

    // Order relations from each parent's ordered children (only pairs where
    // both children survived; the child ordering holds for every parent).
    std::set<IndexSet> vis_set;
    for (const auto& cv : report.visible) vis_set.insert(cv.indices);
    for (const auto& parent : parents) {
      auto ordered = order_critical_values(config, parent, overrides);
      std::vector<IndexSet> alive;
      for (const auto& cv : ordered.ordered)
        if (vis_set.count(cv.indices)) alive.push_back(cv.indices);
      for (std::size_t i = 0; i + 1 < alive.size(); ++i)
        report.order_relations.push_back({alive[i], alive[i + 1]});
    }
    std::sort(report.order_relations.begin(), report.order_relations.end());
    report.order_relations.erase(
        std::unique(report.order_relations.begin(), report.order_relations.end()),
        report.order_relations.end());
    // The union of ordered sequences must stay acyclic; values give a
    // witness order, so a cycle would force an equality (degenerate) —
    // check antisymmetry directly.
    for (const auto& [a, b] : report.order_relations)
      if (std::binary_search(report.order_relations.begin(), report.order_relations.end(),
                             std::make_pair(b, a)))
        throw ConsistencyError("visibility: order relations not antisymmetric at size " +
                               std::to_string(m));

    visible_above.clear();
    for (const auto& cv : report.visible) visible_above.insert(cv.indices);
    result[m] = std::move(report);
  }
  return result;
}

LevelReport prune_level(const SolitonConfig& config, int size, const TimeOverrides& overrides) {
  auto cascade = visible_cascade(config, size, overrides);
  return cascade.at(size);
}

}  // namespace kptrop
