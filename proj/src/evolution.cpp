#include "kptrop/evolution.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kptrop/visibility.hpp"

namespace kptrop {

namespace {

const std::vector<std::vector<std::string>>& table_rows() {
  static const std::vector<std::vector<std::string>> rows = {
      {"1234", "1245", "2345", "1256", "2356", "3456"},
      {"1234", "1245", "1256", "2345", "2356", "3456"},
      {"1234", "1245", "1256", "2456", "2346"},
      {"1234", "1456", "1246", "2346"},
      {"1456", "1234", "1246", "2346"},
      {"1456", "1346", "1236"},
      {"1345", "1356", "3456", "1236"},
      {"1345", "1356", "1236", "3456"},
      {"1345", "1235", "1256", "2356", "3456"},
  };
  return rows;
}

bool is_left_comb(const LevelSeq& code) {
  return std::all_of(code.begin(), code.end(), [](int n) { return n == 1; });
}

bool is_right_comb(const LevelSeq& code) {
  for (std::size_t i = 0; i < code.size(); ++i)
    if (code[i] != static_cast<int>(i) + 1) return false;
  return true;
}

// Y-code reachability in exactly `steps` covers.
bool reachable_in(const LevelSeq& from, const LevelSeq& to, std::size_t steps) {
  if (steps == 0) return from == to;
  for (const auto& c : tamari_covers(from))
    if (reachable_in(c.to, to, steps - 1)) return true;
  return false;
}

}  // namespace

std::vector<std::string> chain_time_labels(const EvolutionChain& chain) {
  std::vector<std::string> labels;
  for (const auto& ev : chain.events)
    for (const auto& rot : ev.rotations) labels.push_back(rot.str());
  return labels;
}

EvolutionChain classify_evolution(const SolitonConfig& config, const TimeOverrides& overrides) {
  EvolutionChain chain;
  if (config.M < 2) {
    chain.initial = tree_at_event(config, overrides);
    return chain;
  }

  // Visible 4-index events and their times t_{ijkl}.
  std::vector<CriticalValue> times;
  if (config.M == 2) {
    // No 4-phase events: the pattern is a single tree for all t.
    chain.initial = tree_at_event(config, overrides);
    return chain;
  }
  times = prune_level(config, 4, overrides).visible;

  // Group ties into simultaneous events.
  std::vector<EvolutionEvent> events;
  for (const auto& cv : times) {
    if (!events.empty() && events.back().time == cv.value) {
      events.back().rotations.push_back(cv.indices);
      chain.degenerate = true;
      chain.notes.push_back("simultaneous rotations at t = " + to_string(cv.value));
    } else {
      EvolutionEvent ev;
      ev.time = cv.value;
      ev.rotations.push_back(cv.indices);
      events.push_back(std::move(ev));
    }
  }

  // Sample strictly inside each interval between consecutive events. A
  // sample can accidentally hit a level-exchange time, so retry on a few
  // dyadic subdivisions before giving up.
  auto sample_tree = [&](std::optional<Rational> lo, std::optional<Rational> hi) {
    std::vector<Rational> candidates;
    if (lo && hi) {
      Rational span = *hi - *lo;
      for (int d : {2, 4, 8, 16, 32})
        candidates.push_back(*lo + span / d);
    } else if (lo) {
      for (int d : {1, 2, 4, 8, 16}) candidates.push_back(*lo + d);
    } else if (hi) {
      for (int d : {1, 2, 4, 8, 16}) candidates.push_back(*hi - d);
    } else {
      candidates.push_back(Rational(0));
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      TimeOverrides ov = overrides;
      ov[3] = candidates[i];
      try {
        return tree_at_event(config, ov);
      } catch (const DegenerateEvent&) {
        if (i + 1 == candidates.size()) throw;
      }
    }
    throw DegenerateEvent("unreachable");
  };

  std::vector<SolitonTree> trees;
  if (events.empty()) {
    trees.push_back(sample_tree(std::nullopt, std::nullopt));
  } else {
    trees.push_back(sample_tree(std::nullopt, events.front().time));
    for (std::size_t i = 0; i + 1 < events.size(); ++i)
      trees.push_back(sample_tree(events[i].time, events[i + 1].time));
    trees.push_back(sample_tree(events.back().time, std::nullopt));
  }
  chain.initial = trees.front();
  if (!is_left_comb(chain.initial.code))
    throw ConsistencyError("initial tree is not the left comb");
  if (!is_right_comb(trees.back().code))
    throw ConsistencyError("final tree is not the right comb");

  for (std::size_t e = 0; e < events.size(); ++e) {
    const SolitonTree& before = trees[e];
    const SolitonTree& after = trees[e + 1];
    if (events[e].rotations.size() == 1) {
      if (!differ_by_one_right_rotation(before, after, events[e].rotations.front()))
        throw ConsistencyError("trees around t = " + to_string(events[e].time) +
                               " do not differ by the named right rotation");
      if (tamari_covers(before.code).empty() ||
          !reachable_in(before.code, after.code, 1))
        throw ConsistencyError("step at t = " + to_string(events[e].time) +
                               " is not a Tamari cover");
    } else {
      if (!reachable_in(before.code, after.code, events[e].rotations.size()))
        chain.notes.push_back("multi-rotation step at t = " + to_string(events[e].time) +
                              " skips " + std::to_string(events[e].rotations.size()) +
                              " covers");
    }
    events[e].after = after;
  }
  chain.events = std::move(events);

  if (config.M == 5 && !chain.degenerate) {
    auto labels = chain_time_labels(chain);
    const auto& rows = table_rows();
    for (std::size_t rix = 0; rix < rows.size(); ++rix)
      if (rows[rix] == labels) chain.table_type = static_cast<int>(rix) + 1;
    if (!chain.table_type)
      throw ConsistencyError("M=5 chain does not match any of the nine table rows");
  }
  return chain;
}

RefinedChain refine_with_levels(const SolitonConfig& config, const EvolutionChain& chain,
                                const TimeOverrides& overrides) {
  RefinedChain refined;
  refined.initial_level_code = chain.initial.level_code;
  if (chain.events.empty()) return refined;

  // Incomparable node pairs (neither ancestor of the other) can exchange
  // levels when their y-values cross inside a rotation-free interval.
  auto level_events_in =
      [&](const SolitonTree& tree, const Rational& lo,
          const Rational& hi) -> std::vector<std::pair<Rational, std::pair<int, int>>> {
    std::vector<std::pair<Rational, std::pair<int, int>>> found;
    int r = tree.nodes();
    std::vector<std::vector<bool>> ancestor(static_cast<std::size_t>(r + 1),
                                            std::vector<bool>(static_cast<std::size_t>(r + 1)));
    auto mark = [&](auto&& self, int node, std::vector<int>& stack) -> void {
      if (node <= 0) return;
      for (int anc : stack) ancestor[static_cast<std::size_t>(anc)][static_cast<std::size_t>(node)] = true;
      stack.push_back(node);
      self(self, tree.shape.nodes[static_cast<std::size_t>(node)].left, stack);
      self(self, tree.shape.nodes[static_cast<std::size_t>(node)].right, stack);
      stack.pop_back();
    };
    std::vector<int> stack;
    mark(mark, tree.shape.root, stack);
    for (int u = 1; u <= r; ++u) {
      for (int v = u + 1; v <= r; ++v) {
        if (ancestor[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ||
            ancestor[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
          continue;
        IndexSet tu(std::vector<int>(tree.triples[static_cast<std::size_t>(u - 1)].begin(),
                                     tree.triples[static_cast<std::size_t>(u - 1)].end()));
        IndexSet tv(std::vector<int>(tree.triples[static_cast<std::size_t>(v - 1)].begin(),
                                     tree.triples[static_cast<std::size_t>(v - 1)].end()));
        auto lcv = level_critical_value(config, tu, tv, overrides);
        if (!lcv) continue;  // parallel heights, no crossing
        if (lo < lcv->value && lcv->value < hi) found.push_back({lcv->value, {u, v}});
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return found;
  };

  auto tree_at = [&](const Rational& t) {
    TimeOverrides ov = overrides;
    ov[3] = t;
    return tree_at_event(config, ov);
  };

  for (std::size_t e = 0; e < chain.events.size(); ++e) {
    const Rational lo = chain.events[e].time;
    const Rational hi =
        e + 1 < chain.events.size() ? chain.events[e + 1].time : Rational(lo + 2);
    SolitonTree tree = tree_at((lo + hi) / 2);
    auto crossings = level_events_in(tree, lo, hi);

    std::vector<Rational> cuts{lo};
    for (const auto& [t, pair] : crossings) cuts.push_back(t);
    cuts.push_back(hi);

    RefinedStep rot{RefinedStep::Kind::Rotation, lo, chain.events[e].rotations, {}, {}, {}};
    rot.level_code_after = tree_at((cuts[0] + cuts[1]) / 2).level_code;
    refined.steps.push_back(rot);
    for (std::size_t k = 0; k < crossings.size(); ++k) {
      const auto& [t, pair] = crossings[k];
      RefinedStep step{RefinedStep::Kind::LevelExchange, t, {}, {}, {}, {}};
      step.swap_upper = tree.triples[static_cast<std::size_t>(pair.first - 1)];
      step.swap_lower = tree.triples[static_cast<std::size_t>(pair.second - 1)];
      step.level_code_after = tree_at((cuts[k + 1] + cuts[k + 2]) / 2).level_code;
      refined.steps.push_back(step);
    }
  }
  return refined;
}

TableRegion table_conditions(const SolitonConfig& config, const TimeOverrides& overrides) {
  if (config.M != 5) throw std::invalid_argument("table_conditions: M must be 5");
  TableRegion out;
  const auto& p = config.p;
  auto pv = [&](int i) { return p[static_cast<std::size_t>(i - 1)]; };
  out.lambda = config.frozen_time(5, overrides) -
               critical_value(config, IndexSet::full(6), overrides).value;
  out.mu = config.frozen_time(4, overrides) -
           critical_value(config, IndexSet{1, 2, 3, 4, 5}, overrides).value;

  // Sector slopes, top of the mu<0 fan down to the mu>0 fan.
  Rational k1 = (pv(3) + pv(4) - pv(1) - pv(6)) / ((pv(3) - pv(6)) * (pv(4) - pv(6)));
  Rational k2 = Rational(1) / (pv(1) - pv(6));
  Rational k3 = Rational(1) / (pv(3) - pv(6));
  Rational k4 = (pv(2) + pv(3) - pv(5) - pv(6)) / ((pv(2) - pv(6)) * (pv(3) - pv(6)));
  Rational k5 = Rational(1) / (pv(5) - pv(6));
  Rational k6 = Rational(1) / (pv(2) - pv(6));
  Rational k7 = (pv(1) + pv(2) - pv(4) - pv(5)) /
                (pv(1) * pv(2) - pv(4) * pv(5) + (pv(4) + pv(5) - pv(1) - pv(2)) * pv(6));
  Rational k8 = Rational(1) / (pv(4) - pv(6));

  auto classify = [&]() -> int {
    if (out.mu == 0) return out.lambda > 0 ? 6 : 0;
    Rational r = out.lambda / out.mu;
    if (out.mu < 0) {
      if (r > k1) return 1;
      if (r == k1) return 0;
      if (r > k2) return 2;
      if (r == k2) return 0;
      if (r > k3) return 3;
      if (r == k3) return 0;
      if (r > k4) return 4;
      if (r == k4) return 0;
      if (r > k5) return 5;
      if (r == k5) return 0;
      return 6;
    }
    if (r > k6) return 6;
    if (r == k6) return 0;
    if (r > k7) return 7;
    if (r == k7) return 0;
    if (r > k8) return 8;
    if (r == k8) return 0;
    return 9;
  };
  out.type = classify();
  out.report = "mu=" + to_string(out.mu) + " lambda=" + to_string(out.lambda) +
               (out.type ? " -> type " + std::to_string(out.type) : " -> boundary");
  return out;
}

}  // namespace kptrop
