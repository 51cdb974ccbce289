#pragma once

#include <map>
#include <string>
#include <vector>

#include "kptrop/index_set.hpp"
#include "kptrop/rational.hpp"

namespace kptrop {

/// Full coordinate tuple t^(1)..t^(N). t^(1)=x, t^(2)=y, t^(3)=t.
struct SpacetimePoint {
  std::vector<Rational> t;  // t[r-1] = t^(r)

  int horizon() const { return static_cast<int>(t.size()); }
  const Rational& level(int r) const { return t.at(static_cast<std::size_t>(r - 1)); }
  Rational& level(int r) { return t.at(static_cast<std::size_t>(r - 1)); }
};

/// Frozen values for selected hierarchy times, keyed by level. Levels absent
/// here fall back to the config's fixed_times, then to 0.
using TimeOverrides = std::map<int, Rational>;

/// A simple-class soliton configuration: M+1 phases
/// theta_k = sum_{r=1..N} p_k^r t^(r) + c_k with p strictly increasing.
struct SolitonConfig {
  int M = 0;
  std::vector<Rational> p;  // size M+1
  std::vector<Rational> c;  // size M+1
  int horizon = 0;          // N; defaults to M
  std::map<int, Rational> fixed_times;  // frozen t^(n) values, by level n

  int phases() const { return M + 1; }

  /// Frozen value of t^(r): overrides, then fixed_times, then 0.
  Rational frozen_time(int r, const TimeOverrides& overrides = {}) const;

  /// Build a full point from the low coordinates, filling levels
  /// above `active.size()` from overrides/fixed_times.
  SpacetimePoint point_from(const std::vector<Rational>& active,
                            const TimeOverrides& overrides = {}) const;
};

struct ConfigValidation {
  bool ok = false;
  SolitonConfig config;            // valid only when ok
  std::vector<std::string> errors; // every violated invariant
};

ConfigValidation validate_config(int M, std::vector<Rational> p, std::vector<Rational> c,
                                 std::map<int, Rational> fixed_times = {}, int horizon = 0);

/// Exact theta_i at the point; i is 1-based.
Rational phase_value(const SolitonConfig& config, int i, const SpacetimePoint& point);

std::vector<Rational> all_phase_values(const SolitonConfig& config, const SpacetimePoint& point);

}  // namespace kptrop
