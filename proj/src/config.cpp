#include "kptrop/config.hpp"

#include <stdexcept>

namespace kptrop {

Rational SolitonConfig::frozen_time(int r, const TimeOverrides& overrides) const {
  if (auto it = overrides.find(r); it != overrides.end()) return it->second;
  if (auto it = fixed_times.find(r); it != fixed_times.end()) return it->second;
  return Rational(0);
}

SpacetimePoint SolitonConfig::point_from(const std::vector<Rational>& active,
                                         const TimeOverrides& overrides) const {
  SpacetimePoint pt;
  pt.t.resize(static_cast<std::size_t>(horizon));
  for (int r = 1; r <= horizon; ++r) {
    if (r <= static_cast<int>(active.size()))
      pt.t[static_cast<std::size_t>(r - 1)] = active[static_cast<std::size_t>(r - 1)];
    else
      pt.t[static_cast<std::size_t>(r - 1)] = frozen_time(r, overrides);
  }
  return pt;
}

ConfigValidation validate_config(int M, std::vector<Rational> p, std::vector<Rational> c,
                                 std::map<int, Rational> fixed_times, int horizon) {
  ConfigValidation v;
  if (M < 1) v.errors.push_back("M must be >= 1");
  if (static_cast<int>(p.size()) != M + 1)
    v.errors.push_back("p list must have M+1 entries (got " + std::to_string(p.size()) + ")");
  if (static_cast<int>(c.size()) != M + 1)
    v.errors.push_back("c list must have M+1 entries (got " + std::to_string(c.size()) + ")");
  if (static_cast<int>(p.size()) == M + 1) {
    for (int i = 0; i + 1 <= M; ++i) {
      if (!(p[static_cast<std::size_t>(i)] < p[static_cast<std::size_t>(i + 1)])) {
        v.errors.push_back("p not strictly increasing at positions " + std::to_string(i + 1) +
                           "," + std::to_string(i + 2));
      }
    }
  }
  if (horizon == 0) horizon = M;
  if (horizon < M) v.errors.push_back("horizon must be at least M");
  for (const auto& [lvl, val] : fixed_times) {
    (void)val;
    if (lvl < 1 || lvl > horizon)
      v.errors.push_back("fixed time level " + std::to_string(lvl) + " outside 1..horizon");
  }
  if (!v.errors.empty()) return v;
  v.ok = true;
  v.config = SolitonConfig{M, std::move(p), std::move(c), horizon, std::move(fixed_times)};
  return v;
}

Rational phase_value(const SolitonConfig& config, int i, const SpacetimePoint& point) {
  if (i < 1 || i > config.phases()) throw std::out_of_range("phase index out of range");
  if (point.horizon() != config.horizon)
    throw std::invalid_argument("point dimension does not match config horizon");
  const Rational& pi = config.p[static_cast<std::size_t>(i - 1)];
  Rational acc = config.c[static_cast<std::size_t>(i - 1)];
  Rational pw(1);
  for (int r = 1; r <= config.horizon; ++r) {
    pw *= pi;
    acc += pw * point.level(r);
  }
  return acc;
}

std::vector<Rational> all_phase_values(const SolitonConfig& config, const SpacetimePoint& point) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(config.phases()));
  for (int i = 1; i <= config.phases(); ++i) out.push_back(phase_value(config, i, point));
  return out;
}

}  // namespace kptrop
