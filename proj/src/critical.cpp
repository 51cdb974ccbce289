#include "kptrop/critical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "kptrop/symmetric.hpp"

namespace kptrop {

CriticalValue critical_value(const SolitonConfig& config, const IndexSet& S,
                             const TimeOverrides& overrides) {
  const int m = S.size();
  if (m < 2) throw std::invalid_argument("critical_value: need at least 2 indices");
  if (m > config.phases()) throw std::invalid_argument("critical_value: index set too large");
  const auto ps = gather(config.p, S);
  Rational v = -c_coeff(config.p, config.c, S);
  for (int r = 1; r <= config.horizon + 1 - m; ++r)
    v -= h_poly(r, ps) * config.frozen_time(m + r - 1, overrides);
  return CriticalValue{S, std::move(v)};
}

CriticalPoint critical_point(const SolitonConfig& config, const IndexSet& S,
                             const TimeOverrides& overrides) {
  const int m = S.size();
  if (m < 2) throw std::invalid_argument("critical_point: need at least 2 indices");
  TimeOverrides merged = overrides;
  // Solve top down: the t^(r) coordinate is the critical value of the first
  // r+1 indices of S once everything above r is frozen.
  for (int r = m - 1; r >= 1; --r) {
    std::vector<int> prefix(S.indices().begin(), S.indices().begin() + r + 1);
    merged[r] = critical_value(config, IndexSet(std::move(prefix)), merged).value;
  }
  SpacetimePoint pt = config.point_from({}, merged);
  Rational common = phase_value(config, S[0], pt);
  return CriticalPoint{S, std::move(pt), std::move(common)};
}

CriticalPoint critical_point_cramer(const SolitonConfig& config, const IndexSet& S,
                                    const TimeOverrides& overrides) {
  const int m = S.size();
  if (m < 2) throw std::invalid_argument("critical_point_cramer: need at least 2 indices");
  // Unknowns t^(0)..t^(m-1):  sum_{r=0}^{m-1} p_k^r t^(r) = -c_k - sum_{r>=m} p_k^r t^(r).
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> rhs;
  for (int k : S) {
    const Rational& pk = config.p[static_cast<std::size_t>(k - 1)];
    std::vector<Rational> row(static_cast<std::size_t>(m));
    Rational pw(1);
    for (int r = 0; r < m; ++r) {
      row[static_cast<std::size_t>(r)] = pw;
      pw *= pk;
    }
    Rational b = -config.c[static_cast<std::size_t>(k - 1)];
    for (int r = m; r <= config.horizon; ++r) {
      b -= pw * config.frozen_time(r, overrides);
      pw *= pk;
    }
    a.push_back(std::move(row));
    rhs.push_back(std::move(b));
  }
  std::vector<Rational> x = solve_linear(std::move(a), std::move(rhs));
  SpacetimePoint pt;
  pt.t.resize(static_cast<std::size_t>(config.horizon));
  for (int r = 1; r <= config.horizon; ++r)
    pt.t[static_cast<std::size_t>(r - 1)] =
        r < m ? x[static_cast<std::size_t>(r)] : config.frozen_time(r, overrides);
  return CriticalPoint{S, std::move(pt), -x[0]};
}

std::pair<Rational, Rational> difference_identity_check(const SolitonConfig& config,
                                                        const IndexSet& S, int i, int j,
                                                        const TimeOverrides& overrides) {
  if (i == j) throw std::invalid_argument("difference_identity_check: i == j");
  if (!S.contains(i) || !S.contains(j))
    throw std::invalid_argument("difference_identity_check: index not in S");
  const int m = S.size();
  Rational lhs =
      critical_value(config, S.without(i), overrides).value -
      critical_value(config, S.without(j), overrides).value;
  Rational pi = config.p[static_cast<std::size_t>(i - 1)];
  Rational pj = config.p[static_cast<std::size_t>(j - 1)];
  Rational rhs = (pi - pj) * (config.frozen_time(m - 1, overrides) -
                              critical_value(config, S, overrides).value);
  return {std::move(lhs), std::move(rhs)};
}

OrderedChildren order_critical_values(const SolitonConfig& config, const IndexSet& parent,
                                      const TimeOverrides& overrides) {
  OrderedChildren out;
  std::vector<std::pair<CriticalValue, int>> children;
  for (int k : parent)
    children.push_back({critical_value(config, parent.without(k), overrides), k});
  std::stable_sort(children.begin(), children.end(),
                   [](const auto& a, const auto& b) { return a.first.value < b.first.value; });
  for (std::size_t i = 0; i + 1 < children.size(); ++i) {
    if (children[i].first.value == children[i + 1].first.value) {
      out.degenerate = true;
      if (out.tie_groups.empty() || out.tie_groups.back().back() != children[i].first.indices)
        out.tie_groups.push_back({children[i].first.indices, children[i + 1].first.indices});
      else
        out.tie_groups.back().push_back(children[i + 1].first.indices);
    }
  }
  for (auto& [cv, k] : children) {
    out.ordered.push_back(std::move(cv));
    out.deleted.push_back(k);
  }
  return out;
}

FactoredPhaseDifference phase_difference_on_plane(const SolitonConfig& config,
                                                  const IndexSet& chain,
                                                  const TimeOverrides& overrides) {
  const int m = chain.size();
  if (m < 2) throw std::invalid_argument("phase_difference_on_plane: need at least 2 indices");
  const Rational& plast = config.p[static_cast<std::size_t>(chain[m - 1] - 1)];
  Rational coef(-1);
  for (int j = 0; j < m - 1; ++j)
    coef *= plast - config.p[static_cast<std::size_t>(chain[j] - 1)];
  return FactoredPhaseDifference{std::move(coef), critical_value(config, chain, overrides)};
}

std::optional<LevelCriticalValue> level_critical_value(const SolitonConfig& config,
                                                       const IndexSet& T1, const IndexSet& T2,
                                                       const TimeOverrides& overrides) {
  const int m = T1.size();
  if (m != T2.size() || m < 2)
    throw std::invalid_argument("level_critical_value: sets must have equal size >= 2");
  const auto p1 = gather(config.p, T1);
  const auto p2 = gather(config.p, T2);
  Rational denom = h_poly(1, p1) - h_poly(1, p2);
  if (denom == 0) return std::nullopt;  // parallel per the p-sum proviso
  Rational numer = c_coeff(config.p, config.c, T1) - c_coeff(config.p, config.c, T2);
  for (int r = 2; r <= config.horizon + 1 - m; ++r)
    numer += (h_poly(r, p1) - h_poly(r, p2)) * config.frozen_time(m + r - 1, overrides);
  return LevelCriticalValue{T1, T2, -numer / denom};
}

}  // namespace kptrop
