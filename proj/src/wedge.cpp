#include "kptrop/wedge.hpp"

#include <algorithm>
#include <stdexcept>

#include "kptrop/symmetric.hpp"

namespace kptrop {

std::vector<std::string> WedgeSpec::violations(int phases, bool allow_shared_columns) const {
  std::vector<std::string> errs;
  if (factors.empty()) errs.push_back("no factors");
  std::map<int, int> seen;  // column -> factor index
  for (int f = 0; f < factor_count(); ++f) {
    bool all_zero = true;
    for (const auto& [col, eps] : factors[static_cast<std::size_t>(f)]) {
      if (col < 1 || col > phases) {
        errs.push_back("factor " + std::to_string(f + 1) + " references column " +
                       std::to_string(col) + " outside 1..M+1");
        continue;
      }
      if (eps == 0) continue;
      all_zero = false;
      auto [it, fresh] = seen.try_emplace(col, f);
      if (!fresh && !allow_shared_columns)
        errs.push_back("factors " + std::to_string(it->second + 1) + " and " +
                       std::to_string(f + 1) + " share column " + std::to_string(col));
    }
    if (all_zero) errs.push_back("factor " + std::to_string(f + 1) + " is zero");
  }
  return errs;
}

LogValue GeneralPhase::value_at(const SpacetimePoint& point) const {
  LogValue v = constant;
  Rational linpart(0);
  for (std::size_t r = 0; r < lin.size(); ++r) linpart += lin[r] * point.t.at(r);
  return v + LogValue(linpart);
}

namespace {

GeneralPhase make_phase(const SolitonConfig& config, const IndexSet& S, const Rational& coeff) {
  GeneralPhase ph;
  ph.lin.assign(static_cast<std::size_t>(config.horizon), Rational(0));
  Rational csum(0);
  for (int k : S) {
    const Rational& pk = config.p[static_cast<std::size_t>(k - 1)];
    Rational pw(1);
    for (int r = 1; r <= config.horizon; ++r) {
      pw *= pk;
      ph.lin[static_cast<std::size_t>(r - 1)] += pw;
    }
    csum += config.c[static_cast<std::size_t>(k - 1)];
  }
  ph.constant = LogValue(csum);
  Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
  ph.constant += LogValue::log_term(Rational(1), mag);
  return ph;
}

}  // namespace

GeneralTau build_tau(const SolitonConfig& config, const WedgeSpec& spec,
                     bool allow_shared_columns) {
  auto errs = spec.violations(config.phases(), allow_shared_columns);
  if (!errs.empty()) throw std::invalid_argument("wedge spec invalid: " + errs.front());
  GeneralTau tau;
  tau.config = config;
  tau.n = spec.factor_count();

  // Antisymmetric expansion over one column choice per factor.
  std::vector<std::pair<int, Rational>> pick(static_cast<std::size_t>(tau.n));
  auto expand = [&](auto&& self, int f) -> void {
    if (f == tau.n) {
      std::vector<int> cols;
      for (const auto& [col, eps] : pick) cols.push_back(col);
      std::vector<int> sorted = cols;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
      // Permutation sign from the column order.
      int sgn = 1;
      for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i + 1; j < cols.size(); ++j)
          if (cols[i] > cols[j]) sgn = -sgn;
      Rational prod(sgn);
      for (const auto& [col, eps] : pick) prod *= eps;
      IndexSet S(sorted);
      prod *= vandermonde(gather(config.p, S));
      tau.coeffs[S] += prod;
      return;
    }
    for (const auto& [col, eps] : spec.factors[static_cast<std::size_t>(f)]) {
      if (eps == 0) continue;
      pick[static_cast<std::size_t>(f)] = {col, eps};
      self(self, f + 1);
    }
  };
  expand(expand, 0);

  bool any_positive = false;
  for (auto it = tau.coeffs.begin(); it != tau.coeffs.end();) {
    if (it->second == 0) {
      it = tau.coeffs.erase(it);
      continue;
    }
    if (it->second > 0) any_positive = true;
    else tau.negative_terms.push_back(it->first);
    tau.phases.emplace(it->first, make_phase(config, it->first, it->second));
    ++it;
  }
  if (tau.coeffs.empty()) throw std::invalid_argument("wedge product is identically zero");
  tau.regular = tau.negative_terms.empty() && any_positive;
  return tau;
}

GeneralTau dual_tau(const GeneralTau& tau) {
  GeneralTau dual;
  dual.config = tau.config;
  dual.n = tau.config.phases() - tau.n;
  for (const auto& [S, A] : tau.coeffs) {
    IndexSet T = S.complement(tau.config.phases());
    dual.coeffs[T] = A;
    if (A > 0) {
    } else if (A < 0) {
      dual.negative_terms.push_back(T);
    }
    dual.phases.emplace(T, make_phase(dual.config, T, A));
  }
  dual.regular = dual.negative_terms.empty() && !dual.coeffs.empty();
  return dual;
}

std::strong_ordering compare_phases(const GeneralPhase& a, const GeneralPhase& b,
                                    const SpacetimePoint& point) {
  GeneralPhase diff;
  diff.lin.resize(std::max(a.lin.size(), b.lin.size()), Rational(0));
  for (std::size_t r = 0; r < diff.lin.size(); ++r) {
    if (r < a.lin.size()) diff.lin[r] += a.lin[r];
    if (r < b.lin.size()) diff.lin[r] -= b.lin[r];
  }
  diff.constant = a.constant - b.constant;
  int s = diff.value_at(point).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BoundaryLine boundary_line(const GeneralTau& tau, const IndexSet& S1, const IndexSet& S2) {
  if (S1 == S2) throw std::invalid_argument("boundary_line: identical index sets");
  const GeneralPhase& a = tau.phases.at(S1);
  const GeneralPhase& b = tau.phases.at(S2);
  std::vector<Rational> d(a.lin.size());
  for (std::size_t r = 0; r < d.size(); ++r) d[r] = a.lin[r] - b.lin[r];
  LogValue dconst = a.constant - b.constant;

  BoundaryLine line;
  if (d[0] != 0) {
    line.form = BoundaryLine::Form::SolvedForX;
    for (std::size_t r = 1; r < d.size(); ++r)
      line.slopes[static_cast<int>(r) + 1] = -d[r] / d[0];
    line.constant = dconst.scaled(Rational(-1) / d[0]);
    return line;
  }
  if (d.size() > 1 && d[1] != 0) {
    line.form = BoundaryLine::Form::SolvedForY;
    for (std::size_t r = 2; r < d.size(); ++r)
      line.slopes[static_cast<int>(r) + 1] = -d[r] / d[1];
    line.constant = dconst.scaled(Rational(-1) / d[1]);
    return line;
  }
  line.form = BoundaryLine::Form::Degenerate;
  line.constant = dconst;
  return line;
}

LogValue boundary_x_at(const BoundaryLine& line, const LogValue& y, const SolitonConfig& config,
                       const TimeOverrides& times) {
  if (line.form != BoundaryLine::Form::SolvedForX)
    throw std::invalid_argument("boundary_x_at: line is not solved for x");
  LogValue x = line.constant;
  for (const auto& [level, slope] : line.slopes) {
    if (level == 2)
      x += y.scaled(slope);
    else
      x += LogValue(slope * config.frozen_time(level, times));
  }
  return x;
}

LogValue triple_point_y(const GeneralTau& tau, const IndexSet& Sa, const IndexSet& Sb,
                        const IndexSet& Sc, const TimeOverrides& times) {
  BoundaryLine l1 = boundary_line(tau, Sa, Sb);
  BoundaryLine l2 = boundary_line(tau, Sb, Sc);
  if (l1.form != BoundaryLine::Form::SolvedForX || l2.form != BoundaryLine::Form::SolvedForX)
    throw std::invalid_argument("triple_point_y: boundaries not both solved for x");
  // x = s1*y + C1(t..) = s2*y + C2(t..)
  Rational s1 = l1.slopes.count(2) ? l1.slopes.at(2) : Rational(0);
  Rational s2 = l2.slopes.count(2) ? l2.slopes.at(2) : Rational(0);
  if (s1 == s2) throw std::invalid_argument("triple_point_y: parallel boundaries");
  LogValue c1 = l1.constant, c2 = l2.constant;
  for (const auto& [level, slope] : l1.slopes)
    if (level != 2) c1 += LogValue(slope * tau.config.frozen_time(level, times));
  for (const auto& [level, slope] : l2.slopes)
    if (level != 2) c2 += LogValue(slope * tau.config.frozen_time(level, times));
  return (c2 - c1).scaled(Rational(1) / (s1 - s2));
}

LogValue general_phase_at(const GeneralTau& tau, const IndexSet& S, const LogValue& x,
                          const LogValue& y, const TimeOverrides& times) {
  const GeneralPhase& ph = tau.phases.at(S);
  LogValue v = ph.constant;
  v += x.scaled(ph.lin[0]);
  if (ph.lin.size() > 1) v += y.scaled(ph.lin[1]);
  for (std::size_t r = 2; r < ph.lin.size(); ++r)
    v += LogValue(ph.lin[r] * tau.config.frozen_time(static_cast<int>(r) + 1, times));
  return v;
}

bool boundary_visible_at(const GeneralTau& tau, const IndexSet& S1, const IndexSet& S2,
                         const LogValue& x, const LogValue& y, const TimeOverrides& times) {
  LogValue common = general_phase_at(tau, S1, x, y, times);
  if (!common.same_value(general_phase_at(tau, S2, x, y, times)))
    throw std::logic_error("boundary_visible_at: point is not on the boundary");
  for (const auto& [S, A] : tau.coeffs) {
    if (S == S1 || S == S2) continue;
    if ((general_phase_at(tau, S, x, y, times) - common).sign() > 0) return false;
  }
  return true;
}

GeneralTau parallel_tau(const Rational& q, const Rational& a, const Rational& b,
                        const std::vector<Rational>& c) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("parallel_tau: a, b must be positive");
  std::vector<Rational> p{(q - a - b) / 2, (q - a) / 2, (q + a) / 2, (q + a + b) / 2};
  auto validated = validate_config(3, p, c);
  if (!validated.ok) throw std::invalid_argument("parallel_tau: bad parameters");
  WedgeSpec spec;
  spec.factors = {{{1, Rational(1)}, {4, Rational(-1)}}, {{2, Rational(1)}, {3, Rational(1)}}};
  return build_tau(validated.config, spec);
}

ParallelEvents parallel_events(const Rational& q, const Rational& a, const Rational& b,
                               const std::vector<Rational>& c) {
  (void)q;  // the common speed drops out of the event schedule
  if (a <= 0 || b <= 0) throw std::invalid_argument("parallel_events: a, b must be positive");
  if (c.size() != 4) throw std::invalid_argument("parallel_events: need 4 constants");
  ParallelEvents ev;
  ev.t0 = 4 * (a * (c[0] - c[3]) - (a + b) * (c[1] - c[2])) / (a * b * (a + b) * (2 * a + b));
  ev.delta_t = LogValue::log_term(4 / (a * (a + b) * (2 * a + b)), 1 + 2 * a / b);
  ev.t_minus = LogValue(ev.t0) - ev.delta_t;
  ev.t_plus = LogValue(ev.t0) + ev.delta_t;
  return ev;
}

GeneralTau p_limit(const GeneralTau& tau, int i) {
  const int phases = tau.config.phases();
  if (i < 1 || i + 1 > phases) throw std::invalid_argument("p_limit: bad merge index");

  // Reduced parameter lists: drop p_{i+1}, c_{i+1}. Coordinates keep the
  // original horizon.
  SolitonConfig reduced;
  reduced.M = tau.config.M - 1;
  reduced.horizon = tau.config.horizon;
  reduced.fixed_times = tau.config.fixed_times;
  for (int k = 1; k <= phases; ++k) {
    if (k == i + 1) continue;
    reduced.p.push_back(tau.config.p[static_cast<std::size_t>(k - 1)]);
    reduced.c.push_back(tau.config.c[static_cast<std::size_t>(k - 1)]);
  }
  Rational c_shift = tau.config.c[static_cast<std::size_t>(i)] -
                     tau.config.c[static_cast<std::size_t>(i - 1)];  // c_{i+1} - c_i

  GeneralTau out;
  out.config = reduced;
  out.n = tau.n;
  auto renumber = [&](int k) { return k > i + 1 ? k - 1 : k; };
  // A = eps-product * Delta(p_S); the limit keeps the eps-product and
  // evaluates Delta at the merged parameters. A re-keyed term also picks up
  // the factor e^(c_{i+1}-c_i); that exponential is rational only when the
  // shift vanishes, which we require exactly when two contributions merge
  // onto the same key.
  std::map<IndexSet, std::vector<std::pair<Rational, bool>>> contributions;
  for (const auto& [S, A] : tau.coeffs) {
    if (S.contains(i) && S.contains(i + 1)) continue;  // vanishes in the limit
    std::vector<int> idx;
    bool rekeyed = false;
    for (int k : S) {
      if (k == i + 1) {
        idx.push_back(i);
        rekeyed = true;
      } else {
        idx.push_back(renumber(k));
      }
    }
    IndexSet T(idx);
    Rational eps = A / vandermonde(gather(tau.config.p, S));
    Rational coeff = eps * vandermonde(gather(reduced.p, T));
    if (coeff == 0) continue;
    contributions[T].push_back({std::move(coeff), rekeyed});
  }
  for (const auto& [T, parts] : contributions) {
    bool any_rekeyed = false;
    Rational total(0);
    for (const auto& [coeff, rekeyed] : parts) {
      total += coeff;
      any_rekeyed = any_rekeyed || rekeyed;
    }
    if (parts.size() > 1 && any_rekeyed && c_shift != 0)
      throw std::invalid_argument(
          "p_limit: colliding terms need c_" + std::to_string(i) + " = c_" +
          std::to_string(i + 1) + " (normalize the constants before this limit)");
    if (total == 0) continue;
    out.coeffs[T] = total;
    GeneralPhase ph = make_phase(reduced, T, total);
    if (parts.size() == 1 && any_rekeyed) ph.constant += LogValue(c_shift);
    out.phases.emplace(T, ph);
  }
  if (out.coeffs.empty()) throw std::invalid_argument("p_limit: limit is identically zero");
  bool any_positive = false;
  for (const auto& [T, A] : out.coeffs) {
    if (A > 0) any_positive = true;
    else out.negative_terms.push_back(T);
  }
  out.regular = out.negative_terms.empty() && any_positive;
  return out;
}

}  // namespace kptrop
