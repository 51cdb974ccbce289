// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>

#include "helpers.hpp"
#include "kptrop/evolution.hpp"
#include "kptrop/grid.hpp"
#include "kptrop/poset.hpp"
#include "kptrop/symmetric.hpp"
#include "kptrop/visibility.hpp"
#include "kptrop/wedge.hpp"

using namespace kptrop;
using testing::Rng;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

int failures = 0;
std::vector<std::string> details;

void report(int criterion, bool pass, const std::string& what) {
  std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", what.c_str());
  if (!pass) ++failures;
}

void note(const std::string& text) { details.push_back(text); }

struct Sub {
  bool ok = true;
  std::string msg;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      msg = what;
    }
  }
};

SolitonConfig fig12_config(Rational mu = Q(-2), Rational lambda = Q(-1)) {
  auto v = validate_config(5, {Q(-2), Q(-3, 2), Q(-1), Q(1, 2), Q(5, 4), Q(2)},
                           {Q(10), Q(0), Q(0), Q(0), Q(0), Q(-10)});
  SolitonConfig cfg = v.config;
  cfg.fixed_times[5] = lambda + critical_value(cfg, IndexSet::full(6)).value;
  cfg.fixed_times[4] =
      mu + critical_value(cfg, IndexSet{1, 2, 3, 4, 5}, {{5, cfg.fixed_times[5]}}).value;
  return cfg;
}

long catalan(int n) {
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// ---------------------------------------------------------------- criteria

void criterion_1() {
  auto start = std::chrono::steady_clock::now();
  Sub sub;

  auto t3 = tamari(3);
  sub.require(t3.node_count() == 5, "tamari(3) nodes");
  sub.require(maximal_chains(t3).size() == 2, "tamari(3) chains");
  auto t4 = tamari(4);
  sub.require(t4.node_count() == 14, "tamari(4) nodes");
  sub.require(maximal_chains(t4).size() == 9, "tamari(4) chains");

  auto t5 = tamari(5);
  sub.require(t5.node_count() == 42, "tamari(5) nodes");
  std::size_t chains5 = maximal_chains(t5).size();
  // Stated value: 94. The enumeration gives 98, confirmed by an independent
  // parenthesization brute force and by a cover-ness audit of all 84
  // rotation edges; the published chain table omits four members of one
  // class (its sizes sum to 94). Reported honestly as stated.
  bool chains5_ok = chains5 == 94;
  if (!chains5_ok)
    note("tamari(5) maximal chains: stated 94, computed " + std::to_string(chains5) +
         " (verified against two independent enumerations; the published table of chain"
         " classes sums to 94 and misses four chains in one class)");
  sub.require(chains5_ok, "tamari(5) chains == 94 (computed " + std::to_string(chains5) + ")");
  sub.require(chain_classes(t5).size() == 25, "tamari(5) classes");

  auto p4 = permutohedron(4);
  sub.require(p4.node_count() == 24, "permutohedron(4) nodes");
  sub.require(maximal_chains(p4).size() == 16, "permutohedron(4) chains");
  for (int r = 2; r <= 6; ++r) {
    std::size_t want = static_cast<std::size_t>(r * (r - 1) / 2);
    for (const auto& c : maximal_chains(permutohedron(r)))
      sub.require(c.size() == want, "permutohedron chain length r=" + std::to_string(r));
  }
  for (int r = 1; r <= 8; ++r) {
    // |Y_r| by direct enumeration of nondecreasing level sequences.
    long count = 0;
    auto rec = [&](auto&& self, int i, int prev) -> void {
      if (i > r) {
        ++count;
        return;
      }
      for (int n = prev; n <= i; ++n) self(self, i + 1, n);
    };
    rec(rec, 1, 1);
    sub.require(count == catalan(r), "|Y_r| = Catalan r=" + std::to_string(r));
  }
  auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  sub.require(elapsed < 5.0, "runtime under 5 s");
  report(1, sub.ok, sub.ok ? "combinatorial counts" : sub.msg);
}

void criterion_2() {
  Sub sub;
  auto t4 = tamari(4);
  std::vector<std::vector<std::string>> sequences;
  for (const auto& edge_path : maximal_chain_edges(t4)) {
    std::vector<std::string> seq;
    int from = t4.source;
    for (int e : edge_path) {
      const auto& edge = t4.edges[static_cast<std::size_t>(e)];
      auto before =
          node_triples(decode_tree(parse_seq(t4.node_labels[static_cast<std::size_t>(edge.from)])));
      auto after =
          node_triples(decode_tree(parse_seq(t4.node_labels[static_cast<std::size_t>(edge.to)])));
      std::multiset<std::array<int, 3>> sa(after.begin(), after.end());
      std::set<int> uni;
      for (const auto& t : before)
        if (!sa.count(t))
          for (int k : t) uni.insert(k);
      seq.push_back(IndexSet(std::vector<int>(uni.begin(), uni.end())).str());
      from = edge.to;
    }
    (void)from;
    sequences.push_back(seq);
  }
  std::sort(sequences.begin(), sequences.end());
  std::vector<std::vector<std::string>> expect = {
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
  std::sort(expect.begin(), expect.end());
  sub.require(sequences == expect, "nine translated chains equal the table rows");
  report(2, sub.ok, sub.ok ? "table of nine chains reproduced through the M=5 dictionary"
                           : sub.msg);
}

void criterion_3() {
  Sub sub;
  auto cfg = fig12_config();
  auto chain = classify_evolution(cfg);
  sub.require(chain.table_type && *chain.table_type == 1, "type 1");
  sub.require(chain_time_labels(chain) ==
                  std::vector<std::string>{"1234", "1245", "2345", "1256", "2356", "3456"},
              "visible time labels in order");
  for (std::size_t e = 0; e + 1 < chain.events.size(); ++e)
    sub.require(chain.events[e].time < chain.events[e + 1].time, "strictly increasing times");
  for (const auto& ev : chain.events) {
    auto verdict = is_visible(cfg, ev.rotations.front());
    sub.require(verdict.visible && verdict.generic, "oracle confirms " + ev.rotations.front().str());
    sub.require(critical_value(cfg, ev.rotations.front()).value == ev.time,
                "exact rational event time");
  }
  report(3, sub.ok, sub.ok ? "published five-soliton evolution, exact, oracle-confirmed"
                           : sub.msg);
}

void criterion_4() {
  auto start = std::chrono::steady_clock::now();
  Sub sub;
  Rng rng(1009);
  int samples = 0;
  std::set<int> regions_hit;
  for (int pset = 0; pset < 2; ++pset) {
    std::vector<Rational> p;
    if (pset == 0)
      p = {Q(-2), Q(-3, 2), Q(-1), Q(1, 2), Q(5, 4), Q(2)};
    else
      p = rng.increasing(6);
    std::vector<Rational> c;
    for (int i = 0; i < 6; ++i) c.push_back(rng.rational());
    auto v = validate_config(5, p, c);
    if (!v.ok) continue;
    SolitonConfig base = v.config;
    auto pv = [&](int i) { return p[static_cast<std::size_t>(i - 1)]; };
    Rational k1 = (pv(3) + pv(4) - pv(1) - pv(6)) / ((pv(3) - pv(6)) * (pv(4) - pv(6)));
    Rational k2 = Q(1) / (pv(1) - pv(6));
    Rational k3 = Q(1) / (pv(3) - pv(6));
    Rational k4 = (pv(2) + pv(3) - pv(5) - pv(6)) / ((pv(2) - pv(6)) * (pv(3) - pv(6)));
    Rational k5 = Q(1) / (pv(5) - pv(6));
    Rational k6 = Q(1) / (pv(2) - pv(6));
    Rational k7 = (pv(1) + pv(2) - pv(4) - pv(5)) /
                  (pv(1) * pv(2) - pv(4) * pv(5) + (pv(4) + pv(5) - pv(1) - pv(2)) * pv(6));
    Rational k8 = Q(1) / (pv(4) - pv(6));
    sub.require(k1 > k2 && k2 > k3 && k3 > k4 && k4 > k5, "negative-side slopes ordered");
    sub.require(k6 > k7 && k7 > k8, "positive-side slopes ordered");
    std::vector<std::pair<Rational, Rational>> pts;
    auto lerp = [&](const Rational& lo, const Rational& hi, int num, int den) {
      return lo + (hi - lo) * Q(num, den);
    };
    for (int rep = 0; rep < 3; ++rep) {
      Rational mu_neg = Q(-1) - rng.rational(4, 2) * rng.rational(4, 2);
      if (mu_neg >= 0) mu_neg = Q(-1);
      Rational mu_pos = -mu_neg;
      int num = rep + 1, den = 4;
      pts.push_back({mu_neg, (k1 + Q(rep + 1)) * mu_neg});
      pts.push_back({mu_neg, lerp(k2, k1, num, den) * mu_neg});
      pts.push_back({mu_neg, lerp(k3, k2, num, den) * mu_neg});
      pts.push_back({mu_neg, lerp(k4, k3, num, den) * mu_neg});
      pts.push_back({mu_neg, lerp(k5, k4, num, den) * mu_neg});
      pts.push_back({mu_neg, (k5 - Q(rep + 1)) * mu_neg});
      pts.push_back({mu_pos, (k6 + Q(rep + 1)) * mu_pos});
      pts.push_back({mu_pos, lerp(k7, k6, num, den) * mu_pos});
      pts.push_back({mu_pos, lerp(k8, k7, num, den) * mu_pos});
      pts.push_back({mu_pos, (k8 - Q(rep + 1)) * mu_pos});
    }
    for (const auto& [mu, lambda] : pts) {
      SolitonConfig cfg = base;
      cfg.fixed_times[5] = lambda + critical_value(cfg, IndexSet::full(6)).value;
      cfg.fixed_times[4] =
          mu + critical_value(cfg, IndexSet{1, 2, 3, 4, 5}, {{5, cfg.fixed_times[5]}}).value;
      auto region = table_conditions(cfg);
      if (region.type == 0) {
        sub.require(false, "sample unexpectedly on a boundary");
        continue;
      }
      auto chain = classify_evolution(cfg);
      sub.require(chain.table_type.has_value(), "chain classified");
      if (chain.table_type)
        sub.require(*chain.table_type == region.type,
                    "region " + std::to_string(region.type) + " vs chain " +
                        std::to_string(*chain.table_type));
      regions_hit.insert(region.type);
      ++samples;
    }
  }
  auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  sub.require(samples >= 50, "at least 50 samples (got " + std::to_string(samples) + ")");
  sub.require(regions_hit.size() == 9, "all nine regions hit");
  sub.require(elapsed < 30.0, "runtime under 30 s");
  report(4, sub.ok,
         sub.ok ? "table regions match realized chains on " + std::to_string(samples) +
                      " samples over all nine regions"
                : sub.msg);
}

void criterion_5() {
  Sub sub;
  Rng rng(2027);
  long checks = 0;
  for (int M : {4, 5, 6}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto cfg = rng.config(M);
      for (int size = 3; size <= M; ++size) {
        auto parents = subsets_of_size(M + 1, size + 1);
        for (const auto& parent : parents) {
          Rational cv = critical_value(cfg, parent).value;
          for (int side = 0; side < 2; ++side) {
            TimeOverrides ov;
            ov[size] = side == 0 ? Rational(cv - 1) : Rational(cv + 1);
            try {
              // Hard-fails internally on any analytic/oracle mismatch.
              auto report_level = prune_level(cfg, size, ov);
              (void)report_level;
              checks += static_cast<long>(subsets_of_size(M + 1, size).size());
            } catch (const ConsistencyError& e) {
              sub.require(false, e.what());
            }
          }
        }
      }
    }
  }
  sub.require(checks >= 1000, "at least 1000 point checks");
  report(5, sub.ok,
         sub.ok ? "analytic visibility equals the dominance oracle on " +
                      std::to_string(checks) + " exact point checks"
                : sub.msg);
}

void criterion_6() {
  Sub sub;
  Rng rng(3011);
  int count_a8 = 0, count_rec = 0, count_sub = 0, count_factored = 0;
  for (int trial = 0; trial < 140 || count_a8 < 100 || count_rec < 100 || count_sub < 100 ||
                      count_factored < 100;
       ++trial) {
    int M = rng.uniform(2, 6);
    auto cfg = rng.config(M);
    // Difference identity across deletions.
    {
      int size = rng.uniform(3, M + 1);
      auto sets = subsets_of_size(M + 1, size);
      IndexSet S = sets[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(sets.size()) - 1))];
      int i = S[rng.uniform(0, size - 1)], j = S[rng.uniform(0, size - 1)];
      if (i != j) {
        auto [lhs, rhs] = difference_identity_check(cfg, S, i, j);
        sub.require(lhs == rhs, "difference identity");
        ++count_a8;
      }
    }
    // Deletion recursion for the partial-fraction coefficients.
    if (count_rec < 200) {
      int n = rng.uniform(2, 6);
      auto p = rng.increasing(n + 1);
      std::vector<Rational> c;
      for (int k = 0; k <= n; ++k) c.push_back(rng.rational());
      IndexSet S = IndexSet::full(n + 1);
      Rational full = c_coeff(p, c, S);
      int i = rng.uniform(1, n + 1), j = rng.uniform(1, n + 1);
      if (i != j) {
        Rational lhs = (c_coeff(p, c, S.without(i)) - c_coeff(p, c, S.without(j))) /
                       (p[static_cast<std::size_t>(j - 1)] - p[static_cast<std::size_t>(i - 1)]);
        sub.require(lhs == full, "deletion recursion");
        ++count_rec;
      }
    }
    // Substitution law.
    if (count_sub < 200) {
      int n = rng.uniform(1, 6);
      int r = rng.uniform(0, 7);
      auto p = rng.increasing(n);
      std::vector<Rational> c;
      for (int k = 0; k < n; ++k) c.push_back(rng.rational());
      Rational s = rng.nonzero_rational();
      std::vector<Rational> shifted = c;
      for (int k = 0; k < n; ++k)
        shifted[static_cast<std::size_t>(k)] += pow_rational(p[static_cast<std::size_t>(k)], r) * s;
      IndexSet S = IndexSet::full(n);
      sub.require(c_coeff(p, shifted, S) ==
                      c_coeff(p, c, S) + h_poly(r - n + 1, gather(p, S)) * s,
                  "substitution law");
      ++count_sub;
    }
    // Factored phase difference on a critical plane.
    if (count_factored < 200) {
      int size = rng.uniform(2, std::min(6, M + 1));
      auto sets = subsets_of_size(M + 1, size);
      IndexSet chain =
          sets[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(sets.size()) - 1))];
      auto fact = phase_difference_on_plane(cfg, chain);
      IndexSet plane(std::vector<int>(chain.indices().begin(), chain.indices().end() - 1));
      TimeOverrides ov;
      ov[size - 1] = rng.rational();
      SpacetimePoint pt = plane.size() >= 2 ? critical_point(cfg, plane, ov).coordinates
                                            : cfg.point_from({}, ov);
      Rational lhs =
          phase_value(cfg, chain[0], pt) - phase_value(cfg, chain[size - 1], pt);
      sub.require(lhs == fact.coefficient * (pt.level(size - 1) - fact.pivot.value),
                  "factored phase difference");
      ++count_factored;
    }
  }
  sub.require(count_a8 >= 100 && count_rec >= 100 && count_sub >= 100 && count_factored >= 100,
              "at least 100 instances per identity");
  report(6, sub.ok,
         sub.ok ? "identity suites exact on " +
                      std::to_string(count_a8 + count_rec + count_sub + count_factored) +
                      " random instances"
                : sub.msg);
}

void criterion_7() {
  Sub sub;
  Rng rng(4021);
  int done = 0;
  for (int trial = 0; trial < 60 && done < 18; ++trial) {
    int M = 3 + trial % 4;
    auto cfg = rng.config(M);
    EvolutionChain chain;
    try {
      chain = classify_evolution(cfg);  // verifies each step internally
    } catch (const DegenerateEvent&) {
      continue;
    }
    if (chain.degenerate) continue;
    LevelSeq cur = chain.initial.code;
    sub.require(cur == LevelSeq(static_cast<std::size_t>(M - 1), 1), "starts at the bottom");
    for (const auto& ev : chain.events) {
      bool is_cover = false;
      for (const auto& c : tamari_covers(cur)) is_cover = is_cover || c.to == ev.after.code;
      sub.require(is_cover, "each step is a cover");
      cur = ev.after.code;
    }
    LevelSeq top;
    for (int i = 1; i <= M - 1; ++i) top.push_back(i);
    sub.require(cur == top, "ends at the top");
    ++done;
  }
  sub.require(done >= 18, "enough generic runs (got " + std::to_string(done) + ")");
  report(7, sub.ok,
         sub.ok ? "rotation property and chain maximality on " + std::to_string(done) +
                      " random evolutions"
                : sub.msg);
}

void criterion_8() {
  Sub sub;
  Rng rng(5051);
  // Refinement gaps for the first five published p-values.
  for (int trial = 0; trial < 5; ++trial) {
    auto v = validate_config(4, {Q(-2), Q(-3, 2), Q(-1), Q(1, 2), Q(5, 4)},
                             {rng.rational(), rng.rational(), rng.rational(), rng.rational(),
                              rng.rational()});
    SolitonConfig cfg = v.config;
    Rational t4_top = critical_value(cfg, IndexSet::full(5)).value;
    Rational mu = Q(rng.uniform(1, 5));
    cfg.fixed_times[4] = t4_top + mu;
    auto lcv = level_critical_value(cfg, IndexSet{1, 2, 3}, IndexSet{3, 4, 5});
    sub.require(lcv.has_value(), "level time defined");
    if (!lcv) continue;
    Rational t1345 = critical_value(cfg, IndexSet{1, 3, 4, 5}).value;
    Rational t1235 = critical_value(cfg, IndexSet{1, 2, 3, 5}).value;
    auto p = [&](int i) { return cfg.p[static_cast<std::size_t>(i - 1)]; };
    Rational denom = p(4) - p(1) + p(5) - p(2);
    sub.require(lcv->value - t1345 == (p(4) - p(2)) * (p(5) - p(2)) / denom * mu,
                "first refinement gap");
    sub.require(t1235 - lcv->value == (p(4) - p(1)) * (p(4) - p(2)) / denom * mu,
                "second refinement gap");
    sub.require(lcv->value - t1345 > 0 && t1235 - lcv->value > 0, "gaps positive");
  }
  // Additional critical values, both p-sum signs, both sides of the top.
  auto check_presence = [&](std::vector<Rational> p, bool less) {
    std::vector<Rational> c;
    for (int i = 0; i < 6; ++i) c.push_back(rng.rational());
    auto v = validate_config(5, std::move(p), std::move(c));
    SolitonConfig cfg = v.config;
    Rational t5_top = critical_value(cfg, IndexSet::full(6)).value;
    for (int side = 0; side < 2; ++side) {
      TimeOverrides ov{{5, side == 0 ? Rational(t5_top - 1) : Rational(t5_top + 1)}};
      auto lcv = level_critical_value(cfg, IndexSet{1, 2, 5, 6}, IndexSet{2, 3, 4, 5}, ov);
      sub.require(lcv.has_value(), "t4_{1256;2345} defined");
      if (!lcv) continue;
      if (side == 0) {
        bool present = lcv->value < critical_value(cfg, IndexSet{1, 2, 3, 4, 5}, ov).value;
        sub.require(present == less, "below: presence iff p1+p6 < p3+p4");
      } else {
        bool present = lcv->value < critical_value(cfg, IndexSet{2, 3, 4, 5, 6}, ov).value;
        sub.require(present == !less, "above: presence iff p1+p6 > p3+p4");
      }
      // t4_{1236;3456} (below) and t4_{1234;1456} (above) always exist.
      if (side == 0) {
        auto always = level_critical_value(cfg, IndexSet{1, 2, 3, 6}, IndexSet{3, 4, 5, 6}, ov);
        sub.require(always.has_value(), "t4_{1236;3456} defined");
        if (always) {
          sub.require(always->value > critical_value(cfg, IndexSet{1, 2, 3, 5, 6}, ov).value &&
                          always->value < critical_value(cfg, IndexSet{1, 3, 4, 5, 6}, ov).value,
                      "t4_{1236;3456} inside its window");
        }
      } else {
        auto always = level_critical_value(cfg, IndexSet{1, 2, 3, 4}, IndexSet{1, 4, 5, 6}, ov);
        sub.require(always.has_value(), "t4_{1234;1456} defined");
        if (always) {
          sub.require(always->value > critical_value(cfg, IndexSet{1, 2, 4, 5, 6}, ov).value &&
                          always->value < critical_value(cfg, IndexSet{1, 2, 3, 4, 6}, ov).value,
                      "t4_{1234;1456} inside its window");
        }
      }
    }
  };
  check_presence({Q(-2), Q(-3, 2), Q(-1), Q(1, 2), Q(5, 4), Q(2)}, false);
  check_presence({Q(-2), Q(-3, 2), Q(-1), Q(1, 2), Q(5, 4), Q(11, 8)}, true);
  report(8, sub.ok, sub.ok ? "level refinement identities and presence conditions exact"
                           : sub.msg);
}

void criterion_9() {
  Sub sub;
  Rng rng(6073);
  for (int trial = 0; trial < 5; ++trial) {
    auto cfg = rng.config(3, 3);
    int m = rng.uniform(1, 3);
    bool checked = false;
    for (Rational y = Q(-4); y > Q(-2000); y -= 16) {
      TimeOverrides frozen{{2, y}};
      Rational x = critical_value(cfg, IndexSet{m, m + 1}, frozen).value;
      SpacetimePoint pt = cfg.point_from({x, y});
      Rational common = phase_value(cfg, m, pt);
      bool far = true;
      for (int i = 1; i <= 4; ++i) {
        if (i == m || i == m + 1) continue;
        far = far && (common - phase_value(cfg, i, pt) > 20);
      }
      if (!far) continue;
      Rational gap = cfg.p[static_cast<std::size_t>(m)] - cfg.p[static_cast<std::size_t>(m - 1)];
      double expect = 0.5 * to_double(gap) * to_double(gap);
      sub.require(std::abs(exact_u(cfg, pt) - expect) < 1e-6, "asymptotic branch amplitude");
      checked = true;
      break;
    }
    sub.require(checked, "found a far point on the branch");
  }
  for (int trial = 0; trial < 5; ++trial) {
    auto cfg = rng.config(2, 3);
    auto pt = critical_point(cfg, IndexSet{1, 2, 3});
    Rational sum(0);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        Rational d = cfg.p[static_cast<std::size_t>(j)] - cfg.p[static_cast<std::size_t>(i)];
        sum += d * d;
      }
    double tropical = to_double(Q(2, 9) * sum);
    sub.require(std::abs(exact_u(cfg, pt.coordinates) - tropical) <=
                    1e-12 * std::max(1.0, std::abs(tropical)),
                "top coincidence equals the tropical value");
  }
  report(9, sub.ok, sub.ok ? "exact-amplitude checks within stated tolerances" : sub.msg);
}

void criterion_10() {
  Sub sub;
  Rational q = Q(1), a = Q(1), b = Q(1, 2);
  std::vector<Rational> c{Q(0), Q(0), Q(0), Q(0)};
  auto ev = parallel_events(q, a, b, c);
  sub.require(ev.t0 == 0, "t0 exactly zero");
  sub.require(ev.delta_t.same_value(LogValue::log_term(Q(16, 15), Q(5))),
              "delta_t = (16/15) log 5");
  auto tau = parallel_tau(q, a, b, c);
  std::vector<std::pair<IndexSet, IndexSet>> pairs = {
      {{1, 2}, {1, 3}}, {{1, 2}, {2, 4}}, {{1, 2}, {3, 4}},
      {{1, 3}, {2, 4}}, {{1, 3}, {3, 4}}, {{2, 4}, {3, 4}}};
  Rational U(1);
  while ((LogValue(U) - ev.delta_t).sign() <= 0) U *= 2;
  auto visible_count = [&](const Rational& t) {
    TimeOverrides at{{3, t}};
    int count = 0;
    for (const auto& [S1, S2] : pairs) {
      auto line = boundary_line(tau, S1, S2);
      LogValue y0(Q(0));
      count += boundary_visible_at(tau, S1, S2, boundary_x_at(line, y0, tau.config, at), y0, at);
    }
    return count;
  };
  sub.require(visible_count(ev.t0) == 3, "three visible lines inside the window");
  sub.require(visible_count(ev.t0 - U) == 2, "two visible lines before");
  sub.require(visible_count(ev.t0 + U) == 2, "two visible lines after");
  for (const Rational& t : {Rational(ev.t0 - U), ev.t0, Rational(ev.t0 + U)}) {
    TimeOverrides at{{3, t}};
    auto line = boundary_line(tau, IndexSet{1, 2}, IndexSet{3, 4});
    LogValue y0(Q(0));
    sub.require(!boundary_visible_at(tau, IndexSet{1, 2}, IndexSet{3, 4},
                                     boundary_x_at(line, y0, tau.config, at), y0, at),
                "the 12|34 line is never visible");
  }
  report(10, sub.ok, sub.ok ? "parallel-soliton schedule certified" : sub.msg);
}

void criterion_11() {
  Sub sub;
  auto v = validate_config(3, {Q(-1), Q(-1, 2), Q(1, 4), Q(5, 4)},
                           {Q(0), Q(-10), Q(10), Q(0)}, {}, 3);
  SolitonConfig cfg = v.config;
  WedgeSpec spec;
  spec.factors = {{{1, Q(1)}, {2, Q(1)}}, {{3, Q(1)}, {4, Q(1)}}};
  auto tau = build_tau(cfg, spec);
  auto p = [&](int i) { return cfg.p[static_cast<std::size_t>(i - 1)]; };
  LogValue ell = cross_ratio_log(p(1), p(2), p(3), p(4));
  auto l13_14 = boundary_line(tau, IndexSet{1, 3}, IndexSet{1, 4});
  auto l23_24 = boundary_line(tau, IndexSet{2, 3}, IndexSet{2, 4});
  sub.require(l13_14.slopes == l23_24.slopes, "first pair parallel");
  sub.require((l13_14.constant - l23_24.constant).same_value(ell.scaled(Q(1) / (p(4) - p(3)))),
              "separation l/(p4-p3)");
  auto l14_24 = boundary_line(tau, IndexSet{1, 4}, IndexSet{2, 4});
  auto l13_23 = boundary_line(tau, IndexSet{1, 3}, IndexSet{2, 3});
  sub.require(l14_24.slopes == l13_23.slopes, "second pair parallel");
  sub.require((l14_24.constant - l13_23.constant).same_value(ell.scaled(Q(-1) / (p(2) - p(1)))),
              "separation -l/(p2-p1)");
  // Triple-point slope.
  LogValue y_134 = triple_point_y(tau, IndexSet{1, 3}, IndexSet{1, 4}, IndexSet{2, 4});
  LogValue y_234 = triple_point_y(tau, IndexSet{2, 3}, IndexSet{1, 3}, IndexSet{2, 4});
  LogValue dy = y_234 - y_134;
  LogValue dx = boundary_x_at(l13_23, y_234, cfg) - boundary_x_at(l14_24, y_134, cfg);
  Rational slope = -(p(2) - p(1) + p(4) - p(3)) /
                   (p(2) * p(2) - p(1) * p(1) + p(4) * p(4) - p(3) * p(3));
  sub.require((dy - dx.scaled(slope)).sign() == 0, "triple-point slope exact");
  report(11, sub.ok, sub.ok ? "parallel separations and slope exact at the symbolic level"
                            : sub.msg);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  for (const auto& d : details) std::printf("note: %s\n", d.c_str());
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
