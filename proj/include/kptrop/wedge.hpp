#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kptrop/config.hpp"
#include "kptrop/index_set.hpp"
#include "kptrop/logcomb.hpp"

namespace kptrop {

/// Wedge-product solution specification: factor f_i = sum_j eps_ij e_j.
/// Entries are normally in {-1,0,+1}; rational magnitudes appear in reduced
/// specs produced by parameter limits.
struct WedgeSpec {
  std::vector<std::map<int, Rational>> factors;  // column -> coefficient

  int factor_count() const { return static_cast<int>(factors.size()); }
  /// Hard errors, plus the shared-column condition unless waived (the
  /// consecutive-pair subclass deliberately overlaps factors).
  std::vector<std::string> violations(int phases, bool allow_shared_columns = false) const;
};

/// A phase theta_S = sum_{k in S} theta_k + log|A_S|: linear in the
/// hierarchy times with an exact rational-plus-logs constant.
struct GeneralPhase {
  std::vector<Rational> lin;  // coefficient of t^(r) at [r-1]
  LogValue constant;

  LogValue value_at(const SpacetimePoint& point) const;
};

struct GeneralTau {
  SolitonConfig config;  // p, c, horizon; M+1 columns
  int n = 0;             // factors in the wedge
  std::map<IndexSet, Rational> coeffs;       // A_S, exact, sign included
  std::map<IndexSet, GeneralPhase> phases;   // for terms with A_S != 0
  bool regular = false;
  std::vector<IndexSet> negative_terms;
};

GeneralTau build_tau(const SolitonConfig& config, const WedgeSpec& spec,
                     bool allow_shared_columns = false);

/// Complement re-keying with the same coefficients.
GeneralTau dual_tau(const GeneralTau& tau);

std::strong_ordering compare_phases(const GeneralPhase& a, const GeneralPhase& b,
                                    const SpacetimePoint& point);

/// Boundary theta_{S1} = theta_{S2} solved for x (or for y when the x
/// coefficients cancel):  x = sum_r slope_r t^(r) + constant.
struct BoundaryLine {
  enum class Form { SolvedForX, SolvedForY, Degenerate } form;
  std::map<int, Rational> slopes;  // level -> coefficient (levels >= 2, or != 2)
  LogValue constant;
};

BoundaryLine boundary_line(const GeneralTau& tau, const IndexSet& S1, const IndexSet& S2);

/// y-coordinate of the meeting point of boundaries (Sa,Sb) and (Sb,Sc) at
/// fixed remaining times.
LogValue triple_point_y(const GeneralTau& tau, const IndexSet& Sa, const IndexSet& Sb,
                        const IndexSet& Sc, const TimeOverrides& times = {});
LogValue boundary_x_at(const BoundaryLine& line, const LogValue& y, const SolitonConfig& config,
                       const TimeOverrides& times = {});

/// Exact phase value at possibly-log-valued x and y (remaining coordinates
/// frozen).
LogValue general_phase_at(const GeneralTau& tau, const IndexSet& S, const LogValue& x,
                          const LogValue& y, const TimeOverrides& times = {});

/// True when the common phase of S1 = S2 is maximal over all terms at the
/// given x (LogValue) and remaining coordinates.
bool boundary_visible_at(const GeneralTau& tau, const IndexSet& S1, const IndexSet& S2,
                         const LogValue& x, const LogValue& y, const TimeOverrides& times = {});

/// The coincidence schedule of the P-type parallel-soliton family
/// p = ((q-a-b)/2, (q-a)/2, (q+a)/2, (q+a+b)/2).
struct ParallelEvents {
  Rational t0;
  LogValue delta_t;               // > 0
  LogValue t_minus, t_plus;
  std::vector<std::string> visible_schedule;  // diagnostic
};

ParallelEvents parallel_events(const Rational& q, const Rational& a, const Rational& b,
                               const std::vector<Rational>& c);

/// Build the P-type tau (e1 - e4) ^ (e2 + e3) for the parallel parameters.
GeneralTau parallel_tau(const Rational& q, const Rational& a, const Rational& b,
                        const std::vector<Rational>& c);

/// Merge p_{i+1} -> p_i: terms with both indices vanish, terms with i+1 are
/// re-keyed to i (constant absorbed), indices above i+1 shift down.
GeneralTau p_limit(const GeneralTau& tau, int i);

}  // namespace kptrop
