#include "kptrop/grid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "kptrop/critical.hpp"

namespace kptrop {

Rational RegionGrid::cell_cx(int ix) const {
  return bbox.x0 + (bbox.x1 - bbox.x0) * Rational(2 * ix + 1, 2 * nx);
}

Rational RegionGrid::cell_cy(int iy) const {
  return bbox.y0 + (bbox.y1 - bbox.y0) * Rational(2 * iy + 1, 2 * ny);
}

std::vector<IndexSet> RegionGrid::interior_only_keys() const {
  std::set<IndexSet> interior, border;
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const IndexSet& k = key_at(ix, iy);
      if (ix == 0 || iy == 0 || ix == nx - 1 || iy == ny - 1)
        border.insert(k);
      else
        interior.insert(k);
    }
  std::vector<IndexSet> out;
  for (const auto& k : interior)
    if (!border.count(k)) out.push_back(k);
  return out;
}

namespace {

const SolitonConfig& config_of(const FieldSource& source) {
  if (std::holds_alternative<SolitonConfig>(source)) return std::get<SolitonConfig>(source);
  return std::get<GeneralTau>(source).config;
}

struct CellEval {
  IndexSet best;
  bool tie = false;
  IndexSet tie_set;
};

CellEval eval_simple(const SolitonConfig& config, const SpacetimePoint& pt) {
  auto values = all_phase_values(config, pt);
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;
  std::vector<int> tying;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == values[best]) tying.push_back(static_cast<int>(i) + 1);
  CellEval out;
  out.best = IndexSet{static_cast<int>(best) + 1};
  if (tying.size() > 1) {
    out.tie = true;
    out.tie_set = IndexSet(tying);
  }
  return out;
}

CellEval eval_general(const GeneralTau& tau, const SpacetimePoint& pt) {
  const IndexSet* best = nullptr;
  std::vector<const IndexSet*> tying;
  for (const auto& [S, ph] : tau.phases) {
    if (!best) {
      best = &S;
      tying = {&S};
      continue;
    }
    auto cmp = compare_phases(ph, tau.phases.at(*best), pt);
    if (cmp == std::strong_ordering::greater) {
      best = &S;
      tying = {&S};
    } else if (cmp == std::strong_ordering::equal) {
      tying.push_back(&S);
    }
  }
  CellEval out;
  out.best = *best;
  if (tying.size() > 1) {
    out.tie = true;
    std::vector<int> all;
    for (const IndexSet* s : tying)
      for (int k : *s) all.push_back(k);
    out.tie_set = IndexSet(all);
  }
  return out;
}

}  // namespace

RegionGrid tropical_field(const FieldSource& source, const BBox& bbox, int nx, int ny,
                          const TimeOverrides& times) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("tropical_field: resolution below 2x2");
  if (bbox.x0 >= bbox.x1 || bbox.y0 >= bbox.y1)
    throw std::invalid_argument("tropical_field: degenerate bounding box");
  const SolitonConfig& config = config_of(source);
  RegionGrid grid;
  grid.bbox = bbox;
  grid.nx = nx;
  grid.ny = ny;
  grid.times = times;
  grid.keys.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  grid.tie.resize(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny), false);
  grid.tie_index.resize(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny), -1);
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      SpacetimePoint pt = config.point_from({grid.cell_cx(ix), grid.cell_cy(iy)}, times);
      CellEval cell = std::holds_alternative<SolitonConfig>(source)
                          ? eval_simple(std::get<SolitonConfig>(source), pt)
                          : eval_general(std::get<GeneralTau>(source), pt);
      std::size_t at = grid.keys.size();
      grid.keys.push_back(cell.best);
      if (cell.tie) {
        grid.tie[at] = true;
        grid.tie_index[at] = static_cast<int>(grid.tie_sets.size());
        grid.tie_sets.push_back(cell.tie_set);
      }
    }
  }
  return grid;
}

Rational boundary_amplitude(const std::vector<Rational>& p, const IndexSet& a, const IndexSet& b) {
  std::vector<int> diff;
  for (int k : a)
    if (!b.contains(k)) diff.push_back(k);
  for (int k : b)
    if (!a.contains(k)) diff.push_back(k);
  IndexSet sym(diff);
  const int m = sym.size();
  if (m < 2) return Rational(0);
  Rational sum(0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Rational d = p[static_cast<std::size_t>(sym[j] - 1)] - p[static_cast<std::size_t>(sym[i] - 1)];
      sum += d * d;
    }
  return Rational(2) * sum / (Rational(m) * Rational(m));
}

namespace {

// For the simple class, the exact boundary between phases i and j clipped to
// a rectangle; returns false when the line misses it.
bool clip_simple_boundary(const SolitonConfig& config, int i, int j, const TimeOverrides& times,
                          const Rational& x_lo, const Rational& x_hi, const Rational& y_lo,
                          const Rational& y_hi, double& ax, double& ay, double& bx, double& by) {
  // x = -h1(pi,pj) y - sum_{r>=3} h_r-ish terms - c_ij: evaluate via the
  // critical-value formula with y treated as the running parameter.
  // x_{ij}(y) is affine: x = s*y + d.
  const Rational& pi = config.p[static_cast<std::size_t>(i - 1)];
  const Rational& pj = config.p[static_cast<std::size_t>(j - 1)];
  Rational s = -(pi + pj);
  // d = x_ij(0): critical value of t^(1) for S={i,j} with y=0 merged in.
  TimeOverrides t0 = times;
  t0[2] = Rational(0);
  Rational d = critical_value(config, IndexSet{i, j}, t0).value;
  // Intersect x = s*y + d with the rectangle.
  std::vector<std::pair<Rational, Rational>> pts;
  auto push_if = [&](const Rational& x, const Rational& y) {
    if (x >= x_lo && x <= x_hi && y >= y_lo && y <= y_hi) pts.push_back({x, y});
  };
  push_if(s * y_lo + d, y_lo);
  push_if(s * y_hi + d, y_hi);
  if (s != 0) {
    push_if(x_lo, (x_lo - d) / s);
    push_if(x_hi, (x_hi - d) / s);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 2) return false;
  ax = to_double(pts.front().first);
  ay = to_double(pts.front().second);
  bx = to_double(pts.back().first);
  by = to_double(pts.back().second);
  return true;
}

}  // namespace

BoundaryExtraction extract_boundaries(const RegionGrid& grid, const FieldSource& source) {
  BoundaryExtraction out;
  const SolitonConfig& config = config_of(source);
  const bool simple = std::holds_alternative<SolitonConfig>(source);
  Rational dx = (grid.bbox.x1 - grid.bbox.x0) / grid.nx;
  Rational dy = (grid.bbox.y1 - grid.bbox.y0) / grid.ny;

  auto emit = [&](int ix, int iy, bool horizontal_neighbor) {
    const IndexSet& a = grid.key_at(ix, iy);
    const IndexSet& b =
        horizontal_neighbor ? grid.key_at(ix + 1, iy) : grid.key_at(ix, iy + 1);
    if (a == b) return;
    BoundarySegment seg;
    seg.left_key = a;
    seg.right_key = b;
    seg.amplitude = boundary_amplitude(config.p, a, b);
    if (simple && a.size() == 1 && b.size() == 1) {
      Rational x_lo = grid.bbox.x0 + dx * ix, y_lo = grid.bbox.y0 + dy * iy;
      Rational x_hi = x_lo + dx * (horizontal_neighbor ? 2 : 1);
      Rational y_hi = y_lo + dy * (horizontal_neighbor ? 1 : 2);
      if (clip_simple_boundary(config, a[0], b[0], grid.times, x_lo, x_hi, y_lo, y_hi, seg.x1, seg.y1,
                               seg.x2, seg.y2)) {
        out.segments.push_back(seg);
        return;
      }
    }
    // Shared cell edge.
    if (horizontal_neighbor) {
      Rational x = grid.bbox.x0 + dx * (ix + 1);
      seg.x1 = to_double(x);
      seg.x2 = seg.x1;
      seg.y1 = to_double(grid.bbox.y0 + dy * iy);
      seg.y2 = to_double(grid.bbox.y0 + dy * (iy + 1));
    } else {
      Rational y = grid.bbox.y0 + dy * (iy + 1);
      seg.y1 = to_double(y);
      seg.y2 = seg.y1;
      seg.x1 = to_double(grid.bbox.x0 + dx * ix);
      seg.x2 = to_double(grid.bbox.x0 + dx * (ix + 1));
    }
    out.segments.push_back(seg);
  };

  for (int iy = 0; iy < grid.ny; ++iy)
    for (int ix = 0; ix < grid.nx; ++ix) {
      if (ix + 1 < grid.nx) emit(ix, iy, true);
      if (iy + 1 < grid.ny) emit(ix, iy, false);
    }

  // Grid corners where at least three distinct keys meet.
  for (int iy = 0; iy + 1 < grid.ny; ++iy)
    for (int ix = 0; ix + 1 < grid.nx; ++ix) {
      std::set<IndexSet> corner{grid.key_at(ix, iy), grid.key_at(ix + 1, iy),
                                grid.key_at(ix, iy + 1), grid.key_at(ix + 1, iy + 1)};
      if (corner.size() < 3) continue;
      TriplePointHit hit;
      hit.x = to_double(grid.bbox.x0 + dx * (ix + 1));
      hit.y = to_double(grid.bbox.y0 + dy * (iy + 1));
      std::vector<int> all;
      for (const auto& k : corner) {
        hit.keys.push_back(k);
        for (int idx : k) all.push_back(idx);
      }
      IndexSet meet(all);
      Rational sum(0);
      for (int i = 0; i < meet.size(); ++i)
        for (int j = i + 1; j < meet.size(); ++j) {
          Rational d = config.p[static_cast<std::size_t>(meet[j] - 1)] -
                       config.p[static_cast<std::size_t>(meet[i] - 1)];
          sum += d * d;
        }
      hit.amplitude =
          Rational(2) * sum / (Rational(meet.size()) * Rational(meet.size()));
      out.triple_points.push_back(hit);
    }
  return out;
}

double exact_u(const FieldSource& source, const SpacetimePoint& point, double hbar) {
  if (hbar <= 0) throw std::invalid_argument("exact_u: hbar must be positive");
  // Terms A_S e^(theta_S / hbar) with x-slope s_S; factor out the max phase.
  struct Term {
    double slope;
    double sign;
    double log_mag_plus_theta;  // (theta_S + log|A_S|), before /hbar
  };
  std::vector<Term> terms;
  if (std::holds_alternative<SolitonConfig>(source)) {
    const auto& config = std::get<SolitonConfig>(source);
    for (int i = 1; i <= config.phases(); ++i)
      terms.push_back({to_double(config.p[static_cast<std::size_t>(i - 1)]), 1.0,
                       to_double(phase_value(config, i, point))});
  } else {
    const auto& tau = std::get<GeneralTau>(source);
    for (const auto& [S, ph] : tau.phases) {
      double v = ph.value_at(point).approx();
      terms.push_back({to_double(ph.lin[0]), tau.coeffs.at(S) < 0 ? -1.0 : 1.0, v});
    }
  }
  double mx = terms.front().log_mag_plus_theta;
  for (const auto& t : terms) mx = std::max(mx, t.log_mag_plus_theta);
  double w_sum = 0, sw_sum = 0, ssw_sum = 0;
  for (const auto& t : terms) {
    double w = t.sign * std::exp((t.log_mag_plus_theta - mx) / hbar);
    w_sum += w;
    sw_sum += t.slope * w;
    ssw_sum += t.slope * t.slope * w;
  }
  if (w_sum <= 0) throw std::domain_error("exact_u: tau not positive at the point");
  return 2.0 * (ssw_sum * w_sum - sw_sum * sw_sum) / (w_sum * w_sum);
}

}  // namespace kptrop
