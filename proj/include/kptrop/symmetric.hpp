#pragma once

#include <vector>

#include "kptrop/index_set.hpp"
#include "kptrop/rational.hpp"

namespace kptrop {

/// Complete homogeneous symmetric polynomial h_m evaluated at the given
/// values. h_0 = 1 and h_m = 0 for m < 0.
Rational h_poly(long m, const std::vector<Rational>& values);

/// prod_{i<j} (v_j - v_i); 1 for a single value.
Rational vandermonde(const std::vector<Rational>& values);

/// The partial-fraction coefficient c_S = sum_{i in S} c_i / prod_{j in S,
/// j != i} (p_i - p_j), totally symmetric in S. |S| = 1 returns c_{k1}.
/// p and c are full 1-based parameter lists (index 0 unused is NOT assumed;
/// vectors are 0-based, phase k lives at [k-1]).
Rational c_coeff(const std::vector<Rational>& p, const std::vector<Rational>& c,
                 const IndexSet& S);

/// Values of p restricted to S, in S's order.
std::vector<Rational> gather(const std::vector<Rational>& p, const IndexSet& S);

/// Exact Gaussian elimination. Throws on singular systems.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> rhs);

Rational determinant(std::vector<std::vector<Rational>> a);

}  // namespace kptrop
