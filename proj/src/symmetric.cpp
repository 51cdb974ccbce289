#include "kptrop/symmetric.hpp"

#include <stdexcept>

namespace kptrop {

Rational h_poly(long m, const std::vector<Rational>& values) {
  if (values.empty()) throw std::invalid_argument("h_poly: empty value list");
  if (m < 0) return Rational(0);
  // h over j variables by the recurrence H(j,d) = H(j-1,d) + v_j H(j,d-1).
  std::vector<Rational> row(static_cast<std::size_t>(m) + 1, Rational(0));
  row[0] = 1;
  for (const Rational& v : values)
    for (long d = 1; d <= m; ++d)
      row[static_cast<std::size_t>(d)] += v * row[static_cast<std::size_t>(d - 1)];
  return row[static_cast<std::size_t>(m)];
}

Rational vandermonde(const std::vector<Rational>& values) {
  if (values.empty()) throw std::invalid_argument("vandermonde: empty value list");
  Rational prod(1);
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) prod *= values[j] - values[i];
  return prod;
}

std::vector<Rational> gather(const std::vector<Rational>& p, const IndexSet& S) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(S.size()));
  for (int k : S) {
    if (k < 1 || k > static_cast<int>(p.size()))
      throw std::out_of_range("index outside parameter list");
    out.push_back(p[static_cast<std::size_t>(k - 1)]);
  }
  return out;
}

Rational c_coeff(const std::vector<Rational>& p, const std::vector<Rational>& c,
                 const IndexSet& S) {
  if (S.empty()) throw std::invalid_argument("c_coeff: empty index set");
  Rational sum(0);
  for (int i : S) {
    Rational denom(1);
    const Rational& pi = p[static_cast<std::size_t>(i - 1)];
    for (int j : S) {
      if (j == i) continue;
      Rational d = pi - p[static_cast<std::size_t>(j - 1)];
      if (d == 0) throw std::invalid_argument("c_coeff: repeated p value on S");
      denom *= d;
    }
    sum += c[static_cast<std::size_t>(i - 1)] / denom;
  }
  return sum;
}

std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> rhs) {
  const std::size_t n = a.size();
  if (rhs.size() != n) throw std::invalid_argument("solve_linear: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("solve_linear: singular system");
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
  return x;
}

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

}  // namespace kptrop
