#pragma once

#include <map>
#include <string>

#include "kptrop/rational.hpp"

namespace kptrop {

/// Exact constant of shape  rat + sum_k q_k * log(r_k)  with q_k rational
/// and r_k positive rational. Zero is decided symbolically (the log part
/// collapses to log of an exact rational power product); nonzero signs are
/// certified by interval evaluation at doubling precision.
class LogValue {
 public:
  LogValue() = default;
  LogValue(Rational rat) : rat_(std::move(rat)) {}  // NOLINT: implicit by design
  static LogValue log_term(const Rational& coeff, const Rational& base);

  const Rational& rational_part() const { return rat_; }
  const std::map<Rational, Rational>& log_terms() const { return terms_; }

  LogValue& operator+=(const LogValue& other);
  LogValue& operator-=(const LogValue& other);
  friend LogValue operator+(LogValue a, const LogValue& b) { return a += b; }
  friend LogValue operator-(LogValue a, const LogValue& b) { return a -= b; }
  LogValue operator-() const;
  LogValue scaled(const Rational& factor) const;

  bool is_rational() const { return terms_.empty(); }
  bool is_zero() const;

  /// -1, 0, +1. Exact zero detection first, then certified intervals.
  int sign() const;

  bool same_value(const LogValue& other) const { return (*this - other).sign() == 0; }

  /// If the value is q * log(r) + 0 with a single term and zero rational
  /// part, expose (q, r).
  bool single_log(Rational& coeff, Rational& base) const;

  double approx() const;

  std::string str() const;

 private:
  void insert_term(const Rational& base, const Rational& coeff);

  Rational rat_{0};
  std::map<Rational, Rational> terms_;  // base (> 1) -> coefficient
};

/// log of the cross ratio (p_k-p_i)(p_l-p_j) / ((p_l-p_i)(p_k-p_j)).
LogValue cross_ratio_log(const Rational& pi, const Rational& pj, const Rational& pk,
                         const Rational& pl);

}  // namespace kptrop
