#include "kptrop/logcomb.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace kptrop {

namespace {

// Enclosure accumulator over MPFR with outward rounding.
struct Interval {
  mpfr_t lo, hi;
  explicit Interval(mpfr_prec_t prec) {
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);
  }
  ~Interval() {
    mpfr_clear(lo);
    mpfr_clear(hi);
  }
  Interval(const Interval&) = delete;
  Interval& operator=(const Interval&) = delete;
};

void add_q_log_r(Interval& acc, const Rational& q, const Rational& r, mpfr_prec_t prec) {
  mpfr_t rlo, rhi, llo, lhi, qlo, qhi, tlo, thi, cand;
  mpfr_inits2(prec, rlo, rhi, llo, lhi, qlo, qhi, tlo, thi, cand, static_cast<mpfr_ptr>(nullptr));
  mpq_t rq, qq;
  mpq_inits(rq, qq, static_cast<mpq_ptr>(nullptr));
  mpq_set_str(rq, to_string(r).c_str(), 10);
  mpq_set_str(qq, to_string(q).c_str(), 10);

  mpfr_set_q(rlo, rq, MPFR_RNDD);
  mpfr_set_q(rhi, rq, MPFR_RNDU);
  mpfr_log(llo, rlo, MPFR_RNDD);
  mpfr_log(lhi, rhi, MPFR_RNDU);
  mpfr_set_q(qlo, qq, MPFR_RNDD);
  mpfr_set_q(qhi, qq, MPFR_RNDU);

  // q * [llo, lhi] with q of either sign: take min/max of the four products.
  mpfr_mul(tlo, qlo, llo, MPFR_RNDD);
  mpfr_mul(cand, qlo, lhi, MPFR_RNDD);
  mpfr_min(tlo, tlo, cand, MPFR_RNDD);
  mpfr_mul(cand, qhi, llo, MPFR_RNDD);
  mpfr_min(tlo, tlo, cand, MPFR_RNDD);
  mpfr_mul(cand, qhi, lhi, MPFR_RNDD);
  mpfr_min(tlo, tlo, cand, MPFR_RNDD);

  mpfr_mul(thi, qlo, llo, MPFR_RNDU);
  mpfr_mul(cand, qlo, lhi, MPFR_RNDU);
  mpfr_max(thi, thi, cand, MPFR_RNDU);
  mpfr_mul(cand, qhi, llo, MPFR_RNDU);
  mpfr_max(thi, thi, cand, MPFR_RNDU);
  mpfr_mul(cand, qhi, lhi, MPFR_RNDU);
  mpfr_max(thi, thi, cand, MPFR_RNDU);

  mpfr_add(acc.lo, acc.lo, tlo, MPFR_RNDD);
  mpfr_add(acc.hi, acc.hi, thi, MPFR_RNDU);

  mpq_clears(rq, qq, static_cast<mpq_ptr>(nullptr));
  mpfr_clears(rlo, rhi, llo, lhi, qlo, qhi, tlo, thi, cand, static_cast<mpfr_ptr>(nullptr));
}

}  // namespace

LogValue LogValue::log_term(const Rational& coeff, const Rational& base) {
  if (base <= 0) throw std::domain_error("log of a non-positive rational");
  LogValue v;
  v.insert_term(base, coeff);
  return v;
}

void LogValue::insert_term(const Rational& base, const Rational& coeff) {
  if (base == 1 || coeff == 0) return;
  // Normalize bases into (1, inf): log(r) = -log(1/r).
  Rational b = base, q = coeff;
  if (b < 1) {
    b = Rational(den(b), num(b));
    q = -q;
  }
  auto [it, fresh] = terms_.try_emplace(b, q);
  if (!fresh) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

LogValue& LogValue::operator+=(const LogValue& other) {
  rat_ += other.rat_;
  for (const auto& [b, q] : other.terms_) insert_term(b, q);
  return *this;
}

LogValue& LogValue::operator-=(const LogValue& other) {
  rat_ -= other.rat_;
  for (const auto& [b, q] : other.terms_) insert_term(b, -q);
  return *this;
}

LogValue LogValue::operator-() const {
  LogValue v;
  v.rat_ = -rat_;
  for (const auto& [b, q] : terms_) v.terms_.emplace(b, -q);
  return v;
}

LogValue LogValue::scaled(const Rational& factor) const {
  LogValue v;
  if (factor == 0) return v;
  v.rat_ = rat_ * factor;
  for (const auto& [b, q] : terms_) v.terms_.emplace(b, q * factor);
  return v;
}

bool LogValue::is_zero() const {
  if (terms_.empty()) return rat_ == 0;
  if (rat_ != 0) return false;  // e^(nonzero rational) is never rational
  // Zero iff prod b_k^(q_k d) == 1 with d the common denominator.
  Integer d(1);
  for (const auto& [b, q] : terms_) d = lcm(d, den(q));
  Rational prod(1);
  for (const auto& [b, q] : terms_) {
    Integer e = num(q) * (d / den(q));
    if (abs(e) > 1000000)
      throw std::domain_error("LogValue::is_zero: exponent too large for exact product");
    prod *= pow_rational(b, e.convert_to<long>());
  }
  return prod == 1;
}

int LogValue::sign() const {
  if (terms_.empty()) return sign_of(rat_);
  if (is_zero()) return 0;
  mpq_t ratq;
  mpq_init(ratq);
  mpq_set_str(ratq, to_string(rat_).c_str(), 10);
  int result = 0;
  for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t(1) << 20); prec *= 2) {
    Interval acc(prec);
    mpfr_set_q(acc.lo, ratq, MPFR_RNDD);
    mpfr_set_q(acc.hi, ratq, MPFR_RNDU);
    for (const auto& [b, q] : terms_) add_q_log_r(acc, q, b, prec);
    if (mpfr_sgn(acc.lo) > 0) {
      result = 1;
      break;
    }
    if (mpfr_sgn(acc.hi) < 0) {
      result = -1;
      break;
    }
  }
  mpq_clear(ratq);
  if (result == 0)
    throw std::runtime_error("LogValue::sign: could not certify a nonzero value");
  return result;
}

bool LogValue::single_log(Rational& coeff, Rational& base) const {
  if (rat_ != 0 || terms_.size() != 1) return false;
  coeff = terms_.begin()->second;
  base = terms_.begin()->first;
  return true;
}

double LogValue::approx() const {
  double v = to_double(rat_);
  for (const auto& [b, q] : terms_) v += to_double(q) * std::log(to_double(b));
  return v;
}

std::string LogValue::str() const {
  std::string s = to_string(rat_);
  for (const auto& [b, q] : terms_)
    s += " + " + to_string(q) + "*log(" + to_string(b) + ")";
  return s;
}

LogValue cross_ratio_log(const Rational& pi, const Rational& pj, const Rational& pk,
                         const Rational& pl) {
  Rational ratio = ((pk - pi) * (pl - pj)) / ((pl - pi) * (pk - pj));
  return LogValue::log_term(Rational(1), ratio);
}

}  // namespace kptrop
