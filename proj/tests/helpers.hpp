#pragma once

#include <random>
#include <vector>

#include "kptrop/config.hpp"
#include "kptrop/rational.hpp"

namespace kptrop::testing {

/// Small random rationals, numerators in [-bound, bound], denominators in
/// [1, den_bound].
class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  Rational rational(int bound = 12, int den_bound = 6) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    return Rational(num(gen_), den(gen_));
  }

  Rational nonzero_rational(int bound = 12, int den_bound = 6) {
    while (true) {
      Rational q = rational(bound, den_bound);
      if (q != 0) return q;
    }
  }

  /// Strictly increasing list of distinct rationals.
  std::vector<Rational> increasing(int count, int bound = 10) {
    std::vector<Rational> v;
    while (static_cast<int>(v.size()) < count) {
      Rational q = rational(bound);
      bool dup = false;
      for (const auto& u : v) dup = dup || u == q;
      if (!dup) v.push_back(q);
    }
    std::sort(v.begin(), v.end());
    return v;
  }

  SolitonConfig config(int M, int horizon = 0) {
    std::vector<Rational> c;
    for (int i = 0; i <= M; ++i) c.push_back(rational(20));
    std::map<int, Rational> times;
    int N = horizon == 0 ? M : horizon;
    for (int r = 4; r <= N; ++r) times[r] = rational(8);
    auto v = validate_config(M, increasing(M + 1), std::move(c), std::move(times), N);
    return v.config;
  }

  int uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(gen_);
  }

  std::mt19937& raw() { return gen_; }

 private:
  std::mt19937 gen_;
};

}  // namespace kptrop::testing
