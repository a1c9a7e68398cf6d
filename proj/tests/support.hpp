#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qlab/series.hpp"

namespace qlab::testing {

// Random Laurent series with small rational coefficients.
class SeriesGenerator {
 public:
  explicit SeriesGenerator(std::uint32_t seed) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    Rational r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }

  LaurentSeries series(Exponent min_lo = -3, Exponent min_hi = 3, int max_len = 8) {
    std::uniform_int_distribution<Exponent> start(min_lo, min_hi);
    std::uniform_int_distribution<int> len(1, max_len);
    std::vector<Rational> c(len(rng_));
    for (auto& x : c) x = rational();
    return LaurentSeries::from_coefficients(start(rng_), std::move(c));
  }

  // A series whose leading coefficient is nonzero, so it is invertible.
  LaurentSeries unit(Exponent min_lo = -3, Exponent min_hi = 3, int max_len = 8) {
    for (;;) {
      LaurentSeries s = series(min_lo, min_hi, max_len);
      if (!s.is_zero() && s.order() - s.min_exp() >= 2) return s;
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

// Comparison window shared by two series.
inline Exponent common_order(const LaurentSeries& a, const LaurentSeries& b) { return std::min(a.order(), b.order()); }

inline bool same(const LaurentSeries& a, const LaurentSeries& b) {
  return equal_up_to(a, b, common_order(a, b)).equal;
}

// Plain integer polynomial multiplication, truncated at `len` terms.
inline std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                          std::size_t len) {
  std::vector<std::int64_t> r(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Number of partitions of n into parts <= k, by the textbook recursion.
inline std::int64_t partition_count(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return partition_count(n - k, k) + partition_count(n, k - 1);
}

}  // namespace qlab::testing
