#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qlab/errors.hpp"

namespace qlab {

using Rational = mpq_class;
using Exponent = std::int64_t;

// Canonical "p/q" rendering; integers print without a denominator.
std::string to_string(const Rational& r);

// c * q^k. A zero coefficient represents the zero monomial regardless of k.
struct Monomial {
  Rational coeff{1};
  Exponent exp{0};

  bool is_zero() const { return sgn(coeff) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.coeff * b.coeff, a.exp + b.exp};
  }
  friend Monomial operator-(const Monomial& a) { return {-a.coeff, a.exp}; }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.coeff == b.coeff && a.exp == b.exp;
  }
};

inline Monomial q_pow(Exponent k, Rational c = 1) { return {std::move(c), k}; }

// Multiplicative inverse; throws NotInvertible for the zero monomial.
Monomial inverse(const Monomial& m);

// m^n with 0^0 = 1.
Monomial pow(const Monomial& m, std::int64_t n);

// Parses "0", "1", "-1/2", "q", "-q^3", "q^-1", "3/4*q^2", "2q". Throws
// InvalidParameter.
Monomial parse_monomial(const std::string& text);

// Inverse of parse_monomial: "0", "1", "q", "q^2", "-q^-1", "1/2*q^3".
std::string to_string(const Monomial& m);

// Truncated formal Laurent series in q with exact rational coefficients.
//
// Coefficients are stored for exponents in [min_exp, order). Every exponent
// below min_exp has coefficient zero, every exponent at or above order is
// unknown. The stored coefficient at min_exp is nonzero; a series that is
// zero throughout its window has min_exp == order.
class LaurentSeries {
 public:
  // The zero series with an empty window at 0.
  LaurentSeries() = default;

  static LaurentSeries zero(Exponent order);

  // c * q^k on the window [k, order). Throws InvalidWindow if k >= order.
  static LaurentSeries monomial(const Rational& c, Exponent k, Exponent order);

  // Coefficients for q^min_exp, q^(min_exp+1), ...; order = min_exp + size.
  static LaurentSeries from_coefficients(Exponent min_exp, std::vector<Rational> coeffs);
  static LaurentSeries from_coefficients(Exponent min_exp, std::initializer_list<long> coeffs);

  Exponent min_exp() const { return min_exp_; }
  Exponent order() const { return min_exp_ + static_cast<Exponent>(coeffs_.size()); }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  // Exact coefficient of q^k; zero below min_exp. Throws OutOfWindow if k >= order.
  Rational coefficient(Exponent k) const;

  // Same series with its window cut at new_order <= order().
  LaurentSeries truncated(Exponent new_order) const;

  // Multiplication by q^k. Exact: the window moves with the support.
  LaurentSeries shifted(Exponent k) const&;
  LaurentSeries shifted(Exponent k) &&;

  // In-place multiplication and division by the exact binomial (1 + c q^k).
  // The window is preserved (k > 0), or moved by k (k < 0).
  LaurentSeries& mul_binomial(const Rational& c, Exponent k);
  LaurentSeries& div_binomial(const Rational& c, Exponent k);

  LaurentSeries& operator+=(const LaurentSeries& rhs);
  LaurentSeries& operator-=(const LaurentSeries& rhs);
  LaurentSeries& operator*=(const Rational& c);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator-(LaurentSeries a) { return a *= Rational(-1); }
  friend LaurentSeries operator*(LaurentSeries a, const Rational& c) { return a *= c; }
  friend LaurentSeries operator*(const Rational& c, LaurentSeries a) { return a *= c; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

  // Structural equality: same window and same coefficients.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  LaurentSeries(Exponent min_exp, std::vector<Rational> coeffs);
  void normalize();

  Exponent min_exp_ = 0;
  std::vector<Rational> coeffs_;
};

// Multiplicative inverse. Throws NotInvertible for a zero series.
LaurentSeries invert(const LaurentSeries& a);

// q -> q^k for k >= 1.
LaurentSeries substitute_power(const LaurentSeries& a, Exponent k);

// q -> -q.
LaurentSeries negate_variable(const LaurentSeries& a);

struct Mismatch {
  Exponent exponent;
  Rational lhs;
  Rational rhs;
};

struct Comparison {
  bool equal;
  std::optional<Mismatch> first_mismatch;

  explicit operator bool() const { return equal; }
};

// Compares all coefficients below order. Throws OutOfWindow if order exceeds
// either window.
Comparison equal_up_to(const LaurentSeries& a, const LaurentSeries& b, Exponent order);

// (base; q^step)_length; an empty length means the infinite product.
struct PochhammerSpec {
  Monomial base;
  Exponent step = 1;
  std::optional<std::int64_t> length;

  // (sign * q^offset; q^step)_length
  static PochhammerSpec make(int sign, Exponent offset, Exponent step,
                             std::optional<std::int64_t> length) {
    return {Monomial{sign, offset}, step, length};
  }
};

inline constexpr std::nullopt_t infinite = std::nullopt;

// Shorthand for (c q^offset; q^step)_length.
inline PochhammerSpec qp(Monomial base, Exponent step, std::optional<std::int64_t> length) {
  return {std::move(base), step, length};
}

// An exact product  c q^k * prod (1 + c_i q^{k_i})^{+-1} * prod (x; q^s)_n^{+-1}.
//
// Factors with nonpositive exponent are folded into the monomial prefactor, so
// evaluating at a given order yields a series exact on its whole window
// [lead exponent, order). Infinite products are expanded only as far as the
// window requires.
class Product {
 public:
  Product() = default;
  explicit Product(Monomial prefactor) : prefactor_(std::move(prefactor)) {}
  Product(Rational c, Exponent k) : prefactor_{std::move(c), k} {}

  Product& times(const Monomial& m);
  Product& times(const Rational& c);
  // (1 + c q^k)
  Product& times_binomial(const Rational& c, Exponent k);
  Product& over_binomial(const Rational& c, Exponent k);
  Product& times(const PochhammerSpec& p, int power = 1);
  Product& over(const PochhammerSpec& p, int power = 1);

  // Throws NotInvertible if a denominator factor is identically zero.
  LaurentSeries eval(Exponent order) const;

 private:
  struct Factor {
    PochhammerSpec spec;
    bool inverse;
  };
  struct Binomial {
    Rational c;
    Exponent k;
    bool inverse;
  };

  Monomial prefactor_{1, 0};
  std::vector<Binomial> binomials_;
  std::vector<Factor> factors_;
};

// (spec) on the window [lead, order).
LaurentSeries pochhammer(const PochhammerSpec& spec, Exponent order);

inline constexpr std::int64_t default_term_cap = 100000;

using TermGenerator = std::function<LaurentSeries(std::int64_t index)>;

// Sums generator(first), generator(first + 1), ... up to, but excluding, the
// first term whose min_exp is >= order. Throws TruncationStall if no such term
// appears within cap evaluations.
LaurentSeries sum_terms(const TermGenerator& generator, Exponent order,
                        std::int64_t cap = default_term_cap, std::int64_t first = 0);

}  // namespace qlab
