#include "qlab/qfunctions.hpp"

#include <algorithm>
#include <cassert>

namespace qlab::qfunctions {

namespace {

using S = LaurentSeries;
using Index = std::int64_t;

PochhammerSpec P(int sign, Exponent offset, Exponent step, std::optional<Index> length) {
  return PochhammerSpec::make(sign, offset, step, length);
}

PochhammerSpec P(Monomial base, Exponent step, std::optional<Index> length) {
  return {std::move(base), step, length};
}

Rational alt(Index n) { return n % 2 == 0 ? 1 : -1; }

// 3n(n+1)/2
Exponent tri3(Index n) {
  Index t = n * (n + 1);
  assert(t % 2 == 0);
  return 3 * (t / 2);
}

S sum(Exponent w, Index first, const std::function<S(Index)>& term) {
  return sum_terms(term, w, default_term_cap, first);
}

S constant(const Rational& c, Exponent w) { return Product(c, 0).eval(w); }

const Monomial& param(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw MissingParameter("missing parameter '" + key + "'");
  return it->second;
}

// (q;q)_inf
S euler(Exponent w) { return pochhammer(P(1, 1, 1, infinite), w); }

// 1/(q;q)_inf
S euler_inv(Exponent w) { return Product().over(P(1, 1, 1, infinite)).eval(w); }

// (q;q)_inf^2 / (-q;q)_inf^2
S theta_sq_ratio(Exponent w) {
  return Product().times(P(1, 1, 1, infinite), 2).over(P(-1, 1, 1, infinite), 2).eval(w);
}

// (q;q)_inf / (-q;q)_inf^2
S theta_euler_ratio(Exponent w) {
  return Product().times(P(1, 1, 1, infinite)).over(P(-1, 1, 1, infinite), 2).eval(w);
}

S pentagonal(Exponent w) {
  return sum(w, 0, [w](Index k) {
    if (k == 0) return constant(1, w);
    return Product(alt(k), k * (3 * k - 1) / 2).eval(w) + Product(alt(k), k * (3 * k + 1) / 2).eval(w);
  });
}

// --- mock theta functions -------------------------------------------------

S f3_def(const Params&, Exponent w) {
  return sum(w, 0, [w](Index n) { return Product(1, n * n).over(P(-1, 1, 1, n), 2).eval(w); });
}

S omega3_def(const Params&, Exponent w) {
  return sum(w, 0, [w](Index n) { return Product(1, 2 * n * (n + 1)).over(P(1, 1, 2, n + 1), 2).eval(w); });
}

S omega3_rep_rhs(const Params&, Exponent w) {
  return sum(w, 1, [w](Index n) {
    return Product(1, n - 1).over_binomial(-1, n).over(P(1, n + 1, 1, n)).over(P(1, 2 * n + 2, 2, infinite)).eval(w);
  });
}

S q_omega3(const Params& p, Exponent w) { return omega3_def(p, w).shifted(1); }

S phi3_def(const Params&, Exponent w) {
  return sum(w, 0, [w](Index n) { return Product(1, n * n).over(P(-1, 2, 2, n)).eval(w); });
}

S phi3_neg_direct(const Params&, Exponent w) {
  return sum(w, 0, [w](Index n) { return Product(alt(n), n * n).over(P(-1, 2, 2, n)).eval(w); });
}

S phi3_neg_substituted(const Params& p, Exponent w) { return negate_variable(phi3_def(p, w)); }

S phi3_neg_from_f3(const Params& p, Exponent w) {
  return Rational(1, 2) * f3_def(p, w) + Rational(1, 2) * theta_euler_ratio(w);
}

// --- theta and Euler products ---------------------------------------------

S theta_phi_neg_sum(const Params&, Exponent w) {
  return constant(1, w) + sum(w, 1, [w](Index n) { return Product(2 * alt(n), n * n).eval(w); });
}

S theta_phi_neg_product(const Params&, Exponent w) {
  return Product().times(P(1, 1, 1, infinite)).over(P(-1, 1, 1, infinite)).eval(w);
}

S euler_product_direct(const Params&, Exponent w) { return euler(w); }
S euler_product_pentagonal(const Params&, Exponent w) { return pentagonal(w); }
S euler_inverse_direct(const Params&, Exponent w) { return euler_inv(w); }
S euler_inverse_pentagonal(const Params&, Exponent w) { return invert(pentagonal(w)); }

// --- spt ------------------------------------------------------------------

S spt_lhs(const Params&, Exponent w) {
  return sum(w, 1, [w](Index n) {
    return Product(1, n).over_binomial(-1, n).over_binomial(-1, n).over(P(1, n + 1, 1, infinite)).eval(w);
  });
}

S spt_rhs(const Params&, Exponent w) {
  S divisor = sum(w, 1, [w](Index n) { return Product(n, n).over_binomial(-1, n).eval(w); });
  S theta = sum(w, 1, [w](Index n) {
    return Product(alt(n), n * (3 * n + 1) / 2).times_binomial(1, n).over_binomial(-1, n).over_binomial(-1, n).eval(w);
  });
  return euler_inv(w) * (divisor + theta);
}

S spt_derivative_rhs(const Params&, Exponent w) {
  S divisor = sum(w, 1, [w](Index n) { return Product(n, 2 * n).over_binomial(-1, 2 * n).eval(w); });
  S theta = sum(w, 1, [w](Index n) {
    return Product(alt(n), tri3(n)).times_binomial(1, n).over_binomial(-1, 2 * n).over_binomial(-1, 2 * n).eval(w);
  });
  return divisor + theta;
}

S spt_derivative_lhs(const Params&, Exponent w) {
  return sum(w, 1, [w](Index n) {
    return Product(1, 2 * n).times(P(1, 2, 2, n - 1), 2).over(P(1, 2, 2, n)).over(P(-1, 1, 1, 2 * n)).eval(w);
  });
}

S spt_derivative_lhs_rewritten(const Params&, Exponent w) {
  return sum(w, 1, [w](Index n) {
    return Product(1, 2 * n)
        .times(P(1, 1, 1, n))
        .over_binomial(-1, 2 * n)
        .over_binomial(-1, 2 * n)
        .over(P(-1, n + 1, 1, n))
        .eval(w);
  });
}

S sptG_lhs(const Params&, Exponent w) {
  return sum(w, 1, [w](Index n) {
    return Product(1, 2 * n)
        .over_binomial(-1, 2 * n)
        .over_binomial(-1, 2 * n)
        .over(P(-1, n + 1, 1, n))
        .over(P(1, n + 1, 1, infinite))
        .eval(w);
  });
}

S sptG_rhs(const Params& p, Exponent w) { return euler_inv(w) * spt_derivative_rhs(p, w); }

// --- positive odd rank / two-color partitions ------------------------------

S No_plus_t1(const Params&, Exponent w) {
  return sum(w, 1, [w](Index n) {
    return Product(1, 2 * n).over(P(1, 2 * n, 2, n + 1)).over(P(1, 2 * n + 1, 1, infinite)).eval(w);
  });
}

S No_plus_t2(const Params&, Exponent w) {
  return sum(w, 1, [w](Index n) {
    return Product(1, 2 * n)
        .over_binomial(-1, 2 * n)
        .over(P(-1, n + 1, 1, n))
        .over(P(1, n + 1, 1, infinite))
        .eval(w);
  });
}

S No_plus_t3(const Params&, Exponent w) {
  return sum(w, 1, [w](Index n) {
    return Product(1, 2 * n).over(P(-1, n, 1, n + 1)).over(P(1, n, 1, infinite)).eval(w);
  });
}

S No_plus_t4(const Params&, Exponent w) {
  return sum(w, 0, [w](Index n) {
    return Product(1, 2 * n + 2).over(P(-1, n + 1, 1, n + 2)).over(P(1, n + 1, 1, infinite)).eval(w);
  });
}

S No_plus_t5(const Params&, Exponent w) {
  return euler_inv(w) * sum(w, 0, [w](Index n) {
           return Product(1, 2 * n + 2).times(P(1, 1, 1, n)).over(P(-1, n + 1, 1, n + 2)).eval(w);
         });
}

S No_plus_t6(const Params&, Exponent w) {
  return euler_inv(w) * sum(w, 0, [w](Index n) {
           return Product(1, 2 * n + 2).times(P(1, 1, 1, n)).times(P(-1, 1, 1, n)).over(P(-1, 1, 1, 2 * n + 2)).eval(w);
         });
}

S q3q4_sum(const Params&, Exponent w) {
  return sum(w, 0, [w](Index n) {
    return Product(1, 2 * n).times(P(1, 2, 2, n)).over(P(-1, 3, 2, n)).over(P(-1, 4, 2, n)).eval(w);
  });
}

S No_plus_reduced(const Params& p, Exponent w) {
  S prefactor = Product(1, 2).over(P(1, 1, 1, infinite)).over_binomial(1, 1).over_binomial(1, 2).eval(w);
  return prefactor * q3q4_sum(p, w);
}

S No_plus_from_f3(const Params& p, Exponent w) { return Rational(1, 4) * (euler_inv(w) - f3_def(p, w)); }

S f3_newrep_rhs(const Params& p, Exponent w) { return euler_inv(w) - Rational(4) * No_plus_t1(p, w); }

S G_e4(const Params&, Exponent w) {
  return sum(w, 1, [w](Index n) {
    return Product(1, 2 * n).over(P(1, 2 * n + 2, 2, n)).over(P(1, 2 * n, 1, infinite)).eval(w);
  });
}

S G_e3(const Params&, Exponent w) {
  return sum(w, 1, [w](Index n) {
    return Product(1, 2 * n)
        .over_binomial(-1, 2 * n)
        .over(P(1, 2 * n + 2, 2, n))
        .over(P(1, 2 * n + 1, 1, infinite))
        .eval(w);
  });
}

S G_e2(const Params&, Exponent w) {
  return sum(w, 1, [w](Index n) {
    return Product(1, 2 * n)
        .over_binomial(-1, 2 * n)
        .over(P(-1, n + 1, 1, n))
        .over(P(1, n + 1, 1, n))
        .over(P(1, 2 * n + 1, 1, infinite))
        .eval(w);
  });
}

S Ne_series_rhs(const Params& p, Exponent w) { return euler_inv(w) - Rational(2) * No_plus_t2(p, w); }

S Ne_from_f3(const Params& p, Exponent w) { return Rational(1, 2) * (euler_inv(w) + f3_def(p, w)); }

// --- Fine's numbers -------------------------------------------------------

S fineJ_direct(const Params&, Exponent w) {
  return sum(w, 1, [w](Index n) { return Product(alt(n), n * (3 * n + 1) / 2).over_binomial(1, n).eval(w); });
}

S fineJ_rhs(const Params&, Exponent w) {
  return -sum(w, 1, [w](Index n) {
    return Product(1, 2 * n).times(P(1, 1, 1, n)).over_binomial(-1, 2 * n).over(P(-1, n + 1, 1, n)).eval(w);
  });
}

S fineJ_from_f3(const Params& p, Exponent w) {
  return Rational(1, 4) * (f3_def(p, w) * euler(w) - constant(1, w));
}

// --- two-parameter families ------------------------------------------------

// sum (q^2;q^2)_n q^{2n} / ((-q;q^2)_n (-b q^2;q^2)_n)
S b_family_lhs(const Params& p, Exponent w) {
  Monomial nbq2 = -param(p, "b") * q_pow(2);
  return sum(w, 0, [w, nbq2](Index n) {
    return Product(1, 2 * n).times(P(1, 2, 2, n)).over(P(-1, 1, 2, n)).over(P(nbq2, 2, n)).eval(w);
  });
}

// -q (q^2;q^2)_inf / ((-q;q^2)_inf (-b q^2;q^2)_inf) sum (-b)^m q^{m^2+2m} / (-q^3;q^2)_{m+1}
S b_family_theta_part(const Monomial& b, Exponent w) {
  Monomial nbq2 = -b * q_pow(2);
  S prefactor = Product(-1, 1).times(P(1, 2, 2, infinite)).over(P(-1, 1, 2, infinite)).over(P(nbq2, 2, infinite)).eval(w);
  Monomial nb = -b;
  S series = sum(w, 0, [w, nb](Index m) {
    return Product(pow(nb, m) * q_pow(m * m + 2 * m)).over(P(-1, 3, 2, m + 1)).eval(w);
  });
  return prefactor * series;
}

S b_family_continued(const Params& p, Exponent w) {
  const Monomial& b = param(p, "b");
  Monomial nb = -b;
  S head = Product().times_binomial(1, 1).over_binomial(1, 3).eval(w);
  S tail = sum(w, 1, [w, nb](Index m) {
    return Product(pow(nb, m) * q_pow(2 * m + 1))
        .times_binomial(1, 1)
        .times_binomial(-1, 2)
        .over_binomial(1, 2 * m + 1)
        .over_binomial(1, 2 * m + 3)
        .eval(w);
  });
  return head + b_family_theta_part(b, w) + tail;
}

S b_family_direct(const Params& p, Exponent w) {
  const Monomial& b = param(p, "b");
  Monomial nb = -b;
  S tail = sum(w, 0, [w, nb, b](Index m) {
    return Product(pow(nb, m)).times_binomial(b.coeff, b.exp).times_binomial(1, 1).over_binomial(1, 2 * m + 3).eval(w);
  });
  return b_family_theta_part(b, w) + tail;
}

// Base q^2, A -> 0:
// sum (B;q^2)_n q^{2n} / ((-a q^2;q^2)_n (-b q^2;q^2)_n)
S four_param_lhs(const Params& p, Exponent w) {
  const Monomial& B = param(p, "B");
  Monomial naq2 = -param(p, "a") * q_pow(2);
  Monomial nbq2 = -param(p, "b") * q_pow(2);
  return sum(w, 0, [=](Index n) {
    return Product(1, 2 * n).times(P(B, 2, n)).over(P(naq2, 2, n)).over(P(nbq2, 2, n)).eval(w);
  });
}

S four_param_rhs(const Params& p, Exponent w) {
  const Monomial& B = param(p, "B");
  const Monomial& a = param(p, "a");
  const Monomial& b = param(p, "b");
  Monomial ainv = inverse(a);
  Monomial nBa = -B * ainv;
  Monomial ratio = b * q_pow(2) * ainv;

  S prefactor = Product(-ainv)
                    .times(P(B, 2, infinite))
                    .over(P(-b * q_pow(2), 2, infinite))
                    .over(P(-a * q_pow(2), 2, infinite))
                    .eval(w);
  S first = sum(w, 0, [=](Index m) {
    return Product(q_pow(m * (m - 1), alt(m)) * pow(ratio, m)).over(P(nBa, 2, m + 1)).eval(w);
  });
  S second = sum(w, 0, [=](Index m) {
    return Product(pow(-b, m))
        .times_binomial(b.coeff, b.exp)
        .times(P(-ainv, 2, m + 1))
        .over(P(nBa, 2, m + 1))
        .eval(w);
  });
  return prefactor * first + second;
}

// --- Lambert-type sums and their closed forms --------------------------------

S alternating_odd_lambert(const Params&, Exponent w) {
  return sum(w, 0, [w](Index n) { return Product(alt(n), 2 * n + 1).over_binomial(1, 2 * n + 1).eval(w); });
}

S alternating_odd_lambert_closed(const Params&, Exponent w) {
  return constant(Rational(1, 4), w) - Rational(1, 4) * theta_sq_ratio(w);
}

S alt_even_over_odd(const Params&, Exponent w) {
  return sum(w, 0, [w](Index n) { return Product(alt(n), 2 * n).over_binomial(1, 2 * n + 1).eval(w); });
}

S alt_over_even(const Params&, Exponent w) {
  return sum(w, 0, [w](Index n) { return Product(alt(n), n).over_binomial(1, 2 * n + 2).eval(w); });
}

S alt_over_even_closed(const Params&, Exponent w) {
  return Product(Rational(1, 4), -1).eval(w) -
         Product(Rational(1, 4), -1).times(P(1, 1, 1, infinite), 2).over(P(-1, 1, 1, infinite), 2).eval(w);
}

// sum over all integers n of (-q^2;q^2)_n / (-q^4;q^2)_n (-q)^n, split at n = 0.
S bilateral_psi_even_literal(const Params&, Exponent w) {
  S right = sum(w, 0, [w](Index n) { return Product(alt(n), n).times(P(-1, 2, 2, n)).over(P(-1, 4, 2, n)).eval(w); });
  // (x;q^2)_{-n} = 1/(x q^{-2n};q^2)_n
  S left = sum(w, 1, [w](Index n) {
    return Product(alt(n), -n).times(P(-1, 4 - 2 * n, 2, n)).over(P(-1, 2 - 2 * n, 2, n)).eval(w);
  });
  return right + left;
}

S bilateral_psi_even_split(const Params&, Exponent w) {
  S right = sum(w, 0, [w](Index n) { return Product(alt(n), n).times_binomial(1, 2).over_binomial(1, 2 * n + 2).eval(w); });
  S left = sum(w, 1, [w](Index n) {
    return Product(alt(n), n - 2).times_binomial(1, 2).over_binomial(1, 2 * n - 2).eval(w);
  });
  return right + left;
}

S bilateral_psi_even_reduced(const Params& p, Exponent w) {
  S right = Product(2, 0).times_binomial(1, 2).eval(w) * alt_over_even(p, w);
  return right - Product(Rational(1, 2), -1).times_binomial(1, 2).eval(w);
}

S bilateral_psi_even_product1(const Params&, Exponent w) {
  return Product()
      .times(P(1, 3, 2, infinite))
      .times(P(1, -1, 2, infinite))
      .times(P(1, 2, 2, infinite), 2)
      .over(P(-1, 1, 2, infinite), 2)
      .over(P(-1, 4, 2, infinite))
      .over(P(-1, 0, 2, infinite))
      .eval(w);
}

S bilateral_psi_even_product2(const Params&, Exponent w) {
  return Product(Rational(-1, 2), -1)
      .times_binomial(1, 2)
      .times(P(1, 1, 2, infinite), 2)
      .times(P(1, 2, 2, infinite), 2)
      .over(P(-1, 1, 2, infinite), 2)
      .over(P(-1, 2, 2, infinite), 2)
      .eval(w);
}

S bilateral_psi_even_product3(const Params&, Exponent w) {
  return Product(Rational(-1, 2), -1)
      .times_binomial(1, 2)
      .times(P(1, 1, 1, infinite), 2)
      .over(P(-1, 1, 1, infinite), 2)
      .eval(w);
}

// sum (z;q^2)_n (z^-1;q^2)_n q^{2n} / ((q^2;q^2)_n (-q;q)_{2n})
S z_family_lhs(const Params& p, Exponent w) {
  const Monomial& z = param(p, "z");
  Monomial zinv = inverse(z);
  return sum(w, 0, [=](Index n) {
    return Product(1, 2 * n)
        .times(P(z, 2, n))
        .times(P(zinv, 2, n))
        .over(P(1, 2, 2, n))
        .over(P(-1, 1, 1, 2 * n))
        .eval(w);
  });
}

S z_family_rhs(const Params& p, Exponent w) {
  const Monomial& z = param(p, "z");
  Monomial zinv = inverse(z);
  S head = Product()
               .times(P(zinv * q_pow(2), 2, infinite))
               .times(P(z * q_pow(2), 2, infinite))
               .over(P(1, 2, 2, infinite), 2)
               .eval(w);
  S tail = sum(w, 1, [=](Index n) {
    return Product(alt(n), tri3(n))
        .times_binomial(1, n)
        .times(P(zinv, 2, infinite))
        .times(P(z, 2, infinite))
        .over_binomial(-z.coeff, z.exp + 2 * n)
        .over_binomial(-zinv.coeff, zinv.exp + 2 * n)
        .over(P(1, 2, 2, infinite), 2)
        .eval(w);
  });
  return head + tail;
}

// sum_{m>=1} (-1)^{m-1} q^{m^2} / (-q;q^2)_m
S mock_odd_sum(const Params&, Exponent w) {
  return sum(w, 1, [w](Index m) { return Product(alt(m - 1), m * m).over(P(-1, 1, 2, m)).eval(w); });
}

S mock_odd_sum_phi3(const Params& p, Exponent w) {
  return Rational(1, 2) * phi3_neg_direct(p, w) - Rational(1, 2) * theta_euler_ratio(w);
}

S mock_odd_sum_f3(const Params& p, Exponent w) {
  return Rational(1, 4) * f3_def(p, w) - Rational(1, 4) * theta_euler_ratio(w);
}

// -(1/q^2) (q^2;q^2)_inf / ((-q^4;q^2)_inf (-q^3;q^2)_inf)
S q3q4_prefactor(Exponent w) {
  return Product(-1, -2).times(P(1, 2, 2, infinite)).over(P(-1, 4, 2, infinite)).over(P(-1, 3, 2, infinite)).eval(w);
}

S q3q4_sum_rhs(const Params& p, Exponent w) {
  S lambert = Product(1, -1).times_binomial(1, 1).times_binomial(1, 2).eval(w) * alt_even_over_odd(p, w);
  return q3q4_prefactor(w) * mock_odd_sum(p, w) + lambert;
}

S q3q4_sum_rhs_unreduced(const Params&, Exponent w) {
  S prefactor = Product(-1, -1).times(P(1, 2, 2, infinite)).over(P(-1, 4, 2, infinite)).over(P(-1, 3, 2, infinite)).eval(w);
  S first = sum(w, 0, [w](Index m) {
    return Product(alt(m), m * (m - 1) + 3 * m).over(P(-1, 1, 2, m + 1)).eval(w);
  });
  S second = sum(w, 0, [w](Index m) {
    return Product(alt(m), 2 * m).times_binomial(1, 2).times(P(-1, -1, 2, m + 1)).over(P(-1, 1, 2, m + 1)).eval(w);
  });
  return prefactor * first + second;
}

S No_plus_mock_split(const Params& p, Exponent w) {
  return euler_inv(w) * alternating_odd_lambert(p, w) - mock_odd_sum(p, w);
}

// sum_{m>=0} (-1)^m q^{m^2} / (-a q^2;q^2)_m
S mock_a_family_lhs(const Params& p, Exponent w) {
  Monomial naq2 = -param(p, "a") * q_pow(2);
  return sum(w, 0, [=](Index m) { return Product(alt(m), m * m).over(P(naq2, 2, m)).eval(w); });
}

S mock_a_family_rhs(const Params& p, Exponent w) {
  const Monomial& a = param(p, "a");
  Monomial naq = -a * q_pow(1);
  S series = sum(w, 1, [=](Index m) {
    return Product(alt(m - 1), m * m).times_binomial(a.coeff, a.exp).over(P(naq, 2, m)).eval(w);
  });
  S theta = Product().times(P(1, 1, 1, infinite)).over(P(-1, 1, 1, infinite)).over(P(naq, 1, infinite)).eval(w);
  return series + theta;
}

// sum_{m>=0} (-1)^m q^{m^2} / (-q^2;q^2)_{m+1}
S phi3_shifted_sum(const Params&, Exponent w) {
  return sum(w, 0, [w](Index m) { return Product(alt(m), m * m).over(P(-1, 2, 2, m + 1)).eval(w); });
}

S phi3_shifted_sum_split(const Params& p, Exponent w) {
  S shifted = sum(w, 0, [w](Index m) { return Product(alt(m), m * m + 2 * m + 2).over(P(-1, 2, 2, m + 1)).eval(w); });
  return phi3_neg_direct(p, w) - shifted;
}

S phi3_shifted_sum_reindexed(const Params& p, Exponent w) {
  S shifted = sum(w, 1, [w](Index m) { return Product(alt(m), m * m + 1).over(P(-1, 2, 2, m)).eval(w); });
  return shifted + phi3_neg_direct(p, w);
}

S phi3_shifted_closed(const Params& p, Exponent w) {
  return Product(1, 0).times_binomial(1, 1).eval(w) * phi3_neg_direct(p, w) - Product(1, 1).eval(w);
}

// sum over all integers n of (-1)^n q^{2n} (-q;q^2)_n / (-q^5;q^2)_n, split at n = 0.
S bilateral_psi_odd_literal(const Params&, Exponent w) {
  S right = sum(w, 0, [w](Index n) { return Product(alt(n), 2 * n).times(P(-1, 1, 2, n)).over(P(-1, 5, 2, n)).eval(w); });
  S left = sum(w, 1, [w](Index n) {
    return Product(alt(n), -2 * n).times(P(-1, 5 - 2 * n, 2, n)).over(P(-1, 1 - 2 * n, 2, n)).eval(w);
  });
  return right + left;
}

// sum_{n>=first} (-1)^n q^{2n} / ((1+q^{2n+1})(1+q^{2n+3}))
S odd_pair(Exponent w, Index first) {
  return sum(w, first, [w](Index n) {
    return Product(alt(n), 2 * n).over_binomial(1, 2 * n + 1).over_binomial(1, 2 * n + 3).eval(w);
  });
}

S bilateral_psi_odd_reduced(const Params&, Exponent w) {
  S right = Product(2, 0).times_binomial(1, 1).times_binomial(1, 3).eval(w) * odd_pair(w, 0);
  return right - Product(1, -1).times_binomial(1, 3).over_binomial(1, 1).eval(w);
}

S bilateral_psi_odd_product1(const Params&, Exponent w) {
  return Product()
      .times(P(1, 3, 2, infinite))
      .times(P(1, -1, 2, infinite))
      .times(P(1, 2, 2, infinite))
      .times(P(1, 4, 2, infinite))
      .over(P(-1, 2, 2, infinite), 2)
      .over(P(-1, 5, 2, infinite))
      .over(P(-1, 1, 2, infinite))
      .eval(w);
}

S bilateral_psi_odd_product2(const Params&, Exponent w) {
  return Product(-1, -1)
      .times_binomial(1, 1)
      .times_binomial(1, 3)
      .over_binomial(-1, 2)
      .times(P(1, 1, 2, infinite), 2)
      .times(P(1, 2, 2, infinite), 2)
      .over(P(-1, 2, 2, infinite), 2)
      .over(P(-1, 1, 2, infinite), 2)
      .eval(w);
}

S bilateral_psi_odd_product3(const Params&, Exponent w) {
  return Product(-1, -1)
      .times_binomial(1, 1)
      .times_binomial(1, 3)
      .over_binomial(-1, 2)
      .times(P(1, 1, 1, infinite), 2)
      .over(P(-1, 1, 1, infinite), 2)
      .eval(w);
}

S odd_pair_sum(const Params&, Exponent w) { return odd_pair(w, 1); }

S odd_pair_closed(const Params&, Exponent w) {
  S a = Product(Rational(1, 2), -1).over_binomial(1, 1).over_binomial(1, 1).eval(w);
  S b = Product(1, 0).over_binomial(1, 1).over_binomial(1, 3).eval(w);
  S c = Product(Rational(1, 2), -1)
            .over_binomial(-1, 2)
            .times(P(1, 1, 1, infinite), 2)
            .over(P(-1, 1, 1, infinite), 2)
            .eval(w);
  return a - b - c;
}

S odd_pair_via_bilateral(const Params& p, Exponent w) {
  S a = Product(Rational(1, 2), -1).over_binomial(1, 1).over_binomial(1, 1).eval(w);
  S b = Product(1, 0).over_binomial(1, 1).over_binomial(1, 3).eval(w);
  S c = Product(Rational(1, 2), 0).over_binomial(1, 1).over_binomial(1, 3).eval(w) * bilateral_psi_odd_literal(p, w);
  return a - b + c;
}

// --- odd smallest part -------------------------------------------------------

// q(1+q)/((q;q)_inf (1+q^3)) + q(1+q)(1-q^2)/(q;q)_inf * sum_{m>=1} (-1)^m q^{2m+1}/((1+q^{2m+1})(1+q^{2m+3}))
S Gprime_lambert_tail(Exponent w) {
  S head = Product(1, 1).times_binomial(1, 1).over_binomial(1, 3).over(P(1, 1, 1, infinite)).eval(w);
  S pref = Product(1, 2).times_binomial(1, 1).times_binomial(-1, 2).over(P(1, 1, 1, infinite)).eval(w);
  return head + pref * odd_pair(w, 1);
}

S q_over_euler(Exponent w) { return Product(1, 1).over(P(1, 1, 1, infinite)).eval(w); }

S Gprime_f1(const Params&, Exponent w) {
  return sum(w, 0, [w](Index n) {
    return Product(1, 2 * n + 1).over(P(1, 2 * n + 1, 1, infinite)).over(P(1, 2 * n + 2, 2, n)).eval(w);
  });
}

S Gprime_f2(const Params&, Exponent w) {
  return q_over_euler(w) * sum(w, 0, [w](Index n) {
           return Product(1, 2 * n).times(P(1, 1, 1, 2 * n)).over(P(1, n + 1, 1, n)).over(P(-1, n + 1, 1, n)).eval(w);
         });
}

S Gprime_f3(const Params&, Exponent w) {
  return q_over_euler(w) * sum(w, 0, [w](Index n) {
           return Product(1, 2 * n).times(P(1, 2, 2, n)).over(P(-1, 1, 1, 2 * n)).eval(w);
         });
}

S Gprime_f4(const Params&, Exponent w) { return q_over_euler(w) * b_family_lhs({{"b", q_pow(0)}}, w); }

S Gprime_f5(const Params&, Exponent w) { return q_over_euler(w) * b_family_continued({{"b", q_pow(0)}}, w); }

S Gprime_continued(const Params&, Exponent w) {
  S series = sum(w, 1, [w](Index m) { return Product(alt(m), m * m + 1).over(P(-1, 3, 2, m)).eval(w); });
  return series + Gprime_lambert_tail(w);
}

S Gprime_theta_expansion(const Params& p, Exponent w) {
  S theta = Product(1, 1).times(P(1, 1, 1, infinite)).over(P(-1, 1, 1, infinite)).over(P(-1, 2, 1, infinite)).eval(w);
  return theta - phi3_shifted_sum(p, w).shifted(1) + Gprime_lambert_tail(w);
}

S Gprime_phi3_expansion(const Params& p, Exponent w) {
  S q2 = Product(1, 2).eval(w);
  S phi = Product(1, 1).times_binomial(1, 1).eval(w) * phi3_neg_direct(p, w);
  S theta = Product(1, 1).times_binomial(1, 1).eval(w) * theta_euler_ratio(w);
  return q2 - phi + theta + Gprime_lambert_tail(w);
}

S thm61_rhs(const Params& p, Exponent w) {
  S q2 = Product(1, 2).eval(w);
  S phi = Product(1, 1).times_binomial(1, 1).eval(w) * phi3_neg_direct(p, w);
  S euler_part = Product(Rational(3, 2), 1).times_binomial(Rational(-1, 3), 1).over(P(1, 1, 1, infinite)).eval(w);
  S theta = Product(Rational(1, 2), 1)
                .times_binomial(1, 1)
                .times(P(1, 2, 2, infinite))
                .over(P(-1, 1, 1, infinite), 3)
                .eval(w);
  return q2 - phi + euler_part + theta;
}

// ---------------------------------------------------------------------------

std::vector<SeriesInfo> make_catalog() {
  std::vector<SeriesInfo> c = {
      {"f3_def", "third order mock theta function f3", {}, {{"definition", "sum_{n>=0} q^{n^2}/(-q;q)_n^2", f3_def}}},
      {"f3_newrep_rhs",
       "f3 through the positive-odd-rank generating function",
       {},
       {{"representation", "1/(q;q)_inf - 4 sum_{n>=1} q^{2n}/((q^{2n};q^2)_{n+1} (q^{2n+1};q)_inf)", f3_newrep_rhs}}},
      {"omega3_def",
       "third order mock theta function omega3",
       {},
       {{"definition", "sum_{n>=0} q^{2n(n+1)}/(q;q^2)_{n+1}^2", omega3_def}}},
      {"omega3_rep_rhs",
       "omega3 as a sum indexed by the smallest part",
       {},
       {{"representation", "sum_{n>=1} q^{n-1}/((1-q^n)(q^{n+1};q)_n (q^{2n+2};q^2)_inf)", omega3_rep_rhs}}},
      {"q_omega3", "q * omega3(q)", {}, {{"definition", "q omega3(q)", q_omega3}}},
      {"phi3_def", "third order mock theta function phi3", {}, {{"definition", "sum_{n>=0} q^{n^2}/(-q^2;q^2)_n", phi3_def}}},
      {"phi3_neg",
       "phi3(-q)",
       {},
       {{"direct", "sum_{n>=0} (-1)^n q^{n^2}/(-q^2;q^2)_n", phi3_neg_direct},
        {"substituted", "phi3_def with q -> -q", phi3_neg_substituted}}},
      {"phi3_neg_from_f3",
       "phi3(-q) through f3",
       {},
       {{"relation", "f3(q)/2 + (q;q)_inf/(2 (-q;q)_inf^2)", phi3_neg_from_f3}}},
      {"theta_phi_neg",
       "theta function phi(-q)",
       {},
       {{"sum", "sum_{n in Z} (-1)^n q^{n^2}", theta_phi_neg_sum},
        {"product", "(q;q)_inf/(-q;q)_inf", theta_phi_neg_product}}},
      {"euler_product",
       "(q;q)_inf",
       {},
       {{"product", "prod_{k>=1} (1-q^k)", euler_product_direct},
        {"pentagonal", "sum_{k in Z} (-1)^k q^{k(3k-1)/2}", euler_product_pentagonal}}},
      {"euler_inverse",
       "partition generating function 1/(q;q)_inf",
       {},
       {{"product", "prod_{k>=1} 1/(1-q^k)", euler_inverse_direct},
        {"pentagonal", "1/sum_{k in Z} (-1)^k q^{k(3k-1)/2}", euler_inverse_pentagonal}}},
      {"spt_lhs",
       "smallest parts generating function",
       {},
       {{"definition", "sum_{n>=1} q^n/((1-q^n)^2 (q^{n+1};q)_inf)", spt_lhs}}},
      {"spt_rhs",
       "smallest parts generating function, divisor and theta form",
       {},
       {{"closed", "1/(q;q)_inf [sum n q^n/(1-q^n) + sum (-1)^n (1+q^n) q^{n(3n+1)/2}/(1-q^n)^2]", spt_rhs}}},
      {"sptG_lhs",
       "smallest parts generating function over even-smallest-part two-color partitions",
       {},
       {{"definition", "sum_{n>=1} q^{2n}/((1-q^{2n})^2 (-q^{n+1};q)_n (q^{n+1};q)_inf)", sptG_lhs}}},
      {"sptG_rhs",
       "two-color smallest parts, divisor and theta form",
       {},
       {{"closed", "1/(q;q)_inf [sum n q^{2n}/(1-q^{2n}) + sum (-1)^n (1+q^n) q^{3n(n+1)/2}/(1-q^{2n})^2]", sptG_rhs}}},
      {"spt_derivative_lhs",
       "second z-derivative of the z-family sum at z = 1",
       {},
       {{"definition", "sum_{n>=1} (q^2;q^2)_{n-1}^2 q^{2n}/((q^2;q^2)_n (-q;q)_{2n})", spt_derivative_lhs},
        {"rewritten", "sum_{n>=1} (q;q)_n q^{2n}/((1-q^{2n})^2 (-q^{n+1};q)_n)", spt_derivative_lhs_rewritten}}},
      {"spt_derivative_rhs",
       "divisor plus theta sums with even denominators",
       {},
       {{"closed", "sum n q^{2n}/(1-q^{2n}) + sum (-1)^n (1+q^n) q^{3n(n+1)/2}/(1-q^{2n})^2", spt_derivative_rhs}}},
      {"G_series",
       "generating function of two-color partitions with even smallest part",
       {},
       {{"two-color", "sum_{n>=1} q^{2n}/((q^{2n+2};q^2)_n (q^{2n};q)_inf)", G_e4},
        {"split-even", "sum_{n>=1} q^{2n}/((1-q^{2n}) (q^{2n+2};q^2)_n (q^{2n+1};q)_inf)", G_e3},
        {"split-pm", "sum_{n>=1} q^{2n}/((1-q^{2n}) (-q^{n+1};q)_n (q^{n+1};q)_n (q^{2n+1};q)_inf)", G_e2}}},
      {"g1_lhs",
       "two-color sum with a split even denominator",
       {},
       {{"definition", "sum_{n>=1} q^{2n}/((1-q^{2n}) (-q^{n+1};q)_n (q^{n+1};q)_inf)", No_plus_t2}}},
      {"No_plus_series",
       "positive odd rank generating function",
       {},
       {{"even-pochhammer", "sum_{n>=1} q^{2n}/((q^{2n};q^2)_{n+1} (q^{2n+1};q)_inf)", No_plus_t1},
        {"split", "sum_{n>=1} q^{2n}/((1-q^{2n}) (-q^{n+1};q)_n (q^{n+1};q)_inf)", No_plus_t2},
        {"merged", "sum_{n>=1} q^{2n}/((-q^n;q)_{n+1} (q^n;q)_inf)", No_plus_t3},
        {"reindexed", "q^2 sum_{n>=0} q^{2n}/((-q^{n+1};q)_{n+2} (q^{n+1};q)_inf)", No_plus_t4},
        {"finite", "q^2/(q;q)_inf sum_{n>=0} (q;q)_n q^{2n}/(-q^{n+1};q)_{n+2}", No_plus_t5},
        {"symmetric", "q^2/(q;q)_inf sum_{n>=0} (q;q)_n (-q;q)_n q^{2n}/(-q;q)_{2n+2}", No_plus_t6},
        {"reduced", "q^2/((q;q)_inf (1+q)(1+q^2)) sum_{n>=0} (q^2;q^2)_n q^{2n}/((-q^3;q^2)_n (-q^4;q^2)_n)",
         No_plus_reduced}}},
      {"No_plus_reduced",
       "positive odd rank generating function, reduced hypergeometric form",
       {},
       {{"reduced", "q^2/((q;q)_inf (1+q)(1+q^2)) sum_{n>=0} (q^2;q^2)_n q^{2n}/((-q^3;q^2)_n (-q^4;q^2)_n)",
         No_plus_reduced}}},
      {"No_plus_from_f3", "positive odd rank generating function via f3", {}, {{"rank", "(1/(q;q)_inf - f3(q))/4", No_plus_from_f3}}},
      {"No_plus_mock_split",
       "positive odd rank generating function split into a mock theta sum and a Lambert sum",
       {},
       {{"split", "-sum_{m>=1} (-1)^{m-1} q^{m^2}/(-q;q^2)_m + 1/(q;q)_inf sum_{m>=0} (-1)^m q^{2m+1}/(1+q^{2m+1})",
         No_plus_mock_split}}},
      {"Ne_series_rhs",
       "even rank generating function",
       {},
       {{"two-color", "1/(q;q)_inf - 2 sum_{n>=1} q^{2n}/((1-q^{2n}) (-q^{n+1};q)_n (q^{n+1};q)_inf)", Ne_series_rhs}}},
      {"Ne_from_f3", "even rank generating function via f3", {}, {{"rank", "(1/(q;q)_inf + f3(q))/2", Ne_from_f3}}},
      {"fineJ_direct",
       "Fine's numbers",
       {},
       {{"definition", "sum_{n>=1} (-1)^n q^{n(3n+1)/2}/(1+q^n)", fineJ_direct}}},
      {"fineJ_rhs",
       "Fine's numbers, finite-product form",
       {},
       {{"two-color", "-sum_{n>=1} (q;q)_n q^{2n}/((1-q^{2n}) (-q^{n+1};q)_n)", fineJ_rhs}}},
      {"fineJ_from_f3", "Fine's numbers via f3", {}, {{"f3", "(f3(q) (q;q)_inf - 1)/4", fineJ_from_f3}}},
      {"Gprime_series",
       "generating function of two-color partitions with odd smallest part",
       {},
       {{"two-color", "sum_{n>=0} q^{2n+1}/((q^{2n+1};q)_inf (q^{2n+2};q^2)_n)", Gprime_f1},
        {"finite", "q/(q;q)_inf sum (q;q)_{2n} q^{2n}/((q^{n+1};q)_n (-q^{n+1};q)_n)", Gprime_f2},
        {"even", "q/(q;q)_inf sum (q^2;q^2)_n q^{2n}/(-q;q)_{2n}", Gprime_f3},
        {"split", "q/(q;q)_inf sum (q^2;q^2)_n q^{2n}/((-q;q^2)_n (-q^2;q^2)_n)", Gprime_f4},
        {"continued", "q/(q;q)_inf * b_family_continued(b=1)", Gprime_f5}}},
      {"Gprime_continued",
       "odd smallest part series after continuation in b",
       {},
       {{"closed",
         "q sum_{m>=1} (-1)^m q^{m^2}/(-q^3;q^2)_m + q(1+q)/((q;q)_inf (1+q^3)) + q(1+q)(1-q^2)/(q;q)_inf sum_{m>=1} "
         "(-1)^m q^{2m+1}/((1+q^{2m+1})(1+q^{2m+3}))",
         Gprime_continued}}},
      {"Gprime_theta_expansion",
       "odd smallest part series with the a = q^2 mock sum substituted",
       {},
       {{"closed",
         "q (q;q)_inf/((-q;q)_inf (-q^2;q)_inf) - q sum_{m>=0} (-1)^m q^{m^2}/(-q^2;q^2)_{m+1} + Lambert tail",
         Gprime_theta_expansion}}},
      {"Gprime_phi3_expansion",
       "odd smallest part series through phi3(-q)",
       {},
       {{"closed", "q^2 - q(1+q) phi3(-q) + q(1+q)(q;q)_inf/(-q;q)_inf^2 + Lambert tail", Gprime_phi3_expansion}}},
      {"thm61_rhs",
       "odd smallest part series in closed form",
       {},
       {{"closed", "q^2 - q(1+q) phi3(-q) + q(3-q)/(2 (q;q)_inf) + q(1+q)(q^2;q^2)_inf/(2 (-q;q)_inf^3)", thm61_rhs}}},
      {"b_family_lhs",
       "one-parameter family in b",
       {"b"},
       {{"definition", "sum_{n>=0} (q^2;q^2)_n q^{2n}/((-q;q^2)_n (-b q^2;q^2)_n)", b_family_lhs}}},
      {"b_family_continued",
       "one-parameter family, continued in b",
       {"b"},
       {{"closed",
         "(1+q)/(1+q^3) - q(q^2;q^2)_inf/((-q;q^2)_inf (-bq^2;q^2)_inf) sum_{m>=0} (-1)^m b^m q^{m^2+2m}/(-q^3;q^2)_{m+1} + "
         "(1+q)(1-q^2) sum_{m>=1} (-b)^m q^{2m+1}/((1+q^{2m+1})(1+q^{2m+3}))",
         b_family_continued}}},
      {"b_family_direct",
       "one-parameter family before continuation in b",
       {"b"},
       {{"closed",
         "-q(q^2;q^2)_inf/((-q;q^2)_inf (-bq^2;q^2)_inf) sum_{m>=0} (-1)^m b^m q^{m^2+2m}/(-q^3;q^2)_{m+1} + (1+b)(1+q) "
         "sum_{m>=0} (-b)^m/(1+q^{2m+3})",
         b_family_direct}}},
      {"four_param_lhs",
       "four-parameter sum at A -> 0, base q^2",
       {"B", "a", "b"},
       {{"definition", "sum_{n>=0} (B;q^2)_n q^{2n}/((-a q^2;q^2)_n (-b q^2;q^2)_n)", four_param_lhs}}},
      {"four_param_rhs",
       "four-parameter transformation at A -> 0, base q^2",
       {"B", "a", "b"},
       {{"transformed",
         "-(B;q^2)_inf/(a (-bq^2;q^2)_inf (-aq^2;q^2)_inf) sum_m (-1)^m q^{m(m-1)} (bq^2/a)^m/(-B/a;q^2)_{m+1} + (1+b) "
         "sum_m (-1/a;q^2)_{m+1} (-b)^m/(-B/a;q^2)_{m+1}",
         four_param_rhs}}},
      {"alternating_odd_lambert",
       "alternating Lambert series over odd exponents",
       {},
       {{"definition", "sum_{n>=0} (-1)^n q^{2n+1}/(1+q^{2n+1})", alternating_odd_lambert}}},
      {"alternating_odd_lambert_closed",
       "closed form of the alternating odd Lambert series",
       {},
       {{"closed", "1/4 - (q;q)_inf^2/(4 (-q;q)_inf^2)", alternating_odd_lambert_closed}}},
      {"alt_even_over_odd",
       "alternating sum with even numerators and odd denominators",
       {},
       {{"definition", "sum_{n>=0} (-1)^n q^{2n}/(1+q^{2n+1})", alt_even_over_odd}}},
      {"alt_over_even",
       "alternating sum with even denominators",
       {},
       {{"definition", "sum_{n>=0} (-1)^n q^n/(1+q^{2n+2})", alt_over_even}}},
      {"alt_over_even_closed",
       "closed form of the alternating sum with even denominators",
       {},
       {{"closed", "1/(4q) - (q;q)_inf^2/(4q (-q;q)_inf^2)", alt_over_even_closed}}},
      {"bilateral_psi_even",
       "bilateral sum of (-q^2;q^2)_n/(-q^4;q^2)_n (-q)^n, split at n = 0",
       {},
       {{"literal", "sum_{n>=0} (-q^2;q^2)_n/(-q^4;q^2)_n (-q)^n + sum_{n>=1} (-q^{4-2n};q^2)_n/(-q^{2-2n};q^2)_n (-q)^{-n}",
         bilateral_psi_even_literal},
        {"split", "(1+q^2) sum_{n>=0} (-1)^n q^n/(1+q^{2n+2}) + (1+q^2)/q^2 sum_{n>=1} (-1)^n q^n/(1+q^{2n-2})",
         bilateral_psi_even_split},
        {"reduced", "2(1+q^2) sum_{n>=0} (-1)^n q^n/(1+q^{2n+2}) - (1+q^2)/(2q)", bilateral_psi_even_reduced}}},
      {"bilateral_psi_even_product",
       "product evaluation of the even bilateral sum",
       {},
       {{"summed", "(q^3;q^2)(q^-1;q^2)(q^2;q^2)^2/((-q;q^2)^2 (-q^4;q^2)(-1;q^2))", bilateral_psi_even_product1},
        {"odd-even", "-(1+q^2)/(2q) (q;q^2)^2 (q^2;q^2)^2/((-q;q^2)^2 (-q^2;q^2)^2)", bilateral_psi_even_product2},
        {"theta", "-(1+q^2)/(2q) (q;q)_inf^2/(-q;q)_inf^2", bilateral_psi_even_product3}}},
      {"z_family_lhs",
       "one-parameter family in z",
       {"z"},
       {{"definition", "sum_{n>=0} (z;q^2)_n (z^-1;q^2)_n q^{2n}/((q^2;q^2)_n (-q;q)_{2n})", z_family_lhs}}},
      {"z_family_rhs",
       "theta-type expansion of the z family",
       {"z"},
       {{"closed",
         "1/(q^2;q^2)_inf^2 [(q^2/z;q^2)(zq^2;q^2) + sum_{n>=1} (-1)^n (1+q^n) (1/z;q^2)(z;q^2) q^{3n(n+1)/2}/((1-zq^{2n})(1-q^{2n}/z))]",
         z_family_rhs}}},
      {"q3q4_sum",
       "sum with (-q^3;q^2) and (-q^4;q^2) denominators",
       {},
       {{"definition", "sum_{n>=0} (q^2;q^2)_n q^{2n}/((-q^3;q^2)_n (-q^4;q^2)_n)", q3q4_sum}}},
      {"q3q4_sum_rhs",
       "transformed sum with (-q^3;q^2) and (-q^4;q^2) denominators",
       {},
       {{"reduced",
         "-(q^2;q^2)_inf/(q^2 (-q^4;q^2)_inf (-q^3;q^2)_inf) sum_{m>=1} (-1)^{m-1} q^{m^2}/(-q;q^2)_m + (1+q)(1+q^2)/q sum_{m>=0} "
         "(-1)^m q^{2m}/(1+q^{2m+1})",
         q3q4_sum_rhs},
        {"unreduced",
         "-(q^2;q^2)_inf/(q (-q^4;q^2)_inf (-q^3;q^2)_inf) sum_{m>=0} (-1)^m q^{m(m-1)+3m}/(-q;q^2)_{m+1} + (1+q^2) sum_{m>=0} "
         "(-q^-1;q^2)_{m+1} (-q^2)^m/(-q;q^2)_{m+1}",
         q3q4_sum_rhs_unreduced}}},
      {"mock_odd_sum",
       "alternating mock theta sum over (-q;q^2)_m",
       {},
       {{"definition", "sum_{m>=1} (-1)^{m-1} q^{m^2}/(-q;q^2)_m", mock_odd_sum}}},
      {"mock_odd_sum_phi3",
       "mock odd sum through phi3(-q)",
       {},
       {{"closed", "phi3(-q)/2 - (q;q)_inf/(2 (-q;q)_inf^2)", mock_odd_sum_phi3}}},
      {"mock_odd_sum_f3",
       "mock odd sum through f3",
       {},
       {{"closed", "f3(q)/4 - (q;q)_inf/(4 (-q;q)_inf^2)", mock_odd_sum_f3}}},
      {"mock_a_family_lhs",
       "one-parameter mock theta family in a",
       {"a"},
       {{"definition", "sum_{m>=0} (-1)^m q^{m^2}/(-a q^2;q^2)_m", mock_a_family_lhs}}},
      {"mock_a_family_rhs",
       "transformed one-parameter mock theta family in a",
       {"a"},
       {{"closed", "(1+a) sum_{m>=1} (-1)^{m-1} q^{m^2}/(-a q;q^2)_m + phi(-q)/(-a q;q)_inf", mock_a_family_rhs}}},
      {"phi3_shifted_sum",
       "phi3(-q)-type sum with shifted denominator",
       {},
       {{"definition", "sum_{m>=0} (-1)^m q^{m^2}/(-q^2;q^2)_{m+1}", phi3_shifted_sum},
        {"split", "phi3(-q) - sum_{m>=0} (-1)^m q^{m^2+2m+2}/(-q^2;q^2)_{m+1}", phi3_shifted_sum_split},
        {"reindexed", "q sum_{m>=1} (-1)^m q^{m^2}/(-q^2;q^2)_m + phi3(-q)", phi3_shifted_sum_reindexed}}},
      {"phi3_shifted_closed", "closed form of the shifted phi3 sum", {}, {{"closed", "-q + (1+q) phi3(-q)", phi3_shifted_closed}}},
      {"bilateral_psi_odd",
       "bilateral sum of (-1)^n q^{2n} (-q;q^2)_n/(-q^5;q^2)_n, split at n = 0",
       {},
       {{"literal",
         "sum_{n>=0} (-1)^n q^{2n} (-q;q^2)_n/(-q^5;q^2)_n + sum_{n>=1} (-1)^n q^{-2n} (-q^{5-2n};q^2)_n/(-q^{1-2n};q^2)_n",
         bilateral_psi_odd_literal},
        {"reduced", "2(1+q)(1+q^3) sum_{n>=0} (-1)^n q^{2n}/((1+q^{2n+1})(1+q^{2n+3})) - (1+q^3)/(q(1+q))",
         bilateral_psi_odd_reduced}}},
      {"bilateral_psi_odd_product",
       "product evaluation of the odd bilateral sum",
       {},
       {{"summed", "(q^3;q^2)(q^-1;q^2)(q^2;q^2)(q^4;q^2)/((-q^2;q^2)^2 (-q^5;q^2)(-q;q^2))", bilateral_psi_odd_product1},
        {"odd-even", "-(1+q)(1+q^3)/(q(1-q^2)) (q;q^2)^2 (q^2;q^2)^2/((-q^2;q^2)^2 (-q;q^2)^2)", bilateral_psi_odd_product2},
        {"theta", "-(1+q)(1+q^3)/(q(1-q^2)) (q;q)_inf^2/(-q;q)_inf^2", bilateral_psi_odd_product3}}},
      {"odd_pair_sum",
       "alternating sum over consecutive odd denominators",
       {},
       {{"definition", "sum_{n>=1} (-1)^n q^{2n}/((1+q^{2n+1})(1+q^{2n+3}))", odd_pair_sum}}},
      {"odd_pair_closed",
       "closed form of the odd pair sum",
       {},
       {{"closed", "1/(2q(1+q)^2) - 1/((1+q)(1+q^3)) - (q;q)_inf^2/(2q(1-q^2) (-q;q)_inf^2)", odd_pair_closed},
        {"bilateral", "1/(2q(1+q)^2) - 1/((1+q)(1+q^3)) + bilateral_psi_odd/(2(1+q)(1+q^3))", odd_pair_via_bilateral}}},
  };
  std::sort(c.begin(), c.end(), [](const SeriesInfo& a, const SeriesInfo& b) { return a.name < b.name; });
  return c;
}

}  // namespace

const std::vector<SeriesInfo>& catalog() {
  static const std::vector<SeriesInfo> entries = make_catalog();
  return entries;
}

const SeriesInfo& lookup(const std::string& name) {
  const auto& c = catalog();
  auto it = std::lower_bound(c.begin(), c.end(), name, [](const SeriesInfo& s, const std::string& n) { return s.name < n; });
  if (it == c.end() || it->name != name) throw UnknownName("unknown series '" + name + "'");
  return *it;
}

namespace {

void check_params(const SeriesInfo& info, const Params& params) {
  for (const auto& key : info.params)
    if (!params.count(key)) throw MissingParameter("series '" + info.name + "' requires parameter '" + key + "'");
  for (const auto& [key, value] : params) {
    if (std::find(info.params.begin(), info.params.end(), key) == info.params.end())
      throw InvalidParameter("series '" + info.name + "' takes no parameter '" + key + "'");
  }
}

}  // namespace

LaurentSeries evaluate_to(const RawBuilder& raw, const Params& params, Exponent order) {
  if (order < 1) throw InvalidParameter("order must be at least 1");
  Exponent working = order;
  for (int attempt = 0; attempt < 16; ++attempt) {
    LaurentSeries s = raw(params, working);
    if (s.order() >= order) return s.truncated(order);
    working += (order - s.order()) + attempt;
  }
  throw Error("series window did not reach order " + std::to_string(order));
}

LaurentSeries build(const SeriesName& name, Exponent order, std::size_t form) {
  const SeriesInfo& info = lookup(name.identifier);
  check_params(info, name.params);
  if (form >= info.forms.size())
    throw InvalidParameter("series '" + info.name + "' has " + std::to_string(info.forms.size()) + " form(s)");
  return evaluate_to(info.forms[form].raw, name.params, order);
}

LaurentSeries build(const std::string& name, Exponent order) { return build(SeriesName{name, {}}, order); }

std::vector<Builder> builder_forms(const SeriesName& name) {
  const SeriesInfo& info = lookup(name.identifier);
  check_params(info, name.params);
  std::vector<Builder> out;
  for (const auto& form : info.forms) {
    RawBuilder raw = form.raw;
    Params params = name.params;
    out.push_back([raw, params](Exponent order) { return evaluate_to(raw, params, order); });
  }
  return out;
}

Params parse_params(const std::string& text) {
  Params out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(start, end - start);
    if (!item.empty()) {
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw InvalidParameter("expected name=monomial, got '" + item + "'");
      out[item.substr(0, eq)] = parse_monomial(item.substr(eq + 1));
    }
    start = end + 1;
  }
  return out;
}

std::string format_params(const Params& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ",";
    out += key + "=" + to_string(value);
  }
  return out;
}

}  // namespace qlab::qfunctions
