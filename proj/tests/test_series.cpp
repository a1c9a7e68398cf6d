#include <map>

#include "doctest.h"
#include "qlab/series.hpp"
#include "support.hpp"

using namespace qlab;
using qlab::testing::SeriesGenerator;
using qlab::testing::same;

namespace {

LaurentSeries poly(Exponent min_exp, std::initializer_list<long> c) { return LaurentSeries::from_coefficients(min_exp, c); }

// Exact polynomial with its window extended to `order`.
LaurentSeries padded(Exponent min_exp, std::initializer_list<long> c, Exponent order) {
  std::vector<Rational> v(c.begin(), c.end());
  v.resize(static_cast<std::size_t>(order - min_exp));
  return LaurentSeries::from_coefficients(min_exp, std::move(v));
}

}  // namespace

TEST_CASE("monomials and windows") {
  auto m = LaurentSeries::monomial(3, 2, 5);
  CHECK(m.min_exp() == 2);
  CHECK(m.order() == 5);
  CHECK(m.coefficient(2) == 3);
  CHECK(m.coefficient(-4) == 0);
  CHECK(m.coefficient(4) == 0);
  CHECK_THROWS_AS(m.coefficient(5), OutOfWindow);
  CHECK_THROWS_AS(LaurentSeries::monomial(1, 5, 5), InvalidWindow);

  auto z = LaurentSeries::zero(7);
  CHECK(z.is_zero());
  CHECK(z.order() == 7);
  CHECK(z.coefficient(6) == 0);

  auto p = poly(-1, {0, 0, 2, 1});
  CHECK(p.min_exp() == 1);
  CHECK(p.order() == 3);
  CHECK(p.to_string() == "2*q + q^2 + O(q^3)");
}

TEST_CASE("truncation and shifts") {
  auto p = poly(0, {1, 2, 3, 4});
  CHECK(p.truncated(2) == poly(0, {1, 2}));
  CHECK(p.truncated(0).is_zero());
  CHECK_THROWS_AS(p.truncated(5), OutOfWindow);
  auto s = p.shifted(-3);
  CHECK(s.min_exp() == -3);
  CHECK(s.order() == 1);
  CHECK(s.coefficient(0) == 4);
}

TEST_CASE("window rules for sums and products") {
  auto a = poly(-2, {1, 1, 1, 1, 1});  // [-2, 3)
  auto b = poly(1, {1, 1, 1, 1, 1, 1, 1});  // [1, 8)
  auto sum = a + b;
  CHECK(sum.min_exp() == -2);
  CHECK(sum.order() == 3);
  auto prod = a * b;
  CHECK(prod.min_exp() == -1);
  CHECK(prod.order() == std::min<Exponent>(3 + 1, 8 - 2));
  auto inv = invert(poly(-2, {2, 1, 0, 0, 0}));
  CHECK(inv.min_exp() == 2);
  CHECK(inv.order() == 3 + 4);
}

TEST_CASE("finite q-Pochhammer matches brute-force expansion") {
  // (q;q)_3 = (1-q)(1-q^2)(1-q^3)
  std::vector<std::int64_t> acc = {1};
  for (int k = 1; k <= 3; ++k) {
    std::vector<std::int64_t> f(k + 1, 0);
    f[0] = 1;
    f[k] = -1;
    acc = qlab::testing::poly_mul(acc, f, 7);
  }
  auto s = pochhammer(PochhammerSpec::make(1, 1, 1, 3), 7);
  for (int e = 0; e < 7; ++e) CHECK(s.coefficient(e) == acc[e]);
  CHECK(acc == std::vector<std::int64_t>{1, -1, -1, 0, 1, 1, -1});
}

TEST_CASE("distinct-part product counts partitions into distinct parts") {
  auto s = pochhammer(PochhammerSpec::make(-1, 1, 1, infinite), 5);
  CHECK(s == poly(0, {1, 1, 1, 2, 2}));

  auto big = pochhammer(PochhammerSpec::make(-1, 1, 1, infinite), 30);
  for (int n = 0; n < 30; ++n) {
    // subsets of {1..n} with sum n
    std::vector<std::int64_t> ways(n + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
      for (int t = n; t >= part; --t) ways[t] += ways[t - part];
    CHECK(big.coefficient(n) == ways[n]);
  }
}

TEST_CASE("divisor Lambert series") {
  auto s = sum_terms([](std::int64_t n) { return Product(1, n).over_binomial(-1, n).eval(5); }, 5, default_term_cap, 1);
  CHECK(s == poly(1, {1, 2, 2, 3}));
}

TEST_CASE("q-Pochhammer recursion") {
  SeriesGenerator gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> off(-3, 4), step(1, 3), len(0, 6);
    Monomial base{gen.rational(), off(gen.engine())};
    if (base.is_zero()) base.coeff = 1;
    Exponent st = step(gen.engine());
    int n = len(gen.engine());
    const Exponent order = 25;
    auto lhs = Product().times(qp(base, st, n + 1)).eval(order);
    auto rhs = Product().times(qp(base, st, n)).eval(order);
    Monomial last = base * q_pow(st * n);
    rhs.mul_binomial(-last.coeff, last.exp);
    CHECK(same(lhs, rhs));
  }
}

TEST_CASE("ring axioms on random series") {
  SeriesGenerator gen(20241014);
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = gen.series(), b = gen.series(), c = gen.series();
    CHECK(same(a + b, b + a));
    CHECK(same((a + b) + c, a + (b + c)));
    CHECK(same(a * b, b * a));
    CHECK(same((a * b) * c, a * (b * c)));
    CHECK(same(a * (b + c), a * b + a * c));
    CHECK(same(a - a, LaurentSeries::zero(a.order())));
    auto one = LaurentSeries::monomial(1, 0, 40);
    CHECK(same(a * one, a));
  }
}

TEST_CASE("inversion on random units") {
  SeriesGenerator gen(99);
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = gen.unit();
    auto inv = invert(a);
    auto prod = a * inv;
    CHECK(prod.min_exp() == 0);
    CHECK(same(prod, LaurentSeries::monomial(1, 0, prod.order())));
    CHECK(same(invert(inv), a));
  }
  CHECK_THROWS_AS(invert(LaurentSeries::zero(4)), NotInvertible);
}

TEST_CASE("exact binomial multiplication and division") {
  SeriesGenerator gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = gen.series(-2, 2, 12);
    Rational c = gen.rational();
    if (c == 0 || c == -1) c = 2;
    std::uniform_int_distribution<int> kd(-3, 4);
    Exponent k = kd(gen.engine());
    auto b = a;
    b.mul_binomial(c, k);
    if (k >= 0) {
      auto factor = LaurentSeries::monomial(1, 0, 60) + LaurentSeries::monomial(c, k, 60);
      CHECK(same(b, a * factor));
    }
    b.div_binomial(c, k);
    CHECK(same(b, a));
  }
  auto one = LaurentSeries::monomial(1, 0, 5);
  CHECK_THROWS_AS(one.div_binomial(-1, 0), NotInvertible);
  CHECK(one.mul_binomial(-1, 0).is_zero());
}

TEST_CASE("substitution homomorphisms") {
  SeriesGenerator gen(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = gen.series(), b = gen.series();
    for (Exponent k : {2, 3}) {
      CHECK(same(substitute_power(a * b, k), substitute_power(a, k) * substitute_power(b, k)));
      CHECK(same(substitute_power(a + b, k), substitute_power(a, k) + substitute_power(b, k)));
    }
    CHECK(same(negate_variable(a * b), negate_variable(a) * negate_variable(b)));
    CHECK(negate_variable(negate_variable(a)) == a);
  }
  CHECK_THROWS_AS(substitute_power(poly(0, {1}), 0), InvalidParameter);
}

TEST_CASE("pentagonal number theorem to order 500") {
  auto direct = pochhammer(PochhammerSpec::make(1, 1, 1, infinite), 500);
  auto pent = sum_terms(
      [](std::int64_t k) {
        Rational sign = k % 2 == 0 ? 1 : -1;
        if (k == 0) return LaurentSeries::monomial(1, 0, 500);
        return Product(sign, k * (3 * k - 1) / 2).eval(500) + Product(sign, k * (3 * k + 1) / 2).eval(500);
      },
      500);
  CHECK(equal_up_to(direct, pent, 500).equal);
}

TEST_CASE("products fold Laurent factors into the prefactor") {
  // (1 + q^-2)(1 + q)/(1 - q^-1) = -q^-1 (1 + q^2)(1 + q)/(1 - q)
  auto s = Product().times_binomial(1, -2).times_binomial(1, 1).over_binomial(-1, -1).eval(6);
  CHECK(s.min_exp() == -1);
  CHECK(s.order() == 6);
  auto expected = padded(-1, {-1, 0, -1}, 6) * padded(0, {1, 1}, 7) * Product().over_binomial(-1, 1).eval(7);
  CHECK(equal_up_to(s, expected, 6).equal);

  CHECK_THROWS_AS(Product().over_binomial(-1, 0).eval(4), NotInvertible);
  CHECK(Product().times(PochhammerSpec::make(1, 0, 1, 3)).eval(4).is_zero());
  CHECK_THROWS_AS(Product().over(PochhammerSpec::make(1, -2, 1, 4)).eval(4), NotInvertible);
}

TEST_CASE("evaluation is sound across orders") {
  auto p = [](Exponent w) {
    return Product(1, -3).times(PochhammerSpec::make(1, -1, 2, infinite)).over(PochhammerSpec::make(-1, 1, 1, infinite), 2).eval(w);
  };
  auto small = p(30), large = p(80);
  CHECK(small.order() == 30);
  CHECK(equal_up_to(small, large, 30).equal);
}

TEST_CASE("sum_terms stops at the window and detects stalls") {
  auto geometric = sum_terms([](std::int64_t n) { return Product(1, n).eval(10); }, 10);
  CHECK(geometric == poly(0, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(sum_terms([](std::int64_t) { return LaurentSeries::monomial(1, 0, 10); }, 10, 50), TruncationStall);
}

TEST_CASE("monomial parsing and printing") {
  std::map<std::string, Monomial> cases = {
      {"0", {0, 0}},          {"1", {1, 0}},     {"-1/2", {Rational(-1, 2), 0}}, {"q", {1, 1}},
      {"-q^3", {-1, 3}},      {"q^-1", {1, -1}}, {"3/4*q^2", {Rational(3, 4), 2}}, {"2q", {2, 1}},
  };
  for (const auto& [text, m] : cases) {
    CAPTURE(text);
    CHECK(parse_monomial(text) == m);
    CHECK(parse_monomial(to_string(m)) == m);
  }
  CHECK(to_string(parse_monomial("q^1")) == "q");
  CHECK(to_string(Monomial{Rational(1, 2), 3}) == "1/2*q^3");
  for (const char* bad : {"", "x", "q^", "1/0", "q^a", "1//2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_monomial(bad), InvalidParameter);
  }
  CHECK_THROWS_AS(inverse(Monomial{0, 0}), NotInvertible);
  CHECK(pow(Monomial{0, 0}, 0) == Monomial{1, 0});
  CHECK(pow(Monomial{-2, 1}, 3) == Monomial{-8, 3});
}

TEST_CASE("comparison reports the first mismatch") {
  auto a = poly(0, {1, 2, 3, 4});
  auto b = poly(0, {1, 2, 5, 4});
  auto c = equal_up_to(a, b, 4);
  CHECK_FALSE(c.equal);
  REQUIRE(c.first_mismatch);
  CHECK(c.first_mismatch->exponent == 2);
  CHECK(c.first_mismatch->lhs == 3);
  CHECK(c.first_mismatch->rhs == 5);
  CHECK(equal_up_to(a, b, 2).equal);
  CHECK_THROWS_AS(equal_up_to(a, b, 5), OutOfWindow);
}
