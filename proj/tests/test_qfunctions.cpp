#include "doctest.h"
#include "qlab/partitions.hpp"
#include "qlab/qfunctions.hpp"
#include "support.hpp"

using namespace qlab;
using namespace qlab::qfunctions;

namespace {

LaurentSeries poly(Exponent min_exp, std::initializer_list<long> c) { return LaurentSeries::from_coefficients(min_exp, c); }

Rational rank_parity(int n) {
  auto s = partitions::rank_stats(n);
  return Rational(static_cast<long>(s.even)) - Rational(static_cast<long>(s.odd));
}

}  // namespace

TEST_CASE("partition generating function") {
  auto s = build("euler_inverse", 6);
  CHECK(s == poly(0, {1, 1, 2, 3, 5, 7}));
  auto big = build("euler_inverse", 41);
  for (int n = 1; n <= 40; ++n) CHECK(big.coefficient(n) == qlab::testing::partition_count(n, n));
}

TEST_CASE("f3 against rank parity") {
  CHECK(build("f3_def", 4) == poly(0, {1, 1, -2, 3}));
  auto f3 = build("f3_def", 31);
  for (int n = 1; n <= 30; ++n) CHECK(f3.coefficient(n) == rank_parity(n));
}

TEST_CASE("theta function phi(-q)") {
  CHECK(build("theta_phi_neg", 5) == poly(0, {1, -2, 0, 0, 2}));
  auto forms = builder_forms({"theta_phi_neg", {}});
  REQUIRE(forms.size() == 2);
  CHECK(forms[0](60) == forms[1](60));
}

TEST_CASE("G(8)") { CHECK(build("G_series", 9).coefficient(8) == 7); }

TEST_CASE("form counts") {
  CHECK(builder_forms({"G_series", {}}).size() == 3);
  CHECK(builder_forms({"theta_phi_neg", {}}).size() == 2);
  CHECK(builder_forms({"euler_product", {}}).size() == 2);
  CHECK(builder_forms({"f3_def", {}}).size() == 1);
  CHECK(builder_forms({"No_plus_series", {}}).size() == 7);
}

TEST_CASE("every multi-form series agrees across its forms") {
  for (const auto& info : catalog()) {
    if (!info.params.empty() || info.forms.size() < 2) continue;
    CAPTURE(info.name);
    auto forms = builder_forms({info.name, {}});
    auto base = forms[0](100);
    for (std::size_t f = 1; f < forms.size(); ++f) {
      CAPTURE(info.forms[f].label);
      CHECK(equal_up_to(base, forms[f](100), 100).equal);
    }
  }
}

TEST_CASE("every series evaluates with exact window") {
  for (const auto& info : catalog()) {
    if (!info.params.empty()) continue;
    CAPTURE(info.name);
    for (Exponent order : {1, 7, 33}) {
      auto s = build(SeriesName{info.name, {}}, order);
      CHECK(s.order() == order);
      CHECK(equal_up_to(s, build(SeriesName{info.name, {}}, order + 11), order).equal);
    }
  }
}

TEST_CASE("catalog is sorted and names resolve") {
  const auto& c = catalog();
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1].name < c[i].name);
  for (const auto& info : c) {
    CHECK(&lookup(info.name) == &info);
    CHECK_FALSE(info.forms.empty());
    CHECK_FALSE(info.description.empty());
  }
}

TEST_CASE("name and parameter errors") {
  CHECK_THROWS_AS(build("no_such_series", 5), UnknownName);
  CHECK_THROWS_AS(build(SeriesName{"b_family_lhs", {}}, 5), MissingParameter);
  CHECK_THROWS_AS(build(SeriesName{"f3_def", {{"b", q_pow(1)}}}, 5), InvalidParameter);
  CHECK_THROWS_AS(build(SeriesName{"f3_def", {}}, 5, 1), InvalidParameter);
  CHECK_THROWS_AS(build("f3_def", 0), InvalidParameter);
}

TEST_CASE("parameter strings") {
  auto p = parse_params("z=q^3,b=-1/2*q");
  REQUIRE(p.size() == 2);
  CHECK(p.at("z") == q_pow(3));
  CHECK(p.at("b") == Monomial{Rational(-1, 2), 1});
  CHECK(format_params(p) == "b=-1/2*q,z=q^3");
  CHECK(parse_params("").empty());
  CHECK_THROWS_AS(parse_params("b"), InvalidParameter);
  CHECK_THROWS_AS(parse_params("=q"), InvalidParameter);
  CHECK_THROWS_AS(parse_params("b=w"), InvalidParameter);
}

TEST_CASE("the direct b-family diverges at b = 1") {
  CHECK_THROWS_AS(build(SeriesName{"b_family_direct", parse_params("b=1")}, 20), TruncationStall);
  CHECK_NOTHROW(build(SeriesName{"b_family_continued", parse_params("b=1")}, 20));
}

TEST_CASE("the continued b-family matches the definition at b = 1") {
  auto b1 = parse_params("b=1");
  CHECK(equal_up_to(build(SeriesName{"b_family_lhs", b1}, 60), build(SeriesName{"b_family_continued", b1}, 60), 60).equal);
}

TEST_CASE("q omega3 counts partitions whose odd parts are below twice the smallest") {
  auto s = build("q_omega3", 31);
  for (int n = 1; n <= 30; ++n) CHECK(s.coefficient(n) == Rational(static_cast<long>(partitions::count_omega_interpretation(n))));
}

TEST_CASE("nearby variants of closed forms do not match") {
  // Rational term of the odd pair closed form with a q in the numerator.
  auto variant = [](const Params&, Exponent w) {
    auto a = Product(Rational(1, 2), -1).over_binomial(1, 1).over_binomial(1, 1).eval(w);
    auto b = Product(1, 1).over_binomial(1, 1).over_binomial(1, 3).eval(w);
    auto c = Product(Rational(1, 2), -1)
                 .over_binomial(-1, 2)
                 .times(PochhammerSpec::make(1, 1, 1, infinite), 2)
                 .over(PochhammerSpec::make(-1, 1, 1, infinite), 2)
                 .eval(w);
    return a - b - c;
  };
  auto sum = build("odd_pair_sum", 30);
  CHECK_FALSE(equal_up_to(sum, evaluate_to(variant, {}, 30), 30).equal);
  CHECK(equal_up_to(sum, build("odd_pair_closed", 30), 30).equal);

  // spt theta sum with exponent 3n(n+1)/2 in place of n(3n+1)/2.
  auto spt_variant = [](const Params&, Exponent w) {
    auto divisor = sum_terms([w](std::int64_t n) { return Product(n, n).over_binomial(-1, n).eval(w); }, w, default_term_cap, 1);
    auto theta = sum_terms(
        [w](std::int64_t n) {
          Rational sign = n % 2 == 0 ? 1 : -1;
          return Product(sign, 3 * n * (n + 1) / 2).times_binomial(1, n).over_binomial(-1, n).over_binomial(-1, n).eval(w);
        },
        w, default_term_cap, 1);
    return build("euler_inverse", w) * (divisor + theta);
  };
  CHECK_FALSE(equal_up_to(build("spt_lhs", 20), evaluate_to(spt_variant, {}, 20), 20).equal);

  // omega3 with an unsquared denominator.
  auto omega_variant = [](const Params&, Exponent w) {
    return sum_terms([w](std::int64_t n) { return Product(1, 2 * n * (n + 1)).over(PochhammerSpec::make(1, 1, 2, n + 1)).eval(w); },
                     w);
  };
  CHECK_FALSE(equal_up_to(build("omega3_rep_rhs", 20), evaluate_to(omega_variant, {}, 20), 20).equal);
}

TEST_CASE("bilateral sums keep their negative tails finite") {
  auto even = build("bilateral_psi_even", 40);
  CHECK(even.min_exp() == -1);
  CHECK(even.coefficient(-1) == Rational(-1, 2));
  auto odd = build("bilateral_psi_odd", 40);
  CHECK(odd.min_exp() == -1);
  CHECK(odd.coefficient(-1) == -1);
}
