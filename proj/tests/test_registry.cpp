#include <set>

#include <json.hpp>

#include "doctest.h"
#include "qlab/registry.hpp"

using namespace qlab;
using namespace qlab::registry;

namespace {

std::size_t case_count() {
  std::size_t n = 0;
  for (const auto& e : catalog()) n += e.parameterized() ? e.specializations.size() : 1;
  return n;
}

}  // namespace

TEST_CASE("catalog shape") {
  CHECK(case_count() >= 31);
  std::set<std::string> ids;
  for (const auto& e : catalog()) {
    CAPTURE(e.id);
    CHECK(ids.insert(e.id).second);
    CHECK_FALSE(e.anchor.empty());
    CHECK(e.lhs);
    CHECK(e.rhs);
    std::set<std::string> labels;
    for (const auto& s : e.specializations) {
      CHECK(labels.insert(s.label).second);
      CHECK(s.label == qfunctions::format_params(s.params));
    }
  }
  for (const auto& c : combinatorial_checks()) CHECK(ids.count(c.id) == 0);
}

TEST_CASE("selectors") {
  CHECK(split_selector("lem-2.1@b=q") == std::pair<std::string, std::string>{"lem-2.1", "b=q"});
  CHECK(split_selector("thm-1.1") == std::pair<std::string, std::string>{"thm-1.1", ""});
  CHECK(&find("lem-2.1@b=q") == &find("lem-2.1"));
  CHECK_THROWS_AS(find("no-such-identity"), UnknownIdentity);
}

TEST_CASE("a single identity passes") {
  auto r = verify("thm-1.1", "", 50);
  CHECK(r.pass);
  CHECK(r.outcome == Outcome::match);
  CHECK(r.order == 50);
  CHECK_FALSE(r.first_mismatch);
}

TEST_CASE("a perturbed identity reports its first mismatch") {
  auto bad = perturbed(find("thm-1.1"), q_pow(3));
  auto r = verify(bad, "", 50);
  CHECK_FALSE(r.pass);
  CHECK(r.outcome == Outcome::mismatch);
  REQUIRE(r.first_mismatch);
  CHECK(r.first_mismatch->exponent == 3);
  CHECK(r.first_mismatch->rhs - r.first_mismatch->lhs == 1);
}

TEST_CASE("the divergent specialization stalls") {
  auto r = verify("eq-before-ac", "b=1", 30);
  CHECK(r.pass);
  CHECK(r.outcome == Outcome::expected_stall);
  auto ok = verify("eq-before-ac", "b=q", 30);
  CHECK(ok.outcome == Outcome::match);
}

TEST_CASE("specialization errors") {
  CHECK_THROWS_AS(verify("lem-2.1", "b=q^7", 20), DisallowedSpecialization);
  CHECK_THROWS_AS(verify("lem-2.1", "", 20), DisallowedSpecialization);
  CHECK_THROWS_AS(verify("thm-1.1", "b=q", 20), DisallowedSpecialization);
  CHECK_THROWS_AS(verify("no-such-identity", "", 20), UnknownIdentity);
}

TEST_CASE("parameter labels are canonicalized") {
  CHECK(verify("lem-2.1", "b=1*q^1", 20).pass);
}

TEST_CASE("every identity passes at its default order") {
  auto reports = verify_all(std::nullopt, 1);
  CHECK(reports.size() == case_count());
  for (const auto& r : reports) {
    CAPTURE(r.id);
    CAPTURE(r.specialization);
    CAPTURE(r.message);
    CHECK(r.pass);
    CHECK(r.order == find(r.id).default_order);
  }
}

TEST_CASE("one injected fault yields one failure") {
  std::vector<IdentityEntry> entries(catalog().begin(), catalog().end());
  for (auto& e : entries)
    if (e.id == "eq-transf") e = perturbed(e, q_pow(17, Rational(1, 3)));
  auto reports = verify_entries(entries, 40, 2);
  int failed = 0;
  for (const auto& r : reports) {
    if (r.pass) continue;
    ++failed;
    CHECK(r.id == "eq-transf");
    REQUIRE(r.first_mismatch);
    CHECK(r.first_mismatch->exponent == 17);
  }
  CHECK(failed == 1);
}

TEST_CASE("reports are independent of thread count") {
  auto one = verify_all(30, 1);
  auto three = verify_all(30, 3);
  REQUIRE(one.size() == three.size());
  for (auto& r : one) r.elapsed_ms = 0;
  for (auto& r : three) r.elapsed_ms = 0;
  CHECK(reports_to_json(one) == reports_to_json(three));
  CHECK(reports_to_csv(one) == reports_to_csv(three));
}

TEST_CASE("passing at a high order implies passing at lower orders") {
  for (const char* id : {"thm-1.1", "thm-1.3", "eq-g1"}) {
    CAPTURE(id);
    for (Exponent order : {5, 20, 60}) CHECK(verify(id, "", order).pass);
  }
  auto bad = perturbed(find("thm-1.1"), q_pow(25));
  CHECK(verify(bad, "", 25).pass);
  CHECK_FALSE(verify(bad, "", 26).pass);
}

TEST_CASE("combinatorial checks") {
  CHECK(find_combinatorial("thm-1.2-combinatorial") != nullptr);
  CHECK(find_combinatorial("thm-1.1") == nullptr);
  for (const auto& c : combinatorial_checks()) {
    CAPTURE(c.id);
    auto r = c.run(default_max_n);
    CHECK(r.pass);
    CHECK(r.id == c.id);
    CHECK(r.order == default_max_n + 1);
  }
}

TEST_CASE("json report fields") {
  auto bad = perturbed(find("thm-1.1"), q_pow(2));
  std::vector<VerificationReport> reports = {verify("thm-1.1", "", 10), verify(bad, "", 10), verify("lem-2.1", "b=q", 10)};
  auto j = nlohmann::json::parse(reports_to_json(reports));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  for (const auto& r : j) {
    for (const char* key : {"id", "specialization", "order", "pass", "first_mismatch", "elapsed_ms", "outcome"})
      CHECK(r.contains(key));
  }
  CHECK(j[0]["specialization"].is_null());
  CHECK(j[0]["first_mismatch"].is_null());
  CHECK(j[0]["pass"] == true);
  CHECK(j[1]["pass"] == false);
  CHECK(j[1]["first_mismatch"]["exponent"] == 2);
  CHECK(j[1]["first_mismatch"]["lhs"].is_string());
  CHECK(j[2]["specialization"] == "b=q");
  CHECK(j[1]["outcome"] == "mismatch");
}

TEST_CASE("csv report") {
  auto csv = reports_to_csv({verify("eq-4parameter", "B=q^2,a=q^-1,b=q", 20)});
  CHECK(csv.rfind("id,specialization,order,pass,mismatch_exponent,lhs,rhs,elapsed_ms,outcome\n", 0) == 0);
  CHECK(csv.find("\"B=q^2,a=q^-1,b=q\"") != std::string::npos);
}
