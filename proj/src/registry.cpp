#include "qlab/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qlab/partitions.hpp"

namespace qlab::registry {

namespace {

SeriesBuilder named(const std::string& name) {
  return [name](const Params& p, Exponent order) { return qfunctions::build({name, p}, order); };
}

Specialization spec(const std::string& text, bool expect_stall = false) {
  Params p = qfunctions::parse_params(text);
  return {qfunctions::format_params(p), p, expect_stall};
}

IdentityEntry entry(std::string id, const std::string& lhs, const std::string& rhs, std::string anchor,
                    std::vector<Specialization> specs = {}) {
  IdentityEntry e;
  e.id = std::move(id);
  e.lhs_name = lhs;
  e.rhs_name = rhs;
  e.lhs = named(lhs);
  e.rhs = named(rhs);
  e.specializations = std::move(specs);
  e.default_order = e.parameterized() ? 60 : 100;
  e.anchor = std::move(anchor);
  return e;
}

std::vector<IdentityEntry> make_catalog() {
  std::vector<IdentityEntry> c = {
      entry("omega3-rep", "omega3_def", "omega3_rep_rhs",
            "omega3(q) = sum_{n>=1} q^{n-1}/((1-q^n)(q^{n+1};q)_n (q^{2n+2};q^2)_inf)"),
      entry("spt-fundamental", "spt_lhs", "spt_rhs",
            "sum_{n>=1} q^n/((1-q^n)^2 (q^{n+1};q)_inf) = 1/(q;q)_inf [sum n q^n/(1-q^n) + sum (-1)^n (1+q^n) "
            "q^{n(3n+1)/2}/(1-q^n)^2]"),
      entry("thm-1.1", "f3_def", "f3_newrep_rhs",
            "f3(q) = 1/(q;q)_inf - 4 sum_{n>=1} q^{2n}/((q^{2n};q^2)_{n+1} (q^{2n+1};q)_inf)"),
      entry("thm-1.2", "G_series", "No_plus_series", "sum G(n) q^n = sum N_o^+(n) q^n"),
      entry("thm-1.3", "sptG_lhs", "sptG_rhs",
            "sum_{n>=1} q^{2n}/((1-q^{2n})^2 (-q^{n+1};q)_n (q^{n+1};q)_inf) = 1/(q;q)_inf [sum n q^{2n}/(1-q^{2n}) + "
            "sum (-1)^n (1+q^n) q^{3n(n+1)/2}/(1-q^{2n})^2]"),
      entry("cor-1.4-even-rank", "Ne_from_f3", "Ne_series_rhs",
            "sum N_e(n) q^n = 1/(q;q)_inf - 2 sum_{n>=1} q^{2n}/((1-q^{2n}) (-q^{n+1};q)_n (q^{n+1};q)_inf)"),
      entry("cor-1.4-fine", "fineJ_direct", "fineJ_rhs",
            "sum_{n>=1} (-1)^n q^{n(3n+1)/2}/(1+q^n) = -sum_{n>=1} (q;q)_n q^{2n}/((1-q^{2n}) (-q^{n+1};q)_n)"),
      entry("cor-1.4-fine-f3", "fineJ_direct", "fineJ_from_f3",
            "sum_{n>=1} (-1)^n q^{n(3n+1)/2}/(1+q^n) = (f3(q) (q;q)_inf - 1)/4"),
      entry("lem-2.1", "b_family_lhs", "b_family_continued",
            "sum (q^2;q^2)_n q^{2n}/((-q;q^2)_n (-bq^2;q^2)_n), continued in b",
            {spec("b=0"), spec("b=q"), spec("b=q^2"), spec("b=1")}),
      entry("eq-before-ac", "b_family_lhs", "b_family_direct",
            "sum (q^2;q^2)_n q^{2n}/((-q;q^2)_n (-bq^2;q^2)_n) = ... + (1+b)(1+q) sum (-b)^m/(1+q^{2m+3})",
            {spec("b=0"), spec("b=q"), spec("b=q^2"), spec("b=1", true)}),
      entry("eq-4parameter", "four_param_lhs", "four_param_rhs",
            "four-parameter transformation with q -> q^2 and A -> 0",
            {spec("B=q^2,a=q^-1,b=q"), spec("B=q^2,a=q,b=q^2")}),
      entry("lem-3.1", "alternating_odd_lambert", "alternating_odd_lambert_closed",
            "sum_{n>=0} (-1)^n q^{2n+1}/(1+q^{2n+1}) = 1/4 - (q;q)_inf^2/(4 (-q;q)_inf^2)"),
      entry("eq-2phi12", "alt_even_over_odd", "alt_over_even",
            "sum_{n>=0} (-1)^n q^{2n}/(1+q^{2n+1}) = sum_{n>=0} (-1)^n q^n/(1+q^{2n+2})"),
      entry("eq-1psi1-sec3", "bilateral_psi_even", "bilateral_psi_even_product",
            "sum_{n in Z} (-q^2;q^2)_n (-q)^n/(-q^4;q^2)_n = -(1+q^2)/(2q) (q;q)_inf^2/(-q;q)_inf^2"),
      entry("eq-final1729", "alt_over_even", "alt_over_even_closed",
            "sum_{n>=0} (-1)^n q^n/(1+q^{2n+2}) = 1/(4q) - (q;q)_inf^2/(4q (-q;q)_inf^2)"),
      entry("eq-z-identity", "z_family_lhs", "z_family_rhs",
            "sum (z;q^2)_n (1/z;q^2)_n q^{2n}/((q^2;q^2)_n (-q;q)_{2n}) as a theta-type sum",
            {spec("z=q"), spec("z=q^3"), spec("z=q^5")}),
      entry("eq-almost-spt", "spt_derivative_lhs", "spt_derivative_rhs",
            "sum_{n>=1} (q^2;q^2)_{n-1}^2 q^{2n}/((q^2;q^2)_n (-q;q)_{2n}) = sum n q^{2n}/(1-q^{2n}) + sum (-1)^n (1+q^n) "
            "q^{3n(n+1)/2}/(1-q^{2n})^2"),
      entry("eq-transf", "No_plus_series", "No_plus_reduced",
            "sum_{n>=1} q^{2n}/((q^{2n};q^2)_{n+1} (q^{2n+1};q)_inf) = q^2/((q;q)_inf (1+q)(1+q^2)) sum (q^2;q^2)_n "
            "q^{2n}/((-q^3;q^2)_n (-q^4;q^2)_n)"),
      entry("eq-4para1", "q3q4_sum", "q3q4_sum_rhs",
            "sum (q^2;q^2)_n q^{2n}/((-q^3;q^2)_n (-q^4;q^2)_n) via the four-parameter transformation at a = q, b = q^2"),
      entry("eq-2sums", "No_plus_series", "No_plus_mock_split",
            "sum N_o^+(n) q^n = -sum_{m>=1} (-1)^{m-1} q^{m^2}/(-q;q^2)_m + 1/(q;q)_inf sum (-1)^m q^{2m+1}/(1+q^{2m+1})"),
      entry("entry-239", "mock_a_family_lhs", "mock_a_family_rhs",
            "sum (-1)^m q^{m^2}/(-aq^2;q^2)_m = (1+a) sum_{m>=1} (-1)^{m-1} q^{m^2}/(-aq;q^2)_m + phi(-q)/(-aq;q)_inf",
            {spec("a=1"), spec("a=q"), spec("a=q^2")}),
      entry("eq-phi312", "mock_odd_sum", "mock_odd_sum_phi3",
            "sum_{m>=1} (-1)^{m-1} q^{m^2}/(-q;q^2)_m = phi3(-q)/2 - (q;q)_inf/(2 (-q;q)_inf^2)"),
      entry("eq-2.3.1", "phi3_neg", "phi3_neg_from_f3", "phi3(-q) = f3(q)/2 + (q;q)_inf/(2 (-q;q)_inf^2)"),
      entry("eq-suminf", "mock_odd_sum", "mock_odd_sum_f3",
            "sum_{m>=1} (-1)^{m-1} q^{m^2}/(-q;q^2)_m = f3(q)/4 - (q;q)_inf/(4 (-q;q)_inf^2)"),
      entry("eq-g1", "g1_lhs", "G_series",
            "sum_{n>=1} q^{2n}/((1-q^{2n}) (-q^{n+1};q)_n (q^{n+1};q)_inf) = sum G(n) q^n"),
      entry("eq-g2", "No_plus_from_f3", "No_plus_series",
            "(1/(q;q)_inf - f3(q))/4 = sum_{n>=1} q^{2n}/((q^{2n};q^2)_{n+1} (q^{2n+1};q)_inf)"),
      entry("thm-6.1", "Gprime_series", "thm61_rhs",
            "sum G'(n) q^n = q^2 - q(1+q) phi3(-q) + q(3-q)/(2 (q;q)_inf) + q(1+q)(q^2;q^2)_inf/(2 (-q;q)_inf^3)"),
      entry("eq-phi3m", "phi3_shifted_sum", "phi3_shifted_closed",
            "sum_{m>=0} (-1)^m q^{m^2}/(-q^2;q^2)_{m+1} = -q + (1+q) phi3(-q)"),
      entry("eq-1psi1-sec6", "bilateral_psi_odd", "bilateral_psi_odd_product",
            "sum_{n in Z} (-1)^n q^{2n} (-q;q^2)_n/(-q^5;q^2)_n = -(1+q)(1+q^3)/(q(1-q^2)) (q;q)_inf^2/(-q;q)_inf^2"),
      entry("eq-last1", "odd_pair_sum", "odd_pair_closed",
            "sum_{n>=1} (-1)^n q^{2n}/((1+q^{2n+1})(1+q^{2n+3})) = 1/(2q(1+q)^2) - 1/((1+q)(1+q^3)) - "
            "(q;q)_inf^2/(2q(1-q^2) (-q;q)_inf^2)"),
      entry("eq-last2", "Gprime_series", "Gprime_phi3_expansion",
            "sum G'(n) q^n = q^2 - q(1+q) phi3(-q) + q(1+q)(q;q)_inf/(-q;q)_inf^2 + Lambert tail"),
      entry("eq-seriesf", "Gprime_series", "Gprime_continued",
            "sum G'(n) q^n = q sum_{m>=1} (-1)^m q^{m^2}/(-q^3;q^2)_m + Lambert tail"),
      entry("eq-beforephi", "Gprime_series", "Gprime_theta_expansion",
            "sum G'(n) q^n = q (q;q)_inf/((-q;q)_inf (-q^2;q)_inf) - q sum_{m>=0} (-1)^m q^{m^2}/(-q^2;q^2)_{m+1} + Lambert "
            "tail"),
  };
  std::sort(c.begin(), c.end(), [](const IdentityEntry& a, const IdentityEntry& b) { return a.id < b.id; });
  return c;
}

const Specialization* select(const IdentityEntry& e, const std::string& text) {
  if (!e.parameterized()) {
    if (!text.empty()) throw DisallowedSpecialization("identity '" + e.id + "' takes no specialization");
    return nullptr;
  }
  std::string labels;
  for (const auto& s : e.specializations) labels += (labels.empty() ? "" : ", ") + s.label;
  if (text.empty()) throw DisallowedSpecialization("identity '" + e.id + "' requires one of: " + labels);
  std::string canonical = qfunctions::format_params(qfunctions::parse_params(text));
  for (const auto& s : e.specializations)
    if (s.label == canonical) return &s;
  throw DisallowedSpecialization("identity '" + e.id + "' is not checked at " + canonical + "; allowed: " + labels);
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool report_less(const VerificationReport& a, const VerificationReport& b) {
  if (a.id != b.id) return a.id < b.id;
  return a.specialization < b.specialization;
}

// Compares oracle(n) with the q^n coefficient of a series for n = 1..max_n.
VerificationReport compare_counts(const std::string& id, int max_n, const std::function<Rational(int)>& lhs,
                                  const std::function<Rational(int)>& rhs) {
  VerificationReport r;
  r.id = id;
  r.order = max_n + 1;
  auto t0 = Clock::now();
  try {
    if (max_n < 1) throw InvalidParameter("max_n must be at least 1");
    r.pass = true;
    r.outcome = Outcome::match;
    for (int n = 1; n <= max_n; ++n) {
      Rational a = lhs(n);
      Rational b = rhs(n);
      if (a != b) {
        r.pass = false;
        r.outcome = Outcome::mismatch;
        r.first_mismatch = Mismatch{n, a, b};
        break;
      }
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.outcome = Outcome::error;
    r.message = e.what();
  }
  r.elapsed_ms = since(t0);
  return r;
}

std::function<Rational(int)> series_coefficients(const std::string& name, int max_n) {
  auto cache = std::make_shared<std::optional<LaurentSeries>>();
  return [=](int n) {
    if (!*cache) *cache = qfunctions::build(name, max_n + 1);
    return (*cache)->coefficient(n);
  };
}

Rational as_rational(partitions::Count c) { return Rational(static_cast<unsigned long>(c)); }

std::function<Rational(int)> oracle(partitions::Count (*count)(int, int)) {
  return [count](int n) { return as_rational(count(n, partitions::default_cap)); };
}

CombinatorialCheck series_check(std::string id, std::string description, std::string series,
                                std::function<Rational(int)> counts) {
  CombinatorialCheck c;
  c.id = id;
  c.description = std::move(description);
  c.run = [id, series, counts](int max_n) {
    return compare_counts(id, max_n, counts, series_coefficients(series, max_n));
  };
  return c;
}

std::vector<CombinatorialCheck> make_checks() {
  using namespace partitions;
  auto No_plus = [](int n) { return as_rational(rank_stats(n).odd_positive); };
  auto Ne = [](int n) { return as_rational(rank_stats(n).even); };
  auto parity = [](int n) -> Rational {
    RankStats s = rank_stats(n);
    return as_rational(s.even) - as_rational(s.odd);
  };

  std::vector<CombinatorialCheck> c;
  c.push_back({"thm-1.2-combinatorial", "count_G(n) = N_o^+(n) by enumeration alone", [No_plus](int max_n) {
                 return compare_counts("thm-1.2-combinatorial", max_n, oracle(count_G), No_plus);
               }});
  c.push_back(series_check("thm-1.2-G-oracle", "count_G(n) against G_series", "G_series", oracle(count_G)));
  c.push_back(series_check("thm-1.2-No-plus-oracle", "N_o^+(n) against No_plus_series", "No_plus_series", No_plus));
  c.push_back(series_check("thm-1.1-rank-parity", "N_e(n) - N_o(n) against f3_def", "f3_def", parity));
  c.push_back(series_check("spt-oracle", "spt(n) against spt_lhs", "spt_lhs", oracle(spt)));
  c.push_back(series_check("thm-1.3-sptG-oracle", "sptG(n) against sptG_lhs", "sptG_lhs", oracle(sptG)));
  c.push_back(series_check("cor-1.4-even-rank-oracle", "N_e(n) against Ne_series_rhs", "Ne_series_rhs", Ne));
  c.push_back(series_check("thm-6.1-Gprime-oracle", "count_G'(n) against Gprime_series", "Gprime_series",
                           oracle(count_Gprime)));
  c.push_back(series_check("omega3-oracle", "odd parts below twice the smallest part against q omega3(q)", "q_omega3",
                           oracle(count_omega_interpretation)));
  c.push_back(series_check("partition-oracle", "p(n) against euler_inverse", "euler_inverse",
                           [](int n) { return as_rational(rank_stats(n).p); }));
  std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return c;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::match:
      return "match";
    case Outcome::mismatch:
      return "mismatch";
    case Outcome::expected_stall:
      return "expected_stall";
    case Outcome::unexpected_stall:
      return "unexpected_stall";
    case Outcome::error:
      return "error";
  }
  return "error";
}

const std::vector<IdentityEntry>& catalog() {
  static const std::vector<IdentityEntry> entries = make_catalog();
  return entries;
}

std::pair<std::string, std::string> split_selector(const std::string& selector) {
  auto at = selector.find('@');
  if (at == std::string::npos) return {selector, ""};
  return {selector.substr(0, at), selector.substr(at + 1)};
}

const IdentityEntry& find(const std::string& id) {
  std::string key = split_selector(id).first;
  for (const auto& e : catalog())
    if (e.id == key) return e;
  throw UnknownIdentity("unknown identity '" + key + "'");
}

VerificationReport verify(const IdentityEntry& entry, const std::string& specialization, std::optional<Exponent> order) {
  const Specialization* s = select(entry, specialization);
  VerificationReport r;
  r.id = entry.id;
  r.specialization = s ? s->label : "";
  r.order = order.value_or(entry.default_order);
  const Params params = s ? s->params : Params{};
  const bool expect_stall = s && s->expect_stall;

  auto t0 = Clock::now();
  try {
    if (r.order < 1) throw InvalidParameter("order must be at least 1");
    LaurentSeries lhs = entry.lhs(params, r.order);
    LaurentSeries rhs = entry.rhs(params, r.order);
    Comparison c = equal_up_to(lhs, rhs, r.order);
    r.first_mismatch = c.first_mismatch;
    if (expect_stall) {
      r.outcome = Outcome::error;
      r.message = "expected a divergent sum, but both sides terminated";
    } else {
      r.outcome = c.equal ? Outcome::match : Outcome::mismatch;
      r.pass = c.equal;
    }
  } catch (const TruncationStall& e) {
    r.outcome = expect_stall ? Outcome::expected_stall : Outcome::unexpected_stall;
    r.pass = expect_stall;
    r.message = e.what();
  } catch (const std::exception& e) {
    r.outcome = Outcome::error;
    r.message = e.what();
  }
  r.elapsed_ms = since(t0);
  return r;
}

VerificationReport verify(const std::string& id, const std::string& specialization, std::optional<Exponent> order) {
  auto [key, suffix] = split_selector(id);
  return verify(find(key), specialization.empty() ? suffix : specialization, order);
}

std::vector<VerificationReport> verify_entries(const std::vector<IdentityEntry>& entries, std::optional<Exponent> order,
                                               unsigned jobs) {
  struct Task {
    const IdentityEntry* entry;
    std::string spec;
  };
  std::vector<Task> tasks;
  for (const auto& e : entries) {
    if (!e.parameterized()) tasks.push_back({&e, ""});
    for (const auto& s : e.specializations) tasks.push_back({&e, s.label});
  }
  std::vector<VerificationReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        out[i] = verify(*tasks[i].entry, tasks[i].spec, order);
      } catch (const std::exception& e) {
        out[i].id = tasks[i].entry->id;
        out[i].specialization = tasks[i].spec;
        out[i].outcome = Outcome::error;
        out[i].message = e.what();
      }
    }
  };
  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(out.begin(), out.end(), report_less);
  return out;
}

std::vector<VerificationReport> verify_all(std::optional<Exponent> order, unsigned jobs) {
  return verify_entries(catalog(), order, jobs);
}

IdentityEntry perturbed(const IdentityEntry& entry, const Monomial& extra) {
  IdentityEntry e = entry;
  SeriesBuilder rhs = entry.rhs;
  e.rhs = [rhs, extra](const Params& p, Exponent order) {
    LaurentSeries s = rhs(p, order);
    if (extra.exp < order) s += LaurentSeries::monomial(extra.coeff, extra.exp, order);
    return s;
  };
  return e;
}

const std::vector<CombinatorialCheck>& combinatorial_checks() {
  static const std::vector<CombinatorialCheck> checks = make_checks();
  return checks;
}

const CombinatorialCheck* find_combinatorial(const std::string& id) {
  for (const auto& c : combinatorial_checks())
    if (c.id == id) return &c;
  return nullptr;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["specialization"] = r.specialization.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.specialization);
    j["order"] = r.order;
    j["pass"] = r.pass;
    if (r.first_mismatch) {
      j["first_mismatch"] = {{"exponent", r.first_mismatch->exponent},
                             {"lhs", qlab::to_string(r.first_mismatch->lhs)},
                             {"rhs", qlab::to_string(r.first_mismatch->rhs)}};
    } else {
      j["first_mismatch"] = nullptr;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    j["outcome"] = to_string(r.outcome);
    if (!r.message.empty()) j["message"] = r.message;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "id,specialization,order,pass,mismatch_exponent,lhs,rhs,elapsed_ms,outcome\n";
  for (const auto& r : reports) {
    out << csv_field(r.id) << ',' << csv_field(r.specialization) << ',' << r.order << ',' << (r.pass ? "true" : "false")
        << ',';
    if (r.first_mismatch) {
      out << r.first_mismatch->exponent << ',' << qlab::to_string(r.first_mismatch->lhs) << ','
          << qlab::to_string(r.first_mismatch->rhs);
    } else {
      out << ",,";
    }
    out << ',' << nlohmann::json(r.elapsed_ms).dump() << ',' << to_string(r.outcome) << '\n';
  }
  return out.str();
}

}  // namespace qlab::registry
