#include "qlab/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlab/partitions.hpp"
#include "qlab/registry.hpp"

namespace qlab::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::optional<Exponent> env_order() {
  const char* v = std::getenv("QLAB_ORDER_DEFAULT");
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t used = 0;
    long long n = std::stoll(v, &used);
    if (used != std::strlen(v) || n < 1) throw UsageError("");
    return n;
  } catch (const std::exception&) {
    throw UsageError(std::string("QLAB_ORDER_DEFAULT must be a positive integer, got '") + v + "'");
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
  if (!f) throw UsageError("failed writing '" + path + "'");
}

// --- compute -----------------------------------------------------------------

struct ComputeOptions {
  std::string name;
  std::optional<Exponent> order;
  std::vector<std::string> params;
  std::size_t form = 0;
  std::string format = "csv";
  std::string output;
};

int compute(const ComputeOptions& o, std::ostream& out) {
  Exponent order = o.order ? *o.order : env_order().value_or(qfunctions::default_order);
  if (order < 1) throw UsageError("--order must be at least 1");
  qfunctions::Params params;
  for (const auto& p : o.params)
    for (auto& [k, v] : qfunctions::parse_params(p)) params[k] = v;

  LaurentSeries s = qfunctions::build({o.name, params}, order, o.form);
  Exponent first = std::min<Exponent>(0, s.min_exp());

  std::string text;
  if (o.format == "csv") {
    text = "exponent,coefficient\n";
    for (Exponent k = first; k < order; ++k) text += std::to_string(k) + "," + to_string(s.coefficient(k)) + "\n";
  } else {
    ordered_json j;
    j["series"] = o.name;
    j["params"] = ordered_json::object();
    for (const auto& [k, v] : params) j["params"][k] = to_string(v);
    j["form"] = qfunctions::lookup(o.name).forms[o.form].label;
    j["order"] = order;
    ordered_json rows = ordered_json::array();
    for (Exponent k = first; k < order; ++k) rows.push_back({{"exponent", k}, {"coefficient", to_string(s.coefficient(k))}});
    j["coefficients"] = std::move(rows);
    text = j.dump(2) + "\n";
  }
  emit(text, o.output, out);
  return exit_pass;
}

// --- verify ------------------------------------------------------------------

struct VerifyOptions {
  std::string selector;
  std::optional<Exponent> order;
  int max_n = registry::default_max_n;
  std::string format = "json";
  std::string output;
  unsigned jobs = default_jobs();
  bool no_timing = false;
};

int verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  std::optional<Exponent> order = o.order ? o.order : env_order();
  if (order && *order < 1) throw UsageError("--order must be at least 1");
  if (o.max_n < 1 || o.max_n > partitions::default_cap)
    throw UsageError("--max-n must lie in [1, " + std::to_string(partitions::default_cap) + "]");

  std::vector<registry::VerificationReport> reports;
  if (o.selector == "all") {
    reports = registry::verify_all(order, o.jobs);
    for (const auto& c : registry::combinatorial_checks()) reports.push_back(c.run(o.max_n));
  } else if (const auto* check = registry::find_combinatorial(o.selector)) {
    reports.push_back(check->run(o.max_n));
  } else {
    auto [id, spec] = registry::split_selector(o.selector);
    const registry::IdentityEntry* entry;
    try {
      entry = &registry::find(id);
    } catch (const UnknownIdentity& e) {
      throw UsageError(e.what());
    }
    try {
      if (spec.empty() && entry->parameterized()) {
        reports = registry::verify_entries({*entry}, order, o.jobs);
      } else {
        reports.push_back(registry::verify(*entry, spec, order));
      }
    } catch (const DisallowedSpecialization& e) {
      throw UsageError(e.what());
    } catch (const InvalidParameter& e) {
      throw UsageError(e.what());
    }
  }
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    if (a.id != b.id) return a.id < b.id;
    return a.specialization < b.specialization;
  });
  if (o.no_timing)
    for (auto& r : reports) r.elapsed_ms = 0;

  std::string text = o.format == "csv" ? registry::reports_to_csv(reports) : registry::reports_to_json(reports);
  emit(text, o.output, out);

  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (r.pass) continue;
    ++failed;
    err << "FAIL " << r.id << (r.specialization.empty() ? "" : "@" + r.specialization) << ": "
        << registry::to_string(r.outcome);
    if (r.first_mismatch) err << " at q^" << r.first_mismatch->exponent;
    if (!r.message.empty()) err << " (" << r.message << ")";
    err << "\n";
  }
  if (!o.output.empty() && o.output != "-")
    out << reports.size() - failed << "/" << reports.size() << " passed\n";
  return failed == 0 ? exit_pass : exit_mismatch;
}

// --- stats -------------------------------------------------------------------

struct StatsOptions {
  int max_n = registry::default_max_n;
  std::string format = "csv";
  std::string output;
  unsigned jobs = default_jobs();
};

struct Column {
  std::string name;
  partitions::Count partitions::StatRow::*field;
  std::string series;  // empty: derived from other columns
};

const std::vector<Column>& columns() {
  using R = partitions::StatRow;
  static const std::vector<Column> c = {
      {"p", &R::p, "euler_inverse"},       {"Ne", &R::Ne, "Ne_series_rhs"},         {"No", &R::No, ""},
      {"No_plus", &R::No_plus, "No_plus_series"}, {"G", &R::G, "G_series"},          {"Gprime", &R::Gprime, "Gprime_series"},
      {"spt", &R::spt, "spt_lhs"},         {"sptG", &R::sptG, "sptG_lhs"},          {"omega", &R::omega, "q_omega3"},
  };
  return c;
}

int stats(const StatsOptions& o, std::ostream& out) {
  if (o.max_n < 1 || o.max_n > partitions::default_cap)
    throw UsageError("--max-n must lie in [1, " + std::to_string(partitions::default_cap) + "]");

  std::vector<partitions::StatRow> rows(o.max_n);
  std::atomic<int> next{1};
  auto worker = [&] {
    for (int n; (n = next.fetch_add(1)) <= o.max_n;) rows[n - 1] = partitions::stat_row(n);
  };
  unsigned jobs = std::clamp<unsigned>(o.jobs, 1, static_cast<unsigned>(o.max_n));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::map<std::string, LaurentSeries> series;
  for (const auto& c : columns())
    if (!c.series.empty()) series[c.name] = qfunctions::build(c.series, o.max_n + 1);

  auto series_value = [&](const Column& c, int n) -> Rational {
    if (c.name == "No") return series.at("p").coefficient(n) - series.at("Ne").coefficient(n);
    return series.at(c.name).coefficient(n);
  };

  bool all_match = true;
  std::ostringstream csv;
  ordered_json arr = ordered_json::array();
  csv << "n";
  for (const auto& c : columns()) csv << ',' << c.name << ',' << c.name << "_series," << c.name << "_match";
  csv << '\n';
  for (const auto& row : rows) {
    ordered_json j;
    j["n"] = row.n;
    csv << row.n;
    for (const auto& c : columns()) {
      partitions::Count v = row.*c.field;
      Rational s = series_value(c, row.n);
      bool match = s == Rational(static_cast<unsigned long>(v));
      all_match = all_match && match;
      csv << ',' << v << ',' << to_string(s) << ',' << (match ? "true" : "false");
      j[c.name] = v;
      j[c.name + "_series"] = to_string(s);
      j[c.name + "_match"] = match;
    }
    csv << '\n';
    arr.push_back(std::move(j));
  }
  emit(o.format == "csv" ? csv.str() : arr.dump(2) + "\n", o.output, out);
  return all_match ? exit_pass : exit_mismatch;
}

// --- list --------------------------------------------------------------------

int list(const std::string& format, std::ostream& out) {
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& e : registry::catalog()) {
      auto add = [&](const registry::Specialization* s) {
        ordered_json j;
        j["kind"] = "identity";
        j["id"] = e.id;
        j["selector"] = s ? e.id + "@" + s->label : e.id;
        j["specialization"] = s ? ordered_json(s->label) : ordered_json(nullptr);
        j["default_order"] = e.default_order;
        j["expect_stall"] = s && s->expect_stall;
        j["lhs"] = e.lhs_name;
        j["rhs"] = e.rhs_name;
        j["anchor"] = e.anchor;
        arr.push_back(std::move(j));
      };
      if (!e.parameterized()) add(nullptr);
      for (const auto& s : e.specializations) add(&s);
    }
    for (const auto& c : registry::combinatorial_checks()) {
      ordered_json j;
      j["kind"] = "combinatorial";
      j["id"] = c.id;
      j["selector"] = c.id;
      j["default_max_n"] = registry::default_max_n;
      j["description"] = c.description;
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
    return exit_pass;
  }
  for (const auto& e : registry::catalog()) {
    auto line = [&](const registry::Specialization* s) {
      out << (s ? e.id + "@" + s->label : e.id) << "\torder=" << e.default_order
          << (s && s->expect_stall ? "\texpect-stall" : "") << "\t" << e.lhs_name << " = " << e.rhs_name << "\t"
          << e.anchor << "\n";
    };
    if (!e.parameterized()) line(nullptr);
    for (const auto& s : e.specializations) line(&s);
  }
  for (const auto& c : registry::combinatorial_checks())
    out << c.id << "\tmax-n=" << registry::default_max_n << "\t" << c.description << "\n";
  return exit_pass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series computation and identity verification"};
  app.require_subcommand(1);

  const std::vector<std::string> formats_csv = {"csv", "json"};

  ComputeOptions co;
  auto* compute_cmd = app.add_subcommand("compute", "Print the coefficients of a named series");
  compute_cmd->add_option("name", co.name, "Series name")->required();
  compute_cmd->add_option("--order", co.order, "Truncation order");
  compute_cmd->add_option("--param", co.params, "Parameter assignment such as b=q^2")->allow_extra_args(false);
  compute_cmd->add_option("--form", co.form, "Index of the form to evaluate");
  compute_cmd->add_option("--format", co.format, "csv or json")->check(CLI::IsMember(formats_csv));
  compute_cmd->add_option("--output", co.output, "Output file");

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand("verify", "Verify identities or oracle checks");
  verify_cmd->add_option("selector", vo.selector, "Identity id, id@specialization, check id, or 'all'")->required();
  verify_cmd->add_option("--order", vo.order, "Truncation order for every identity");
  verify_cmd->add_option("--max-n", vo.max_n, "Largest n for oracle checks");
  verify_cmd->add_option("--format", vo.format, "json or csv")->check(CLI::IsMember(formats_csv));
  verify_cmd->add_option("--output", vo.output, "Report file");
  verify_cmd->add_option("--jobs", vo.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--no-timing", vo.no_timing, "Report elapsed_ms as 0");

  StatsOptions so;
  auto* stats_cmd = app.add_subcommand("stats", "Tabulate partition statistics against series coefficients");
  stats_cmd->add_option("--max-n", so.max_n, "Largest n");
  stats_cmd->add_option("--format", so.format, "csv or json")->check(CLI::IsMember(formats_csv));
  stats_cmd->add_option("--output", so.output, "Output file");
  stats_cmd->add_option("--jobs", so.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string list_format = "text";
  auto* list_cmd = app.add_subcommand("list", "List catalog identities and oracle checks");
  list_cmd->add_option("--format", list_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    if (*compute_cmd) return compute(co, out);
    if (*verify_cmd) return verify(vo, out, err);
    if (*stats_cmd) return stats(so, out);
    if (*list_cmd) return list(list_format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const UnknownName& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const MissingParameter& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_mismatch;
  }
  return exit_usage;
}

}  // namespace qlab::cli
