#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qlab/qfunctions.hpp"

// Catalog of q-series identities as LHS/RHS pairs, and the machinery that
// checks them coefficient by coefficient.
namespace qlab::registry {

using qfunctions::Params;

using SeriesBuilder = std::function<LaurentSeries(const Params&, Exponent order)>;

struct Specialization {
  std::string label;  // canonical "b=q^2" form
  Params params;
  // The identity is formally divergent here; verification must stall.
  bool expect_stall = false;
};

struct IdentityEntry {
  std::string id;
  std::string lhs_name;
  std::string rhs_name;
  SeriesBuilder lhs;
  SeriesBuilder rhs;
  std::vector<Specialization> specializations;  // empty: unparameterized
  Exponent default_order = 100;
  std::string anchor;

  bool parameterized() const { return !specializations.empty(); }
};

enum class Outcome { match, mismatch, expected_stall, unexpected_stall, error };

std::string to_string(Outcome o);

struct VerificationReport {
  std::string id;
  std::string specialization;
  Exponent order = 0;
  bool pass = false;
  std::optional<Mismatch> first_mismatch;
  double elapsed_ms = 0;
  Outcome outcome = Outcome::error;
  std::string message;
};

const std::vector<IdentityEntry>& catalog();

// Accepts "lem-2.1" or "lem-2.1@b=q" (the suffix is ignored). Throws UnknownIdentity.
const IdentityEntry& find(const std::string& id);

// Splits "lem-2.1@b=q" into ("lem-2.1", "b=q").
std::pair<std::string, std::string> split_selector(const std::string& selector);

// An empty specialization selects the entry's only case. Without an order the
// entry's default is used. Throws DisallowedSpecialization for a
// specialization not listed in the entry.
VerificationReport verify(const IdentityEntry& entry, const std::string& specialization = "",
                          std::optional<Exponent> order = std::nullopt);
VerificationReport verify(const std::string& id, const std::string& specialization = "",
                          std::optional<Exponent> order = std::nullopt);

// Every entry times every specialization, sorted by (id, specialization).
// Errors are captured in the reports, never thrown.
std::vector<VerificationReport> verify_entries(const std::vector<IdentityEntry>& entries,
                                               std::optional<Exponent> order = std::nullopt, unsigned jobs = 1);
std::vector<VerificationReport> verify_all(std::optional<Exponent> order = std::nullopt, unsigned jobs = 1);

// Copy of `entry` whose right side has `extra` added; used for fault injection.
IdentityEntry perturbed(const IdentityEntry& entry, const Monomial& extra);

// Checks that compare enumeration counts against each other or against series
// coefficients for n = 1..max_n.
struct CombinatorialCheck {
  std::string id;
  std::string description;
  std::function<VerificationReport(int max_n)> run;
};

inline constexpr int default_max_n = 40;

const std::vector<CombinatorialCheck>& combinatorial_checks();
const CombinatorialCheck* find_combinatorial(const std::string& id);

std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace qlab::registry
