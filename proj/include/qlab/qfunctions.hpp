#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qlab/series.hpp"

// Named builders for every q-series in the catalog. Each name has one or more
// algebraically distinct forms; form 0 is the defining one.
namespace qlab::qfunctions {

inline constexpr Exponent default_order = 100;

using Params = std::map<std::string, Monomial>;

struct SeriesName {
  std::string identifier;
  Params params;
};

// A builder evaluated at a working order. It may return a series whose
// window is shorter than requested (Laurent factors shift windows down).
using RawBuilder = std::function<LaurentSeries(const Params&, Exponent working_order)>;

struct Form {
  std::string label;
  std::string formula;
  RawBuilder raw;
};

struct SeriesInfo {
  std::string name;
  std::string description;
  std::vector<std::string> params;
  std::vector<Form> forms;
};

// Every named series, sorted by name.
const std::vector<SeriesInfo>& catalog();

// Throws UnknownName.
const SeriesInfo& lookup(const std::string& name);

// Builds form `form` of `name` with its window cut at exactly `order`.
// Throws UnknownName, MissingParameter, InvalidParameter, TruncationStall.
LaurentSeries build(const SeriesName& name, Exponent order, std::size_t form = 0);
LaurentSeries build(const std::string& name, Exponent order);

using Builder = std::function<LaurentSeries(Exponent order)>;

// All forms of `name`, each bound to the given parameters.
std::vector<Builder> builder_forms(const SeriesName& name);

// Runs a raw builder at increasing working orders until its window reaches
// `order`, then cuts it there.
LaurentSeries evaluate_to(const RawBuilder& raw, const Params& params, Exponent order);

// "b=q^2,z=q" -> {b: q^2, z: q}. Throws InvalidParameter.
Params parse_params(const std::string& text);
std::string format_params(const Params& params);

}  // namespace qlab::qfunctions
