#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "curvecount/gseries.hpp"
#include "curvecount/invariants.hpp"
#include "curvecount/laurent.hpp"
#include "curvecount/ratfun.hpp"
#include "curvecount/windowed.hpp"

namespace curvecount::io {

// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted.
using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;

Json to_json(const Rational& r);
Json to_json(const LaurentPoly& p);
Json to_json(const WindowedLaurent& w);
Json to_json(const GradedSeries& s);
Json to_json(const RationalFunction& f);
Json to_json(const GVTable& t);
Json to_json(const NTable& t);
Json to_json(const LTable& t);
Json to_json(const std::map<CurveClass, WindowedLaurent>& lambda_series);

// Parsers throw ParseError("<json path>: <problem>").
Rational rational_from_json(const Json& j, const std::string& path = "$");
LaurentPoly laurent_from_json(const Json& j, const std::string& path = "$");
WindowedLaurent windowed_from_json(const Json& j, const std::string& path = "$");
GradedSeries series_from_json(const Json& j, const std::string& path = "$");
GVTable gv_table_from_json(const Json& j, const std::string& path = "$");

/// Reads and parses a JSON file; failures are ParseErrors naming the file.
Json read_json_file(const std::string& path);
GradedSeries parse_series(const std::string& path);
GVTable parse_gv_table(const std::string& path);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

// CSV renderings. Classes are written as "b1;b2;...".
std::string class_field(const CurveClass& beta);
std::string gv_table_csv(const GVTable& t);
std::string n_table_csv(const NTable& t);
std::string l_table_csv(const LTable& t);
std::string series_csv(const GradedSeries& s);
std::string lambda_series_csv(const std::map<CurveClass, WindowedLaurent>& lambda_series);

}  // namespace curvecount::io
