#include "curvecount/io.hpp"

#include <fstream>
#include <sstream>

#include "curvecount/errors.hpp"

namespace curvecount::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

void expect_keys(const Json& j, const std::string& path,
                 std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const char* key : required) {
    if (!j.contains(key)) fail(path, "missing key \"" + std::string(key) + "\"");
  }
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : required) known = known || key == k;
    for (const char* k : optional) known = known || key == k;
    if (!known) fail(path + "." + key, "unexpected key \"" + key + "\"");
  }
}

std::int64_t int_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::int64_t exponent_from_key(const std::string& key, const std::string& path) {
  std::size_t used = 0;
  std::int64_t e = 0;
  try {
    e = std::stoll(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) fail(path, "exponent key \"" + key + "\" is not an integer");
  return e;
}

CurveClass class_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of non-negative integers");
  CurveClass beta;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::int64_t b = int_from_json(j[i], path + "[" + std::to_string(i) + "]");
    if (b < 0) fail(path + "[" + std::to_string(i) + "]", "negative class coordinate");
    beta.push_back(static_cast<int>(b));
  }
  return beta;
}

Json class_to_json(const CurveClass& beta) {
  Json arr = Json::array();
  for (int b : beta) arr.push_back(b);
  return arr;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const LaurentPoly& p) {
  Json obj = Json::object();
  for (const auto& [e, c] : p.terms()) obj[std::to_string(e)] = c.str();
  return obj;
}

Json to_json(const WindowedLaurent& w) {
  Json obj;
  obj["q"] = to_json(w.coeffs());
  obj["window"] = Json::array({w.lo(), w.bounded() ? Json(w.hi()) : Json(nullptr)});
  obj["exact_below"] = w.exact_below();
  return obj;
}

Json to_json(const GradedSeries& s) {
  Json obj;
  obj["schema"] = kSchemaVersion;
  obj["rank"] = s.grid().rank();
  obj["weights"] = s.grid().weights();
  obj["cutoff"] = s.grid().cutoff();
  Json terms = Json::array();
  for (const CurveClass& beta : s.grid().classes()) {
    auto it = s.terms().find(beta);
    if (it == s.terms().end()) continue;
    Json t = to_json(it->second);
    t["beta"] = class_to_json(beta);
    terms.push_back(std::move(t));
  }
  obj["terms"] = std::move(terms);
  return obj;
}

Json to_json(const RationalFunction& f) {
  Json obj;
  obj["num"] = to_json(f.num());
  obj["den"] = to_json(f.den());
  obj["text"] = f.str();
  return obj;
}

Json to_json(const GVTable& t) {
  Json entries = Json::array();
  for (const auto& [key, n] : t.entries) {
    entries.push_back({{"g", key.genus}, {"beta", class_to_json(key.beta)}, {"n", n.get_str()}});
  }
  return {{"entries", std::move(entries)}};
}

Json to_json(const NTable& t) {
  Json entries = Json::array();
  for (const auto& [key, value] : t.values) {
    entries.push_back({{"n", key.first}, {"beta", class_to_json(key.second)}, {"N", value.str()}});
  }
  Json known = Json::array();
  for (const auto& [beta, n_max] : t.n_max) {
    known.push_back({{"beta", class_to_json(beta)},
                     {"n_max", n_max >= kUnbounded ? Json(nullptr) : Json(n_max)}});
  }
  return {{"entries", std::move(entries)}, {"known", std::move(known)}};
}

Json to_json(const LTable& t) {
  Json entries = Json::array();
  for (const auto& [beta, poly] : t.raw) {
    Json e{{"beta", class_to_json(beta)}, {"raw", to_json(poly)}};
    auto s = t.symmetric.find(beta);
    e["symmetric"] = s == t.symmetric.end() ? Json::object() : to_json(s->second.poly());
    entries.push_back(std::move(e));
  }
  return {{"entries", std::move(entries)}};
}

Json to_json(const std::map<CurveClass, WindowedLaurent>& lambda_series) {
  Json terms = Json::array();
  for (const auto& [beta, w] : lambda_series) {
    Json t;
    t["beta"] = class_to_json(beta);
    t["lambda"] = to_json(w.coeffs());
    t["window"] = Json::array({w.lo(), w.bounded() ? Json(w.hi()) : Json(nullptr)});
    terms.push_back(std::move(t));
  }
  return {{"terms", std::move(terms)}};
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(path, "expected a rational string \"p\" or \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

LaurentPoly laurent_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object of exponent -> rational");
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    const std::string sub = path + "." + key;
    p.add_term(exponent_from_key(key, sub), rational_from_json(value, sub));
  }
  return p;
}

WindowedLaurent windowed_from_json(const Json& j, const std::string& path) {
  expect_keys(j, path, {"q", "window", "exact_below"}, {"beta"});
  const Json& win = j["window"];
  if (!win.is_array() || win.size() != 2) fail(path + ".window", "expected [lo, hi]");
  const std::int64_t lo = int_from_json(win[0], path + ".window[0]");
  const std::int64_t hi = win[1].is_null() ? kUnbounded : int_from_json(win[1], path + ".window[1]");
  if (!j["exact_below"].is_boolean()) fail(path + ".exact_below", "expected a boolean");
  LaurentPoly coeffs = laurent_from_json(j["q"], path + ".q");
  for (const auto& [e, c] : coeffs.terms()) {
    if (e < lo || e > hi) {
      fail(path + ".q." + std::to_string(e), "coefficient outside the window");
    }
  }
  try {
    return WindowedLaurent(std::move(coeffs), lo, hi, j["exact_below"].get<bool>());
  } catch (const std::exception& e) {
    fail(path + ".window", e.what());
  }
}

GradedSeries series_from_json(const Json& j, const std::string& path) {
  expect_keys(j, path, {"rank", "weights", "cutoff", "terms"}, {"schema"});
  if (j.contains("schema") && j["schema"] != kSchemaVersion) {
    fail(path + ".schema", "unsupported schema version");
  }
  const std::int64_t rank = int_from_json(j["rank"], path + ".rank");
  const std::int64_t cutoff = int_from_json(j["cutoff"], path + ".cutoff");
  if (!j["weights"].is_array()) fail(path + ".weights", "expected an array");
  std::vector<int> weights;
  for (std::size_t i = 0; i < j["weights"].size(); ++i) {
    weights.push_back(static_cast<int>(
        int_from_json(j["weights"][i], path + ".weights[" + std::to_string(i) + "]")));
  }
  std::optional<ClassGrid> grid;
  try {
    grid.emplace(static_cast<int>(rank), weights, static_cast<int>(cutoff));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  GradedSeries s(*grid);
  const Json& terms = j["terms"];
  if (!terms.is_array()) fail(path + ".terms", "expected an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string sub = path + ".terms[" + std::to_string(i) + "]";
    if (!terms[i].is_object() || !terms[i].contains("beta")) fail(sub, "missing key \"beta\"");
    const CurveClass beta = class_from_json(terms[i]["beta"], sub + ".beta");
    if (static_cast<std::int64_t>(beta.size()) != rank || !grid->in_range(beta)) {
      fail(sub + ".beta", "class is not in the grid");
    }
    if (s.has_term(beta)) fail(sub + ".beta", "duplicate class");
    s.set(beta, windowed_from_json(terms[i], sub));
  }
  return s;
}

GVTable gv_table_from_json(const Json& j, const std::string& path) {
  expect_keys(j, path, {"entries"}, {"schema"});
  const Json& entries = j["entries"];
  if (!entries.is_array()) fail(path + ".entries", "expected an array");
  GVTable t;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string sub = path + ".entries[" + std::to_string(i) + "]";
    expect_keys(entries[i], sub, {"g", "beta", "n"});
    const std::int64_t g = int_from_json(entries[i]["g"], sub + ".g");
    if (g < 0) fail(sub + ".g", "negative genus");
    const CurveClass beta = class_from_json(entries[i]["beta"], sub + ".beta");
    if (beta.empty() || is_zero_class(beta)) fail(sub + ".beta", "expected a nonzero class");
    if (rank == 0) rank = beta.size();
    if (beta.size() != rank) fail(sub + ".beta", "class rank differs from earlier entries");
    const Rational n = rational_from_json(entries[i]["n"], sub + ".n");
    if (!n.is_integer()) fail(sub + ".n", "GV invariants must be integers");
    if (t.entries.contains(GvKey{static_cast<int>(g), beta})) fail(sub, "duplicate entry");
    t.set(static_cast<int>(g), beta, n.to_integer());
  }
  return t;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

GradedSeries parse_series(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return series_from_json(j, "$");
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

GVTable parse_gv_table(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return gv_table_from_json(j, "$");
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string class_field(const CurveClass& beta) {
  std::string s;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(beta[i]);
  }
  return s;
}

std::string gv_table_csv(const GVTable& t) {
  std::ostringstream os;
  os << "g,beta,n\n";
  for (const auto& [key, n] : t.entries) {
    os << key.genus << ',' << class_field(key.beta) << ',' << n.get_str() << '\n';
  }
  return os.str();
}

std::string n_table_csv(const NTable& t) {
  std::ostringstream os;
  os << "n,beta,N\n";
  for (const auto& [key, value] : t.values) {
    os << key.first << ',' << class_field(key.second) << ',' << value.str() << '\n';
  }
  return os.str();
}

std::string l_table_csv(const LTable& t) {
  std::ostringstream os;
  os << "beta,n,L\n";
  for (const auto& [beta, poly] : t.raw) {
    for (const auto& [e, c] : poly.terms()) {
      os << class_field(beta) << ',' << e << ',' << c.str() << '\n';
    }
  }
  return os.str();
}

std::string series_csv(const GradedSeries& s) {
  std::ostringstream os;
  os << "beta,n,coeff\n";
  for (const CurveClass& beta : s.grid().classes()) {
    auto it = s.terms().find(beta);
    if (it == s.terms().end()) continue;
    for (const auto& [e, c] : it->second.coeffs().terms()) {
      os << class_field(beta) << ',' << e << ',' << c.str() << '\n';
    }
  }
  return os.str();
}

std::string lambda_series_csv(const std::map<CurveClass, WindowedLaurent>& lambda_series) {
  std::ostringstream os;
  os << "beta,k,coeff\n";
  for (const auto& [beta, w] : lambda_series) {
    for (const auto& [e, c] : w.coeffs().terms()) {
      os << class_field(beta) << ',' << e << ',' << c.str() << '\n';
    }
  }
  return os.str();
}

}  // namespace curvecount::io
