#include "curvecount/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "curvecount/errors.hpp"
#include "curvecount/hallmotive.hpp"
#include "curvecount/invariants.hpp"
#include "curvecount/io.hpp"
#include "curvecount/ratrec.hpp"

namespace curvecount::cli {

namespace {

using io::Json;

struct Options {
  std::string format;
  std::string output;
  std::string input;
  int order = 10;
  std::int64_t chi = 1;
  int cutoff = 3;
  std::vector<int> weights;
  std::vector<std::int64_t> q_window;
  int lambda_order = 10;
  int g_max = 3;
  bool reduced = false;
  std::string check_case;
  std::vector<int> beta;
  int num_deg = 1;
  int den_deg = 2;
  int k = 2;
  bool show_t_function = false;
  std::string phi1;
  std::string phi2;
};

std::optional<int> degree_cap() {
  const char* env = std::getenv("CURVECOUNT_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (*end != '\0' || cap < 0) {
    throw ParseError("CURVECOUNT_MAX_DEGREE must be a non-negative integer, got \"" +
                     std::string(env) + "\"");
  }
  return static_cast<int>(cap);
}

void enforce_cap(const std::string& what, std::int64_t value) {
  const auto cap = degree_cap();
  if (cap && value > *cap) {
    throw DomainError(what + " " + std::to_string(value) + " exceeds CURVECOUNT_MAX_DEGREE=" +
                      std::to_string(*cap));
  }
}

std::string resolve_format(const Options& o, const std::string& fallback) {
  return o.format.empty() ? fallback : o.format;
}

std::string series_text(const GradedSeries& s) {
  std::ostringstream os;
  for (const CurveClass& beta : s.grid().classes()) {
    auto it = s.terms().find(beta);
    if (it == s.terms().end()) continue;
    const WindowedLaurent& w = it->second;
    os << "t^(" << io::class_field(beta) << "): " << w.coeffs().str() << "  [" << w.lo() << ","
       << (w.bounded() ? std::to_string(w.hi()) : std::string("inf")) << "]\n";
  }
  return os.str();
}

std::string coefficient_list(const WindowedLaurent& w, int order) {
  std::string s;
  for (int n = 0; n <= order; ++n) {
    if (n) s += ", ";
    s += w.coeff(n).str();
  }
  return s + "\n";
}

Json coefficient_json(const WindowedLaurent& w, int order) {
  Json arr = Json::array();
  for (int n = 0; n <= order; ++n) arr.push_back(w.coeff(n).str());
  return arr;
}

std::string coefficient_csv(const WindowedLaurent& w, int order) {
  std::string s = "n,coeff\n";
  for (int n = 0; n <= order; ++n) s += std::to_string(n) + "," + w.coeff(n).str() + "\n";
  return s;
}

std::pair<std::int64_t, std::int64_t> window_of(const Options& o, std::int64_t lo,
                                                std::int64_t hi) {
  if (!o.q_window.empty()) {
    lo = o.q_window[0];
    hi = o.q_window[1];
  }
  if (lo > hi) throw ParseError("--q-window: lo must not exceed hi");
  enforce_cap("q-window upper end", hi);
  return {lo, hi};
}

ClassGrid grid_of(const Options& o, int rank) {
  enforce_cap("cutoff", o.cutoff);
  std::vector<int> w = o.weights;
  if (w.empty()) w.assign(static_cast<std::size_t>(rank), 1);
  if (static_cast<int>(w.size()) != rank) {
    throw ParseError("--weights: expected " + std::to_string(rank) + " weights");
  }
  return ClassGrid(rank, w, o.cutoff);
}

int table_rank(const GVTable& t) {
  return t.entries.empty() ? 1 : static_cast<int>(t.entries.begin()->first.beta.size());
}

// Each command writes its rendering and returns the exit code.
int cmd_macmahon(const Options& o, std::string& text, bool dt0) {
  enforce_cap("order", o.order);
  const WindowedLaurent w = dt0 ? dt_zero(o.chi, o.order) : macmahon(o.order);
  const std::string fmt = resolve_format(o, "text");
  if (fmt == "text") {
    text = coefficient_list(w, o.order);
  } else if (fmt == "csv") {
    text = coefficient_csv(w, o.order);
  } else {
    Json j{{"schema", io::kSchemaVersion}, {"order", o.order}, {"coefficients", coefficient_json(w, o.order)}};
    if (dt0) {
      j["chi"] = o.chi;
      Json n = Json::array();
      for (int k = 1; k <= o.order; ++k) n.push_back(n_degree_zero(o.chi, k).str());
      j["N"] = std::move(n);
    }
    text = io::dump(j);
  }
  return 0;
}

std::string render_series(const GradedSeries& s, const std::string& fmt) {
  if (fmt == "text") return series_text(s);
  if (fmt == "csv") return io::series_csv(s);
  return io::dump(io::to_json(s));
}

int cmd_conifold(const Options& o, std::string& text) {
  const auto [lo, hi] = window_of(o, 0, 10);
  GradedSeries s = conifold_dt(o.chi, grid_of(o, 1), lo, hi);
  if (o.reduced) s = reduce_dt(s);
  text = render_series(s, resolve_format(o, "json"));
  return 0;
}

int cmd_gv_expand(const Options& o, std::string& text) {
  const GVTable t = io::parse_gv_table(o.input);
  const auto [lo, hi] = window_of(o, -4, 10);
  text = render_series(gv_expand(t, grid_of(o, table_rank(t)), lo, hi), resolve_format(o, "json"));
  return 0;
}

int cmd_gv_extract(const Options& o, std::string& text) {
  const GradedSeries pt = io::parse_series(o.input);
  enforce_cap("cutoff", pt.grid().cutoff());
  const GvExtraction x = gv_extract(pt, o.g_max);
  const std::string fmt = resolve_format(o, "json");
  if (fmt == "csv") {
    text = io::gv_table_csv(x.gv);
  } else if (fmt == "text") {
    std::ostringstream os;
    for (const auto& [key, n] : x.gv.entries) {
      os << "n_" << key.genus << "^(" << io::class_field(key.beta) << ") = " << n.get_str() << "\n";
    }
    text = os.str();
  } else {
    text = io::dump({{"schema", io::kSchemaVersion},
                     {"gv", io::to_json(x.gv)},
                     {"N", io::to_json(x.n)},
                     {"L", io::to_json(x.l)}});
  }
  return 0;
}

int cmd_gw(const Options& o, std::string& text) {
  enforce_cap("lambda order", o.lambda_order);
  const GVTable t = io::parse_gv_table(o.input);
  const auto gw = gv_to_gw(t, o.lambda_order, grid_of(o, table_rank(t)));
  const std::string fmt = resolve_format(o, "json");
  if (fmt == "csv") {
    text = io::lambda_series_csv(gw);
  } else if (fmt == "text") {
    std::ostringstream os;
    for (const auto& [beta, w] : gw) {
      os << "t^(" << io::class_field(beta) << "): " << w.coeffs().str("lambda") << "\n";
    }
    text = os.str();
  } else {
    Json j = io::to_json(gw);
    j["schema"] = io::kSchemaVersion;
    text = io::dump(j);
  }
  return 0;
}

int cmd_check(const Options& o, std::string& text) {
  GwDtReport report;
  if (o.check_case == "dt0-identity") {
    enforce_cap("order", o.order);
    report.ok = check_dt0_identity(o.chi, o.order);
    if (!report.ok) report.reason = "degree-zero product differs from M(-q)^chi";
  } else if (o.check_case == "dtpt") {
    const auto [lo, hi] = window_of(o, -4, 10);
    const ClassGrid grid = grid_of(o, 1);
    GVTable conifold;
    conifold.set(0, {1}, BigInt(1));
    report.ok = check_dtpt(conifold_dt(o.chi, grid, std::max<std::int64_t>(lo, 0), hi),
                           gv_expand(conifold, grid, lo, hi));
    if (!report.ok) report.reason = "reduced DT differs from the PT product";
  } else {
    enforce_cap("lambda order", o.lambda_order);
    const ClassGrid grid = grid_of(o, 1);
    GVTable conifold;
    conifold.set(0, {1}, BigInt(1));
    // Each factor of exp(GW) spends two orders on the lambda^-2 pole.
    const int depth = o.lambda_order + 2 * std::max(o.cutoff - 1, 0);
    report = diagnose_gw_dt(conifold_reduced_ratfuns(o.cutoff), gv_to_gw(conifold, depth, grid),
                            grid, o.lambda_order);
  }
  const std::string fmt = resolve_format(o, "text");
  if (fmt == "json") {
    Json j{{"schema", io::kSchemaVersion}, {"case", o.check_case}, {"ok", report.ok}};
    if (!report.ok) j["reason"] = report.reason;
    text = io::dump(j);
  } else if (fmt == "csv") {
    text = "case,ok\n" + o.check_case + "," + (report.ok ? "true" : "false") + "\n";
  } else {
    text = report.ok ? "OK\n" : "FAIL: " + report.reason + "\n";
  }
  return report.ok ? 0 : 1;
}

int cmd_pade(const Options& o, std::string& text) {
  const GradedSeries s = io::parse_series(o.input);
  CurveClass beta(o.beta.begin(), o.beta.end());
  if (beta.empty()) beta.assign(static_cast<std::size_t>(s.grid().rank()), 0);
  if (static_cast<int>(beta.size()) != s.grid().rank() || !s.grid().in_range(beta)) {
    throw ParseError("--beta: class is not in the grid of " + o.input);
  }
  const RationalFunction f = pade(s.term(beta), o.num_deg, o.den_deg);
  const bool symmetric = check_q_symmetry(f);
  const std::string fmt = resolve_format(o, "json");
  if (fmt == "text") {
    text = f.str() + "\nsymmetric: " + (symmetric ? "yes" : "no") + "\n";
  } else if (fmt == "csv") {
    text = "part,n,coeff\n";
    for (const auto& [e, c] : f.num().terms()) text += "num," + std::to_string(e) + "," + c.str() + "\n";
    for (const auto& [e, c] : f.den().terms()) text += "den," + std::to_string(e) + "," + c.str() + "\n";
  } else {
    text = io::dump({{"schema", io::kSchemaVersion},
                     {"function", io::to_json(f)},
                     {"symmetric", symmetric}});
  }
  return 0;
}

int cmd_superrigid(const Options& o, std::string& text) {
  enforce_cap("k", o.k);
  const SuperRigidCount c = n_superrigid_detail(o.k);
  const std::string fmt = resolve_format(o, "json");
  if (fmt == "text") {
    text = "N = " + c.n.str() + "\n";
    if (o.show_t_function) text += "(t^2-1) P_t = " + c.t_function.str("t") + "\n";
  } else if (fmt == "csv") {
    text = "k,N\n" + std::to_string(o.k) + "," + c.n.str() + "\n";
  } else {
    text = io::dump({{"schema", io::kSchemaVersion},
                     {"k", o.k},
                     {"N", c.n.str()},
                     {"t_function", c.t_function.str("t")}});
  }
  return 0;
}

int cmd_a2(const Options& o, std::string& text) {
  Rational phi1;
  Rational phi2;
  try {
    phi1 = Rational::parse(o.phi1);
    phi2 = Rational::parse(o.phi2);
  } catch (const std::exception& e) {
    throw ParseError(std::string("phase: ") + e.what());
  }
  const int count = a2_counting(phi1, phi2);
  const std::string fmt = resolve_format(o, "json");
  if (fmt == "text") {
    text = std::to_string(count) + "\n";
  } else if (fmt == "csv") {
    text = "phi1,phi2,count\n" + phi1.str() + "," + phi2.str() + "," + std::to_string(count) + "\n";
  } else {
    text = io::dump({{"schema", io::kSchemaVersion},
                     {"phi1", phi1.str()},
                     {"phi2", phi2.str()},
                     {"count", count}});
  }
  return 0;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--output", o.output, "Write output to this file instead of stdout");
}

void add_grid(CLI::App* sub, Options& o) {
  sub->add_option("--cutoff", o.cutoff, "Curve-class degree cutoff")->check(CLI::PositiveNumber);
  sub->add_option("--weights", o.weights, "Degree weights of the class coordinates")
      ->delimiter(',');
}

void add_window(CLI::App* sub, Options& o) {
  sub->add_option("--q-window", o.q_window, "q-window lo hi")->expected(2);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact curve-counting series: DT, PT, GW and Gopakumar-Vafa invariants",
               "curvecount"};
  app.require_subcommand(1);

  auto* mac = app.add_subcommand("macmahon", "Coefficients of the MacMahon function");
  mac->add_option("--order", o.order, "Highest q power")->required()->check(CLI::NonNegativeNumber);
  add_common(mac, o);

  auto* dt0 = app.add_subcommand("dt0", "Degree-zero DT series M(-q)^chi");
  dt0->add_option("--chi", o.chi, "Euler characteristic")->required();
  dt0->add_option("--order", o.order, "Highest q power")->check(CLI::NonNegativeNumber);
  add_common(dt0, o);

  auto* con = app.add_subcommand("conifold", "DT series of the resolved conifold");
  con->add_option("--chi", o.chi, "Euler characteristic");
  con->add_flag("--reduced", o.reduced, "Divide by the degree-zero series");
  add_grid(con, o);
  add_window(con, o);
  add_common(con, o);

  auto* exp = app.add_subcommand("gv-expand", "PT series from a GV table");
  exp->add_option("--input", o.input, "GV table JSON")->required();
  add_grid(exp, o);
  add_window(exp, o);
  add_common(exp, o);

  auto* ext = app.add_subcommand("gv-extract", "GV, N and L tables from a PT series");
  ext->add_option("--input", o.input, "PT series JSON")->required();
  ext->add_option("--g-max", o.g_max, "Highest genus allowed")->check(CLI::NonNegativeNumber);
  add_common(ext, o);

  auto* gw = app.add_subcommand("gw", "Gromov-Witten series from a GV table");
  gw->add_option("--input", o.input, "GV table JSON")->required();
  gw->add_option("--lambda-order", o.lambda_order, "Highest lambda power");
  add_grid(gw, o);
  add_common(gw, o);

  auto* chk = app.add_subcommand("check", "Verify a series identity");
  chk->add_option("--case", o.check_case, "Identity to check")
      ->required()
      ->check(CLI::IsMember({"dt0-identity", "dtpt", "gw-dt"}));
  chk->add_option("--chi", o.chi, "Euler characteristic");
  chk->add_option("--order", o.order, "Highest q power")->check(CLI::NonNegativeNumber);
  chk->add_option("--lambda-order", o.lambda_order, "Highest lambda power")
      ->check(CLI::NonNegativeNumber);
  add_grid(chk, o);
  add_window(chk, o);
  add_common(chk, o);

  auto* pad = app.add_subcommand("pade", "Recognize one class layer as a rational function");
  pad->add_option("--input", o.input, "Series JSON")->required();
  pad->add_option("--beta", o.beta, "Curve class, comma separated")->delimiter(',');
  pad->add_option("--num-deg", o.num_deg, "Numerator degree")->check(CLI::NonNegativeNumber);
  pad->add_option("--den-deg", o.den_deg, "Denominator degree")->check(CLI::NonNegativeNumber);
  add_common(pad, o);

  auto* hall = app.add_subcommand("hall", "Hall-algebra counting invariants");
  hall->require_subcommand(1);
  auto* sr = hall->add_subcommand("superrigid", "N for k times a super-rigid rational curve");
  sr->add_option("--k", o.k, "Multiplicity")->required()->check(CLI::PositiveNumber);
  sr->add_flag("--show-t-function", o.show_t_function, "Also print (t^2-1) P_t in text output");
  add_common(sr, o);
  auto* ha2 = hall->add_subcommand("a2", "A2 quiver count for dimension vector (1,1)");
  auto* a2 = app.add_subcommand("a2", "A2 quiver count for dimension vector (1,1)");
  for (auto* sub : {ha2, a2}) {
    sub->add_option("--phi1", o.phi1, "Phase of S1 in (0,1]")->required();
    sub->add_option("--phi2", o.phi2, "Phase of S2 in (0,1]")->required();
    add_common(sub, o);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::string text;
  int code = 0;
  try {
    if (mac->parsed()) code = cmd_macmahon(o, text, false);
    else if (dt0->parsed()) code = cmd_macmahon(o, text, true);
    else if (con->parsed()) code = cmd_conifold(o, text);
    else if (exp->parsed()) code = cmd_gv_expand(o, text);
    else if (ext->parsed()) code = cmd_gv_extract(o, text);
    else if (gw->parsed()) code = cmd_gw(o, text);
    else if (chk->parsed()) code = cmd_check(o, text);
    else if (pad->parsed()) code = cmd_pade(o, text);
    else if (sr->parsed()) code = cmd_superrigid(o, text);
    else code = cmd_a2(o, text);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write " << o.output << "\n";
      return 1;
    }
  }
  return code;
}

}  // namespace curvecount::cli
