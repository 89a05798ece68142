// linial: command-line front end over the C interface.
//
//   linial table [--json]
//   linial eulerian <Phi> [--half]
//   linial ehrhart <Phi> [--series N]
//   linial charquasi <Phi> -m M [--half] [--constituent D]
//   linial admissible <Phi>
//   linial toy <Phi> -m M [--g JSON]
//   linial check-line <Phi> -m M [-d D] [--exact|--numeric]
//   linial limit-roots <Phi>
//   linial oracle modq <Phi> -m M -q Q [--unsafe-q]
//   linial track <Phi> -d D --m-list 10,100,1000
//   linial verify-all [--only 1,5] [--timing]
//
// Every command accepts --json (envelope on stdout) and --out FILE.

#include <cmath>
#include <cstdio>
#include <optional>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linial/linial.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct ApiError {
  lnl_status status;
  std::string message;
};

void check(lnl_status s) {
  if (s != LNL_OK) throw ApiError{s, lnl_last_error()};
}

struct RootSystemDeleter {
  void operator()(lnl_root_system* p) const { lnl_root_system_free(p); }
};
struct PolyDeleter {
  void operator()(lnl_poly* p) const { lnl_poly_free(p); }
};
struct QuasiDeleter {
  void operator()(lnl_quasi* p) const { lnl_quasi_free(p); }
};
using RootSystem = std::unique_ptr<lnl_root_system, RootSystemDeleter>;
using Poly = std::unique_ptr<lnl_poly, PolyDeleter>;
using Quasi = std::unique_ptr<lnl_quasi, QuasiDeleter>;

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out(s);
  lnl_string_free(s);
  return out;
}

Json take_json(char* s) { return Json::parse(take(s)); }

RootSystem parse_root_system(const std::string& name) {
  lnl_root_system* rs = nullptr;
  check(lnl_root_system_parse(name.c_str(), &rs));
  return RootSystem(rs);
}

[[maybe_unused]] int rank_of(const RootSystem& rs) {
  int r = 0;
  check(lnl_root_system_rank(rs.get(), &r));
  return r;
}

int coxeter_of(const RootSystem& rs) {
  int h = 0;
  check(lnl_root_system_coxeter_number(rs.get(), &h));
  return h;
}

Json poly_json(const lnl_poly* p) {
  char* s = nullptr;
  check(lnl_poly_to_json(p, &s));
  return take_json(s);
}

std::string poly_text(const lnl_poly* p, char var) {
  char* s = nullptr;
  check(lnl_poly_to_text(p, var, &s));
  return take(s);
}

Json quasi_json(const lnl_quasi* q) {
  char* s = nullptr;
  check(lnl_quasi_to_json(q, &s));
  return take_json(s);
}

std::vector<Poly> constituents(const lnl_quasi* q) {
  int period = 0;
  check(lnl_quasi_period(q, &period));
  std::vector<Poly> out;
  for (int d = 0; d < period; ++d) {
    lnl_poly* p = nullptr;
    check(lnl_quasi_constituent(q, d, &p));
    out.emplace_back(p);
  }
  return out;
}

bool poly_equal(const lnl_poly* a, const lnl_poly* b) {
  int eq = 0;
  check(lnl_poly_equal(a, b, &eq));
  return eq != 0;
}

// Human display merges constituents down to the smallest period that
// reproduces them; the data keeps the full period.
std::string quasi_text(const lnl_quasi* q, char var) {
  const auto cs = constituents(q);
  const int n = static_cast<int>(cs.size());
  int shown = n;
  for (int p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (int d = p; d < n && ok; ++d) ok = poly_equal(cs[static_cast<std::size_t>(d)].get(), cs[static_cast<std::size_t>(d % p)].get());
    if (ok) {
      shown = p;
      break;
    }
  }
  std::ostringstream out;
  if (shown < n) out << "(period " << n << ", displayed with period " << shown << ")\n";
  for (int d = 0; d < shown; ++d)
    out << "  q = " << d << " mod " << shown << ": " << poly_text(cs[static_cast<std::size_t>(d)].get(), var) << "\n";
  return out.str();
}

std::string complex_text(const Json& z) {
  std::ostringstream o;
  const double re = z["re"].get<double>();
  const double im = z["im"].get<double>();
  o << std::setprecision(10) << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return o.str();
}

struct Output {
  Output() = default;
  explicit Output(std::string cmd, Json in = Json::object()) : command(std::move(cmd)), inputs(std::move(in)) {}

  std::string command;
  Json inputs = Json::object();
  Json result;
  std::string text;
};

struct Options {
  bool json = false;
  std::string out_file;
};

void write(const Options& opts, const std::string& body) {
  if (opts.out_file.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(opts.out_file);
  if (!f) throw ApiError{LNL_E_INVALID_ARGUMENT, "cannot open output file " + opts.out_file};
  f << body;
}

Json envelope(const Output& o) {
  return Json{{"command", o.command}, {"inputs", o.inputs}, {"result", o.result}, {"schema_version", lnl_schema_version()}};
}

// ------------------------------------------------------------ commands

Output cmd_table() {
  Output o{"table"};
  char* s = nullptr;
  check(lnl_table_json(&s));
  o.result = take_json(s);
  std::ostringstream t;
  auto join = [](const Json& arr) {
    std::string r;
    for (const auto& x : arr) r += (r.empty() ? "" : ",") + std::to_string(x.get<int>());
    return r;
  };
  t << std::left << std::setw(5) << "Phi" << std::setw(26) << "exponents" << std::setw(20) << "marks c_1..c_l"
    << std::setw(5) << "h" << std::setw(5) << "f" << std::setw(13) << "|W|" << std::setw(6) << "n~" << "rad(n~)\n";
  for (const auto& row : o.result) {
    const Json& marks = row["marks"];
    t << std::left << std::setw(5) << row["name"].get<std::string>() << std::setw(26) << join(row["exponents"])
      << std::setw(20) << join(Json(std::vector<Json>(marks.begin() + 1, marks.end()))) << std::setw(5)
      << row["coxeter_number"].get<int>() << std::setw(5) << row["index_of_connection"].get<int>() << std::setw(13)
      << row["weyl_order"].get<std::string>() << std::setw(6) << row["period"].get<int>() << row["rad_period"].get<int>()
      << "\n";
  }
  o.text = t.str();
  return o;
}

Output cmd_eulerian(const std::string& phi, bool half) {
  Output o{"eulerian", {{"phi", phi}, {"half", half}}};
  const RootSystem rs = parse_root_system(phi);
  lnl_poly* p = nullptr;
  check(lnl_eulerian(rs.get(), half ? 1 : 0, &p));
  const Poly poly(p);
  o.result = poly_json(poly.get());
  o.text = std::string(half ? "R^{1/2}_" : "R_") + phi + "(x) = " + poly_text(poly.get(), 'x') + "\n";
  return o;
}

Output cmd_ehrhart(const std::string& phi, int series) {
  Output o{"ehrhart", {{"phi", phi}}};
  const RootSystem rs = parse_root_system(phi);
  if (series > 0) {
    o.inputs["series"] = series;
    char* s = nullptr;
    check(lnl_ehrhart_series_json(rs.get(), series, &s));
    o.result = take_json(s);
    std::string line;
    for (const auto& c : o.result) line += (line.empty() ? "" : ", ") + c.get<std::string>();
    o.text = "Ehr_" + phi + " coefficients: " + line + "\n";
    return o;
  }
  lnl_quasi* q = nullptr;
  check(lnl_ehrhart(rs.get(), &q));
  const Quasi quasi(q);
  o.result = quasi_json(quasi.get());
  o.text = "L_" + phi + "(q):\n" + quasi_text(quasi.get(), 'q');
  return o;
}

Output cmd_charquasi(const std::string& phi, int m, bool half, const std::optional<long>& constituent) {
  Output o{"charquasi", {{"phi", phi}, {"m", m}, {"half", half}}};
  const RootSystem rs = parse_root_system(phi);
  lnl_quasi* q = nullptr;
  check(lnl_char_quasi(rs.get(), m, half ? 1 : 0, &q));
  const Quasi quasi(q);
  const std::string label = std::string(half ? "chi^{1/2}" : "chi") + "(L^" + std::to_string(m) + "_" + phi + ")";
  if (constituent) {
    o.inputs["constituent"] = *constituent;
    lnl_poly* p = nullptr;
    check(lnl_quasi_constituent(quasi.get(), *constituent, &p));
    const Poly poly(p);
    o.result = poly_json(poly.get());
    o.text = label + " constituent " + std::to_string(*constituent) + ": " + poly_text(poly.get(), 't') + "\n";
    return o;
  }
  o.result = quasi_json(quasi.get());
  o.text = label + ":\n" + quasi_text(quasi.get(), 't');
  return o;
}

Output cmd_admissible(const std::string& phi) {
  Output o{"admissible", {{"phi", phi}}};
  const RootSystem rs = parse_root_system(phi);
  char* s = nullptr;
  check(lnl_admissible_json(rs.get(), &s));
  o.result = take_json(s);
  auto join = [](const Json& arr) {
    std::string r;
    for (const auto& x : arr) r += (r.empty() ? "" : ", ") + std::to_string(x.get<int>());
    return r;
  };
  o.text = "admissible residues: " + join(o.result["residues"]) + "\nadmissible divisors: " + join(o.result["divisors"]) +
           "\nm0: " + std::to_string(o.result["m0"].get<int>()) + "\n";
  return o;
}

Output cmd_toy(const std::string& phi, int m, const std::string& g_json) {
  Output o{"toy", {{"phi", phi}, {"m", m}}};
  const RootSystem rs = parse_root_system(phi);
  Poly seed;
  if (!g_json.empty()) {
    o.inputs["g"] = Json::parse(g_json);
    lnl_poly* g = nullptr;
    check(lnl_poly_from_json(g_json.c_str(), &g));
    seed.reset(g);
  }
  lnl_poly* p = nullptr;
  check(lnl_toy_poly(rs.get(), m, seed.get(), &p));
  const Poly poly(p);
  o.result = poly_json(poly.get());
  o.text = "(R_" + phi + "(S^" + std::to_string(m + 1) + ") g)(t) = " + poly_text(poly.get(), 't') + "\n";
  return o;
}

Output cmd_check_line(const std::string& phi, int m, long d, bool numeric) {
  Output o{"check-line", {{"phi", phi}, {"m", m}, {"d", d}, {"method", numeric ? "numeric" : "exact"}}};
  const RootSystem rs = parse_root_system(phi);
  lnl_quasi* q = nullptr;
  check(lnl_char_quasi(rs.get(), m, 0, &q));
  const Quasi quasi(q);
  lnl_poly* p = nullptr;
  check(lnl_quasi_constituent(quasi.get(), d, &p));
  const Poly poly(p);
  const long center_times_2 = static_cast<long>(m) * coxeter_of(rs);
  char* s = nullptr;
  check(lnl_check_line_json(poly.get(), center_times_2, numeric ? 0 : 1, &s));
  o.result = take_json(s);
  o.result["polynomial"] = poly_json(poly.get());
  std::ostringstream t;
  t << "constituent " << d << " of chi(L^" << m << "_" << phi << "): " << poly_text(poly.get(), 't') << "\n"
    << "all roots on Re t = " << center_times_2 << "/2: " << (o.result["on_line"].get<bool>() ? "yes" : "no") << " ("
    << o.result["method"].get<std::string>() << ")\n";
  if (numeric)
    for (const auto& z : o.result["details"]["roots"]) t << "  " << complex_text(z) << "\n";
  o.text = t.str();
  return o;
}

Output cmd_limit_roots(const std::string& phi) {
  Output o{"limit-roots", {{"phi", phi}}};
  const RootSystem rs = parse_root_system(phi);
  lnl_poly* p = nullptr;
  check(lnl_limit_poly(rs.get(), &p));
  const Poly poly(p);
  char* s = nullptr;
  check(lnl_find_roots_json(poly.get(), &s));
  Json roots = take_json(s);
  double max_re = 0;
  check(lnl_max_real_part(poly.get(), &max_re));
  const int h = coxeter_of(rs);
  check(lnl_halfplane_json(poly.get(), h, &s));
  Json half_plane = take_json(s);
  o.result = roots;
  o.result["polynomial"] = poly_json(poly.get());
  o.result["max_real_part"] = max_re;
  o.result["half_coxeter"] = h / 2.0;
  o.result["halfplane"] = half_plane;
  std::ostringstream t;
  t << "F_" << phi << "(t) = " << poly_text(poly.get(), 't') << "\nroots:\n";
  for (const auto& z : roots["roots"]) t << "  " << complex_text(z) << "\n";
  t << std::setprecision(8) << "max Re = " << max_re << " (h/2 = " << h / 2.0 << "), Re < h/2: "
    << half_plane["verdict"].get<std::string>() << " (" << half_plane["method"].get<std::string>() << ")\n";
  o.text = t.str();
  return o;
}

Output cmd_oracle_modq(const std::string& phi, int m, long q, bool unsafe) {
  Output o{"oracle modq", {{"phi", phi}, {"m", m}, {"q", q}, {"unsafe_q", unsafe}}};
  const RootSystem rs = parse_root_system(phi);
  uint64_t count = 0;
  check(lnl_bruteforce_modq(rs.get(), m, q, unsafe ? 1 : 0, &count));
  lnl_quasi* qp = nullptr;
  check(lnl_char_quasi(rs.get(), m, 0, &qp));
  const Quasi quasi(qp);
  char* v = nullptr;
  check(lnl_quasi_value(quasi.get(), q, &v));
  const std::string formula = take(v);
  o.result = Json{{"count", count}, {"char_quasi_value", formula}, {"match", formula == std::to_string(count)}};
  o.text = "#M_" + std::to_string(q) + "(L^" + std::to_string(m) + "_" + phi + ") = " + std::to_string(count) +
           "; chi_quasi(" + std::to_string(q) + ") = " + formula + (formula == std::to_string(count) ? " (match)\n" : " (MISMATCH)\n");
  return o;
}

Output cmd_track(const std::string& phi, long d, const std::vector<int>& ms) {
  Output o{"track", {{"phi", phi}, {"d", d}, {"m_list", ms}}};
  const RootSystem rs = parse_root_system(phi);
  char* s = nullptr;
  check(lnl_track_json(rs.get(), static_cast<int>(d), ms.data(), ms.size(), &s));
  o.result = take_json(s);
  std::ostringstream t;
  t << std::left << std::setw(10) << "m" << std::setw(18) << "distance" << "max |Re(root)/m - h/2|\n";
  for (const auto& pt : o.result)
    t << std::left << std::setw(10) << pt["m"].get<int>() << std::setw(18) << std::setprecision(8)
      << pt["distance"].get<double>() << pt["max_real_deviation"].get<double>() << "\n";
  o.text = t.str();
  return o;
}

Output cmd_verify_all(const std::vector<int>& only, bool timing, bool& all_passed) {
  Output o{"verify-all", {{"only", only}}};
  char* s = nullptr;
  int ok = 0;
  check(lnl_verify_all_json(only.data(), only.size(), timing ? 1 : 0, &ok, &s));
  all_passed = ok != 0;
  o.result = take_json(s);
  std::ostringstream t;
  for (const auto& r : o.result) {
    t << "[" << (r["passed"].get<bool>() ? "PASS" : "FAIL") << "] " << std::setw(2) << r["criterion"].get<int>() << ". "
      << r["title"].get<std::string>();
    if (timing) t << " (" << std::fixed << std::setprecision(2) << r["seconds"].get<double>() << "s)" << std::defaultfloat;
    t << ": " << r["detail"].get<std::string>() << "\n";
    for (const auto& line : r["reported"]) t << "      " << line.get<std::string>() << "\n";
  }
  t << (all_passed ? "all criteria passed\n" : "some criteria FAILED\n");
  o.text = t.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic quasi-polynomials of extended Linial arrangements"};
  app.require_subcommand(1);
  Options opts;
  app.add_flag("--json", opts.json, "Emit the JSON envelope");
  app.add_option("--out", opts.out_file, "Write output to FILE instead of stdout");

  std::string phi;
  int m = 0;
  bool half = false;
  int series = 0;
  long constituent = 0;
  long residue_d = 1;
  long q = 0;
  bool unsafe_q = false;
  bool exact = false;
  bool numeric = false;
  bool timing = false;
  std::string g_json;
  std::vector<int> m_list;
  std::vector<int> only;

  auto add_phi = [&](CLI::App* sub) { sub->add_option("Phi", phi, "Root system: E6|E7|E8|F4|G2|A<k>|B<k>|C<k>|D<k>")->required(); };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opts.json, "Emit the JSON envelope");
    sub->add_option("--out", opts.out_file, "Write output to FILE instead of stdout");
  };

  auto* table = app.add_subcommand("table", "Root system catalog");
  add_common(table);

  auto* eulerian = app.add_subcommand("eulerian", "Generalized Eulerian polynomial");
  add_phi(eulerian);
  eulerian->add_flag("--half", half, "Truncated (half) Eulerian polynomial");
  add_common(eulerian);

  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart quasi-polynomial of the fundamental alcove");
  add_phi(ehrhart);
  ehrhart->add_option("--series", series, "First N Ehrhart series coefficients")->check(CLI::PositiveNumber);
  add_common(ehrhart);

  auto* charquasi = app.add_subcommand("charquasi", "Characteristic quasi-polynomial of the Linial arrangement");
  add_phi(charquasi);
  charquasi->add_option("-m", m, "Linial parameter m >= 0")->required()->check(CLI::NonNegativeNumber);
  charquasi->add_flag("--half", half, "Half characteristic quasi-polynomial");
  auto* constituent_opt = charquasi->add_option("--constituent", constituent, "Print one constituent");
  add_common(charquasi);

  auto* admissible = app.add_subcommand("admissible", "Admissible residues");
  add_phi(admissible);
  add_common(admissible);

  auto* toy = app.add_subcommand("toy", "R(S^{m+1}) g for a symmetric seed g");
  add_phi(toy);
  toy->add_option("-m", m, "Linial parameter m >= 0")->required()->check(CLI::NonNegativeNumber);
  toy->add_option("--g", g_json, "Seed polynomial as canonical JSON (default prod(t+e_i))");
  add_common(toy);

  auto* check_line = app.add_subcommand("check-line", "Certify that all roots lie on Re t = mh/2");
  add_phi(check_line);
  check_line->add_option("-m", m, "Linial parameter m >= 0")->required()->check(CLI::NonNegativeNumber);
  check_line->add_option("-d", residue_d, "Residue class of the constituent (default 1)");
  auto* exact_flag = check_line->add_flag("--exact", exact, "Exact Sturm certificate (default)");
  auto* numeric_flag = check_line->add_flag("--numeric", numeric, "Floating-point roots");
  exact_flag->excludes(numeric_flag);
  add_common(check_line);

  auto* limit_roots = app.add_subcommand("limit-roots", "Roots of the limit polynomial");
  add_phi(limit_roots);
  add_common(limit_roots);

  auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
  oracle->require_subcommand(1);
  auto* modq = oracle->add_subcommand("modq", "Count points of (Z/qZ)^l off the arrangement");
  add_phi(modq);
  modq->add_option("-m", m, "Linial parameter m >= 0")->required()->check(CLI::NonNegativeNumber);
  modq->add_option("-q", q, "Modulus")->required()->check(CLI::PositiveNumber);
  modq->add_flag("--unsafe-q", unsafe_q, "Allow q <= m*h");
  add_common(modq);

  auto* track = app.add_subcommand("track", "Rescaled root tracking as m grows");
  add_phi(track);
  track->add_option("-d", residue_d, "Residue class")->required();
  track->add_option("--m-list", m_list, "Values of m")->required()->delimiter(',');
  add_common(track);

  auto* verify_all = app.add_subcommand("verify-all", "Run every reproduction check");
  verify_all->add_option("--only", only, "Criterion numbers")->delimiter(',');
  verify_all->add_flag("--timing", timing, "Include per-criterion timings");
  add_common(verify_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Output out;
  for (const auto* sub : app.get_subcommands()) out.command = sub->get_name();
  if (*modq) out.command = "oracle modq";
  int exit_code = 0;
  try {
    if (*table) out = cmd_table();
    else if (*eulerian) out = cmd_eulerian(phi, half);
    else if (*ehrhart) out = cmd_ehrhart(phi, series);
    else if (*charquasi)
      out = cmd_charquasi(phi, m, half, *constituent_opt ? std::optional<long>(constituent) : std::nullopt);
    else if (*admissible) out = cmd_admissible(phi);
    else if (*toy) out = cmd_toy(phi, m, g_json);
    else if (*check_line) out = cmd_check_line(phi, m, residue_d, numeric);
    else if (*limit_roots) out = cmd_limit_roots(phi);
    else if (*modq) out = cmd_oracle_modq(phi, m, q, unsafe_q);
    else if (*track) out = cmd_track(phi, residue_d, m_list);
    else if (*verify_all) {
      bool passed = false;
      out = cmd_verify_all(only, timing, passed);
      exit_code = passed ? 0 : kExitComputation;
    }
    write(opts, opts.json ? envelope(out).dump(2) + "\n" : out.text);
    return exit_code;
  } catch (const ApiError& e) {
    const Json err{{"command", out.command},
                   {"error", {{"code", lnl_status_name(e.status)}, {"message", e.message}}},
                   {"schema_version", lnl_schema_version()}};
    if (opts.json) std::cout << err.dump(2) << "\n";
    else std::cerr << "error: " << lnl_status_name(e.status) << ": " << e.message << "\n";
    return kExitComputation;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: InvalidArgument: " << e.what() << "\n";
    return kExitUsage;
  }
}
