#include "omegafn_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <span>

#include <CLI11.hpp>

#include "omegafn/coeff_bounds.hpp"
#include "omegafn/disc.hpp"
#include "omegafn/errors.hpp"
#include "omegafn/functions.hpp"
#include "omegafn/json_io.hpp"
#include "omegafn/membership.hpp"
#include "omegafn/search.hpp"
#include "omegafn_cli/plot.hpp"

namespace omegafn::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reported slack below this counts as a violated bound under --assert.
constexpr double kViolationTol = 1e-9;

int grid_from_env() {
  const char* raw = std::getenv("OMEGA_GRID");
  if (raw == nullptr) return kDefaultGrid;
  const std::string_view s(raw);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < kMinGrid) {
    throw UsageError("OMEGA_GRID must be an integer >= 256, got '" + std::string(s) + "'");
  }
  return v;
}

Complex parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  auto read = [&](std::string_view tok) {
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw UsageError("expected <re,im>, got '" + text + "'");
    }
    return v;
  };
  const std::string_view sv(text);
  if (comma == std::string::npos) return {read(sv), 0.0};
  return {read(sv.substr(0, comma)), read(sv.substr(comma + 1))};
}

bool any_violated(std::span<const BoundReport> reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const BoundReport& r) { return r.slack < -kViolationTol; });
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

// Nonzero coefficients above z^1 of a polynomial representation.
std::vector<std::pair<int, Complex>> tail_terms(const AnalyticFunction& f) {
  if (!f.is_polynomial()) throw UsageError("this test needs a polynomial function");
  const Series c = f.coefficients();
  std::vector<std::pair<int, Complex>> out;
  for (int j = 2; j <= c.order(); ++j) {
    if (c[j] != Complex{}) out.emplace_back(j, c[j]);
  }
  return out;
}

struct Options {
  std::string fn;
  std::string cls = "omega";
  std::string test;
  std::string property;
  std::string mu = "0,0";
  std::string format;
  std::string target;
  std::string trace_path;
  double tol = 1e-6;
  double r = 0.999;
  int nmax = 16;
  int k = 0;
  int q = 2;
  int n = 2;
  std::uint64_t seed = SearchConfig{}.seed;
  int restarts = SearchConfig{}.restarts;
  int steps = SearchConfig{}.steps_per_restart;
  int degree = SearchConfig{}.phi_degree;
  bool assert_result = false;
};

int finish(bool violated, const Options& o) {
  return (o.assert_result && violated) ? kExitAssertFailed : kExitOk;
}

int cmd_member(const Options& o, int grid, std::ostream& out) {
  const AnalyticFunction f = parse_function(o.fn);
  MembershipOptions mo;
  mo.grid = grid;
  const Verdict v = o.cls == "omega" ? is_member_omega(f, mo) : is_member_u(f, mo);
  print_json(out, to_json(v));
  return finish(v.decision == Decision::non_member, o);
}

int cmd_suff(const Options& o, int grid, std::ostream& out) {
  const AnalyticFunction f = parse_function(o.fn);
  MembershipOptions mo;
  mo.grid = grid;
  Verdict v;
  if (o.test == "fz") {
    v = sufficient_fz_derivative(f, mo);
  } else if (o.test == "coeffsum") {
    v = sufficient_coeff_sum(f);
  } else if (o.test == "monomial") {
    const auto terms = tail_terms(f);
    if (terms.size() > 1) throw UsageError("monomial test needs f = z + a_n z^n");
    v = terms.empty() ? sufficient_monomial(2, 0.0)
                      : sufficient_monomial(terms[0].first, terms[0].second);
  } else if (o.test == "gammabeta") {
    const auto terms = tail_terms(f);
    if (!terms.empty() && terms.back().first > 3) {
      throw UsageError("gamma-beta test needs f = z + gamma z^2 + beta z^3");
    }
    const Series c = f.coefficients();
    v = sufficient_gamma_beta(c[2], c[3]);
  } else {
    const auto [first, second] = obradovic_peng_tests(f, mo);
    v = o.test == "op1" ? first : second;
  }
  print_json(out, to_json(v));
  return finish(v.decision == Decision::non_member, o);
}

int cmd_radius(const Options& o, int grid, std::ostream& out) {
  const AnalyticFunction f = parse_function(o.fn);
  const GeometricProperty p = o.property == "starlike" ? GeometricProperty::starlike
                              : o.property == "convex" ? GeometricProperty::convex
                                                       : GeometricProperty::close_to_convex;
  print_json(out, to_json(radius_of_property(f, p, o.tol, grid)));
  return kExitOk;
}

int emit_reports(const Options& o, const std::vector<BoundReport>& reports, std::ostream& out) {
  if (o.format == "csv") {
    write_reports_csv(out, reports);
  } else {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    print_json(out, arr);
  }
  return finish(any_violated(reports), o);
}

CoefficientView view_of(const std::string& fn, int grid) {
  const AnalyticFunction f = parse_function(fn);
  MembershipOptions mo;
  mo.grid = grid;
  return CoefficientView(f, is_member_omega(f, mo).decision == Decision::member);
}

int cmd_coeffs(const Options& o, int grid, std::ostream& out) {
  return emit_reports(o, coeff_bound_check(view_of(o.fn, grid), o.nmax), out);
}

int cmd_fs(const Options& o, int grid, std::ostream& out) {
  const CoefficientView view = view_of(o.fn, grid);
  const Complex mu = parse_pair(o.mu);
  const BoundReport r = o.k > 0 ? fs_kroot(view, o.k, mu) : fekete_szego(view, mu);
  return emit_reports(o, {r}, out);
}

int cmd_invert(const Options& o, int grid, std::ostream& out) {
  return emit_reports(o, inverse_coeff_check(view_of(o.fn, grid)), out);
}

int cmd_toeplitz(const Options& o, int grid, std::ostream& out) {
  return emit_reports(o, {toeplitz_det(view_of(o.fn, grid), o.q, o.n)}, out);
}

int cmd_plot(const Options& o, int grid, std::ostream& out) {
  const PlotData p = sample_boundary(parse_function(o.fn), o.r, grid);
  if (o.format == "csv") {
    write_csv(out, p);
  } else if (o.format == "svg") {
    write_svg(out, p);
  } else {
    print_json(out, to_json(p));
  }
  return kExitOk;
}

int cmd_search(const Options& o, int grid, std::ostream& out) {
  SearchConfig cfg;
  cfg.target = parse_target(o.target);
  cfg.seed = o.seed;
  cfg.restarts = o.restarts;
  cfg.steps_per_restart = o.steps;
  cfg.phi_degree = o.degree;
  cfg.grid = grid;
  const SearchResult res = maximize_functional(cfg);
  nlohmann::json j = to_json(res);
  j["target"] = cfg.target.id;
  print_json(out, j);
  if (!o.trace_path.empty()) {
    std::ofstream trace(o.trace_path);
    if (!trace) throw UsageError("cannot open trace file '" + o.trace_path + "'");
    write_trace_csv(trace, res.trace);
  }
  return finish(res.best_value > res.bound + kViolationTol, o);
}

int cmd_catalog(std::ostream& out) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : catalog_entries()) arr.push_back({{"id", e.id}, {"formula", e.formula}});
  print_json(out, arr);
  return kExitOk;
}

bool is_usage_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::parse_error:
    case ErrorCode::unknown_id:
    case ErrorCode::unknown_target:
    case ErrorCode::bad_index:
    case ErrorCode::unsupported_shape:
    case ErrorCode::domain_error:
    case ErrorCode::not_normalized:
    case ErrorCode::bad_constant_term:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for normalized analytic functions on the unit disc", "omegafn"};
  app.require_subcommand(1);
  Options o;

  auto add_fn = [&](CLI::App* sub) {
    sub->add_option("--fn", o.fn, "catalog id or series literal")->required();
  };
  auto add_assert = [&](CLI::App* sub) {
    sub->add_flag("--assert", o.assert_result, "exit 1 on NonMember or a violated bound");
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--format", o.format)->check(CLI::IsMember(std::move(choices)));
  };

  auto* member = app.add_subcommand("member", "decide membership in a class");
  member->add_option("--class", o.cls)->required()->check(CLI::IsMember({"omega", "u"}));
  add_fn(member);
  add_assert(member);

  auto* suff = app.add_subcommand("suff", "run one sufficient condition");
  suff->add_option("--test", o.test)
      ->required()
      ->check(CLI::IsMember({"fz", "coeffsum", "monomial", "gammabeta", "op1", "op2"}));
  add_fn(suff);
  add_assert(suff);

  auto* radius = app.add_subcommand("radius", "radius of a geometric property");
  radius->add_option("--property", o.property)
      ->required()
      ->check(CLI::IsMember({"starlike", "convex", "ctc"}));
  add_fn(radius);
  radius->add_option("--tol", o.tol);

  auto* coeffs = app.add_subcommand("coeffs", "coefficient bounds |a_n| <= 1/(2(n-1))");
  add_fn(coeffs);
  coeffs->add_option("--nmax", o.nmax)->check(CLI::Range(2, 64));
  add_format(coeffs, {"json", "csv"});
  add_assert(coeffs);

  auto* fs = app.add_subcommand("fs", "Fekete-Szego functional");
  add_fn(fs);
  fs->add_option("--mu", o.mu)->required();
  fs->add_option("--k", o.k)->check(CLI::Range(1, 32));
  add_format(fs, {"json", "csv"});
  add_assert(fs);

  auto* invert = app.add_subcommand("invert", "inverse coefficient bounds");
  add_fn(invert);
  add_format(invert, {"json", "csv"});
  add_assert(invert);

  auto* toeplitz = app.add_subcommand("toeplitz", "Toeplitz determinant bounds");
  add_fn(toeplitz);
  toeplitz->add_option("--q", o.q)->required()->check(CLI::IsMember({2, 3}));
  toeplitz->add_option("--n", o.n)->required();
  add_format(toeplitz, {"json", "csv"});
  add_assert(toeplitz);

  auto* plot = app.add_subcommand("plot", "image of a circle |z| = r");
  add_fn(plot);
  plot->add_option("--r", o.r);
  add_format(plot, {"json", "csv", "svg"});

  auto* search = app.add_subcommand("search", "hill-climbing sharpness search");
  search->add_option("--target", o.target)->required();
  search->add_option("--seed", o.seed);
  search->add_option("--restarts", o.restarts)->check(CLI::PositiveNumber);
  search->add_option("--steps", o.steps)->check(CLI::NonNegativeNumber);
  search->add_option("--degree", o.degree)->check(CLI::NonNegativeNumber);
  search->add_option("--trace", o.trace_path, "write accepted steps as CSV");
  add_assert(search);

  auto* catalog_cmd = app.add_subcommand("catalog", "list catalog ids");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    const int grid = grid_from_env();
    if (*member) return cmd_member(o, grid, out);
    if (*suff) return cmd_suff(o, grid, out);
    if (*radius) return cmd_radius(o, grid, out);
    if (*coeffs) return cmd_coeffs(o, grid, out);
    if (*fs) return cmd_fs(o, grid, out);
    if (*invert) return cmd_invert(o, grid, out);
    if (*toeplitz) return cmd_toeplitz(o, grid, out);
    if (*plot) return cmd_plot(o, grid, out);
    if (*search) return cmd_search(o, grid, out);
    if (*catalog_cmd) return cmd_catalog(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_code(e.code()) ? kExitUsage : kExitAssertFailed;
  }
  return kExitUsage;
}

}  // namespace omegafn::cli
