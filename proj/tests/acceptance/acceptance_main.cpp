// Runs each acceptance criterion and prints one PASS/FAIL line for it.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "omegafn/coeff_bounds.hpp"
#include "omegafn/disc.hpp"
#include "omegafn/membership.hpp"
#include "omegafn/search.hpp"
#include "omegafn_cli/cli.hpp"
#include "omegafn_cli/plot.hpp"

using namespace omegafn;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && out_.pass) {
      out_.pass = false;
      first_failure_ = what;
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  Outcome done() {
    out_.detail = out_.pass ? notes_ : first_failure_ + (notes_.empty() ? "" : " | " + notes_);
    return out_;
  }

 private:
  Outcome out_;
  std::string first_failure_;
  std::string notes_;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

nlohmann::json cli_json(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run(args, out, err);
  if (code) *code = c;
  return nlohmann::json::parse(out.str());
}

std::string cli_text(const std::vector<std::string>& args, int* code) {
  std::ostringstream out, err;
  *code = cli::run(args, out, err);
  return out.str();
}

// Generator members used across the bound-soundness criteria. Degrees cycle
// through 0..14 so that every coefficient up to a_16 is exercised.
std::vector<AnalyticFunction> generator_members(int count, std::uint64_t base) {
  std::vector<AnalyticFunction> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(random_member(base + i, i % 15));
  return out;
}

const std::vector<AnalyticFunction>& members500() {
  static const std::vector<AnalyticFunction> m = generator_members(500, 5000);
  return m;
}

Outcome ac1() {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 2; n <= 20; ++n) {
    const auto j =
        cli_json({"member", "--class", "omega", "--fn", "ftilde:" + std::to_string(n)});
    c.require(j.at("decision") == "Member", "ftilde:" + std::to_string(n) + " not Member");
    worst = std::max(worst, std::abs(j.at("sup_found").get<double>() - 0.5));
  }
  const double secs = seconds_since(t0);
  c.require(worst <= 1e-6, "sup_found off by " + fmt("%.3g", worst));
  c.require(secs < 5.0, "took " + fmt("%.2f", secs) + " s");
  c.note("max |sup-0.5| = " + fmt("%.3g", worst) + ", " + fmt("%.2f", secs) + " s");
  return c.done();
}

Outcome ac2() {
  Checker c;
  const AnalyticFunction f1 = catalog("f1");
  const auto j = cli_json({"member", "--class", "omega", "--fn", "f1"});
  c.require(j.at("decision") == "NonMember", "f1 not rejected from the class");
  if (j.at("witness").is_array()) {
    const Complex w(j.at("witness")[0].get<double>(), j.at("witness")[1].get<double>());
    const double g = std::abs(omega_functional(f1, w));
    c.require(std::abs(w) < 1.0, "witness outside the disc");
    c.require(std::abs(g - 1.0) <= 1e-9, "|zf'-f| at witness = " + fmt("%.12g", g));
    c.note("witness " + fmt("%.6f", w.real()) + fmt("%+.2gi", w.imag()) + ", |zf'-f| = " +
           fmt("%.12f", g));
  } else {
    c.require(false, "no witness");
  }
  const Verdict u = is_member_u(f1);
  c.require(u.decision == Decision::member, "f1 not a U member");
  c.require(u.sup_found < 1.0, "U sup not below 1");
  c.note("U sup on r=1-1e-6: " + fmt("%.9f", u.sup_found));
  return c.done();
}

Outcome ac3() {
  Checker c;
  MembershipOptions a, b;
  a.grid = 4096;
  b.grid = 8192;
  const double s1 = is_member_u(make_extremal(3), a).sup_found;
  const double s2 = is_member_u(make_extremal(3), b).sup_found;
  c.require(s1 > 0.5 && s1 < 0.56, "sup = " + fmt("%.9f", s1));
  c.require(std::abs(s1 - s2) <= 1e-4, "grid doubling moved sup by " + fmt("%.3g", s1 - s2));
  c.note("sup = " + fmt("%.12f", s1) + " (grid 8192: " + fmt("%.12f", s2) + ")");
  return c.done();
}

Outcome ac4() {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  double prev = 0.0;
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n) {
    const double expected = std::pow(2.0 * (n - 1) / (n * n), 1.0 / (n - 1));
    const auto j = cli_json({"radius", "--property", "convex", "--fn",
                             "ftilde:" + std::to_string(n), "--tol", "1e-7"});
    const double r = j.at("radius").get<double>();
    worst = std::max(worst, std::abs(r - expected));
    c.require(std::abs(r - expected) <= 1e-5, "n=" + std::to_string(n) + " radius " +
                                                  fmt("%.9f", r) + " vs " +
                                                  fmt("%.9f", expected));
    c.require(r > prev, "radius not increasing at n=" + std::to_string(n));
    if (n == 2) c.require(std::abs(r - 0.5) <= 1e-5, "n=2 radius not 1/2");
    prev = r;
  }
  const double secs = seconds_since(t0);
  c.require(secs < 30.0, "took " + fmt("%.2f", secs) + " s");
  c.note("max error " + fmt("%.3g", worst) + ", r(10) = " + fmt("%.6f", prev) + ", " +
         fmt("%.2f", secs) + " s");
  return c.done();
}

Outcome ac5() {
  Checker c;
  double min_star = INFINITY;
  double min_ctc = INFINITY;
  for (const auto& f : generator_members(100, 9000)) {
    min_star = std::min(min_star, property_criterion(f, GeometricProperty::starlike, 0.999));
    min_ctc = std::min(min_ctc, property_criterion(f, GeometricProperty::close_to_convex, 0.999));
  }
  c.require(min_star > 0.0, "min Re(zf'/f) = " + fmt("%.6g", min_star));
  c.require(min_ctc > 0.0, "min Re f' = " + fmt("%.6g", min_ctc));
  c.note("min Re(zf'/f) = " + fmt("%.6f", min_star) + ", min Re f' = " + fmt("%.6f", min_ctc));
  return c.done();
}

Outcome ac6() {
  Checker c;
  double worst = INFINITY;
  for (const auto& f : members500()) {
    for (const auto& r : coeff_bound_check(CoefficientView(f), 16)) {
      worst = std::min(worst, r.slack);
      c.require(!r.uncertified, f.label() + " not certified");
    }
  }
  c.require(worst >= -1e-9, "slack " + fmt("%.3g", worst));
  for (int n = 2; n <= 16; ++n) {
    const auto reports = coeff_bound_check(make_extremal(n), 16);
    const BoundReport& r = reports[static_cast<std::size_t>(n - 2)];
    c.require(std::abs(r.slack) <= 1e-12 && r.attained_by.has_value(),
              "ftilde:" + std::to_string(n) + " misses equality");
  }
  c.note("min slack over 500 members = " + fmt("%.3g", worst));
  return c.done();
}

Outcome ac7() {
  Checker c;
  const Complex mus[] = {0.0, 0.5, 1.0, 2.0, 5.0};
  double worst = INFINITY;
  double worst_k = INFINITY;
  double k1_gap = 0.0;
  for (const auto& f : members500()) {
    const CoefficientView view(f, true);
    for (const Complex mu : mus) {
      const BoundReport plain = fekete_szego(view, mu);
      worst = std::min(worst, plain.slack);
      for (int k = 1; k <= 4; ++k) {
        const BoundReport r = fs_kroot(view, k, mu);
        worst_k = std::min(worst_k, r.slack);
        if (k == 1) k1_gap = std::max(k1_gap, std::abs(r.value - plain.value) + std::abs(r.bound - plain.bound));
      }
    }
  }
  c.require(worst >= -1e-9, "FS slack " + fmt("%.3g", worst));
  c.require(worst_k >= -1e-9, "k-root slack " + fmt("%.3g", worst_k));
  c.require(k1_gap == 0.0, "k=1 differs from plain FS by " + fmt("%.3g", k1_gap));
  for (const Complex mu : mus) {
    const char* witness = std::abs(mu) >= 1.0 ? "ftilde:2" : "ftilde:3";
    const BoundReport r = fekete_szego(catalog(witness), mu);
    c.require(std::abs(r.slack) <= 1e-12, std::string(witness) + " misses FS equality at mu=" +
                                              fmt("%g", mu.real()));
    if (std::abs(mu) == 1.0) {
      c.require(std::abs(fekete_szego(catalog("ftilde:3"), mu).slack) <= 1e-12,
                "ftilde:3 misses FS equality at mu=1");
    }
  }
  c.note("min FS slack " + fmt("%.3g", worst) + ", min k-root slack " + fmt("%.3g", worst_k));
  return c.done();
}

Outcome ac8() {
  Checker c;
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst_diff = 0.0;
  for (int i = 0; i < 100; ++i) {
    std::vector<Complex> a(11);
    a[1] = 1.0;
    for (int j = 2; j <= 10; ++j) {
      const double re = u(rng);
      a[static_cast<std::size_t>(j)] = Complex(re, u(rng));
    }
    const Series s(std::move(a), 10);
    const auto r = inverse_coefficients(s);
    const auto cf = inverse_coefficients_closed_form(s[2], s[3], s[4]);
    worst_diff = std::max({worst_diff, std::abs(r.b2 - cf.b2), std::abs(r.b3 - cf.b3),
                           std::abs(r.b4 - cf.b4)});
  }
  c.require(worst_diff <= 1e-10, "reversion vs closed form " + fmt("%.3g", worst_diff));
  double worst = INFINITY;
  for (const auto& f : members500()) {
    for (const auto& r : inverse_coeff_check(CoefficientView(f, true))) {
      worst = std::min(worst, r.slack);
    }
  }
  c.require(worst >= -1e-9, "inverse slack " + fmt("%.3g", worst));
  const auto ext = inverse_coeff_check(make_extremal(2));
  c.require(std::abs(ext[0].slack) <= 1e-12 && std::abs(ext[1].slack) <= 1e-12,
            "ftilde:2 misses |b2| = |b3| = 1/2");
  c.note("max reversion mismatch " + fmt("%.3g", worst_diff) + ", min slack " +
         fmt("%.3g", worst));
  return c.done();
}

Outcome ac9() {
  Checker c;
  double worst = INFINITY;
  for (const auto& f : members500()) {
    const CoefficientView view(f, true);
    for (int n = 2; n <= 15; ++n) worst = std::min(worst, toeplitz_det(view, 2, n).slack);
    worst = std::min(worst, toeplitz_det(view, 3, 1).slack);
    worst = std::min(worst, toeplitz_det(view, 3, 2).slack);
  }
  c.require(worst >= -1e-9, "Toeplitz slack " + fmt("%.3g", worst));
  c.note("min slack " + fmt("%.3g", worst));
  for (const char* t : {"t3:1", "t3:2"}) {
    SearchConfig cfg;
    cfg.target = parse_target(t);
    cfg.restarts = 8;
    cfg.steps_per_restart = 500;
    const SearchResult r = maximize_functional(cfg);
    c.require(r.best_value <= r.bound + 1e-9, std::string(t) + " search exceeded the bound");
    c.note(std::string(t) + " best " + fmt("%.6f", r.best_value) + " bound " +
           fmt("%.6f", r.bound) + " gap " + fmt("%.6f", r.bound - r.best_value));
  }
  return c.done();
}

Outcome ac10() {
  Checker c;
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> mass(0.0, 0.8);
  int implications = 0;
  int members_by_test[4] = {0, 0, 0, 0};
  for (int i = 0; i < 200; ++i) {
    const int degree = 2 + i % 6;
    std::vector<Complex> a(static_cast<std::size_t>(degree + 1));
    a[1] = 1.0;
    double total = 0.0;
    for (int j = 2; j <= degree; ++j) {
      const double re = u(rng);
      a[static_cast<std::size_t>(j)] = Complex(re, u(rng));
      total += std::abs(a[static_cast<std::size_t>(j)]);
    }
    const double m = mass(rng) / total;
    for (int j = 2; j <= degree; ++j) a[static_cast<std::size_t>(j)] *= m;
    const AnalyticFunction f =
        AnalyticFunction::from_series(Series(std::move(a), degree), "random");
    const bool omega = is_member_omega(f).decision == Decision::member;
    const auto [op1, op2] = obradovic_peng_tests(f);
    const Verdict tests[4] = {sufficient_fz_derivative(f), sufficient_coeff_sum(f), op1, op2};
    for (int t = 0; t < 4; ++t) {
      if (tests[t].decision == Decision::member) {
        ++members_by_test[t];
        ++implications;
        c.require(omega, "sufficient test " + std::to_string(t) + " accepted a non-member");
      }
    }
  }
  c.note(std::to_string(implications) + " implications checked (fz " +
         std::to_string(members_by_test[0]) + ", coeffsum " + std::to_string(members_by_test[1]) +
         ", op1 " + std::to_string(members_by_test[2]) + ", op2 " +
         std::to_string(members_by_test[3]) + ")");
  return c.done();
}

Outcome ac11() {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = cli_json({"search", "--target", "a2"});
  const double secs = seconds_since(t0);
  const auto b = cli_json({"search", "--target", "a2"});
  const double best = a.at("best_value").get<double>();
  c.require(best >= 0.499, "best |a2| = " + fmt("%.6f", best));
  c.require(a == b, "two runs with the same seed differ");
  c.note("best |a2| = " + fmt("%.9f", best) + ", " + fmt("%.1f", secs) + " s per run");
  return c.done();
}

Outcome ac12() {
  Checker c;
  for (const char* id : {"ell", "phi1fun"}) {
    int code = 0;
    const std::string csv = cli_text({"plot", "--fn", id, "--format", "csv"}, &code);
    c.require(code == 0, std::string("plot ") + id + " failed");
    const auto j = cli_json({"plot", "--fn", id});
    c.require(j.at("closed") == true, std::string(id) + " curve not closed");
    const std::string svg = cli_text({"plot", "--fn", id, "--r", "0.999", "--format", "svg"},
                                     &code);
    c.require(code == 0 && svg.find("<polyline") != std::string::npos, "svg missing");
  }
  const auto plot = cli::sample_boundary(catalog("ell"), 0.999, 4096);
  c.require(plot.points.size() == 4096, "expected 4096 samples");
  c.require(cli::is_simple_closed_curve(plot), "ell boundary image self-intersects");
  c.note("ell: 4096 segments, no crossings");
  return c.done();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 extremal membership", ac1},
      {"AC2 counterexample f1", ac2},
      {"AC3 U estimate for ftilde:3", ac3},
      {"AC4 radius of convexity", ac4},
      {"AC5 starlike and close-to-convex on r=0.999", ac5},
      {"AC6 coefficient bound soundness and sharpness", ac6},
      {"AC7 Fekete-Szego plain and k-th root", ac7},
      {"AC8 inverse coefficients", ac8},
      {"AC9 Toeplitz determinants", ac9},
      {"AC10 sufficient-condition consistency", ac10},
      {"AC11 search attainment for a2", ac11},
      {"AC12 boundary plots", ac12},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " :: " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
