#include "omegafn/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "omegafn/errors.hpp"

namespace omegafn {

namespace {

[[noreturn]] void unknown_target(std::string_view id) {
  throw Error(ErrorCode::unknown_target, "unrecognized search target '" + std::string(id) + "'");
}

std::vector<double> numbers_after(std::string_view text, std::string_view id) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::string_view tok = text.substr(start, end - start);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) unknown_target(id);
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int as_int(double v, std::string_view id) {
  if (v != std::floor(v) || v < 0 || v > 1000) unknown_target(id);
  return static_cast<int>(v);
}

// splitmix64 finalizer.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct RestartOutcome {
  double best_value = -1.0;
  BoundedAnalytic best_phi;
  std::vector<TracePoint> trace;
};

double score(const Target& target, const BoundedAnalytic& phi) {
  const AnalyticFunction f = from_phi(phi);
  return evaluate_target(target, CoefficientView(f, true));
}

RestartOutcome run_restart(const SearchConfig& cfg, int restart) {
  std::mt19937_64 rng(restart_seed(cfg.seed, restart));
  std::normal_distribution<double> gauss(0.0, 1.0);

  RestartOutcome out;
  out.best_phi = random_phi(rng, cfg.phi_degree, cfg.grid);
  out.best_value = score(cfg.target, out.best_phi);
  out.trace.push_back({restart, 0, out.best_value});

  // Success-rule step control: widen after an accepted step, narrow slowly
  // after a rejected one, so sigma settles where about 1 step in 11 wins.
  // Widths are relative to each coefficient, letting the ones that should
  // vanish shrink geometrically instead of random-walking near zero.
  constexpr double kGrow = 1.5;
  const double shrink = std::pow(kGrow, -0.1);
  constexpr double kMinWidth = 1e-3;
  double sigma = cfg.step_scale;
  for (int step = 1; step <= cfg.steps_per_restart; ++step) {
    const Series& cur = out.best_phi.phi();
    std::vector<Complex> c(cur.coeffs().begin(), cur.coeffs().end());
    for (auto& x : c) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      x += sigma * std::max(std::abs(x), kMinWidth) * Complex{re, im};
    }
    // The capped candidate and its rescaling onto sup = 1 share one
    // boundary measurement; keep whichever scores higher.
    BoundedAnalytic cand = BoundedAnalytic::normalize(Series(std::move(c), cur.order()), cfg.grid);
    double v = score(cfg.target, cand);
    if (cand.sup_norm_estimate() < 1.0) {
      BoundedAnalytic full = cand.scaled_to_unit();
      const double vf = score(cfg.target, full);
      if (vf > v) {
        v = vf;
        cand = std::move(full);
      }
    }
    if (v > out.best_value) {
      out.best_value = v;
      out.best_phi = std::move(cand);
      out.trace.push_back({restart, step, v});
      sigma = std::min(sigma * kGrow, 1.0);
    } else {
      sigma = std::max(sigma * shrink, 1e-12);
    }
  }
  return out;
}

}  // namespace

Target parse_target(std::string_view id) {
  Target t;
  t.id = std::string(id);
  const std::size_t colon = id.find(':');
  const std::string_view head = id.substr(0, colon);
  const std::string_view tail =
      colon == std::string_view::npos ? std::string_view{} : id.substr(colon + 1);
  const bool has_tail = colon != std::string_view::npos;

  if (!has_tail && head.size() >= 2 && head[0] == 'a') {
    const auto v = numbers_after(head.substr(1), id);
    t.kind = TargetKind::coefficient;
    t.n = as_int(v.at(0), id);
    if (t.n < 2) unknown_target(id);
    return t;
  }
  if (!has_tail && (head == "b2" || head == "b3" || head == "b4")) {
    t.kind = TargetKind::inverse;
    t.n = head[1] - '0';
    return t;
  }
  if (has_tail && head == "fs") {
    const auto v = numbers_after(tail, id);
    if (v.size() > 2) unknown_target(id);
    t.kind = TargetKind::fekete_szego;
    t.mu = {v[0], v.size() > 1 ? v[1] : 0.0};
    return t;
  }
  if (has_tail && head == "fsk") {
    const auto v = numbers_after(tail, id);
    if (v.size() < 2 || v.size() > 3) unknown_target(id);
    t.kind = TargetKind::fs_kroot;
    t.k = as_int(v[0], id);
    if (t.k < 1) unknown_target(id);
    t.mu = {v[1], v.size() > 2 ? v[2] : 0.0};
    return t;
  }
  if (has_tail && (head == "t2" || head == "t3")) {
    const auto v = numbers_after(tail, id);
    if (v.size() != 1) unknown_target(id);
    t.kind = TargetKind::toeplitz;
    t.q = head[1] - '0';
    t.n = as_int(v[0], id);
    const bool ok = (t.q == 2 && t.n >= 2) || (t.q == 3 && (t.n == 1 || t.n == 2));
    if (!ok) unknown_target(id);
    return t;
  }
  unknown_target(id);
}

double evaluate_target(const Target& t, const CoefficientView& view) {
  switch (t.kind) {
    case TargetKind::coefficient: return std::abs(view.a(t.n));
    case TargetKind::fekete_szego: return fekete_szego(view, t.mu).value;
    case TargetKind::fs_kroot: return fs_kroot(view, t.k, t.mu).value;
    case TargetKind::inverse: return inverse_coeff_check(view).at(static_cast<std::size_t>(t.n - 2)).value;
    case TargetKind::toeplitz: return toeplitz_det(view, t.q, t.n).value;
  }
  return 0.0;
}

double target_bound(const Target& t) {
  const CoefficientView identity(make_extremal(2), true);
  switch (t.kind) {
    case TargetKind::coefficient: return 1.0 / (2.0 * (t.n - 1));
    case TargetKind::fekete_szego: return fekete_szego(identity, t.mu).bound;
    case TargetKind::fs_kroot: return fs_kroot(identity, t.k, t.mu).bound;
    case TargetKind::inverse: return inverse_coeff_check(identity).at(static_cast<std::size_t>(t.n - 2)).bound;
    case TargetKind::toeplitz: return toeplitz_bound(t.q, t.n);
  }
  return 0.0;
}

BoundedAnalytic random_phi(std::mt19937_64& rng, int phi_degree, int grid) {
  if (phi_degree < 0) throw Error(ErrorCode::domain_error, "phi degree must be >= 0");
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double s = 1.0 / (phi_degree + 1);
  std::vector<Complex> c(static_cast<std::size_t>(phi_degree + 1));
  for (auto& x : c) {
    const double re = unit(rng);
    const double im = unit(rng);
    x = s * Complex{re, im};
  }
  return BoundedAnalytic::normalize(Series(std::move(c), phi_degree), grid);
}

AnalyticFunction random_member(std::uint64_t seed, int phi_degree, int grid) {
  std::mt19937_64 rng(seed);
  return from_phi(random_phi(rng, phi_degree, grid));
}

std::uint64_t restart_seed(std::uint64_t master, int restart) {
  return mix(mix(master) ^ static_cast<std::uint64_t>(restart));
}

SearchResult maximize_functional(const SearchConfig& config) {
  if (config.restarts < 1 || config.phi_degree < 0 || config.steps_per_restart < 0 ||
      !(config.step_scale > 0.0 && config.step_scale <= 1.0)) {
    throw Error(ErrorCode::domain_error, "invalid search configuration");
  }
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int r = next++; r < config.restarts; r = next++) {
      try {
        outcomes[static_cast<std::size_t>(r)] = run_restart(config, r);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int n_threads = static_cast<int>(std::min<unsigned>(hw, static_cast<unsigned>(config.restarts)));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  SearchResult res;
  res.bound = target_bound(config.target);
  res.best_value = -1.0;
  for (int r = 0; r < config.restarts; ++r) {
    auto& o = outcomes[static_cast<std::size_t>(r)];
    if (o.best_value > res.best_value) {
      res.best_value = o.best_value;
      res.best_phi = o.best_phi;
      res.best_restart = r;
    }
    res.trace.insert(res.trace.end(), o.trace.begin(), o.trace.end());
  }
  return res;
}

}  // namespace omegafn
