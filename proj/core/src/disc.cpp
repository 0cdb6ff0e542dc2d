#include "omegafn/disc.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <map>
#include <mutex>

namespace omegafn {

int default_grid() {
  const char* env = std::getenv("OMEGA_GRID");
  if (env == nullptr) return kDefaultGrid;
  int value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value < kMinGrid) return kDefaultGrid;
  return value;
}

std::span<const Complex> unit_roots(int grid) {
  static std::mutex mutex;
  static std::map<int, std::vector<Complex>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(grid);
  if (it == cache.end()) {
    std::vector<Complex> roots(static_cast<std::size_t>(grid));
    for (int k = 0; k < grid; ++k) {
      roots[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / grid);
    }
    it = cache.emplace(grid, std::move(roots)).first;
  }
  return it->second;
}

namespace detail {

void check_circle_args(double r, int grid) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw Error(ErrorCode::domain_error, "circle radius must lie in (0, 1], got " +
                                             std::to_string(r));
  }
  if (grid < kMinGrid) {
    throw Error(ErrorCode::domain_error,
                "angular grid must have at least 256 points, got " + std::to_string(grid));
  }
}

void throw_evaluation_failure(Complex z, const char* what) {
  throw Error(ErrorCode::evaluation_failure, std::string("functional failed on the circle: ") + what,
              z);
}

}  // namespace detail

CircleExtremum series_sup_modulus(const Series& p, double r, int grid, int refine_steps) {
  return circle_sup_modulus([&p](Complex z) { return eval(p, z); }, r, grid, refine_steps);
}

std::string to_string(GeometricProperty p) {
  switch (p) {
    case GeometricProperty::starlike: return "starlike";
    case GeometricProperty::convex: return "convex";
    case GeometricProperty::close_to_convex: return "close_to_convex";
    case GeometricProperty::omega_bound: return "omega_bound";
    case GeometricProperty::u_bound: return "u_bound";
  }
  return "unknown";
}

double property_criterion(const AnalyticFunction& f, GeometricProperty property, double r,
                          int grid) {
  switch (property) {
    case GeometricProperty::starlike:
      return circle_min_real(
                 [&f](Complex z) {
                   const Jet j = f.jet(z);
                   return z * j.fp / j.f;
                 },
                 r, grid)
          .value;
    case GeometricProperty::convex:
      return circle_min_real(
                 [&f](Complex z) {
                   const Jet j = f.jet(z);
                   return 1.0 + z * j.fpp / j.fp;
                 },
                 r, grid)
          .value;
    case GeometricProperty::close_to_convex:
      return circle_min_real([&f](Complex z) { return f.jet(z).fp; }, r, grid).value;
    case GeometricProperty::omega_bound:
      return 0.5 -
             circle_sup_modulus([&f](Complex z) { return omega_functional(f, z); }, r, grid).value;
    case GeometricProperty::u_bound:
      return 1.0 -
             circle_sup_modulus([&f](Complex z) { return u_functional(f, z); }, r, grid).value;
  }
  return 0.0;
}

RadiusResult radius_of_property(const AnalyticFunction& f, GeometricProperty property,
                                double tol, int grid) {
  if (!(tol >= 1e-9 && tol < 0.5)) {
    throw Error(ErrorCode::domain_error, "radius tolerance must lie in [1e-9, 0.5)");
  }
  RadiusResult res;
  res.property = property;
  auto criterion = [&](double r) {
    ++res.evaluations;
    return property_criterion(f, property, r, grid);
  };

  double lo = 0.0;
  double hi = 1.0 - tol;
  if (criterion(hi) >= 0.0) {
    res.radius = 1.0;
    res.lo = hi;
    res.hi = 1.0;
  } else {
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (criterion(mid) >= 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    res.radius = lo;
    res.lo = lo;
    res.hi = hi;
  }

  // Radial monotonicity check over 32 radii.
  constexpr int kSweep = 32;
  for (int i = 1; i <= kSweep; ++i) {
    const double r = (1.0 - tol) * i / kSweep;
    if (r > res.lo && r < res.hi) continue;
    const bool nonneg = criterion(r) >= 0.0;
    if ((r <= res.lo && !nonneg) || (r >= res.hi && res.radius < 1.0 && nonneg)) {
      res.non_monotone = true;
    }
  }
  return res;
}

Complex q_map(double M, Complex a, Complex z) {
  if (!(M > 0.0) || !(std::abs(a) < M)) {
    throw Error(ErrorCode::domain_error, "q_map needs M > 0 and |a| < M", a);
  }
  return M * (M * z + a) / (M + std::conj(a) * z);
}

}  // namespace omegafn
