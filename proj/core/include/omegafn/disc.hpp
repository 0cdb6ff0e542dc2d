#pragma once

#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "omegafn/errors.hpp"
#include "omegafn/functions.hpp"
#include "omegafn/series.hpp"

namespace omegafn {

inline constexpr int kDefaultGrid = 4096;
inline constexpr int kMinGrid = 256;
inline constexpr int kDefaultRefineSteps = 60;

/// Boundary grid size: OMEGA_GRID when it holds an integer >= 256,
/// otherwise 4096.
int default_grid();

/// Any pure function of one complex variable.
using PointFunctional = std::function<Complex(Complex)>;

/// Extremum of a real quantity over a circle |z| = radius.
struct CircleExtremum {
  double radius = 0.0;
  double angle = 0.0;  // in [0, 2 pi)
  double value = 0.0;
  int grid = 0;
  bool refined = false;  // golden-section step beat the best grid sample
};

/// Unit-circle sample points e^{2 pi i k / grid}, cached per grid size.
std::span<const Complex> unit_roots(int grid);

namespace detail {

void check_circle_args(double r, int grid);

[[noreturn]] void throw_evaluation_failure(Complex z, const char* what);

// Maximizes score(z) over |z| = r: uniform grid, then golden-section search
// on the bracket around the best sample. Ties go to the smallest angle.
template <class Score>
CircleExtremum maximize_on_circle(Score&& score, double r, int grid, int refine_steps) {
  check_circle_args(r, grid);
  const auto roots = unit_roots(grid);
  auto eval_at = [&](Complex z) -> double {
    double v = 0.0;
    try {
      v = score(z);
    } catch (const std::exception& e) {
      throw_evaluation_failure(z, e.what());
    }
    if (!std::isfinite(v)) throw_evaluation_failure(z, "non-finite value");
    return v;
  };

  int best = 0;
  double best_value = -INFINITY;
  for (int k = 0; k < grid; ++k) {
    const double v = eval_at(r * roots[static_cast<std::size_t>(k)]);
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }

  const double step = 2.0 * std::numbers::pi / grid;
  const double center = step * best;
  CircleExtremum out{r, center, best_value, grid, false};
  if (refine_steps <= 0) return out;

  auto at_angle = [&](double theta) { return eval_at(std::polar(r, theta)); };
  constexpr double kInvPhi = 0.6180339887498949;
  double a = center - step;
  double b = center + step;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = at_angle(x1);
  double f2 = at_angle(x2);
  double arg = center;
  double top = best_value;
  auto consider = [&](double x, double v) {
    if (v > top) {
      top = v;
      arg = x;
    }
  };
  consider(x1, f1);
  consider(x2, f2);
  for (int it = 0; it < refine_steps; ++it) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = at_angle(x1);
      consider(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = at_angle(x2);
      consider(x2, f2);
    }
  }
  if (top > best_value) {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    arg = std::fmod(arg, kTwoPi);
    if (arg < 0.0) arg += kTwoPi;
    out.angle = arg;
    out.value = top;
    out.refined = true;
  }
  return out;
}

}  // namespace detail

/// Largest |g(z)| found on |z| = r: a lower bound on the true supremum.
/// Throws EvaluationFailure if g throws or returns a non-finite value.
template <class G>
CircleExtremum circle_sup_modulus(G&& g, double r, int grid = default_grid(),
                                  int refine_steps = kDefaultRefineSteps) {
  return detail::maximize_on_circle([&](Complex z) { return std::abs(g(z)); }, r, grid,
                                    refine_steps);
}

/// Smallest Re g(z) found on |z| = r.
template <class G>
CircleExtremum circle_min_real(G&& g, double r, int grid = default_grid(),
                               int refine_steps = kDefaultRefineSteps) {
  CircleExtremum e = detail::maximize_on_circle([&](Complex z) { return -g(z).real(); }, r,
                                                grid, refine_steps);
  e.value = -e.value;
  return e;
}

/// Sup of |p| on |z| = r for a series treated as a polynomial.
CircleExtremum series_sup_modulus(const Series& p, double r, int grid = default_grid(),
                                  int refine_steps = kDefaultRefineSteps);

enum class GeometricProperty { starlike, convex, close_to_convex, omega_bound, u_bound };

std::string to_string(GeometricProperty p);

struct RadiusResult {
  double radius = 0.0;
  GeometricProperty property = GeometricProperty::starlike;
  double lo = 0.0;
  double hi = 0.0;
  int evaluations = 0;
  bool non_monotone = false;  // verification sweep disagreed with the bisection
};

/// Value whose sign decides the property on |z| = r:
///   starlike        min Re(z f'/f)
///   convex          min Re(1 + z f''/f')
///   close_to_convex min Re f'  (comparison function g(z) = z)
///   omega_bound     1/2 - max |z f' - f|
///   u_bound         1 - max |(z/f)^2 f' - 1|
double property_criterion(const AnalyticFunction& f, GeometricProperty property, double r,
                          int grid = default_grid());

/// Largest r in (0, 1] with a nonnegative criterion on every circle of
/// radius <= r, located by bisection to within `tol`. Returns 1 when the
/// criterion is still nonnegative at r = 1 - tol.
RadiusResult radius_of_property(const AnalyticFunction& f, GeometricProperty property,
                                double tol = 1e-6, int grid = default_grid());

/// M (M z + a) / (M + conj(a) z): maps the unit disc onto |w| < M with
/// 0 -> a. Throws DomainError unless 0 <= |a| < M.
Complex q_map(double M, Complex a, Complex z);

}  // namespace omegafn
