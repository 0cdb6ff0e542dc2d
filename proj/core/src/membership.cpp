#include "omegafn/membership.hpp"

#include <cmath>
#include <numbers>

#include "omegafn/errors.hpp"

namespace omegafn {

namespace {

struct Rule {
  double threshold;
  bool strict;            // the condition is "<" on the open disc
  bool can_reject;        // a violation proves non-membership
};

// Point on the ray through the boundary maximizer at which |g| reaches
// min(2t, (t + sup)/2), located by bisection in the radius. Always strictly
// inside the disc and strictly above the threshold.
template <class G>
Complex radial_witness(G& g, double angle, double r_boundary, double threshold, double sup) {
  const double level = std::min(2.0 * threshold, 0.5 * (threshold + sup));
  if (std::abs(g(Complex{})) >= level) return Complex{};
  double lo = 0.0;
  double hi = r_boundary;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (std::abs(g(std::polar(mid, angle))) >= level) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return std::polar(hi, angle);
}

// Boundary-supremum decision shared by every functional test. The maximum
// principle turns "sup on the closed disc <= t" into the strict interior
// inequality unless the functional is constant at modulus t, detected
// through its value at the centre.
template <class G>
Verdict decide(G&& g, const AnalyticFunction& f, const Rule& rule,
               const MembershipOptions& opts) {
  const double r = f.boundary_radius();
  const bool certified = f.is_polynomial();
  const CircleExtremum ext = circle_sup_modulus(g, r, opts.grid, opts.refine_steps);

  Verdict v;
  v.threshold = rule.threshold;
  v.sup_found = ext.value;
  v.margin = rule.threshold - ext.value;

  if (ext.value > rule.threshold + opts.tol) {
    if (rule.can_reject) {
      v.decision = Decision::non_member;
      v.witness = radial_witness(g, ext.angle, r, rule.threshold, ext.value);
    } else {
      v.decision = Decision::inconclusive;
    }
    return v;
  }
  if (rule.strict && std::abs(g(Complex{})) >= rule.threshold - opts.tol) {
    v.decision = Decision::inconclusive;
    return v;
  }
  if (certified || ext.value <= rule.threshold - opts.tol) {
    v.decision = Decision::member;
  } else {
    v.decision = Decision::inconclusive;
  }
  return v;
}

void screen_zeros(const AnalyticFunction& f) {
  constexpr int kRadii = 64;
  constexpr int kAngles = 512;
  const double rb = f.boundary_radius();
  for (int i = 1; i <= kRadii; ++i) {
    const double r = rb * i / kRadii;
    for (int k = 0; k < kAngles; ++k) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / kAngles);
      if (std::abs(f.value(z)) <= kPoleTol * r) {
        throw Error(ErrorCode::zero_of_f, "f vanishes away from the origin", z);
      }
    }
  }
}

Verdict scalar_verdict(double value, double threshold) {
  Verdict v;
  v.threshold = threshold;
  v.sup_found = value;
  v.margin = threshold - value;
  v.decision = value < threshold ? Decision::member : Decision::inconclusive;
  return v;
}

}  // namespace

std::string to_string(Decision d) {
  switch (d) {
    case Decision::member: return "Member";
    case Decision::non_member: return "NonMember";
    case Decision::inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

BoundedAnalytic BoundedAnalytic::normalize(Series phi, int grid) {
  const double sup = series_sup_modulus(phi, 1.0, grid).value;
  if (sup > 1.0) {
    phi *= Complex{1.0 / sup};
    return BoundedAnalytic(std::move(phi), 1.0);
  }
  return BoundedAnalytic(std::move(phi), sup);
}

BoundedAnalytic BoundedAnalytic::scaled_to_unit() const {
  if (sup_ <= 0.0) return *this;
  return BoundedAnalytic(phi_ * Complex{1.0 / sup_}, 1.0);
}

Verdict is_member_omega(const AnalyticFunction& f, const MembershipOptions& opts) {
  auto g = [&f](Complex z) { return omega_functional(f, z); };
  return decide(g, f, {0.5, true, true}, opts);
}

Verdict is_member_u(const AnalyticFunction& f, const MembershipOptions& opts) {
  screen_zeros(f);
  auto g = [&f](Complex z) { return u_functional(f, z); };
  return decide(g, f, {1.0, true, true}, opts);
}

Verdict sufficient_fz_derivative(const AnalyticFunction& f, const MembershipOptions& opts) {
  // (f/z)' = (z f' - f)/z^2, equal to a_2 = f''(0)/2 at the origin.
  auto g = [&f](Complex z) {
    const Jet j = f.jet(z);
    if (z == Complex{}) return 0.5 * j.fpp;
    return (z * j.fp - j.f) / (z * z);
  };
  return decide(g, f, {0.5, true, false}, opts);
}

Verdict sufficient_coeff_sum(const AnalyticFunction& f) {
  if (!f.is_polynomial()) {
    Verdict v;
    v.threshold = 0.5;
    v.sup_found = INFINITY;
    v.margin = -INFINITY;
    return v;
  }
  const Series a = f.coefficients();
  double sum = 0.0;
  for (int n = 1; n + 1 <= a.order(); ++n) sum += n * std::abs(a[n + 1]);
  return scalar_verdict(sum, 0.5);
}

Verdict sufficient_monomial(int n, Complex a_n) {
  if (n < 2) throw Error(ErrorCode::bad_index, "monomial test needs n >= 2");
  return scalar_verdict(std::abs(a_n), 1.0 / (2.0 * (n - 1)));
}

Verdict sufficient_gamma_beta(Complex gamma, Complex beta) {
  return scalar_verdict(std::abs(gamma) + 2.0 * std::abs(beta), 0.5);
}

std::pair<Verdict, Verdict> obradovic_peng_tests(const AnalyticFunction& f,
                                                 const MembershipOptions& opts) {
  auto second = [&f](Complex z) { return f.jet(z).fpp; };
  auto combined = [&f](Complex z) {
    const Jet j = f.jet(z);
    return z * z * j.fpp + z * j.fp - j.f;
  };
  return {decide(second, f, {1.0, false, false}, opts),
          decide(combined, f, {1.5, false, false}, opts)};
}

AnalyticFunction from_phi(const BoundedAnalytic& phi, int order) {
  const Series& p = phi.phi();
  const Series integral = integrate(p);  // order N + 1
  const int full = integral.order() + 1;
  std::vector<Complex> a(static_cast<std::size_t>(full + 1));
  a[1] = 1.0;
  for (int j = 1; j <= integral.order(); ++j) a[static_cast<std::size_t>(j + 1)] = 0.5 * integral[j];
  Series s(std::move(a), full);
  if (order > 0) s = s.with_order(order);
  return AnalyticFunction::from_series(std::move(s), "phi:" + format_series(p));
}

Verdict subordination_check(const AnalyticFunction& f, const MembershipOptions& opts) {
  // q_{1/2} maps the disc onto |w| < 1/2 and fixes 0, where z f' - f also
  // vanishes; subordination reduces to range inclusion in that disc.
  const double radius = std::abs(q_map(0.5, Complex{}, Complex{1.0}));
  auto g = [&f](Complex z) { return omega_functional(f, z); };
  return decide(g, f, {radius, true, true}, opts);
}

}  // namespace omegafn
