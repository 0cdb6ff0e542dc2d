#include "omegafn/coeff_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "omegafn/errors.hpp"

namespace omegafn {

namespace {

BoundReport make_report(std::string name, double value, double bound,
                        const CoefficientView& view) {
  BoundReport r;
  r.functional = std::move(name);
  r.value = value;
  r.bound = bound;
  r.slack = bound - value;
  if (std::abs(r.slack) <= kAttainTol) r.attained_by = view.label();
  r.uncertified = !view.certified();
  return r;
}

std::string mu_tag(Complex mu) { return format_complex(mu); }

void require_shape(int q, int n) {
  const bool ok = (q == 2 && n >= 2) || (q == 3 && (n == 1 || n == 2));
  if (!ok) {
    throw Error(ErrorCode::unsupported_shape, "Toeplitz shape (q=" + std::to_string(q) +
                                                  ", n=" + std::to_string(n) +
                                                  ") is not supported");
  }
}

}  // namespace

CoefficientView::CoefficientView(const AnalyticFunction& f, std::optional<bool> certified)
    : coeffs_(f.coefficients()),
      certified_(certified ? *certified : is_member_omega(f).decision == Decision::member),
      label_(f.label()) {}

std::vector<BoundReport> coeff_bound_check(const CoefficientView& view, int n_max) {
  std::vector<BoundReport> out;
  for (int n = 2; n <= n_max; ++n) {
    out.push_back(make_report("a" + std::to_string(n), std::abs(view.a(n)),
                              1.0 / (2.0 * (n - 1)), view));
  }
  return out;
}

std::vector<BoundReport> coeff_bound_check(const AnalyticFunction& f, int n_max) {
  return coeff_bound_check(CoefficientView(f), n_max);
}

BoundReport fekete_szego(const CoefficientView& view, Complex mu) {
  const Complex a2 = view.a(2);
  const Complex a3 = view.a(3);
  return make_report("fekete_szego[mu=" + mu_tag(mu) + "]", std::abs(a3 - mu * a2 * a2),
                     0.25 * std::max(1.0, std::abs(mu)), view);
}

BoundReport fekete_szego(const AnalyticFunction& f, Complex mu) {
  return fekete_szego(CoefficientView(f), mu);
}

RootTransformCoeffs kth_root_transform(const Series& f, int k, int order) {
  if (k < 1) throw Error(ErrorCode::bad_index, "root transform needs k >= 1");
  RootTransformCoeffs out;
  out.k = k;
  if (k == 1) {
    for (int j = 1; j <= std::max(order, 1); ++j) out.b[j] = j == 1 ? Complex{1.0} : f[j];
    return out;
  }
  // f(z^k)/z^k = 1 + a_2 z^k + a_3 z^{2k} + ...; its 1/k-th power times z.
  const int inner_order = std::max(order - 1, 0);
  std::vector<Complex> g(static_cast<std::size_t>(inner_order + 1));
  for (int j = 0; j * k <= inner_order; ++j) g[static_cast<std::size_t>(j * k)] = f[j + 1];
  const Series root = pow_series(Series(std::move(g), inner_order), Complex{1.0 / k});
  for (int j = 0; j <= inner_order; j += k) out.b[j + 1] = root[j];
  return out;
}

RootTransformCoeffs kth_root_transform(const AnalyticFunction& f, int k, int order) {
  return kth_root_transform(f.coefficients(), k, order);
}

BoundReport fs_kroot(const CoefficientView& view, int k, Complex mu) {
  const RootTransformCoeffs t = kth_root_transform(view.coeffs(), k, 2 * k + 1);
  const Complex b1 = t.b.at(k + 1);
  const Complex b2 = t.b.at(2 * k + 1);
  const double bound =
      std::max(1.0, std::abs((2.0 * mu + static_cast<double>(k - 1)) / (2.0 * k))) / (4.0 * k);
  return make_report("fs_kroot[k=" + std::to_string(k) + ",mu=" + mu_tag(mu) + "]",
                     std::abs(b2 - mu * b1 * b1), bound, view);
}

BoundReport fs_kroot(const AnalyticFunction& f, int k, Complex mu) {
  return fs_kroot(CoefficientView(f), k, mu);
}

InverseCoefficients inverse_coefficients(const Series& f) {
  const Series g = reversion(f.with_order(std::max(f.order(), 4)));
  return {g[2], g[3], g[4]};
}

InverseCoefficients inverse_coefficients_closed_form(Complex a2, Complex a3, Complex a4) {
  return {-a2, 2.0 * a2 * a2 - a3, -(5.0 * a2 * a2 * a2 - 5.0 * a2 * a3 + a4)};
}

std::vector<BoundReport> inverse_coeff_check(const CoefficientView& view) {
  const InverseCoefficients b = inverse_coefficients(view.coeffs().with_order(4));
  const InverseCoefficients closed =
      inverse_coefficients_closed_form(view.a(2), view.a(3), view.a(4));
  const double scale = 1.0 + std::abs(view.a(2)) + std::abs(view.a(3)) + std::abs(view.a(4));
  const double mismatch = std::max({std::abs(b.b2 - closed.b2), std::abs(b.b3 - closed.b3),
                                    std::abs(b.b4 - closed.b4)});
  if (mismatch > 1e-9 * scale * scale * scale) {
    throw Error(ErrorCode::evaluation_failure,
                "reversion disagrees with the closed-form inverse coefficients");
  }
  return {make_report("b2", std::abs(b.b2), 0.5, view),
          make_report("b3", std::abs(b.b3), 0.5, view),
          make_report("b4", std::abs(b.b4), 19.0 / 24.0, view)};
}

std::vector<BoundReport> inverse_coeff_check(const AnalyticFunction& f) {
  return inverse_coeff_check(CoefficientView(f));
}

Complex toeplitz_value(const CoefficientView& view, int q, int n) {
  require_shape(q, n);
  if (q == 2) {
    const Complex an = view.a(n);
    const Complex an1 = view.a(n + 1);
    return an * an - an1 * an1;
  }
  const Complex a2 = view.a(2);
  const Complex a3 = view.a(3);
  if (n == 1) return 1.0 - 2.0 * a2 * a2 + 2.0 * a3 * a2 * a2 - a3 * a3;
  const Complex a4 = view.a(4);
  return (a2 - a4) * (a2 * a2 - 2.0 * a3 * a3 + a2 * a4);
}

double toeplitz_bound(int q, int n) {
  require_shape(q, n);
  if (q == 2) {
    const double m = n - 1.0;
    return 1.0 / (4.0 * m * m) + 1.0 / (4.0 * n * n);
  }
  return n == 1 ? 13.0 / 8.0 : 329.0 / 549.0;
}

BoundReport toeplitz_det(const CoefficientView& view, int q, int n) {
  return make_report("T" + std::to_string(q) + "(" + std::to_string(n) + ")",
                     std::abs(toeplitz_value(view, q, n)), toeplitz_bound(q, n), view);
}

BoundReport toeplitz_det(const AnalyticFunction& f, int q, int n) {
  return toeplitz_det(CoefficientView(f), q, n);
}

}  // namespace omegafn
