#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omegafn/functions.hpp"
#include "omegafn/membership.hpp"
#include "omegafn/series.hpp"

namespace omegafn {

/// A coefficient functional measured against its sharp bound.
struct BoundReport {
  std::string functional;
  double value = 0.0;
  double bound = 0.0;
  double slack = 0.0;                      // bound - value
  std::optional<std::string> attained_by;  // set when |slack| <= 1e-12
  bool uncertified = false;                // f was not certified in the class
};

/// Reports closer than this to the bound are recorded as attained.
inline constexpr double kAttainTol = 1e-12;

/// Coefficients of f plus whether f was certified a member. Build it once
/// when several reports are needed for the same function.
class CoefficientView {
 public:
  /// Runs is_member_omega unless `certified` is supplied.
  explicit CoefficientView(const AnalyticFunction& f,
                           std::optional<bool> certified = std::nullopt);

  const Series& coeffs() const noexcept { return coeffs_; }
  Complex a(int n) const noexcept { return n == 1 ? Complex{1.0} : coeffs_[n]; }
  bool certified() const noexcept { return certified_; }
  const std::string& label() const noexcept { return label_; }

 private:
  Series coeffs_;
  bool certified_;
  std::string label_;
};

/// k-th root transform F_k(z) = (f(z^k))^{1/k} = z + sum b_{kn+1} z^{kn+1}.
struct RootTransformCoeffs {
  int k = 1;
  std::map<int, Complex> b;  // exponent -> coefficient, exponents = 1 mod k
};

/// |a_n| <= 1/(2(n-1)) for n = 2..n_max.
std::vector<BoundReport> coeff_bound_check(const CoefficientView& view, int n_max = 16);
std::vector<BoundReport> coeff_bound_check(const AnalyticFunction& f, int n_max = 16);

/// |a_3 - mu a_2^2| <= max{1, |mu|}/4.
BoundReport fekete_szego(const CoefficientView& view, Complex mu);
BoundReport fekete_szego(const AnalyticFunction& f, Complex mu);

/// z pow(f(z^k)/z^k, 1/k) through the series kernel, up to z^order.
RootTransformCoeffs kth_root_transform(const AnalyticFunction& f, int k,
                                       int order = kWorkingOrder);
RootTransformCoeffs kth_root_transform(const Series& f, int k, int order = kWorkingOrder);

/// |b_{2k+1} - mu b_{k+1}^2| <= max{1, |(2mu + k - 1)/(2k)|}/(4k).
BoundReport fs_kroot(const CoefficientView& view, int k, Complex mu);
BoundReport fs_kroot(const AnalyticFunction& f, int k, Complex mu);

/// b_2, b_3, b_4 of the inverse function.
struct InverseCoefficients {
  Complex b2, b3, b4;
};

/// From series reversion.
InverseCoefficients inverse_coefficients(const Series& f);
/// From the closed forms -a_2, 2a_2^2 - a_3, -(5a_2^3 - 5a_2 a_3 + a_4).
InverseCoefficients inverse_coefficients_closed_form(Complex a2, Complex a3, Complex a4);

/// |b_2| <= 1/2, |b_3| <= 1/2, |b_4| <= 19/24.
std::vector<BoundReport> inverse_coeff_check(const CoefficientView& view);
std::vector<BoundReport> inverse_coeff_check(const AnalyticFunction& f);

/// Symmetric Toeplitz determinant of the coefficients a_n..a_{n+q-1}
/// (a_1 = 1), for the shapes (2, n >= 2), (3, 1) and (3, 2).
Complex toeplitz_value(const CoefficientView& view, int q, int n);
double toeplitz_bound(int q, int n);
BoundReport toeplitz_det(const CoefficientView& view, int q, int n);
BoundReport toeplitz_det(const AnalyticFunction& f, int q, int n);

}  // namespace omegafn
