#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "omegafn/series.hpp"

namespace omegafn {

/// Value, first and second derivative of a function at a point.
struct Jet {
  Complex f;
  Complex fp;
  Complex fpp;
  Complex at;
};

/// Closed-form catalog members.
enum class NamedKind {
  koebe,       // z/(1-z)^2
  ftilde,      // z + z^n/(2(n-1))
  ell,         // z + z^2/5 + z^3/8
  phi1fun,     // z - z^2/5 - z^3/8
  fhat,        // z + lambda z^2
  fgammabeta,  // z + gamma z^2 + beta z^3
};

struct NamedForm {
  NamedKind kind;
  int n = 0;         // ftilde index
  Complex p1{};      // lambda (fhat) or gamma (fgammabeta)
  Complex p2{};      // beta (fgammabeta)
};

/// f given through z/f(z) = d(z), with d a polynomial and d(0) = 1.
struct ReciprocalPoly {
  Series d;
};

/// A normalized analytic function on the unit disc in one of three forms.
///
/// Series forms are treated as exact polynomials: evaluation and derivatives
/// use all stored terms and nothing beyond. ReciprocalPoly construction scans
/// the open disc for zeros of d and rejects the function if it finds one.
class AnalyticFunction {
 public:
  using Repr = std::variant<Series, ReciprocalPoly, NamedForm>;

  /// Requires a_0 = 0 and a_1 = 1 (NotNormalized otherwise).
  static AnalyticFunction from_series(Series s, std::string label);

  /// Requires d(0) = 1 (BadConstantTerm) and d nonvanishing on the open disc
  /// (DomainError).
  static AnalyticFunction from_reciprocal(Series d, std::string label);

  static AnalyticFunction from_named(NamedForm form, std::string label);

  const Repr& repr() const noexcept { return repr_; }
  const std::string& label() const noexcept { return label_; }

  /// f, f', f'' at z. Throws PoleAtPoint where a ReciprocalPoly denominator
  /// vanishes and at z = 1 for the Koebe function.
  Jet jet(Complex z) const;

  Complex value(Complex z) const { return jet(z).f; }

  /// Taylor coefficients at the given order: exact for polynomial forms,
  /// the series quotient z/d for ReciprocalPoly, truncation for Koebe.
  Series to_series(int order = kWorkingOrder) const;

  /// Coefficients at the working order, or at the stored order of a Series
  /// form when that is larger.
  Series coefficients() const;

  /// True when f (and thus every functional built from its jet) is a
  /// polynomial, so boundary suprema can be taken on |z| = 1 itself.
  bool is_polynomial() const noexcept;

  /// Radius of the circle on which boundary suprema are evaluated:
  /// 1 for polynomials, 1 - 1e-6 otherwise.
  double boundary_radius() const noexcept;

 private:
  AnalyticFunction(Repr repr, std::string label);

  Repr repr_;
  std::string label_;
};

/// Radius used for non-polynomial representations.
inline constexpr double kInnerBoundaryRadius = 1.0 - 1e-6;

/// Denominators smaller than this count as poles.
inline constexpr double kPoleTol = 1e-12;

/// z + z^n/(2(n-1)); BadIndex for n < 2.
AnalyticFunction make_extremal(int n);

/// Looks up a catalog id: koebe, ftilde:n, ell, phi1fun, f1, fhat:re,im,
/// fgb:gre,gim,bre,bim. Throws UnknownId.
AnalyticFunction catalog(std::string_view id);

/// Catalog id or, failing that, a series literal ("0, 1, 0.5").
AnalyticFunction parse_function(std::string_view text);

struct CatalogEntry {
  std::string id;
  std::string formula;
};
std::vector<CatalogEntry> catalog_entries();

/// Coefficientwise (Hadamard) product of two normalized functions.
AnalyticFunction hadamard_product(const AnalyticFunction& f, const AnalyticFunction& g);

/// z f'(z) - f(z).
Complex omega_functional(const AnalyticFunction& f, Complex z);

/// (z/f(z))^2 f'(z) - 1, with value 0 at z = 0. Throws ZeroOfF when f
/// vanishes at z != 0.
Complex u_functional(const AnalyticFunction& f, Complex z);

}  // namespace omegafn
