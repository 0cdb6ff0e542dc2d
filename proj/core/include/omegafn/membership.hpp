#pragma once

#include <optional>
#include <string>
#include <utility>

#include "omegafn/disc.hpp"
#include "omegafn/functions.hpp"
#include "omegafn/series.hpp"

namespace omegafn {

enum class Decision { member, non_member, inconclusive };

/// "Member", "NonMember" or "Inconclusive".
std::string to_string(Decision d);

/// Outcome of a membership or sufficient-condition test.
///
/// sup_found is the largest functional modulus located (or the tested
/// scalar for coefficient conditions) and margin = threshold - sup_found.
/// A NonMember verdict always carries a witness strictly inside the disc at
/// which the defining inequality fails.
struct Verdict {
  Decision decision = Decision::inconclusive;
  std::optional<Complex> witness;
  double sup_found = 0.0;
  double margin = 0.0;
  double threshold = 0.0;
};

struct MembershipOptions {
  double tol = 1e-9;
  int grid = default_grid();
  int refine_steps = kDefaultRefineSteps;
};

/// A polynomial phi with max |phi| <= 1 on the unit circle (up to the
/// sampling accuracy of the disc module).
class BoundedAnalytic {
 public:
  /// phi = 0.
  BoundedAnalytic() : phi_(0), sup_(0.0) {}

  /// Divides phi by its measured boundary supremum when that exceeds 1.
  static BoundedAnalytic normalize(Series phi, int grid = default_grid());

  /// phi scaled so that its boundary supremum is exactly 1 (unchanged when
  /// phi = 0). Reuses the stored estimate; no new sampling.
  BoundedAnalytic scaled_to_unit() const;

  const Series& phi() const noexcept { return phi_; }
  double sup_norm_estimate() const noexcept { return sup_; }

 private:
  BoundedAnalytic(Series phi, double sup) : phi_(std::move(phi)), sup_(sup) {}

  Series phi_;
  double sup_;
};

/// |z f' - f| < 1/2 on the disc, certified through the boundary supremum.
Verdict is_member_omega(const AnalyticFunction& f, const MembershipOptions& opts = {});

/// |(z/f)^2 f' - 1| < 1 on the disc. Throws ZeroOfF when the zero screen
/// finds f vanishing away from the origin.
Verdict is_member_u(const AnalyticFunction& f, const MembershipOptions& opts = {});

/// |(f(z)/z)'| < 1/2 implies membership. Member or Inconclusive only.
Verdict sufficient_fz_derivative(const AnalyticFunction& f, const MembershipOptions& opts = {});

/// f(z) = z(1 + sum c_n z^n) with sum n|c_n| < 1/2 implies membership.
/// Inconclusive for non-polynomial representations (unknown tail).
Verdict sufficient_coeff_sum(const AnalyticFunction& f);

/// z + a_n z^n with |a_n| < 1/(2(n-1)). Throws BadIndex for n < 2.
Verdict sufficient_monomial(int n, Complex a_n);

/// z + gamma z^2 + beta z^3 with |gamma| + 2|beta| < 1/2.
Verdict sufficient_gamma_beta(Complex gamma, Complex beta);

/// The pair of sufficient conditions |f''| <= 1 and
/// |z^2 f'' + z f' - f| <= 3/2, in that order.
std::pair<Verdict, Verdict> obradovic_peng_tests(const AnalyticFunction& f,
                                                 const MembershipOptions& opts = {});

/// f(z) = z + (1/2) z int_0^z phi, so that z f' - f = z^2 phi / 2 and
/// a_n = phi_{n-2} / (2(n-1)). order <= 0 keeps every generated term.
AnalyticFunction from_phi(const BoundedAnalytic& phi, int order = 0);

/// z f' - f subordinate to q_{1/2}(z) = z/2. Decides exactly as
/// is_member_omega, with the threshold read off the image disc of q_{1/2}.
Verdict subordination_check(const AnalyticFunction& f, const MembershipOptions& opts = {});

}  // namespace omegafn
