#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace omegafn {

using Complex = std::complex<double>;

/// Truncation order used when no explicit order is requested.
inline constexpr int kWorkingOrder = 32;

/// Constant terms within this distance of the required value are accepted by
/// log/exp/pow, composition and reversion.
inline constexpr double kConstantTermTol = 1e-12;

/// Truncated power series sum_{j=0}^{N} c_j z^j with complex coefficients.
///
/// The truncation order N travels with the value. Binary arithmetic returns a
/// series of the smaller operand order; terms of degree > N are discarded and
/// never invented. Values are immutable once built, so every free function
/// below is safe to call concurrently.
class Series {
 public:
  /// The zero series of the given order.
  explicit Series(int order = kWorkingOrder);

  /// Coefficients by ascending degree, zero-padded or truncated to `order`.
  Series(std::vector<Complex> coeffs, int order);

  /// Order is taken from the coefficient count (size - 1).
  static Series from_coefficients(std::vector<Complex> coeffs);

  /// c * z^degree at the given order.
  static Series monomial(Complex c, int degree, int order = kWorkingOrder);

  /// The series z.
  static Series identity(int order = kWorkingOrder) { return monomial(1.0, 1, order); }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of z^j; zero for j outside [0, order].
  Complex operator[](int j) const noexcept {
    return (j >= 0 && j <= order()) ? coeffs_[static_cast<std::size_t>(j)] : Complex{};
  }

  /// Pads with zeros or drops terms so the result has exactly `order`.
  Series with_order(int order) const;

  /// Highest index with a nonzero coefficient, or -1 for the zero series.
  int degree() const noexcept;

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Series& rhs);
  Series& operator/=(const Series& rhs);
  Series& operator*=(Complex lambda);

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Complex> coeffs_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator-(Series a);
Series operator*(const Series& a, const Series& b);
/// Throws DivisionByZeroConstantTerm when b has a zero constant term.
Series operator/(const Series& a, const Series& b);
Series operator*(Complex lambda, Series a);
Series operator*(Series a, Complex lambda);

Series scale(const Series& a, Complex lambda);

/// sum j c_j z^{j-1}; the result has order N - 1 (0 for a constant).
Series derivative(const Series& a);
/// sum c_j z^{j+1}/(j+1) with zero integration constant; order N + 1.
Series integrate(const Series& a);

/// f(z)/z for f with zero constant term; order N - 1.
Series shift_div_z(const Series& a);

/// outer(inner(z)) truncated at outer.order(). inner must vanish at 0.
Series compose(const Series& outer, const Series& inner);

/// log(a) for a(0) = 1.
Series log_series(const Series& a);
/// exp(a) for a(0) = 0.
Series exp_series(const Series& a);
/// a^alpha = exp(alpha log a) for a(0) = 1 (principal branch).
Series pow_series(const Series& a, Complex alpha);

/// Compositional inverse of a normalized series (a_0 = 0, a_1 = 1),
/// computed by fixed-point iteration g <- z - (a(g) - g).
Series reversion(const Series& a);

/// Horner evaluation of the truncated polynomial.
Complex eval(const Series& a, Complex z);

struct Evaluation {
  Complex value;
  /// max|c_j| |z|^{N+1} / (1 - |z|), reported only for |z| < 1.
  std::optional<double> tail_bound;
};

Evaluation eval_with_tail(const Series& a, Complex z);

/// Coefficientwise product; order is the smaller operand order.
Series hadamard(const Series& a, const Series& b);

/// Max coefficientwise distance over the common order range.
double max_coeff_distance(const Series& a, const Series& b);

/// Parses the literal format "c0, c1, c2, ..." where each entry is a real
/// number, an imaginary number "bi", or "a+bi" / "a-bi".
/// Throws ParseError on malformed input.
Series parse_series(std::string_view text);

/// Parses a single complex literal in the series entry syntax.
Complex parse_complex(std::string_view text);

/// Inverse of parse_series (round-trips through doubles exactly).
std::string format_series(const Series& a);
std::string format_complex(Complex c);

}  // namespace omegafn
