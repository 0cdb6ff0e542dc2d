#include "omegafn/series.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "omegafn/errors.hpp"

namespace omegafn {

namespace {

std::size_t as_size(int n) { return static_cast<std::size_t>(n); }

void require_order(int order) {
  if (order < 0) {
    throw Error(ErrorCode::domain_error, "series order must be nonnegative, got " +
                                             std::to_string(order));
  }
}

// Product truncated at `order`.
std::vector<Complex> truncated_product(std::span<const Complex> a, std::span<const Complex> b,
                                       int order) {
  std::vector<Complex> out(as_size(order + 1));
  const int na = std::min<int>(static_cast<int>(a.size()) - 1, order);
  for (int i = 0; i <= na; ++i) {
    const Complex ai = a[as_size(i)];
    if (ai == Complex{}) continue;
    const int nb = std::min<int>(static_cast<int>(b.size()) - 1, order - i);
    for (int j = 0; j <= nb; ++j) out[as_size(i + j)] += ai * b[as_size(j)];
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc{} || ptr != last) {
    throw Error(ErrorCode::parse_error, "malformed number '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Series::Series(int order) {
  require_order(order);
  coeffs_.assign(as_size(order + 1), Complex{});
}

Series::Series(std::vector<Complex> coeffs, int order) : coeffs_(std::move(coeffs)) {
  require_order(order);
  coeffs_.resize(as_size(order + 1));
}

Series Series::from_coefficients(std::vector<Complex> coeffs) {
  const int order = std::max<int>(static_cast<int>(coeffs.size()) - 1, 0);
  return Series(std::move(coeffs), order);
}

Series Series::monomial(Complex c, int degree, int order) {
  Series s(order);
  if (degree >= 0 && degree <= order) s.coeffs_[as_size(degree)] = c;
  return s;
}

Series Series::with_order(int order) const { return Series(coeffs_, order); }

int Series::degree() const noexcept {
  for (int j = order(); j >= 0; --j) {
    if (coeffs_[as_size(j)] != Complex{}) return j;
  }
  return -1;
}

Series& Series::operator+=(const Series& rhs) {
  coeffs_.resize(as_size(std::min(order(), rhs.order()) + 1));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  coeffs_.resize(as_size(std::min(order(), rhs.order()) + 1));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

Series& Series::operator*=(const Series& rhs) {
  coeffs_ = truncated_product(coeffs_, rhs.coeffs_, std::min(order(), rhs.order()));
  return *this;
}

Series& Series::operator/=(const Series& rhs) {
  *this = *this / rhs;
  return *this;
}

Series& Series::operator*=(Complex lambda) {
  for (auto& c : coeffs_) c *= lambda;
  return *this;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }
Series operator-(Series a) { return a *= Complex{-1.0}; }
Series operator*(const Series& a, const Series& b) {
  const int order = std::min(a.order(), b.order());
  return Series(truncated_product(a.coeffs(), b.coeffs(), order), order);
}
Series operator*(Complex lambda, Series a) { return a *= lambda; }
Series operator*(Series a, Complex lambda) { return a *= lambda; }

Series operator/(const Series& a, const Series& b) {
  const Complex b0 = b[0];
  if (b0 == Complex{}) {
    throw Error(ErrorCode::division_by_zero_constant_term,
                "divisor has zero constant term; use shift_div_z for f(z)/z", b0);
  }
  const int order = std::min(a.order(), b.order());
  std::vector<Complex> q(as_size(order + 1));
  for (int n = 0; n <= order; ++n) {
    Complex acc = a[n];
    for (int k = 1; k <= n; ++k) acc -= b[k] * q[as_size(n - k)];
    q[as_size(n)] = acc / b0;
  }
  return Series(std::move(q), order);
}

Series scale(const Series& a, Complex lambda) { return lambda * a; }

Series derivative(const Series& a) {
  const int order = std::max(a.order() - 1, 0);
  std::vector<Complex> d(as_size(order + 1));
  for (int j = 1; j <= a.order(); ++j) d[as_size(j - 1)] = static_cast<double>(j) * a[j];
  return Series(std::move(d), order);
}

Series integrate(const Series& a) {
  const int order = a.order() + 1;
  std::vector<Complex> s(as_size(order + 1));
  for (int j = 0; j <= a.order(); ++j) s[as_size(j + 1)] = a[j] / static_cast<double>(j + 1);
  return Series(std::move(s), order);
}

Series shift_div_z(const Series& a) {
  if (a[0] != Complex{}) {
    throw Error(ErrorCode::nonzero_constant_term, "f(z)/z needs f(0) = 0", a[0]);
  }
  const int order = std::max(a.order() - 1, 0);
  std::vector<Complex> s(as_size(order + 1));
  for (int j = 1; j <= a.order(); ++j) s[as_size(j - 1)] = a[j];
  return Series(std::move(s), order);
}

Series compose(const Series& outer, const Series& inner) {
  if (std::abs(inner[0]) > kConstantTermTol) {
    throw Error(ErrorCode::inner_constant_term_nonzero,
                "inner series of a composition must vanish at 0", inner[0]);
  }
  const int order = outer.order();
  // Inner is zero-padded (or truncated) to the output order; its constant
  // term is dropped so powers of it start at z^k.
  Series w = inner.with_order(order);
  std::vector<Complex> wc(w.coeffs().begin(), w.coeffs().end());
  wc[0] = Complex{};
  w = Series(std::move(wc), order);

  Series acc = Series::monomial(outer[order], 0, order);
  for (int j = order - 1; j >= 0; --j) {
    acc = acc * w;
    std::vector<Complex> c(acc.coeffs().begin(), acc.coeffs().end());
    c[0] += outer[j];
    acc = Series(std::move(c), order);
  }
  return acc;
}

Series log_series(const Series& a) {
  if (std::abs(a[0] - Complex{1.0}) > kConstantTermTol) {
    throw Error(ErrorCode::bad_constant_term, "log needs constant term 1", a[0]);
  }
  const int order = a.order();
  std::vector<Complex> b(as_size(order + 1));
  // b' a = a' with a_0 = 1.
  for (int n = 1; n <= order; ++n) {
    Complex acc = static_cast<double>(n) * a[n];
    for (int k = 1; k < n; ++k) acc -= static_cast<double>(k) * b[as_size(k)] * a[n - k];
    b[as_size(n)] = acc / static_cast<double>(n);
  }
  return Series(std::move(b), order);
}

Series exp_series(const Series& a) {
  if (std::abs(a[0]) > kConstantTermTol) {
    throw Error(ErrorCode::bad_constant_term, "exp needs constant term 0", a[0]);
  }
  const int order = a.order();
  std::vector<Complex> b(as_size(order + 1));
  b[0] = 1.0;
  // b' = a' b.
  for (int n = 1; n <= order; ++n) {
    Complex acc{};
    for (int k = 1; k <= n; ++k) acc += static_cast<double>(k) * a[k] * b[as_size(n - k)];
    b[as_size(n)] = acc / static_cast<double>(n);
  }
  return Series(std::move(b), order);
}

Series pow_series(const Series& a, Complex alpha) {
  if (std::abs(a[0] - Complex{1.0}) > kConstantTermTol) {
    throw Error(ErrorCode::bad_constant_term, "pow needs constant term 1", a[0]);
  }
  return exp_series(alpha * log_series(a));
}

Series reversion(const Series& a) {
  if (std::abs(a[0]) > kConstantTermTol || std::abs(a[1] - Complex{1.0}) > kConstantTermTol) {
    throw Error(ErrorCode::not_normalized, "reversion needs a_0 = 0 and a_1 = 1");
  }
  const int order = a.order();
  // a = z + h; the inverse g solves g = z - h(g).
  Series h = a - Series::identity(order);
  {
    std::vector<Complex> c(h.coeffs().begin(), h.coeffs().end());
    c[0] = Complex{};
    if (order >= 1) c[1] = Complex{};
    h = Series(std::move(c), order);
  }
  const Series z = Series::identity(order);
  Series g = z;
  // Each pass fixes one more coefficient.
  for (int it = 1; it < order; ++it) g = z - compose(h, g);
  return g;
}

Complex eval(const Series& a, Complex z) {
  Complex acc{};
  for (int j = a.order(); j >= 0; --j) acc = acc * z + a[j];
  return acc;
}

Evaluation eval_with_tail(const Series& a, Complex z) {
  Evaluation e{eval(a, z), std::nullopt};
  const double r = std::abs(z);
  if (r < 1.0) {
    double cmax = 0.0;
    for (const auto& c : a.coeffs()) cmax = std::max(cmax, std::abs(c));
    e.tail_bound = cmax * std::pow(r, a.order() + 1) / (1.0 - r);
  }
  return e;
}

Series hadamard(const Series& a, const Series& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Complex> c(as_size(order + 1));
  for (int j = 0; j <= order; ++j) c[as_size(j)] = a[j] * b[j];
  return Series(std::move(c), order);
}

double max_coeff_distance(const Series& a, const Series& b) {
  const int order = std::min(a.order(), b.order());
  double d = 0.0;
  for (int j = 0; j <= order; ++j) d = std::max(d, std::abs(a[j] - b[j]));
  return d;
}

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorCode::parse_error, "empty coefficient");
  if (s.back() != 'i') return {parse_real(s, text), 0.0};

  // Split "a+bi" at the last sign that is not an exponent sign.
  const std::string_view body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  const std::string_view re_part = split == std::string_view::npos ? std::string_view{}
                                                                   : body.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
  im_part = trim(im_part);
  double im = 0.0;
  if (im_part.empty() || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    im = parse_real(im_part, text);
  }
  const double re = re_part.empty() ? 0.0 : parse_real(re_part, text);
  return {re, im};
}

Series parse_series(std::string_view text) {
  std::vector<Complex> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    coeffs.push_back(parse_complex(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Series::from_coefficients(std::move(coeffs));
}

std::string format_complex(Complex c) {
  char buf[64];
  if (c.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", c.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
  }
  return buf;
}

std::string format_series(const Series& a) {
  std::ostringstream os;
  for (int j = 0; j <= a.order(); ++j) {
    if (j) os << ", ";
    os << format_complex(a[j]);
  }
  return os.str();
}

}  // namespace omegafn
