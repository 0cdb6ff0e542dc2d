#include "omegafn/functions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "omegafn/errors.hpp"

namespace omegafn {

namespace {

Complex ipow(Complex z, int n) {
  Complex r{1.0};
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

// Horner evaluation of p, p', p'' at z.
Jet poly_jet(const Series& p, Complex z) {
  Complex v{}, d1{}, d2{};
  for (int j = p.order(); j >= 0; --j) {
    d2 = d2 * z + 2.0 * d1;
    d1 = d1 * z + v;
    v = v * z + p[j];
  }
  return {v, d1, d2, z};
}

// All roots of a polynomial by Durand-Kerner iteration. Adequate for the
// low-degree reciprocal denominators this module accepts.
std::vector<Complex> polynomial_roots(const Series& p) {
  const int deg = p.degree();
  std::vector<Complex> roots;
  if (deg < 1) return roots;
  const Complex lead = p[deg];
  std::vector<Complex> monic(static_cast<std::size_t>(deg + 1));
  for (int j = 0; j <= deg; ++j) monic[static_cast<std::size_t>(j)] = p[j] / lead;

  double radius = 0.0;
  for (int j = 0; j < deg; ++j) radius = std::max(radius, std::abs(monic[static_cast<std::size_t>(j)]));
  radius = 1.0 + radius;
  const Complex seed = std::polar(1.0, 0.4);
  roots.resize(static_cast<std::size_t>(deg));
  for (int k = 0; k < deg; ++k) roots[static_cast<std::size_t>(k)] = radius * ipow(seed, k + 1);

  auto eval_monic = [&](Complex z) {
    Complex acc{};
    for (int j = deg; j >= 0; --j) acc = acc * z + monic[static_cast<std::size_t>(j)];
    return acc;
  };
  for (int it = 0; it < 2000; ++it) {
    double change = 0.0;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      Complex denom{1.0};
      for (std::size_t m = 0; m < roots.size(); ++m) {
        if (m != k) denom *= roots[k] - roots[m];
      }
      if (denom == Complex{}) denom = Complex{1e-300};
      const Complex step = eval_monic(roots[k]) / denom;
      roots[k] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  return roots;
}

void validate_reciprocal(const Series& d) {
  if (std::abs(d[0] - Complex{1.0}) > kConstantTermTol) {
    throw Error(ErrorCode::bad_constant_term, "z/f(z) must equal 1 at the origin", d[0]);
  }
  // Sampled screen: interior grid plus a dense circle just inside |z| = 1.
  constexpr int kRadii = 64;
  constexpr int kInteriorAngles = 512;
  constexpr int kBoundaryAngles = 4096;
  auto check = [&](Complex z) {
    if (std::abs(eval(d, z)) <= kPoleTol) {
      throw Error(ErrorCode::domain_error, "z/f(z) vanishes inside the disc", z);
    }
  };
  for (int i = 1; i <= kRadii; ++i) {
    const double r = kInnerBoundaryRadius * i / kRadii;
    for (int k = 0; k < kInteriorAngles; ++k) {
      check(std::polar(r, 2.0 * std::numbers::pi * k / kInteriorAngles));
    }
  }
  for (int k = 0; k < kBoundaryAngles; ++k) {
    check(std::polar(kInnerBoundaryRadius, 2.0 * std::numbers::pi * k / kBoundaryAngles));
  }
  // Zeros between sample points are caught by locating the roots directly.
  for (const Complex& root : polynomial_roots(d)) {
    if (std::abs(root) < 1.0 - 1e-9) {
      throw Error(ErrorCode::domain_error, "z/f(z) has a zero inside the disc", root);
    }
  }
}

Jet named_jet(const NamedForm& form, Complex z) {
  switch (form.kind) {
    case NamedKind::koebe: {
      const Complex w = 1.0 - z;
      if (std::abs(w) <= kPoleTol) throw Error(ErrorCode::pole_at_point, "Koebe pole at z = 1", z);
      const Complex w2 = w * w;
      const Complex w3 = w2 * w;
      return {z / w2, (1.0 + z) / w3, (4.0 + 2.0 * z) / (w3 * w), z};
    }
    case NamedKind::ftilde: {
      const int n = form.n;
      const double c = 1.0 / (2.0 * (n - 1));
      const Complex zn2 = ipow(z, n - 2);
      const Complex zn1 = zn2 * z;
      return {z + c * zn1 * z, 1.0 + c * n * zn1, c * n * (n - 1) * zn2, z};
    }
    case NamedKind::ell:
      return {z + z * z / 5.0 + z * z * z / 8.0, 1.0 + 2.0 * z / 5.0 + 3.0 * z * z / 8.0,
              2.0 / 5.0 + 3.0 * z / 4.0, z};
    case NamedKind::phi1fun:
      return {z - z * z / 5.0 - z * z * z / 8.0, 1.0 - 2.0 * z / 5.0 - 3.0 * z * z / 8.0,
              -2.0 / 5.0 - 3.0 * z / 4.0, z};
    case NamedKind::fhat:
      return {z + form.p1 * z * z, 1.0 + 2.0 * form.p1 * z, 2.0 * form.p1, z};
    case NamedKind::fgammabeta:
      return {z + form.p1 * z * z + form.p2 * z * z * z,
              1.0 + 2.0 * form.p1 * z + 3.0 * form.p2 * z * z, 2.0 * form.p1 + 6.0 * form.p2 * z,
              z};
  }
  throw Error(ErrorCode::unknown_id, "unhandled named form");
}

Series named_series(const NamedForm& form, int order) {
  Series s = Series::identity(order);
  std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
  auto set = [&](int j, Complex v) {
    if (j <= order) c[static_cast<std::size_t>(j)] = v;
  };
  switch (form.kind) {
    case NamedKind::koebe:
      for (int j = 1; j <= order; ++j) set(j, static_cast<double>(j));
      break;
    case NamedKind::ftilde:
      set(form.n, 1.0 / (2.0 * (form.n - 1)));
      break;
    case NamedKind::ell:
      set(2, 1.0 / 5.0);
      set(3, 1.0 / 8.0);
      break;
    case NamedKind::phi1fun:
      set(2, -1.0 / 5.0);
      set(3, -1.0 / 8.0);
      break;
    case NamedKind::fhat:
      set(2, form.p1);
      break;
    case NamedKind::fgammabeta:
      set(2, form.p1);
      set(3, form.p2);
      break;
  }
  return Series(std::move(c), order);
}

std::vector<double> parse_numbers(std::string_view text, std::size_t expected,
                                  std::string_view id) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::string_view tok = text.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::unknown_id, "bad parameter list in '" + std::string(id) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != expected) {
    throw Error(ErrorCode::unknown_id, "'" + std::string(id) + "' expects " +
                                           std::to_string(expected) + " parameters");
  }
  return out;
}

}  // namespace

AnalyticFunction::AnalyticFunction(Repr repr, std::string label)
    : repr_(std::move(repr)), label_(std::move(label)) {}

AnalyticFunction AnalyticFunction::from_series(Series s, std::string label) {
  if (s.order() < 1 || std::abs(s[0]) > kConstantTermTol ||
      std::abs(s[1] - Complex{1.0}) > kConstantTermTol) {
    throw Error(ErrorCode::not_normalized, "series form needs f(0) = 0 and f'(0) = 1");
  }
  return AnalyticFunction(std::move(s), std::move(label));
}

AnalyticFunction AnalyticFunction::from_reciprocal(Series d, std::string label) {
  validate_reciprocal(d);
  return AnalyticFunction(ReciprocalPoly{std::move(d)}, std::move(label));
}

AnalyticFunction AnalyticFunction::from_named(NamedForm form, std::string label) {
  if (form.kind == NamedKind::ftilde && form.n < 2) {
    throw Error(ErrorCode::bad_index, "ftilde needs n >= 2, got " + std::to_string(form.n));
  }
  return AnalyticFunction(form, std::move(label));
}

Jet AnalyticFunction::jet(Complex z) const {
  if (const auto* s = std::get_if<Series>(&repr_)) return poly_jet(*s, z);
  if (const auto* rp = std::get_if<ReciprocalPoly>(&repr_)) {
    const Jet d = poly_jet(rp->d, z);
    if (std::abs(d.f) <= kPoleTol) {
      throw Error(ErrorCode::pole_at_point, "z/f(z) vanishes at this point", z);
    }
    const Complex num = d.f - z * d.fp;  // d - z d'
    return {z / d.f, num / (d.f * d.f),
            (-z * d.fpp * d.f - 2.0 * num * d.fp) / (d.f * d.f * d.f), z};
  }
  return named_jet(std::get<NamedForm>(repr_), z);
}

Series AnalyticFunction::to_series(int order) const {
  if (const auto* s = std::get_if<Series>(&repr_)) return s->with_order(order);
  if (const auto* rp = std::get_if<ReciprocalPoly>(&repr_)) {
    return Series::identity(order) / rp->d.with_order(order);
  }
  return named_series(std::get<NamedForm>(repr_), order);
}

Series AnalyticFunction::coefficients() const {
  int order = kWorkingOrder;
  if (const auto* s = std::get_if<Series>(&repr_)) order = std::max(order, s->order());
  return to_series(order);
}

bool AnalyticFunction::is_polynomial() const noexcept {
  if (std::holds_alternative<Series>(repr_)) return true;
  if (const auto* nf = std::get_if<NamedForm>(&repr_)) return nf->kind != NamedKind::koebe;
  return false;
}

double AnalyticFunction::boundary_radius() const noexcept {
  return is_polynomial() ? 1.0 : kInnerBoundaryRadius;
}

AnalyticFunction make_extremal(int n) {
  if (n < 2) throw Error(ErrorCode::bad_index, "ftilde needs n >= 2, got " + std::to_string(n));
  return AnalyticFunction::from_named({NamedKind::ftilde, n}, "ftilde:" + std::to_string(n));
}

AnalyticFunction catalog(std::string_view id) {
  const std::size_t colon = id.find(':');
  const std::string_view name = id.substr(0, colon);
  const std::string_view params =
      colon == std::string_view::npos ? std::string_view{} : id.substr(colon + 1);
  const bool has_params = colon != std::string_view::npos;
  const std::string label(id);

  if (!has_params) {
    if (name == "koebe") return AnalyticFunction::from_named({NamedKind::koebe}, label);
    if (name == "ell") return AnalyticFunction::from_named({NamedKind::ell}, label);
    if (name == "phi1fun") return AnalyticFunction::from_named({NamedKind::phi1fun}, label);
    if (name == "f1") {
      return AnalyticFunction::from_reciprocal(Series({1.0, 0.5, 0.0, 0.5}, 3), label);
    }
  } else {
    if (name == "ftilde") {
      int n = 0;
      auto [ptr, ec] = std::from_chars(params.data(), params.data() + params.size(), n);
      if (params.empty() || ec != std::errc{} || ptr != params.data() + params.size()) {
        throw Error(ErrorCode::unknown_id, "bad index in '" + label + "'");
      }
      return make_extremal(n);
    }
    if (name == "fhat") {
      const auto v = parse_numbers(params, 2, id);
      return AnalyticFunction::from_named({NamedKind::fhat, 0, {v[0], v[1]}}, label);
    }
    if (name == "fgb") {
      const auto v = parse_numbers(params, 4, id);
      return AnalyticFunction::from_named(
          {NamedKind::fgammabeta, 0, {v[0], v[1]}, {v[2], v[3]}}, label);
    }
  }
  throw Error(ErrorCode::unknown_id, "no catalog entry '" + label + "'");
}

AnalyticFunction parse_function(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  if (!s.empty() && std::isalpha(static_cast<unsigned char>(s.front())) && s.front() != 'i') {
    return catalog(s);
  }
  return AnalyticFunction::from_series(parse_series(s), std::string(s));
}

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"koebe", "z/(1-z)^2"},
      {"ftilde:n", "z + z^n/(2(n-1)), n >= 2"},
      {"ell", "z + z^2/5 + z^3/8"},
      {"phi1fun", "z - z^2/5 - z^3/8"},
      {"f1", "z/f(z) = 1 + z/2 + z^3/2"},
      {"fhat:re,im", "z + lambda z^2"},
      {"fgb:gre,gim,bre,bim", "z + gamma z^2 + beta z^3"},
  };
}

AnalyticFunction hadamard_product(const AnalyticFunction& f, const AnalyticFunction& g) {
  return AnalyticFunction::from_series(hadamard(f.coefficients(), g.coefficients()),
                                       f.label() + " * " + g.label());
}

Complex omega_functional(const AnalyticFunction& f, Complex z) {
  const Jet j = f.jet(z);
  return z * j.fp - j.f;
}

Complex u_functional(const AnalyticFunction& f, Complex z) {
  if (z == Complex{}) return {};
  if (const auto* rp = std::get_if<ReciprocalPoly>(&f.repr())) {
    // z/f = d, f' = (d - z d')/d^2, so the functional is d - z d' - 1.
    const Jet d = poly_jet(rp->d, z);
    if (std::abs(d.f) <= kPoleTol) {
      throw Error(ErrorCode::pole_at_point, "z/f(z) vanishes at this point", z);
    }
    return d.f - z * d.fp - 1.0;
  }
  const Jet j = f.jet(z);
  if (std::abs(j.f) <= kPoleTol * std::abs(z)) {
    throw Error(ErrorCode::zero_of_f, "f vanishes away from the origin", z);
  }
  const Complex q = z / j.f;
  return q * q * j.fp - 1.0;
}

}  // namespace omegafn
