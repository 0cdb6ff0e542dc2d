#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "omegafn/errors.hpp"
#include "omegafn/functions.hpp"

using namespace omegafn;

namespace {

Complex random_point(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = rmax * std::sqrt(u(rng));
  return std::polar(r, 2.0 * M_PI * u(rng));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no omegafn::Error thrown";
  return ErrorCode::parse_error;
}

}  // namespace

TEST(Functions, ExtremalCoefficients) {
  const Series f2 = make_extremal(2).coefficients();
  EXPECT_EQ(f2[1], Complex{1.0});
  EXPECT_EQ(f2[2], Complex{0.5});
  EXPECT_EQ(make_extremal(3).coefficients()[3], Complex{0.25});
  EXPECT_EQ(make_extremal(5).coefficients()[5], Complex{0.125});
  EXPECT_EQ(code_of([] { (void)make_extremal(1); }), ErrorCode::bad_index);
}

TEST(Functions, CatalogPolynomials) {
  const Series ell = catalog("ell").coefficients();
  EXPECT_EQ(ell[2], Complex{0.2});
  EXPECT_EQ(ell[3], Complex{0.125});
  const Series phi1 = catalog("phi1fun").coefficients();
  EXPECT_EQ(phi1[2], Complex{-0.2});
  EXPECT_EQ(phi1[3], Complex{-0.125});
  const Series k = catalog("koebe").coefficients();
  for (int n = 1; n <= 32; ++n) EXPECT_EQ(k[n], Complex(n)) << n;
  const Series fh = catalog("fhat:0.4,0").coefficients();
  EXPECT_EQ(fh[2], Complex{0.4});
  const Series fgb = catalog("fgb:0.2,0,0.125,0").coefficients();
  EXPECT_EQ(fgb[2], Complex{0.2});
  EXPECT_EQ(fgb[3], Complex{0.125});
  EXPECT_EQ(code_of([] { (void)catalog("nope"); }), ErrorCode::unknown_id);
  EXPECT_EQ(code_of([] { (void)catalog("ftilde:1"); }), ErrorCode::bad_index);
}

TEST(Functions, F1IsReciprocal) {
  const AnalyticFunction f1 = catalog("f1");
  EXPECT_TRUE(std::holds_alternative<ReciprocalPoly>(f1.repr()));
  EXPECT_FALSE(f1.is_polynomial());
  EXPECT_LT(f1.boundary_radius(), 1.0);
  // z/d with d = 1 + z/2 + z^3/2: a_2 = -1/2, a_3 = 1/4, a_4 = -5/8
  const Series c = f1.coefficients();
  EXPECT_NEAR(std::abs(c[2] - Complex(-0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c[3] - Complex(0.25)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c[4] - Complex(-0.625)), 0.0, 1e-15);
}

TEST(Functions, ReciprocalRejectsInteriorZero) {
  // d = 1 + 2z vanishes at -1/2.
  EXPECT_EQ(code_of([] {
              (void)AnalyticFunction::from_reciprocal(Series({1, 2}, 1), "bad");
            }),
            ErrorCode::domain_error);
  EXPECT_EQ(code_of([] {
              (void)AnalyticFunction::from_reciprocal(Series({2, 1}, 1), "bad");
            }),
            ErrorCode::bad_constant_term);
}

TEST(Functions, SeriesMustBeNormalized) {
  EXPECT_EQ(code_of([] { (void)AnalyticFunction::from_series(Series({0, 2}, 3), "x"); }),
            ErrorCode::not_normalized);
  EXPECT_EQ(code_of([] { (void)AnalyticFunction::from_series(Series({1, 1}, 3), "x"); }),
            ErrorCode::not_normalized);
}

TEST(Functions, JetAtOriginAndKoebeHalf) {
  const Jet j = make_extremal(2).jet(0.0);
  EXPECT_EQ(j.f, Complex{});
  EXPECT_EQ(j.fp, Complex{1.0});
  EXPECT_EQ(j.fpp, Complex{1.0});
  const Jet k = catalog("koebe").jet(0.5);
  EXPECT_NEAR(std::abs(k.f - 2.0), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(k.fp - 12.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(k.fpp - 80.0), 0.0, 1e-11);
  EXPECT_EQ(code_of([] { (void)catalog("koebe").jet(1.0); }), ErrorCode::pole_at_point);
}

TEST(Functions, JetsMatchFiniteDifferences) {
  std::mt19937_64 rng(7);
  const double h = 1e-5;
  for (const char* id : {"f1", "koebe", "ell", "ftilde:6", "fgb:0.1,0.2,-0.3,0"}) {
    const AnalyticFunction f = catalog(id);
    for (int i = 0; i < 20; ++i) {
      const Complex z = random_point(rng, 0.6);
      const Jet j = f.jet(z);
      const Complex fp = (f.value(z + h) - f.value(z - h)) / (2 * h);
      const Complex fpp = (f.jet(z + h).fp - f.jet(z - h).fp) / (2 * h);
      EXPECT_NEAR(std::abs(j.fp - fp), 0.0, 1e-7 * (1 + std::abs(fp))) << id;
      EXPECT_NEAR(std::abs(j.fpp - fpp), 0.0, 1e-6 * (1 + std::abs(fpp))) << id;
    }
  }
}

TEST(Functions, NamedAndSeriesTwinsAgree) {
  std::mt19937_64 rng(11);
  struct Twin {
    const char* id;
    double rmax;  // truncated Koebe is only accurate well inside the disc
  };
  for (const Twin t : {Twin{"ell", 0.999}, Twin{"phi1fun", 0.999}, Twin{"koebe", 0.5}}) {
    const AnalyticFunction named = catalog(t.id);
    const AnalyticFunction series =
        AnalyticFunction::from_series(named.to_series(64), "twin");
    for (int i = 0; i < 100; ++i) {
      const Complex z = random_point(rng, t.rmax);
      const Jet a = named.jet(z);
      const Jet b = series.jet(z);
      EXPECT_NEAR(std::abs(a.f - b.f), 0.0, 1e-9) << t.id;
      EXPECT_NEAR(std::abs(a.fp - b.fp), 0.0, 1e-9) << t.id;
      EXPECT_NEAR(std::abs(a.fpp - b.fpp), 0.0, 1e-9) << t.id;
    }
  }
}

TEST(Functions, OmegaFunctionalOfExtremal) {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 12; ++n) {
    const AnalyticFunction f = make_extremal(n);
    for (int i = 0; i < 20; ++i) {
      const Complex z = random_point(rng, 1.0);
      EXPECT_NEAR(std::abs(omega_functional(f, z) - 0.5 * std::pow(z, n)), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(omega_functional(f, z)), 0.5 * std::pow(std::abs(z), n), 1e-12);
    }
  }
}

TEST(Functions, FunctionalsVanishAtOrigin) {
  for (const char* id : {"koebe", "ell", "phi1fun", "f1", "ftilde:3", "fhat:0.4,0"}) {
    EXPECT_EQ(omega_functional(catalog(id), 0.0), Complex{}) << id;
    EXPECT_EQ(u_functional(catalog(id), 0.0), Complex{}) << id;
  }
}

TEST(Functions, F1Functionals) {
  const AnalyticFunction f1 = catalog("f1");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Complex z = random_point(rng, 0.95);
    EXPECT_NEAR(std::abs(u_functional(f1, z) + z * z * z), 0.0, 1e-12);
  }
  // z f' - f = -z^2 d'/d^2 with d = 1 + z/2 + z^3/2.
  const Complex z = -2.0 / 3;
  const Complex d = 1.0 + z / 2.0 + z * z * z / 2.0;
  const Complex dp = 0.5 + 1.5 * z * z;
  EXPECT_NEAR(std::abs(omega_functional(f1, z) - (-z * z * dp / (d * d))), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(omega_functional(f1, z)), 27.0 / 14.0, 1e-13);
}

TEST(Functions, KoebeUFunctional) {
  const AnalyticFunction k = catalog("koebe");
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const Complex z = random_point(rng, 0.95);
    EXPECT_NEAR(std::abs(u_functional(k, z) + z * z), 0.0, 1e-11);
  }
}

TEST(Functions, ExtremalThreeUFunctionalAtImaginaryPoint) {
  EXPECT_LT(std::abs(u_functional(make_extremal(3), Complex(0, 0.9))), 0.56);
}

TEST(Functions, ParseFunction) {
  EXPECT_EQ(parse_function("ell").label(), "ell");
  const AnalyticFunction lit = parse_function("0, 1, 0.5");
  EXPECT_EQ(lit.coefficients()[2], Complex{0.5});
  EXPECT_TRUE(lit.is_polynomial());
  EXPECT_EQ(code_of([] { (void)parse_function("zzz"); }), ErrorCode::unknown_id);
  EXPECT_EQ(code_of([] { (void)parse_function("0, 1, q"); }), ErrorCode::parse_error);
}

TEST(Functions, HadamardProduct) {
  const AnalyticFunction h = hadamard_product(make_extremal(2), make_extremal(2));
  EXPECT_EQ(h.coefficients()[2], Complex{0.25});
}

TEST(Functions, CatalogListsEveryId) {
  EXPECT_EQ(catalog_entries().size(), 7u);
}
