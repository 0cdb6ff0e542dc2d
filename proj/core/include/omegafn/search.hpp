#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "omegafn/coeff_bounds.hpp"
#include "omegafn/membership.hpp"

namespace omegafn {

enum class TargetKind { coefficient, fekete_szego, fs_kroot, inverse, toeplitz };

/// A coefficient functional to maximize, parsed from ids such as
///   a2 .. a16            |a_n|
///   fs:mu_re,mu_im       |a_3 - mu a_2^2|   (fs:mu_re is also accepted)
///   fsk:k,mu_re,mu_im    |b_{2k+1} - mu b_{k+1}^2|
///   b2, b3, b4           inverse coefficients
///   t2:n, t3:1, t3:2     Toeplitz determinants
struct Target {
  TargetKind kind = TargetKind::coefficient;
  int n = 2;
  int k = 1;
  int q = 2;
  Complex mu{};
  std::string id;
};

/// Throws UnknownTarget.
Target parse_target(std::string_view id);

/// The functional value and its sharp upper bound.
double evaluate_target(const Target& t, const CoefficientView& view);
double target_bound(const Target& t);

struct SearchConfig {
  std::uint64_t seed = 20170101;
  int phi_degree = 8;
  int restarts = 32;
  int steps_per_restart = 2000;
  double step_scale = 0.1;
  Target target = parse_target("a2");
  int grid = default_grid();
};

struct TracePoint {
  int restart = 0;
  int iteration = 0;
  double value = 0.0;
};

struct SearchResult {
  double best_value = 0.0;
  double bound = 0.0;
  BoundedAnalytic best_phi;
  int best_restart = 0;
  std::vector<TracePoint> trace;  // accepted improvements, per restart in order
};

/// phi with coefficients uniform in [-1,1]^2 scaled by 1/(degree+1),
/// normalized to boundary sup <= 1.
BoundedAnalytic random_phi(std::mt19937_64& rng, int phi_degree, int grid = default_grid());

/// from_phi(random_phi(...)) with an engine seeded by `seed`.
AnalyticFunction random_member(std::uint64_t seed, int phi_degree, int grid = default_grid());

/// Per-restart seed derived from the master seed.
std::uint64_t restart_seed(std::uint64_t master, int restart);

/// Random-restart hill climbing over phi. Every candidate is an Omega
/// member by construction. Restarts run concurrently; the merge is by
/// restart index, so the result depends only on the configuration.
SearchResult maximize_functional(const SearchConfig& config);

}  // namespace omegafn
