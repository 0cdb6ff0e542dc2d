#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "omegafn/functions.hpp"

namespace omegafn::cli {

/// Image of the circle |z| = radius, sampled at theta_k = 2 pi k / N.
struct PlotData {
  std::vector<std::pair<double, double>> points;
  std::vector<double> theta;
  bool closed = true;
  std::string source;
  double radius = 0.0;
};

inline constexpr int kMinPlotPoints = 256;

/// Throws DomainError unless 0 < radius <= 1 and samples >= 256.
PlotData sample_boundary(const AnalyticFunction& f, double radius, int samples);

nlohmann::json to_json(const PlotData& p);
/// theta,re,im
void write_csv(std::ostream& out, const PlotData& p);
/// One <polyline> with a fitted viewBox; the first point is repeated at
/// the end when the curve is closed. The y axis is flipped so the picture
/// has the usual orientation of the complex plane.
void write_svg(std::ostream& out, const PlotData& p);

/// True when no two non-adjacent segments of the closed polyline cross.
bool is_simple_closed_curve(const PlotData& p);

}  // namespace omegafn::cli
