#include "omegafn_cli/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "omegafn/disc.hpp"
#include "omegafn/errors.hpp"

namespace omegafn::cli {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

using Pt = std::pair<double, double>;

double cross(Pt o, Pt a, Pt b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

bool on_segment(Pt p, Pt q, Pt r) {
  return std::min(p.first, r.first) <= q.first && q.first <= std::max(p.first, r.first) &&
         std::min(p.second, r.second) <= q.second && q.second <= std::max(p.second, r.second);
}

int sign(double v) { return (v > 0) - (v < 0); }

bool segments_intersect(Pt p1, Pt p2, Pt p3, Pt p4) {
  const int d1 = sign(cross(p3, p4, p1));
  const int d2 = sign(cross(p3, p4, p2));
  const int d3 = sign(cross(p1, p2, p3));
  const int d4 = sign(cross(p1, p2, p4));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(p3, p1, p4)) return true;
  if (d2 == 0 && on_segment(p3, p2, p4)) return true;
  if (d3 == 0 && on_segment(p1, p3, p2)) return true;
  if (d4 == 0 && on_segment(p1, p4, p2)) return true;
  return false;
}

}  // namespace

PlotData sample_boundary(const AnalyticFunction& f, double radius, int samples) {
  if (!(radius > 0.0 && radius <= 1.0)) {
    throw Error(ErrorCode::domain_error, "plot radius must lie in (0, 1]");
  }
  if (samples < kMinPlotPoints) {
    throw Error(ErrorCode::domain_error, "plot needs at least 256 samples");
  }
  const auto roots = unit_roots(samples);
  PlotData p;
  p.source = f.label();
  p.radius = radius;
  p.closed = true;
  p.points.reserve(roots.size());
  p.theta.reserve(roots.size());
  for (int k = 0; k < samples; ++k) {
    const Complex w = f.value(radius * roots[static_cast<std::size_t>(k)]);
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
      throw Error(ErrorCode::evaluation_failure, "non-finite value on the plot circle");
    }
    p.points.emplace_back(w.real(), w.imag());
    p.theta.push_back(2.0 * std::numbers::pi * k / samples);
  }
  return p;
}

nlohmann::json to_json(const PlotData& p) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& [x, y] : p.points) pts.push_back({x, y});
  return {{"source", p.source}, {"radius", p.radius}, {"closed", p.closed}, {"points", pts}};
}

void write_csv(std::ostream& out, const PlotData& p) {
  out << "theta,re,im\n";
  for (std::size_t k = 0; k < p.points.size(); ++k) {
    out << num(p.theta[k]) << ',' << num(p.points[k].first) << ',' << num(p.points[k].second)
        << '\n';
  }
}

void write_svg(std::ostream& out, const PlotData& p) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  if (!p.points.empty()) {
    xmin = xmax = p.points[0].first;
    ymin = ymax = -p.points[0].second;
  }
  for (const auto& [x, y] : p.points) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, -y);
    ymax = std::max(ymax, -y);
  }
  const double pad = 0.05 * std::max({xmax - xmin, ymax - ymin, 1e-9});
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(xmin - pad) << ' '
      << num(ymin - pad) << ' ' << num(xmax - xmin + 2 * pad) << ' '
      << num(ymax - ymin + 2 * pad) << "\">\n<polyline fill=\"none\" stroke=\"black\" "
      << "stroke-width=\"" << num(pad / 10) << "\" points=\"";
  auto emit = [&](const Pt& q) { out << num(q.first) << ',' << num(-q.second) << ' '; };
  for (const auto& q : p.points) emit(q);
  if (p.closed && !p.points.empty()) emit(p.points.front());
  out << "\"/>\n</svg>\n";
}

bool is_simple_closed_curve(const PlotData& p) {
  const std::size_t n = p.points.size();
  if (n < 3) return false;
  auto seg = [&](std::size_t i) { return std::pair{p.points[i], p.points[(i + 1) % n]}; };
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b] = seg(i);
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // share the closing vertex
      const auto [c, d] = seg(j);
      if (segments_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

}  // namespace omegafn::cli
