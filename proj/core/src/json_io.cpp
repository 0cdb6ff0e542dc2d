#include "omegafn/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace omegafn {

namespace {

// JSON has no infinity; an unknown supremum becomes null.
nlohmann::json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

std::string csv_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

nlohmann::json to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json to_json(const Verdict& v) {
  return {{"decision", to_string(v.decision)},
          {"witness", v.witness ? to_json(*v.witness) : nlohmann::json(nullptr)},
          {"sup_found", number(v.sup_found)},
          {"margin", number(v.margin)},
          {"threshold", v.threshold}};
}

nlohmann::json to_json(const BoundReport& r) {
  return {{"functional", r.functional},
          {"value", r.value},
          {"bound", r.bound},
          {"slack", r.slack},
          {"attained_by", r.attained_by ? nlohmann::json(*r.attained_by) : nlohmann::json(nullptr)},
          {"uncertified", r.uncertified}};
}

nlohmann::json to_json(const RadiusResult& r) {
  return {{"radius", r.radius},
          {"property", to_string(r.property)},
          {"bracket", {r.lo, r.hi}},
          {"evaluations", r.evaluations},
          {"non_monotone", r.non_monotone}};
}

nlohmann::json to_json(const CircleExtremum& e) {
  return {{"radius", e.radius}, {"angle", e.angle}, {"value", number(e.value)},
          {"grid", e.grid},     {"refined", e.refined}};
}

nlohmann::json to_json(const RootTransformCoeffs& t) {
  nlohmann::json b = nlohmann::json::object();
  for (const auto& [exp, c] : t.b) b[std::to_string(exp)] = to_json(c);
  return {{"k", t.k}, {"b", b}};
}

nlohmann::json to_json(const SearchResult& s) {
  nlohmann::json phi = nlohmann::json::array();
  for (const Complex& c : s.best_phi.phi().coeffs()) phi.push_back(to_json(c));
  return {{"best_value", s.best_value},
          {"bound", s.bound},
          {"gap", s.bound - s.best_value},
          {"best_restart", s.best_restart},
          {"best_phi", phi},
          {"trace_length", s.trace.size()}};
}

void write_reports_csv(std::ostream& out, std::span<const BoundReport> reports) {
  out << "functional,value,bound,slack,attained_by\n";
  for (const auto& r : reports) {
    out << csv_field(r.functional) << ',' << csv_double(r.value) << ',' << csv_double(r.bound)
        << ',' << csv_double(r.slack) << ',' << csv_field(r.attained_by.value_or("")) << '\n';
  }
}

void write_trace_csv(std::ostream& out, std::span<const TracePoint> trace) {
  out << "restart,iteration,value\n";
  for (const auto& p : trace) {
    out << p.restart << ',' << p.iteration << ',' << csv_double(p.value) << '\n';
  }
}

}  // namespace omegafn
