#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "omegafn/coeff_bounds.hpp"
#include "omegafn/disc.hpp"
#include "omegafn/membership.hpp"
#include "omegafn/search.hpp"

namespace omegafn {

/// Complex numbers serialize as [re, im].
nlohmann::json to_json(Complex z);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const RadiusResult& r);
nlohmann::json to_json(const CircleExtremum& e);
nlohmann::json to_json(const RootTransformCoeffs& t);
nlohmann::json to_json(const SearchResult& s);

/// Header plus one row per report: functional,value,bound,slack,attained_by.
void write_reports_csv(std::ostream& out, std::span<const BoundReport> reports);

/// restart,iteration,value
void write_trace_csv(std::ostream& out, std::span<const TracePoint> trace);

}  // namespace omegafn
