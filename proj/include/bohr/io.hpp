#pragma once

#include <string>

#include <json.hpp>

#include "bohr/series.hpp"

namespace bohr {

// Coefficient document: {"coeffs": [[re, im], ...],
//                        "tail": {"c":, "rho":, "start":} | null}.
// Doubles round-trip bit-exactly.
nlohmann::ordered_json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const nlohmann::json& j);

void save_series(const std::string& path, const TruncatedSeries& f);
TruncatedSeries load_series(const std::string& path);

}  // namespace bohr
