#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tiverify/theorems.hpp"

namespace tiv {

nlohmann::json report_to_json(const TheoremReport& rep);
TheoremReport report_from_json(const nlohmann::json& j);

/// Fixed CSV columns: group, order, prime, theorem, lhs, rhs_case, holds,
/// witness.
std::string csv_header();
std::string report_to_csv_row(const TheoremReport& rep);

std::string report_to_text_line(const TheoremReport& rep);

bool reports_equal(const TheoremReport& a, const TheoremReport& b);

}  // namespace tiv
