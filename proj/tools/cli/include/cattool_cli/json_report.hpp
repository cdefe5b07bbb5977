#pragma once

#include "json.hpp"

#include "cattool/report.hpp"

namespace cattool::cli {

/// Mirrors render_text: check, status, detail, cases, failures, witnesses, children.
nlohmann::json report_to_json(const Report& r);
/// Inverse of report_to_json, for replaying saved output.
Report report_from_json(const nlohmann::json& j);

}  // namespace cattool::cli
