#include "cattool_cli/json_report.hpp"

#include "cattool/error.hpp"

namespace cattool::cli {

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  if (!r.detail.empty()) j["detail"] = r.detail;
  j["cases"] = r.cases;
  if (r.failures) j["failures"] = r.failures;
  if (!r.witnesses.empty()) {
    auto ws = nlohmann::json::array();
    for (const auto& w : r.witnesses) ws.push_back({{"role", w.role}, {"value", w.value}});
    j["witnesses"] = ws;
  }
  if (!r.children.empty()) {
    auto cs = nlohmann::json::array();
    for (const auto& c : r.children) cs.push_back(report_to_json(c));
    j["children"] = cs;
  }
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r(j.at("check").get<std::string>());
  const auto status = j.at("status").get<std::string>();
  if (status == "pass") r.status = Status::pass;
  else if (status == "fail") r.status = Status::fail;
  else if (status == "error") r.status = Status::error;
  else if (status == "not_applicable") r.status = Status::not_applicable;
  else throw ShapeError("unknown status '" + status + "'");
  r.detail = j.value("detail", "");
  r.cases = j.value("cases", std::size_t{0});
  r.failures = j.value("failures", std::size_t{0});
  if (j.contains("witnesses"))
    for (const auto& w : j["witnesses"]) r.witnesses.push_back({w.at("role"), w.at("value")});
  if (j.contains("children"))
    for (const auto& c : j["children"]) r.children.push_back(report_from_json(c));
  return r;
}

}  // namespace cattool::cli
