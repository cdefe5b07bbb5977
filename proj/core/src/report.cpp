#include "cattool/report.hpp"

#include <cstdlib>
#include <sstream>

#include "cattool/error.hpp"

namespace cattool {

namespace {

int severity(Status s) {
  switch (s) {
    case Status::pass:
    case Status::not_applicable:
      return 0;
    case Status::fail:
      return 1;
    case Status::error:
      return 2;
  }
  return 0;
}

void render(std::ostringstream& out, const Report& r, int depth) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  out << pad << "[" << to_string(r.status) << "] " << r.check;
  if (r.cases > 0) out << " (" << r.cases << (r.cases == 1 ? " case)" : " cases)");
  out << "\n";
  if (!r.detail.empty()) out << pad << "  " << r.detail << "\n";
  if (r.failures > 1) out << pad << "  " << r.failures << " violations in total\n";
  for (const auto& w : r.witnesses) out << pad << "  " << w.role << " = " << w.value << "\n";
  for (const auto& c : r.children) render(out, c, depth + 1);
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::error:
      return "error";
    case Status::not_applicable:
      return "not_applicable";
  }
  return "?";
}

void Report::fail(std::string why, std::vector<Witness> ws) {
  ++failures;
  if (status == Status::fail || status == Status::error) return;
  if (ws.empty()) ws.push_back({"case", why});
  status = Status::fail;
  detail = std::move(why);
  witnesses = std::move(ws);
}

void Report::error(std::string why) {
  status = Status::error;
  detail = std::move(why);
}

void Report::not_applicable(std::string why) {
  if (status == Status::pass) status = Status::not_applicable;
  detail = std::move(why);
}

void Report::note(std::string text) {
  if (detail.empty())
    detail = std::move(text);
  else
    detail += "; " + text;
}

Report& Report::add(Report child) {
  if (severity(child.status) > severity(status)) {
    status = child.status;
  }
  cases += child.cases;
  children.push_back(std::move(child));
  return children.back();
}

const Report* Report::find(const std::string& name) const {
  if (check == name) return this;
  for (const auto& c : children)
    if (const Report* r = c.find(name)) return r;
  return nullptr;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

std::size_t search_limit() {
  if (const char* env = std::getenv("CATTOOL_MAX_SEARCH")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultSearchLimit;
}

void require_within(double count, double limit, const std::string& what) {
  if (count > limit) {
    std::ostringstream msg;
    msg << "size limit exceeded: " << what << " needs " << count << " candidates (limit "
        << limit << ")";
    throw SizeLimitError(msg.str());
  }
}

}  // namespace cattool
