#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cattool {

enum class Status { pass, fail, error, not_applicable };

const char* to_string(Status s);

struct Witness {
  std::string role;
  std::string value;
};

// Outcome of a law check or query. A failed report always carries at least
// one witness; only the first failure is recorded, later ones bump the count.
struct Report {
  std::string check;
  Status status = Status::pass;
  std::string detail;
  std::vector<Witness> witnesses;
  std::vector<Report> children;
  std::size_t cases = 0;
  std::size_t failures = 0;

  explicit Report(std::string name = {}) : check(std::move(name)) {}

  bool passed() const { return status == Status::pass; }
  bool failed() const { return status == Status::fail; }

  // Counts one checked instance.
  void tick(std::size_t n = 1) { cases += n; }

  // Records a failure. Keeps the witnesses of the first failure only.
  void fail(std::string why, std::vector<Witness> witnesses);
  void error(std::string why);
  void not_applicable(std::string why);
  void note(std::string text);

  // Appends a sub-report; the parent status becomes the worst of its children.
  Report& add(Report child);

  const Report* find(const std::string& name) const;
};

/// Human-readable multi-line rendering.
std::string render_text(const Report& report);

}  // namespace cattool
