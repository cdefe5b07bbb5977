#include "doctest.h"

#include <sstream>

#include "cattool/constructions.hpp"
#include "cattool_cli/app.hpp"
#include "cattool_cli/document.hpp"
#include "cattool_cli/json_report.hpp"
#include "cli/golden.hpp"

using namespace cattool;
using nlohmann::json;
namespace ct = cattool::testing;

namespace {

int run(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  int code = cli::run(args, o, e);
  if (out) *out = o.str() + e.str();
  return code;
}

std::string sample(const std::string& name) { return std::string(CATTOOL_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("golden files") {
  auto cases = ct::load_golden_manifest(CATTOOL_GOLDEN_DIR "/../golden_cases.tsv", CATTOOL_SAMPLES_DIR);
  REQUIRE(cases.size() >= 26);
  for (const auto& c : cases) {
    auto r = ct::run_golden(c, CATTOOL_GOLDEN_DIR, CATTOOL_SAMPLES_DIR);
    INFO("case ", c.name);
    CHECK(r.exit_code == c.expected_exit);
    CHECK(r.output == r.expected);
  }
}

TEST_CASE("category_to_json is idempotent") {
  for (const char* name : {"finset2.json", "chain3.json", "z3.json", "parallel.json", "lattice.json"}) {
    auto l = cli::load_document(sample(name));
    FinCat c = cli::parse_category(l.doc, l.base);
    json once = cli::category_to_json(c);
    FinCat again = cli::parse_category(once, l.base);
    json twice = cli::category_to_json(again);
    CHECK(once == twice);
    CHECK(again.morphism_count() == c.morphism_count());
    CHECK(check_laws(again).passed());
  }
}

TEST_CASE("report JSON roundtrip") {
  Report r("outer");
  Report a("a");
  a.tick(3);
  a.fail("broken", {{"x", "1"}, {"y", "[0,1]"}});
  a.fail("again", {});
  Report b("b");
  b.not_applicable("nothing to do");
  r.add(a);
  r.add(b);
  r.note("context");
  json j = cli::report_to_json(r);
  Report back = cli::report_from_json(j);
  CHECK(render_text(back) == render_text(r));
  CHECK(cli::report_to_json(back) == j);
  CHECK(j["status"] == "fail");
  CHECK(j["children"][0]["failures"] == 2);
}

TEST_CASE("inline documents") {
  CHECK(run({"laws", R"({"kind":"preorder","elements":["a","b"],"leq":[["a","b"]]})"}) == cli::kExitPass);
  CHECK(run({"laws", R"({"kind":"monoid","elements":["e","a"],"unit":"e","table":[["e","a"],["a","a"]]})"}) ==
        cli::kExitPass);
  CHECK(run({"laws", R"({"kind":"universe","family":"finpos","max_size":2})"}) == cli::kExitPass);
}

TEST_CASE("schema errors name the field") {
  std::string out;
  CHECK(run({"--json", "laws", R"({"kind":"preorder","elements":["a"],"leq":[["a","b"]]})"}, &out) ==
        cli::kExitInput);
  CHECK(run({"--json", "laws", R"({"kind":"explicit","objects":"x"})"}, &out) == cli::kExitInput);
  json j = json::parse(out);
  CHECK(j["error"]["type"] == "schema");
  CHECK(j["error"]["field"] == "/objects");
  CHECK(run({"laws", R"({"kind":"graph","nodes":["x"],"edges":[{"name":"e","dom":"x"}]})"}, &out) == cli::kExitInput);
  CHECK(out.find("/edges/0/cod") != std::string::npos);
  CHECK(run({"laws", R"({"kind":"monoid","elements":["e","a"],"unit":"e","table":[["e","a"],["a","e"],["e","e"]]})"}) ==
        cli::kExitInput);
  CHECK(run({"laws", "{not json"}) == cli::kExitInput);
  CHECK(run({"laws", R"({"kind":"sheaf"})"}) == cli::kExitInput);
}

TEST_CASE("non-associative monoid table is a construction error") {
  std::string out;
  CHECK(run({"laws", R"({"kind":"monoid","elements":["e","a","b"],"unit":"e",
                        "table":[["e","a","b"],["a","b","a"],["b","e","e"]]})"},
            &out) == cli::kExitInput);
  CHECK(out.find("associativity") != std::string::npos);
}

TEST_CASE("json output carries the exit code") {
  std::string out;
  CHECK(run({"--json", "universal", sample("finset2.json"), "--kind", "terminal"}, &out) == cli::kExitPass);
  json j = json::parse(out);
  CHECK(j["exit_code"] == 0);
  CHECK(j["command"] == "universal");
  CHECK(j["report"]["witnesses"].size() == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}) == cli::kExitPass);
  CHECK(run({"fold", "--help"}) == cli::kExitPass);
  CHECK(run({}) == cli::kExitInput);
  CHECK(run({"frobnicate"}) == cli::kExitInput);
}
