#pragma once

// Golden-file runner for the command line. Each line of the manifest is
//   name <TAB> expected exit code <TAB> arguments separated by spaces
// where {samples} expands to the sample document directory. Output is the
// text rendering (stdout then stderr), compared byte for byte with
// golden/<name>.out. CATTOOL_UPDATE_GOLDEN=1 rewrites the files instead.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cattool_cli/app.hpp"

namespace cattool::testing {

struct GoldenCase {
  std::string name;
  int expected_exit = 0;
  std::vector<std::string> args;
};

struct GoldenResult {
  GoldenCase c;
  int exit_code = 0;
  std::string output;
  std::string expected;
  bool matched = false;
};

inline std::vector<GoldenCase> load_golden_manifest(const std::filesystem::path& manifest,
                                                    const std::string& samples_dir) {
  std::vector<GoldenCase> cases;
  std::ifstream in(manifest);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    GoldenCase c;
    std::string code, rest;
    std::getline(fields, c.name, '\t');
    std::getline(fields, code, '\t');
    std::getline(fields, rest);
    c.expected_exit = std::stoi(code);
    std::istringstream words(rest);
    std::string w;
    while (words >> w) {
      for (auto at = w.find("{samples}"); at != std::string::npos; at = w.find("{samples}"))
        w.replace(at, 9, samples_dir);
      c.args.push_back(w);
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline GoldenResult run_golden(const GoldenCase& c, const std::filesystem::path& golden_dir,
                               const std::string& samples_dir) {
  GoldenResult r;
  r.c = c;
  std::ostringstream out, err;
  r.exit_code = cli::run(c.args, out, err);
  r.output = out.str() + err.str();
  // Absolute sample paths would make the files machine specific.
  for (auto at = r.output.find(samples_dir); at != std::string::npos; at = r.output.find(samples_dir))
    r.output.replace(at, samples_dir.size(), "{samples}");
  auto file = golden_dir / (c.name + ".out");
  const char* update = std::getenv("CATTOOL_UPDATE_GOLDEN");
  if (update && std::string(update) == "1") {
    std::ofstream(file, std::ios::binary) << r.output;
  }
  r.expected = read_file(file);
  r.matched = r.exit_code == c.expected_exit && r.output == r.expected;
  return r;
}

}  // namespace cattool::testing
