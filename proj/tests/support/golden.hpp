#pragma once

#include <string>
#include <vector>

namespace testsupport {

struct GoldenCase {
  std::string name;
  std::string args;
};

struct GoldenOutcome {
  std::string name;
  bool matched = false;
  std::string detail;
};

std::vector<GoldenCase> read_golden_cases(const std::string& cases_file);

/// Runs `cli args` from data_dir; returns stdout+stderr followed by "exit: N".
std::string run_cli(const std::string& cli, const std::string& data_dir, const std::string& args);

/// Compares every case with golden_dir/<name>.out, or rewrites the files when update is set.
std::vector<GoldenOutcome> check_goldens(const std::string& cli, const std::string& data_dir,
                                         const std::string& golden_dir, bool update);

}  // namespace testsupport
