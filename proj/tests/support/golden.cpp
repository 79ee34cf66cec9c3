#include "support/golden.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace testsupport {

std::vector<GoldenCase> read_golden_cases(const std::string& cases_file) {
  std::ifstream in(cases_file);
  if (!in) throw std::invalid_argument("cannot open " + cases_file);
  std::vector<GoldenCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(": ");
    if (colon == std::string::npos) throw std::invalid_argument("bad golden case line: " + line);
    cases.push_back({line.substr(0, colon), line.substr(colon + 2)});
  }
  return cases;
}

std::string run_cli(const std::string& cli, const std::string& data_dir, const std::string& args) {
  namespace fs = std::filesystem;
  const std::string command =
      "cd '" + fs::absolute(data_dir).string() + "' && '" + fs::absolute(cli).string() + "' " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for " + command);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out + "exit: " + std::to_string(code) + "\n";
}

std::vector<GoldenOutcome> check_goldens(const std::string& cli, const std::string& data_dir,
                                         const std::string& golden_dir, bool update) {
  std::vector<GoldenOutcome> outcomes;
  for (const auto& c : read_golden_cases(golden_dir + "/cases.txt")) {
    const std::string actual = run_cli(cli, data_dir, c.args);
    const std::string path = golden_dir + "/" + c.name + ".out";
    if (update) {
      std::ofstream(path, std::ios::binary) << actual;
      outcomes.push_back({c.name, true, "updated"});
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      outcomes.push_back({c.name, false, "missing " + path});
      continue;
    }
    const std::string expected((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (expected == actual) {
      outcomes.push_back({c.name, true, ""});
    } else {
      // first differing line, for the log
      std::istringstream e(expected), a(actual);
      std::string le, la;
      int line = 1;
      while (true) {
        const bool ge = static_cast<bool>(std::getline(e, le)), ga = static_cast<bool>(std::getline(a, la));
        if (!ge && !ga) break;
        if (le != la || ge != ga) break;
        ++line;
      }
      outcomes.push_back({c.name, false, "line " + std::to_string(line) + ": expected '" + le + "', got '" + la + "'"});
    }
  }
  return outcomes;
}

}  // namespace testsupport
