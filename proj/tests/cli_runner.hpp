#pragma once

// Runs the ucycle binary through the shell; stdout is captured, stderr is
// discarded unless asked for.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef UCYCLE_CLI_PATH
#error "UCYCLE_CLI_PATH must name the ucycle binary"
#endif
#ifndef UCYCLE_TEST_TMP
#error "UCYCLE_TEST_TMP must name a scratch directory"
#endif

namespace cli_runner {

struct Run {
  int code = -1;
  std::string out;
};

inline Run run(const std::string& args, bool keep_stderr = false) {
  std::string cmd = std::string("'") + UCYCLE_CLI_PATH + "' " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string scratch(const std::string& name) {
  return std::string(UCYCLE_TEST_TMP) + "/" + name;
}

inline std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch(name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace cli_runner
