// Copyright 2026 The skewgal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "skewgal/checks/suites.hpp"

namespace {

// Runs the command-line round trip script; its last line is the summary.
skewgal::checks::CriterionResult cli_roundtrip() {
  skewgal::checks::CriterionResult r;
  r.id = 10;
  r.name = "cli-determinism-schemas";
  const auto t0 = std::chrono::steady_clock::now();
  const std::string cmd = std::string("\"") + SKEWGAL_PYTHON + "\" \"" + SKEWGAL_ROUNDTRIP + "\" \"" + SKEWGAL_CLI +
                          "\" \"" + SKEWGAL_SCHEMAS + "\" --with-selftest 2>&1";
  std::string out;
  if (FILE* pipe = popen(cmd.c_str(), "r")) {
    char buf[512];
    while (fgets(buf, sizeof buf, pipe)) out += buf;
    const int status = pclose(pipe);
    r.passed = status == 0;
  } else {
    out = "could not start the round trip script";
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  while (!out.empty() && out.back() == '\n') out.pop_back();
  if (r.passed) {
    const auto nl = out.rfind('\n');
    r.detail = (nl == std::string::npos ? out : out.substr(nl + 1)) + " (every verb run twice, schema-validated, selftest exit 0)";
  } else {
    for (char& c : out)
      if (c == '\n') c = ';';
    r.detail = out;
  }
  return r;
}

}  // namespace

int main() {
  bool all = true;
  for (int id = 1; id <= 9; ++id) {
    const auto r = skewgal::checks::run_suite_guarded(id);
    std::cout << skewgal::checks::format_line(r) << std::endl;
    all = all && r.passed;
  }
  const auto r = cli_roundtrip();
  std::cout << skewgal::checks::format_line(r) << std::endl;
  all = all && r.passed;
  return all ? 0 : 1;
}
