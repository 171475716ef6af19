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

#pragma once

// The acceptance suites. Each returns one result line; the command-line
// selftest and the acceptance binary both print these.

#include <cstdint>
#include <string>
#include <vector>

#include "skewgal/kernels.hpp"

namespace skewgal::checks {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  std::uint64_t seed = 20261019;
  kernels::Exec exec = kernels::Exec::parallel;
};

/// Ids 1..9. Throws DomainError for anything else.
CriterionResult run_suite(int id, const SuiteOptions& opts = {});

/// Never throws: an exception inside a suite becomes a failed result.
CriterionResult run_suite_guarded(int id, const SuiteOptions& opts = {});

/// "[PASS] 3 extension-criteria-agree (12.1 s): detail".
std::string format_line(const CriterionResult& r);

}  // namespace skewgal::checks
