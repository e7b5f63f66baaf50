// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Property suites run by `mbed verify` and the acceptance binary.

#ifndef MBED_VERIFY_H_
#define MBED_VERIFY_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mbed {

struct VerifyLimits {
  // Largest graph in the approximation and induction families; the
  // isomorphism-complete part stops at min(6, max_nodes).
  int max_nodes = 8;
  // Random instances per size above the exhaustive range.
  int random_per_size = 1000;
  // Optional medium-scale dataset (BitcoinAlpha edge list).
  std::string bitcoin_path;
  // Negative control: corrupts one sign on the spectral side of suite 1.
  bool corrupt_sign = false;
  std::uint64_t seed = 20260101;
};

enum class SuiteStatus { kPass, kFail, kSkip };

struct SuiteResult {
  int id = 0;
  std::string name;
  SuiteStatus status = SuiteStatus::kPass;
  std::string detail;
  std::vector<std::string> info;  // diagnostics and counterexample dumps
  double seconds = 0.0;
};

int SuiteCount();
std::string SuiteName(int id);
SuiteResult RunSuite(int id, const VerifyLimits& limits);

// Runs the selected suites (all when empty), calling `done` after each.
std::vector<SuiteResult> RunVerification(const VerifyLimits& limits, const std::vector<int>& ids,
                                         const std::function<void(const SuiteResult&)>& done = {});

std::string FormatResult(const SuiteResult& r);

}  // namespace mbed

#endif  // MBED_VERIFY_H_
