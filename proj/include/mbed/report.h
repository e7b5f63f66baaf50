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

#ifndef MBED_REPORT_H_
#define MBED_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbed/graph.h"

namespace mbed {

// Output of every edge-deletion algorithm.
struct SolutionReport {
  std::string algorithm;
  int budget = 0;
  std::vector<EdgeId> deleted;  // in deletion order
  // Delta after each deletion; same length as `deleted`.
  std::vector<int> delta_trajectory;
  // Gain credited to each chosen edge when it was picked (f({e}) for the
  // greedy family, cep count left behind for min-cep, 0 otherwise).
  std::vector<long long> step_gains;
  // Steps where no candidate had a positive gain.
  std::vector<std::uint8_t> zero_gain_steps;
  // Spectral methods: lambda1 before each deletion, then after the last one.
  std::vector<double> lambda_trajectory;
  int initial_delta = 0;
  int final_delta = 0;
  std::optional<std::uint64_t> seed;
  double seconds = 0.0;
  bool stopped_early = false;
  std::string note;
  // Approximation-bound inputs.
  std::optional<int> delta_opt;
  std::optional<long long> psi;
};

}  // namespace mbed

#endif  // MBED_REPORT_H_
