// Copyright 2026 The nomunify Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Randomized checks of the algebraic laws of freshness, `≈` and `~`.
// Implications are checked only on samples that satisfy their premises;
// each law keeps sampling until it has seen enough such samples.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nomunify::testing {

struct LawReport {
  std::string name;
  std::size_t samples = 0;
  std::size_t premise_hits = 0;
  std::size_t counterexamples = 0;
  std::optional<std::string> first_counterexample;

  bool ok(std::size_t min_premise_hits) const {
    return counterexamples == 0 && premise_hits >= min_premise_hits;
  }
};

struct LawSuiteOptions {
  std::uint64_t seed = 1;
  std::size_t min_samples = 1000;
  std::size_t min_premise_hits = 50;
  std::size_t max_samples = 400000;
};

std::vector<LawReport> run_judgement_laws(const LawSuiteOptions& options);

}  // namespace nomunify::testing
