// Copyright 2026 The readk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef READK_SAMPLER_H_
#define READK_SAMPLER_H_

#include <cstdint>
#include <vector>

#include "readk/family.h"
#include "readk/random.h"
#include "readk/tail.h"

namespace readk {

// Samples are drawn in blocks of this size; block b uses stream b of the
// seed, so estimates do not depend on how blocks are scheduled.
inline constexpr std::uint64_t kSamplesPerStream = std::uint64_t{1} << 16;

// Two-sided confidence level of the reported interval.
inline constexpr double kMcConfidence = 0.99;

struct McEstimate {
  double estimate = 0.0;
  std::uint64_t samples = 0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::uint64_t seed = 0;

  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

// One draw of every variable, in index order, each by inverse CDF on a
// single uniform01() value.
std::vector<int> sample_assignment(const FamilySpec& spec, RandomEngine& engine);

// Hoeffding half-width sqrt(ln(2 / alpha) / (2 n)).
double hoeffding_half_width(std::uint64_t samples, double alpha = 1.0 - kMcConfidence);

// Fraction of sampled assignments whose function sum lies in the tail event,
// with a Hoeffding interval clamped to [0, 1]. DomainError if samples == 0.
McEstimate estimate_tail(const FamilySpec& spec, const TailQuery& query,
                         std::uint64_t samples, std::uint64_t seed,
                         unsigned threads = 0);

}  // namespace readk

#endif  // READK_SAMPLER_H_
