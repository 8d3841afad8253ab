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

#ifndef READK_GENERATORS_H_
#define READK_GENERATORS_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "readk/family.h"

namespace readk {

// A probability a/b with 1 <= b <= 64 and 0 <= a <= b.
struct Rational {
  long long num = 0;
  long long den = 1;

  // Parses "a/b" or a bare integer 0 or 1. Throws DomainError.
  static Rational Parse(std::string_view text);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
};

inline constexpr long long kMaxRationalDenominator = 64;
inline constexpr int kGeneratorRetryBudget = 10000;

// `blocks` independent Bernoulli(p) variables, each read by k identity
// functions ("01"). Functions are ordered block by block, so r = k * blocks
// and the read width is exactly k.
FamilySpec gen_block_tight(int k, int blocks, Rational p);

struct RandomFamilyParams {
  int m = 1;
  int r = 1;
  int k = 1;
  int max_arity = 1;
  std::uint64_t seed = 0;
  // Supports are drawn from {2, ..., max_support}.
  int max_support = 3;
  // Attach random rational probabilities (denominator <= 16) instead of
  // leaving variables uniform.
  bool weighted = false;
};

// Seeded random read-k family: each function reads 1..max_arity distinct
// variables chosen among those still read fewer than k times, with a
// uniformly random truth table. Draws that cannot be placed are retried up
// to kGeneratorRetryBudget times in total. DomainError on infeasible
// parameters (r > m * k, max_arity outside [1, m], ...).
FamilySpec gen_random_family(const RandomFamilyParams& params);

}  // namespace readk

#endif  // READK_GENERATORS_H_
