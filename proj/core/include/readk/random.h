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

#ifndef READK_RANDOM_H_
#define READK_RANDOM_H_

#include <cstdint>
#include <random>

namespace readk {

// All seeded randomness in the library runs on std::mt19937_64, whose output
// sequence is fixed by the C++ standard. Streams are keyed by (seed, stream)
// through std::seed_seq, which is also fully specified, and the conversions
// below avoid the implementation-defined standard distributions. Together
// this pins every generated value across platforms and standard libraries.
using RandomEngine = std::mt19937_64;

RandomEngine make_engine(std::uint64_t seed, std::uint64_t stream = 0);

// Uniform double in [0, 1) with 53 random bits.
double uniform01(RandomEngine& engine);

// Uniform integer in [0, n). n must be positive.
std::uint64_t uniform_below(RandomEngine& engine, std::uint64_t n);

}  // namespace readk

#endif  // READK_RANDOM_H_
