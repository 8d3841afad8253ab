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

#ifndef READK_TAIL_H_
#define READK_TAIL_H_

#include <string>
#include <string_view>

namespace readk {

// kUpper is the event {Y >= t}, kLower is {Y <= t}.
enum class Tail { kUpper, kLower };

// A tail event over the integer sum Y. Any real threshold is accepted;
// comparisons are inclusive, so a fractional t acts as ceil(t) for the upper
// tail and floor(t) for the lower one.
struct TailQuery {
  double threshold = 0.0;
  Tail tail = Tail::kUpper;
};

inline std::string_view to_string(Tail tail) {
  return tail == Tail::kUpper ? "upper" : "lower";
}

// Accepts "upper"/"lower" and the aliases ">="/"<=". Throws DomainError.
Tail parse_tail(std::string_view text);

}  // namespace readk

#endif  // READK_TAIL_H_
