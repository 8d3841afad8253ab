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

#ifndef READK_FAMILY_IO_H_
#define READK_FAMILY_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "readk/family.h"

namespace readk {

// Family file format (UTF-8 JSON):
//
//   {"variables": [{"name": "x1", "support": 2, "probs": [0.5, 0.5]}, ...],
//    "functions": [{"name": "y1", "vars": [0, 1], "truth_table": "0110"}, ...]}
//
// "probs" is optional (uniform when absent). "vars" are 0-based indices into
// "variables". Truth tables are strings over {0,1} in mixed-radix order with
// the first listed variable most significant.

// Throws ValidationError on malformed JSON or a spec that fails validation.
FamilySpec parse_family(std::string_view text);
FamilySpec load_family(const std::filesystem::path& path);

// Serialization is canonical: parse_family(dump_family(s)) == s and dumping
// again reproduces the same bytes.
std::string dump_family(const FamilySpec& spec);
void save_family(const FamilySpec& spec, const std::filesystem::path& path);

}  // namespace readk

#endif  // READK_FAMILY_IO_H_
