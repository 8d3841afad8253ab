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

#ifndef READK_FAMILY_H_
#define READK_FAMILY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace readk {

// An independent finite random variable X_i taking values 0..support-1.
struct Variable {
  std::string name;
  int support = 1;
  // Empty means uniform.
  std::vector<double> probs;

  bool has_explicit_probs() const { return !probs.empty(); }
  double prob(int value) const {
    return probs.empty() ? 1.0 / support : probs[static_cast<std::size_t>(value)];
  }
  // True when every value has the same probability (within 1e-12).
  bool is_uniform() const;
};

// A Boolean function f_j of the variables listed in `vars` (the set P_j),
// stored as a truth table. Row order is mixed radix with the first listed
// variable most significant.
struct ReadFunction {
  std::string name;
  std::vector<std::size_t> vars;
  std::vector<std::uint8_t> table;
};

// A read-k family: m independent variables and r Boolean read functions.
// Validated on construction and immutable afterwards.
class FamilySpec {
 public:
  // Throws ValidationError when any invariant fails.
  FamilySpec(std::vector<Variable> variables, std::vector<ReadFunction> functions);

  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_functions() const { return functions_.size(); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<ReadFunction>& functions() const { return functions_; }
  const Variable& variable(std::size_t i) const { return variables_[i]; }
  const ReadFunction& function(std::size_t j) const { return functions_[j]; }

  bool all_uniform() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&);

 private:
  std::vector<Variable> variables_;
  std::vector<ReadFunction> functions_;
};

bool operator==(const Variable& a, const Variable& b);
bool operator==(const ReadFunction& a, const ReadFunction& b);

// Truth tables larger than this are rejected by validation.
inline constexpr std::size_t kMaxTableSize = std::size_t{1} << 26;

// Smallest k for which the family is read-k: the largest number of functions
// reading any single variable. Functions with no variables are ignored.
int read_width(const FamilySpec& spec);

// Row of function j's truth table selected by a full assignment of all m
// variables. Throws DomainError on a wrong-length assignment or an
// out-of-range value.
std::size_t table_index(const FamilySpec& spec, std::size_t j,
                        std::span<const int> assignment);

int eval_function(const FamilySpec& spec, std::size_t j,
                  std::span<const int> assignment);

// One connected block of the function-overlap graph (j ~ j' iff P_j and P_j'
// share a variable), together with the variables its functions read.
struct Component {
  std::vector<std::size_t> functions;
  std::vector<std::size_t> variables;
};

// Partition of the function indices into overlap components. Components are
// ordered by their smallest function index; both index lists are sorted.
// Variables read by no function belong to no component.
std::vector<Component> dependency_components(const FamilySpec& spec);

}  // namespace readk

#endif  // READK_FAMILY_H_
