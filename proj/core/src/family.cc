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

#include "readk/family.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "readk/errors.h"
#include "readk/info_theory.h"

namespace readk {

namespace {

void validate_variable(const Variable& v, std::size_t index) {
  const std::string where = "variable " + std::to_string(index) + " (" + v.name + ")";
  if (v.support < 1) throw ValidationError(where + ": support must be >= 1");
  if (v.probs.empty()) return;
  if (v.probs.size() != static_cast<std::size_t>(v.support)) {
    throw ValidationError(where + ": " + std::to_string(v.probs.size()) +
                          " probabilities for support " + std::to_string(v.support));
  }
  double total = 0.0;
  for (double p : v.probs) {
    if (!std::isfinite(p) || p < 0.0) {
      throw ValidationError(where + ": negative or non-finite probability");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw ValidationError(where + ": probabilities sum to " + std::to_string(total));
  }
}

void validate_function(const ReadFunction& f, std::size_t index,
                       const std::vector<Variable>& variables) {
  const std::string where = "function " + std::to_string(index) + " (" + f.name + ")";
  std::size_t rows = 1;
  for (std::size_t a = 0; a < f.vars.size(); ++a) {
    const std::size_t v = f.vars[a];
    if (v >= variables.size()) {
      throw ValidationError(where + ": variable index " + std::to_string(v) + " out of range");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (f.vars[b] == v) {
        throw ValidationError(where + ": variable " + std::to_string(v) + " listed twice");
      }
    }
    rows *= static_cast<std::size_t>(variables[v].support);
    if (rows > kMaxTableSize) throw ValidationError(where + ": truth table too large");
  }
  if (f.table.size() != rows) {
    throw ValidationError(where + ": truth table has " + std::to_string(f.table.size()) +
                          " entries, expected " + std::to_string(rows));
  }
  for (std::uint8_t bit : f.table) {
    if (bit > 1) throw ValidationError(where + ": truth table entries must be 0 or 1");
  }
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

bool Variable::is_uniform() const {
  if (probs.empty()) return true;
  const double u = 1.0 / support;
  return std::all_of(probs.begin(), probs.end(),
                     [u](double p) { return std::abs(p - u) <= kNormalizationTolerance; });
}

bool operator==(const Variable& a, const Variable& b) {
  return a.name == b.name && a.support == b.support && a.probs == b.probs;
}

bool operator==(const ReadFunction& a, const ReadFunction& b) {
  return a.name == b.name && a.vars == b.vars && a.table == b.table;
}

bool operator==(const FamilySpec& a, const FamilySpec& b) {
  return a.variables_ == b.variables_ && a.functions_ == b.functions_;
}

FamilySpec::FamilySpec(std::vector<Variable> variables, std::vector<ReadFunction> functions)
    : variables_(std::move(variables)), functions_(std::move(functions)) {
  if (variables_.empty()) throw ValidationError("family: needs at least one variable");
  if (functions_.empty()) throw ValidationError("family: needs at least one function");
  for (std::size_t i = 0; i < variables_.size(); ++i) validate_variable(variables_[i], i);
  for (std::size_t j = 0; j < functions_.size(); ++j) {
    validate_function(functions_[j], j, variables_);
  }
}

bool FamilySpec::all_uniform() const {
  return std::all_of(variables_.begin(), variables_.end(),
                     [](const Variable& v) { return v.is_uniform(); });
}

int read_width(const FamilySpec& spec) {
  std::vector<int> reads(spec.num_variables(), 0);
  for (const auto& f : spec.functions()) {
    for (std::size_t v : f.vars) ++reads[v];
  }
  return *std::max_element(reads.begin(), reads.end());
}

std::size_t table_index(const FamilySpec& spec, std::size_t j,
                        std::span<const int> assignment) {
  if (j >= spec.num_functions()) {
    throw DomainError("function index " + std::to_string(j) + " out of range");
  }
  if (assignment.size() != spec.num_variables()) {
    throw DomainError("assignment has " + std::to_string(assignment.size()) +
                      " values for " + std::to_string(spec.num_variables()) + " variables");
  }
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] < 0 || assignment[i] >= spec.variable(i).support) {
      throw DomainError("value " + std::to_string(assignment[i]) + " out of range for variable " +
                        std::to_string(i));
    }
  }
  std::size_t index = 0;
  for (std::size_t v : spec.function(j).vars) {
    index = index * static_cast<std::size_t>(spec.variable(v).support) +
            static_cast<std::size_t>(assignment[v]);
  }
  return index;
}

int eval_function(const FamilySpec& spec, std::size_t j, std::span<const int> assignment) {
  return spec.function(j).table[table_index(spec, j, assignment)];
}

std::vector<Component> dependency_components(const FamilySpec& spec) {
  const std::size_t r = spec.num_functions();
  UnionFind uf(r);
  std::vector<std::size_t> first_reader(spec.num_variables(), r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t v : spec.function(j).vars) {
      if (first_reader[v] == r) {
        first_reader[v] = j;
      } else {
        uf.unite(first_reader[v], j);
      }
    }
  }

  // Functions are visited in index order, so components come out ordered by
  // their smallest member.
  std::vector<std::size_t> slot(r, r);
  std::vector<Component> components;
  for (std::size_t j = 0; j < r; ++j) {
    const std::size_t root = uf.find(j);
    if (slot[root] == r) {
      slot[root] = components.size();
      components.emplace_back();
    }
    components[slot[root]].functions.push_back(j);
  }
  for (std::size_t v = 0; v < spec.num_variables(); ++v) {
    if (first_reader[v] == r) continue;
    components[slot[uf.find(first_reader[v])]].variables.push_back(v);
  }
  return components;
}

}  // namespace readk
