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

#include "readk/generators.h"

#include <algorithm>
#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "readk/errors.h"
#include "readk/random.h"

namespace readk {

namespace {

long long parse_integer(std::string_view text, std::string_view whole) {
  long long value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw DomainError("invalid rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational Rational::Parse(std::string_view text) {
  Rational q;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    q.num = parse_integer(text, text);
    q.den = 1;
  } else {
    q.num = parse_integer(text.substr(0, slash), text);
    q.den = parse_integer(text.substr(slash + 1), text);
  }
  if (q.den < 1 || q.den > kMaxRationalDenominator || q.num < 0 || q.num > q.den) {
    throw DomainError("rational '" + std::string(text) +
                      "' must be a/b with 1 <= b <= 64 and 0 <= a <= b");
  }
  return q;
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

FamilySpec gen_block_tight(int k, int blocks, Rational p) {
  if (k < 1 || blocks < 1) throw DomainError("block-tight preset needs k >= 1 and blocks >= 1");
  if (p.den < 1 || p.den > kMaxRationalDenominator || p.num < 0 || p.num > p.den) {
    throw DomainError("block-tight preset: invalid rational " + p.to_string());
  }
  const double one = static_cast<double>(p.num) / static_cast<double>(p.den);
  const double zero = static_cast<double>(p.den - p.num) / static_cast<double>(p.den);

  std::vector<Variable> variables;
  std::vector<ReadFunction> functions;
  for (int b = 0; b < blocks; ++b) {
    variables.push_back({"x" + std::to_string(b + 1), 2, {zero, one}});
    for (int c = 0; c < k; ++c) {
      functions.push_back({"y" + std::to_string(b * k + c + 1),
                           {static_cast<std::size_t>(b)},
                           {0, 1}});
    }
  }
  return FamilySpec(std::move(variables), std::move(functions));
}

FamilySpec gen_random_family(const RandomFamilyParams& params) {
  const auto& [m, r, k, max_arity, seed, max_support, weighted] = params;
  if (m < 1 || r < 1 || k < 1) throw DomainError("random preset needs m, r, k >= 1");
  if (max_arity < 1 || max_arity > m) {
    throw DomainError("random preset needs 1 <= max_arity <= m");
  }
  if (max_support < 2) throw DomainError("random preset needs max_support >= 2");
  if (static_cast<long long>(r) > static_cast<long long>(m) * k) {
    throw DomainError("random preset is infeasible: " + std::to_string(r) +
                      " functions cannot each read a variable when " + std::to_string(m) +
                      " variables are read at most " + std::to_string(k) + " times");
  }

  RandomEngine engine = make_engine(seed);
  std::vector<Variable> variables;
  for (int i = 0; i < m; ++i) {
    Variable v;
    v.name = "x" + std::to_string(i + 1);
    v.support = 2 + static_cast<int>(uniform_below(engine, static_cast<std::uint64_t>(max_support - 1)));
    if (weighted) {
      std::vector<std::uint64_t> w(static_cast<std::size_t>(v.support));
      std::uint64_t total = 0;
      for (auto& x : w) total += (x = uniform_below(engine, 9));
      if (total == 0) total = w[0] = 1;
      for (auto x : w) v.probs.push_back(static_cast<double>(x) / static_cast<double>(total));
    }
    variables.push_back(std::move(v));
  }

  std::vector<int> reads(static_cast<std::size_t>(m), 0);
  std::vector<ReadFunction> functions;
  int retries = 0;
  while (static_cast<int>(functions.size()) < r) {
    std::vector<std::size_t> open;
    long long capacity = 0;
    for (std::size_t i = 0; i < reads.size(); ++i) {
      if (reads[i] < k) open.push_back(i);
      capacity += k - reads[i];
    }
    // Leave at least one read for every function still to be placed.
    const long long later = r - static_cast<long long>(functions.size()) - 1;
    const auto widest = static_cast<std::uint64_t>(
        std::min({static_cast<long long>(max_arity), static_cast<long long>(open.size()),
                  capacity - later}));
    const auto arity = 1 + uniform_below(engine, widest);
    ReadFunction f;
    f.name = "y" + std::to_string(functions.size() + 1);
    std::size_t rows = 1;
    for (std::size_t a = 0; a < arity; ++a) {
      const auto pick = a + uniform_below(engine, open.size() - a);
      std::swap(open[a], open[pick]);
      f.vars.push_back(open[a]);
      rows *= static_cast<std::size_t>(variables[open[a]].support);
    }
    if (rows > kMaxTableSize) {
      if (++retries > kGeneratorRetryBudget) {
        throw DomainError("random preset: retry budget exhausted placing function " +
                          std::to_string(functions.size()));
      }
      continue;
    }
    f.table.resize(rows);
    for (auto& bit : f.table) bit = static_cast<std::uint8_t>(uniform_below(engine, 2));
    for (std::size_t v : f.vars) ++reads[v];
    functions.push_back(std::move(f));
  }
  return FamilySpec(std::move(variables), std::move(functions));
}

}  // namespace readk
