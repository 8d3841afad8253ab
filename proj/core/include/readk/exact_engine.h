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

#ifndef READK_EXACT_ENGINE_H_
#define READK_EXACT_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "readk/family.h"
#include "readk/info_theory.h"
#include "readk/tail.h"

namespace readk {

inline constexpr std::uint64_t kDefaultEnumerationGuard = std::uint64_t{1} << 24;

struct EngineOptions {
  // Largest number of assignments a single enumeration may visit.
  std::uint64_t guard = kDefaultEnumerationGuard;
  // Worker threads; 0 picks std::thread::hardware_concurrency(). Results do
  // not depend on this value.
  unsigned threads = 0;
};

// Exact law of Y = Y_1 + ... + Y_r; probs[s] = Pr[Y = s] for s = 0..r.
struct SumPmf {
  std::vector<double> probs;

  std::size_t max_sum() const { return probs.empty() ? 0 : probs.size() - 1; }
  double mean() const;
};

// Number of joint assignments of `vars`, saturating at UINT64_MAX.
std::uint64_t assignment_count(const FamilySpec& spec, std::span<const std::size_t> vars);

// Enumerates each dependency component separately and convolves the
// component pmfs. Throws ResourceError if some component exceeds the guard.
SumPmf sum_pmf(const FamilySpec& spec, const EngineOptions& options = {});

// Same law by a single enumeration over all m variables. The guard applies to
// the full assignment count.
SumPmf sum_pmf_enumerated(const FamilySpec& spec, const EngineOptions& options = {});

// Pr[Y >= t] or Pr[Y <= t].
double tail_prob(const SumPmf& pmf, const TailQuery& query);

// Whether an integer sum falls inside the tail event.
bool in_tail(long long sum, const TailQuery& query);

struct Marginals {
  std::vector<double> per_function;  // p_j = Pr[f_j = 1]
  double mean = 0.0;                 // p, the average of the p_j
};

// Exact Pr[f_j = 1] from each truth table and the variable weights.
Marginals function_marginals(const FamilySpec& spec);

struct ConditionalMarginals {
  std::vector<double> per_function;  // q_j = Pr[f_j = 1 | tail event]
  double mean = 0.0;                 // q, the average of the q_j
  double event_prob = 0.0;           // Pr[tail event]
};

// Exact conditional marginals given the tail event, by full enumeration.
// DomainError if the event has probability zero; ResourceError past the guard.
ConditionalMarginals conditional_function_marginals(
    const FamilySpec& spec, const TailQuery& query, const EngineOptions& options = {});

// The joint law of (X_1, ..., X_m) conditioned on the tail event, as a
// distribution over m-tuples in lexicographic order (zero-mass assignments
// omitted). Same errors as conditional_function_marginals.
Distribution tail_conditioned_law(const FamilySpec& spec, const TailQuery& query,
                                  const EngineOptions& options = {});

}  // namespace readk

#endif  // READK_EXACT_ENGINE_H_
