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

#include "readk/exact_engine.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "enumerate.h"
#include "readk/errors.h"

namespace readk {

using internal::AssignmentWalker;
using internal::bernoulli_mean;
using internal::CompensatedSum;
using internal::WalkState;

Tail parse_tail(std::string_view text) {
  if (text == "upper" || text == ">=") return Tail::kUpper;
  if (text == "lower" || text == "<=") return Tail::kLower;
  throw DomainError("unknown tail direction '" + std::string(text) + "' (expected upper or lower)");
}

namespace {

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

void check_guard(std::uint64_t count, const EngineOptions& options, const std::string& what) {
  if (count > options.guard) {
    throw ResourceError(what + " has " +
                        (count == UINT64_MAX ? std::string("more than 2^64")
                                             : std::to_string(count)) +
                        " assignments, above the enumeration guard of " +
                        std::to_string(options.guard));
  }
}

void check_threshold(const TailQuery& query) {
  if (std::isnan(query.threshold)) throw DomainError("tail threshold is NaN");
}

std::vector<double> enumerate_pmf(const FamilySpec& spec, std::vector<std::size_t> vars,
                                  std::vector<std::size_t> funcs, const EngineOptions& options) {
  const std::size_t nf = funcs.size();
  AssignmentWalker walker(spec, std::move(vars), std::move(funcs));
  auto partials = internal::run_chunked<std::vector<CompensatedSum>>(
      walker, options.threads, [nf] { return std::vector<CompensatedSum>(nf + 1); },
      [](std::vector<CompensatedSum>& pmf, const WalkState& s) {
        pmf[static_cast<std::size_t>(s.sum)] += s.weight;
      });
  std::vector<CompensatedSum> total(nf + 1);
  for (const auto& part : partials) {
    for (std::size_t s = 0; s <= nf; ++s) total[s] += part[s];
  }
  std::vector<double> pmf(nf + 1);
  for (std::size_t s = 0; s <= nf; ++s) pmf[s] = total[s].value();
  return pmf;
}

std::string describe_component(const Component& c) {
  std::string out = "component {";
  for (std::size_t i = 0; i < c.functions.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(c.functions[i]);
  }
  return out + "} over " + std::to_string(c.variables.size()) + " variables";
}

}  // namespace

double SumPmf::mean() const {
  double m = 0.0;
  for (std::size_t s = 0; s < probs.size(); ++s) m += static_cast<double>(s) * probs[s];
  return m;
}

std::uint64_t assignment_count(const FamilySpec& spec, std::span<const std::size_t> vars) {
  std::uint64_t count = 1;
  for (std::size_t v : vars) {
    const auto s = static_cast<std::uint64_t>(spec.variable(v).support);
    if (count > UINT64_MAX / s) return UINT64_MAX;
    count *= s;
  }
  return count;
}

SumPmf sum_pmf(const FamilySpec& spec, const EngineOptions& options) {
  const auto components = dependency_components(spec);
  for (const auto& c : components) {
    check_guard(assignment_count(spec, c.variables), options, describe_component(c));
  }
  std::vector<double> pmf{1.0};
  for (const auto& c : components) {
    const auto part = enumerate_pmf(spec, c.variables, c.functions, options);
    std::vector<double> next(pmf.size() + part.size() - 1, 0.0);
    for (std::size_t a = 0; a < pmf.size(); ++a) {
      if (pmf[a] == 0.0) continue;
      for (std::size_t b = 0; b < part.size(); ++b) next[a + b] += pmf[a] * part[b];
    }
    pmf = std::move(next);
  }
  return SumPmf{std::move(pmf)};
}

SumPmf sum_pmf_enumerated(const FamilySpec& spec, const EngineOptions& options) {
  auto vars = all_indices(spec.num_variables());
  check_guard(assignment_count(spec, vars), options, "family");
  return SumPmf{enumerate_pmf(spec, std::move(vars), all_indices(spec.num_functions()), options)};
}

bool in_tail(long long sum, const TailQuery& query) {
  const auto s = static_cast<double>(sum);
  return query.tail == Tail::kUpper ? s >= query.threshold : s <= query.threshold;
}

double tail_prob(const SumPmf& pmf, const TailQuery& query) {
  check_threshold(query);
  double total = 0.0;
  for (std::size_t s = 0; s < pmf.probs.size(); ++s) {
    if (in_tail(static_cast<long long>(s), query)) total += pmf.probs[s];
  }
  return std::min(total, 1.0);
}

Marginals function_marginals(const FamilySpec& spec) {
  Marginals out;
  out.per_function.reserve(spec.num_functions());
  for (std::size_t j = 0; j < spec.num_functions(); ++j) {
    AssignmentWalker walker(spec, spec.function(j).vars, {j});
    CompensatedSum mass[2];
    walker.walk(0, walker.total(), [&mass](const WalkState& s) { mass[s.sum] += s.weight; });
    out.per_function.push_back(bernoulli_mean(mass[1].value(), mass[0].value()));
  }
  out.mean = std::accumulate(out.per_function.begin(), out.per_function.end(), 0.0) /
             static_cast<double>(out.per_function.size());
  return out;
}

ConditionalMarginals conditional_function_marginals(const FamilySpec& spec,
                                                    const TailQuery& query,
                                                    const EngineOptions& options) {
  check_threshold(query);
  auto vars = all_indices(spec.num_variables());
  check_guard(assignment_count(spec, vars), options, "family");
  const std::size_t r = spec.num_functions();
  AssignmentWalker walker(spec, std::move(vars), all_indices(r));

  struct Acc {
    CompensatedSum mass;
    std::vector<CompensatedSum> ones;
    std::vector<CompensatedSum> zeros;
  };
  auto partials = internal::run_chunked<Acc>(
      walker, options.threads,
      [r] { return Acc{{}, std::vector<CompensatedSum>(r), std::vector<CompensatedSum>(r)}; },
      [&query](Acc& acc, const WalkState& s) {
        if (!in_tail(s.sum, query)) return;
        acc.mass += s.weight;
        for (std::size_t j = 0; j < s.bits.size(); ++j) {
          (s.bits[j] ? acc.ones : acc.zeros)[j] += s.weight;
        }
      });

  ConditionalMarginals out;
  CompensatedSum event;
  std::vector<CompensatedSum> ones(r);
  std::vector<CompensatedSum> zeros(r);
  for (const auto& part : partials) {
    event += part.mass;
    for (std::size_t j = 0; j < r; ++j) {
      ones[j] += part.ones[j];
      zeros[j] += part.zeros[j];
    }
  }
  out.event_prob = event.value();
  if (out.event_prob <= 0.0) {
    throw DomainError("the conditioning tail event has probability zero");
  }
  out.per_function.reserve(r);
  for (std::size_t j = 0; j < r; ++j) {
    out.per_function.push_back(bernoulli_mean(ones[j].value(), zeros[j].value()));
  }
  out.mean = std::accumulate(out.per_function.begin(), out.per_function.end(), 0.0) /
             static_cast<double>(r);
  out.event_prob = std::min(out.event_prob, 1.0);
  return out;
}

Distribution tail_conditioned_law(const FamilySpec& spec, const TailQuery& query,
                                  const EngineOptions& options) {
  check_threshold(query);
  auto vars = all_indices(spec.num_variables());
  check_guard(assignment_count(spec, vars), options, "family");
  AssignmentWalker walker(spec, std::move(vars), all_indices(spec.num_functions()));

  struct Acc {
    std::vector<Outcome> outcomes;
    std::vector<double> weights;
  };
  auto partials = internal::run_chunked<Acc>(
      walker, options.threads, [] { return Acc{}; },
      [&query](Acc& acc, const WalkState& s) {
        if (s.weight == 0.0 || !in_tail(s.sum, query)) return;
        acc.outcomes.emplace_back(s.digits.begin(), s.digits.end());
        acc.weights.push_back(s.weight);
      });

  CompensatedSum total;
  for (const auto& part : partials) {
    for (double w : part.weights) total += w;
  }
  const double mass = total.value();
  if (mass <= 0.0) throw DomainError("the conditioning tail event has probability zero");

  std::vector<Outcome> outcomes;
  std::vector<double> probs;
  for (auto& part : partials) {
    for (std::size_t i = 0; i < part.outcomes.size(); ++i) {
      outcomes.push_back(std::move(part.outcomes[i]));
      probs.push_back(part.weights[i] / mass);
    }
  }
  return Distribution(std::move(outcomes), std::move(probs));
}

}  // namespace readk
