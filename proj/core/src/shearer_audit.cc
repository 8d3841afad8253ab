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

#include "readk/shearer_audit.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "enumerate.h"
#include "readk/bounds.h"
#include "readk/errors.h"

namespace readk {

using internal::AssignmentWalker;
using internal::WalkState;

bool geq_with_slack(double larger, double smaller, double rel_slack) {
  if (std::isinf(larger) && larger > 0) return true;
  if (std::isinf(smaller) && smaller > 0) return false;
  const double scale = std::max(std::abs(larger), std::abs(smaller));
  return larger >= smaller - rel_slack * scale - kAbsoluteSlack;
}

namespace {

std::size_t tuple_length(const Distribution& d) {
  const std::size_t m = d.outcomes().front().size();
  for (const auto& o : d.outcomes()) {
    if (o.size() != m) throw DomainError("joint law mixes tuples of different lengths");
  }
  return m;
}

double domain_size(const FamilySpec& spec, std::span<const std::size_t> vars) {
  double size = 1.0;
  for (std::size_t v : vars) size *= spec.variable(v).support;
  return size;
}

void require_uniform(const FamilySpec& spec, const char* op) {
  if (!spec.all_uniform()) {
    throw DomainError(std::string(op) + " requires uniformly distributed variables");
  }
}

}  // namespace

Gap shearer_entropy_gap(const Distribution& joint,
                        std::span<const std::vector<std::size_t>> cover, int k) {
  const std::size_t m = tuple_length(joint);
  std::vector<int> multiplicity(m, 0);
  for (const auto& set : cover) {
    for (std::size_t a = 0; a < set.size(); ++a) {
      if (set[a] >= m) {
        throw DomainError("cover set refers to coordinate " + std::to_string(set[a]) +
                          " of a " + std::to_string(m) + "-tuple");
      }
      if (std::find(set.begin(), set.begin() + static_cast<std::ptrdiff_t>(a), set[a]) !=
          set.begin() + static_cast<std::ptrdiff_t>(a)) {
        throw DomainError("cover set lists coordinate " + std::to_string(set[a]) + " twice");
      }
      ++multiplicity[set[a]];
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (multiplicity[i] < k) {
      throw DomainError("coordinate " + std::to_string(i) + " is covered " +
                        std::to_string(multiplicity[i]) + " times, fewer than k = " +
                        std::to_string(k));
    }
  }

  Gap gap;
  gap.lhs = Nats{k * entropy(joint).value};
  double rhs = 0.0;
  for (const auto& set : cover) rhs += entropy(project(joint, set)).value;
  gap.rhs = Nats{rhs};
  gap.holds = geq_with_slack(gap.rhs.value, gap.lhs.value);
  return gap;
}

Gap shearer_kl_gap(const FamilySpec& spec, const Distribution& conditioned) {
  require_uniform(spec, "shearer_kl_gap");
  const std::size_t m = tuple_length(conditioned);
  if (m != spec.num_variables()) {
    throw DomainError("conditioned law is over " + std::to_string(m) + "-tuples but the family has " +
                      std::to_string(spec.num_variables()) + " variables");
  }
  for (const auto& o : conditioned.outcomes()) {
    for (std::size_t i = 0; i < m; ++i) {
      if (o[i] < 0 || o[i] >= spec.variable(i).support) {
        throw DomainError("conditioned law has an outcome outside the variable supports");
      }
    }
  }

  std::vector<std::size_t> everything(m);
  std::iota(everything.begin(), everything.end(), std::size_t{0});
  const int k = read_width(spec);

  Gap gap;
  gap.lhs = Nats{k * kl_to_uniform(conditioned, domain_size(spec, everything)).value};
  double rhs = 0.0;
  for (const auto& f : spec.functions()) {
    rhs += kl_to_uniform(project(conditioned, f.vars), domain_size(spec, f.vars)).value;
  }
  gap.rhs = Nats{rhs};
  gap.holds = geq_with_slack(gap.lhs.value, gap.rhs.value);
  return gap;
}

int ProofTrace::first_violation(double rel_slack) const {
  const auto t = terms();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (!geq_with_slack(t[i].value, t[i + 1].value, rel_slack)) return static_cast<int>(i);
  }
  return -1;
}

ProofTrace proof_trace(const FamilySpec& spec, const TailQuery& query,
                       const EngineOptions& options) {
  require_uniform(spec, "proof_trace");
  if (std::isnan(query.threshold)) throw DomainError("tail threshold is NaN");
  std::vector<std::size_t> vars(spec.num_variables());
  std::iota(vars.begin(), vars.end(), std::size_t{0});
  const std::uint64_t count = assignment_count(spec, vars);
  if (count > options.guard) {
    throw ResourceError("family has " + std::to_string(count) +
                        " assignments, above the enumeration guard of " +
                        std::to_string(options.guard));
  }
  const std::size_t r = spec.num_functions();
  std::vector<std::size_t> funcs(r);
  std::iota(funcs.begin(), funcs.end(), std::size_t{0});
  AssignmentWalker walker(spec, vars, funcs);

  // Per function, the tail mass landing on each row of its truth table: the
  // unnormalized restriction of the conditional law to P_j.
  struct Acc {
    internal::CompensatedSum mass;
    std::vector<std::vector<internal::CompensatedSum>> rows;
  };
  auto make = [&spec] {
    Acc acc;
    for (const auto& f : spec.functions()) acc.rows.emplace_back(f.table.size());
    return acc;
  };
  auto partials = internal::run_chunked<Acc>(
      walker, options.threads, make, [&query](Acc& acc, const WalkState& s) {
        if (!in_tail(s.sum, query)) return;
        acc.mass += s.weight;
        for (std::size_t j = 0; j < s.rows.size(); ++j) acc.rows[j][s.rows[j]] += s.weight;
      });
  Acc total = make();
  for (const auto& part : partials) {
    total.mass += part.mass;
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t row = 0; row < part.rows[j].size(); ++row) {
        total.rows[j][row] += part.rows[j][row];
      }
    }
  }
  const double mass = total.mass.value();
  if (mass <= 0.0) throw DomainError("the conditioning tail event has probability zero");

  ProofTrace trace;
  trace.r = static_cast<long long>(r);
  trace.k = std::max(read_width(spec), 1);
  trace.tail_prob = std::min(mass, 1.0);
  trace.neg_log_tail = Nats{std::max(-std::log(mass), 0.0)};

  const Marginals marginals = function_marginals(spec);
  trace.p = marginals.mean;

  const double inv_k = 1.0 / static_cast<double>(trace.k);
  const double r_over_k = static_cast<double>(trace.r) / static_cast<double>(trace.k);
  double shearer_sum = 0.0;
  double dpi_sum = 0.0;
  double q_sum = 0.0;
  for (std::size_t j = 0; j < r; ++j) {
    const ReadFunction& f = spec.function(j);
    std::vector<double> law(total.rows[j].size());
    double ones = 0.0;
    double zeros = 0.0;
    for (std::size_t row = 0; row < law.size(); ++row) {
      const double row_mass = total.rows[j][row].value();
      law[row] = row_mass / mass;
      (f.table[row] ? ones : zeros) += row_mass;
    }
    shearer_sum +=
        kl_to_uniform(Distribution::FromProbs(std::move(law)), domain_size(spec, f.vars)).value;
    const double q_j = internal::bernoulli_mean(ones, zeros);
    dpi_sum += kl_binary(q_j, marginals.per_function[j]).value;
    q_sum += q_j;
  }
  trace.q = std::clamp(q_sum / static_cast<double>(r), 0.0, 1.0);
  trace.shearer_term = Nats{inv_k * shearer_sum};
  trace.dpi_term = Nats{inv_k * dpi_sum};
  trace.convexity_term = Nats{r_over_k * kl_binary(trace.q, trace.p).value};

  trace.eps = eps_for_threshold(query.threshold, trace.r, trace.p, query.tail);
  if (trace.eps > 0.0) {
    const double target = std::clamp(query.threshold / static_cast<double>(r), 0.0, 1.0);
    trace.final_term = Nats{r_over_k * kl_binary(target, trace.p).value};
  }
  return trace;
}

}  // namespace readk
