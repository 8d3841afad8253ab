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

#ifndef READK_SHEARER_AUDIT_H_
#define READK_SHEARER_AUDIT_H_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "readk/exact_engine.h"
#include "readk/family.h"
#include "readk/info_theory.h"
#include "readk/tail.h"

namespace readk {

// Slack used when checking the audited inequalities: relative 1e-9 on top of
// an absolute floor of 1e-12 for terms that should vanish.
inline constexpr double kRelativeSlack = 1e-9;
inline constexpr double kAbsoluteSlack = 1e-12;

// larger >= smaller, up to the slack above.
bool geq_with_slack(double larger, double smaller, double rel_slack = kRelativeSlack);

// Both sides of an audited inequality and whether it held.
struct Gap {
  Nats lhs;
  Nats rhs;
  bool holds = false;
};

// Shearer's lemma on an explicit joint law over m-tuples:
//   lhs = k * H(X_1..X_m),  rhs = sum_j H(X restricted to cover[j]),
// holds iff lhs <= rhs (with slack). DomainError if some coordinate is
// covered fewer than k times.
Gap shearer_entropy_gap(const Distribution& joint,
                        std::span<const std::vector<std::size_t>> cover, int k);

// The KL form of the lemma for a family of uniform variables:
//   lhs = k * D(conditioned || uniform on A),
//   rhs = sum_j D(conditioned restricted to P_j || uniform on A_{P_j}),
// with k = read_width(spec); holds iff lhs >= rhs. `conditioned` must be a
// law over m-tuples inside A. DomainError on non-uniform variables.
Gap shearer_kl_gap(const FamilySpec& spec, const Distribution& conditioned);

// The chain of quantities bounding -ln Pr[tail] from below:
//   neg_log_tail   = -ln Pr[tail] = D(mu^tail || mu)
//   shearer_term   = (1/k) sum_j D(mu_j^tail || mu_j)
//   dpi_term       = (1/k) sum_j KL(q_j || p_j)
//   convexity_term = (r/k) KL(q || p)
//   final_term     = (r/k) KL(t/r || p), or 0 when t/r is not beyond p
// Every term is reported even when the chain fails.
struct ProofTrace {
  Nats neg_log_tail;
  Nats shearer_term;
  Nats dpi_term;
  Nats convexity_term;
  Nats final_term;

  double tail_prob = 0.0;
  double p = 0.0;    // mean unconditional marginal
  double q = 0.0;    // mean conditional marginal
  double eps = 0.0;  // t/r - p (upper) or p - t/r (lower)
  long long r = 0;
  long long k = 0;

  std::array<Nats, 5> terms() const {
    return {neg_log_tail, shearer_term, dpi_term, convexity_term, final_term};
  }
  // Index i such that terms()[i] < terms()[i + 1] beyond slack, or -1.
  int first_violation(double rel_slack = kRelativeSlack) const;
  bool chain_holds(double rel_slack = kRelativeSlack) const {
    return first_violation(rel_slack) < 0;
  }
};

// Computes the trace from the exact conditional law. Requires uniform
// variables (DomainError), a tail event of positive probability
// (DomainError) and a total assignment count within the guard
// (ResourceError).
ProofTrace proof_trace(const FamilySpec& spec, const TailQuery& query,
                       const EngineOptions& options = {});

}  // namespace readk

#endif  // READK_SHEARER_AUDIT_H_
