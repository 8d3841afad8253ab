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

#ifndef READK_BOUNDS_H_
#define READK_BOUNDS_H_

#include "readk/info_theory.h"
#include "readk/tail.h"

namespace readk {

// Parameters of a read-k tail bound: r functions, read width k, mean
// marginal p and deviation eps (as a fraction of r).
struct BoundQuery {
  long long r = 1;
  long long k = 1;
  double p = 0.0;
  double eps = 0.0;
  Tail tail = Tail::kUpper;
};

// log_bound is the natural log of the bound (<= 0, possibly -infinity).
struct BoundResult {
  Nats log_bound;
  double bound = 1.0;
};

// exp(-KL(p +- eps || p) * r / k). Evaluated in log space.
// DomainError on r < 1, k < 1, p outside [0, 1], eps <= 0, or a target
// p +- eps outside [0, 1].
BoundResult read_k_tail_bound(const BoundQuery& query);

// exp(-2 eps^2 r / k). Never smaller than read_k_tail_bound.
BoundResult simplified_tail_bound(const BoundQuery& query);

// Pr[Y_1 = ... = Y_r = 1] <= p^(r/k) for read-k indicators with common
// marginal p.
BoundResult shearer_and_bound(long long r, long long k, double p);

// eps that makes (p + eps) r = t for the upper tail, (p - eps) r = t for the
// lower tail. May be <= 0 when t is on the wrong side of the mean.
double eps_for_threshold(double t, long long r, double p, Tail tail);

}  // namespace readk

#endif  // READK_BOUNDS_H_
