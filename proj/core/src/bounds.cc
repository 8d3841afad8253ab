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

#include "readk/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "readk/errors.h"

namespace readk {

namespace {

// Tolerance on p +- eps leaving [0, 1]; covers eps derived as t/r - p.
constexpr double kTargetTolerance = 1e-12;

void check_shape(long long r, long long k, double p) {
  if (r < 1) throw DomainError("r must be >= 1, got " + std::to_string(r));
  if (k < 1) throw DomainError("k must be >= 1, got " + std::to_string(k));
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1], got " + std::to_string(p));
}

// Returns p + eps or p - eps, clamped into [0, 1].
double checked_target(const BoundQuery& q) {
  check_shape(q.r, q.k, q.p);
  if (!(q.eps > 0.0) || !std::isfinite(q.eps)) {
    throw DomainError("eps must be a positive finite number, got " + std::to_string(q.eps));
  }
  const double target = q.tail == Tail::kUpper ? q.p + q.eps : q.p - q.eps;
  if (target > 1.0 + kTargetTolerance) {
    throw DomainError("p + eps = " + std::to_string(target) +
                      " exceeds 1: the upper-tail event is empty, no bound is needed");
  }
  if (target < -kTargetTolerance) {
    throw DomainError("p - eps = " + std::to_string(target) +
                      " is below 0: the lower-tail event is empty, no bound is needed");
  }
  return std::clamp(target, 0.0, 1.0);
}

BoundResult from_log(double log_bound) {
  if (log_bound == -std::numeric_limits<double>::infinity()) return {Nats{log_bound}, 0.0};
  return {Nats{log_bound}, std::exp(log_bound)};
}

double ratio(long long r, long long k) { return static_cast<double>(r) / static_cast<double>(k); }

}  // namespace

BoundResult read_k_tail_bound(const BoundQuery& query) {
  const double target = checked_target(query);
  const Nats kl = kl_binary(target, query.p);
  if (kl.is_infinite()) return from_log(-std::numeric_limits<double>::infinity());
  return from_log(-(kl.value * ratio(query.r, query.k)));
}

BoundResult simplified_tail_bound(const BoundQuery& query) {
  checked_target(query);
  return from_log(-(2.0 * query.eps * query.eps * ratio(query.r, query.k)));
}

BoundResult shearer_and_bound(long long r, long long k, double p) {
  check_shape(r, k, p);
  if (p == 0.0) return from_log(-std::numeric_limits<double>::infinity());
  return from_log(ratio(r, k) * std::log(p));
}

double eps_for_threshold(double t, long long r, double p, Tail tail) {
  const double fraction = t / static_cast<double>(r);
  return tail == Tail::kUpper ? fraction - p : p - fraction;
}

}  // namespace readk
