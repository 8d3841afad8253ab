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

#ifndef READK_INFO_THEORY_H_
#define READK_INFO_THEORY_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace readk {

// Absolute tolerance for probability normalization.
inline constexpr double kNormalizationTolerance = 1e-12;

// A quantity of information in natural-log units. May be +infinity (KL with
// a support mismatch); never NaN.
struct Nats {
  double value = 0.0;

  static Nats infinity() {
    return Nats{std::numeric_limits<double>::infinity()};
  }
  bool is_infinite() const { return value == std::numeric_limits<double>::infinity(); }

  friend auto operator<=>(const Nats&, const Nats&) = default;
};

// Outcome labels are integer tuples. Scalar outcomes are 1-tuples.
using Outcome = std::vector<int>;

// An explicit, finitely supported probability vector over distinct labeled
// outcomes. Immutable once constructed.
class Distribution {
 public:
  // Throws ValidationError on negative probs, a sum away from 1, mismatched
  // lengths or repeated labels.
  Distribution(std::vector<Outcome> outcomes, std::vector<double> probs);

  // Labels {0}, {1}, ..., {n-1}.
  static Distribution FromProbs(std::vector<double> probs);
  static Distribution Uniform(std::size_t n);

  std::size_t size() const { return probs_.size(); }
  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  const std::vector<double>& probs() const { return probs_; }

  // Probability of `outcome`, 0 if absent.
  double prob_of(const Outcome& outcome) const;

 private:
  std::vector<Outcome> outcomes_;
  std::vector<double> probs_;
};

// Shannon entropy, sum of d(a) ln(1/d(a)) with 0 ln(1/0) = 0.
Nats entropy(const Distribution& d);

// Relative entropy D(d1 || d2). Requires identical ordered outcome lists
// (DomainError otherwise). +infinity when d1 puts mass where d2 has none.
Nats kl_divergence(const Distribution& d1, const Distribution& d2);

// D(d || uniform over a set of `domain_size` elements that contains the
// support of d), evaluated term by term from the definition.
Nats kl_to_uniform(const Distribution& d, double domain_size);

// Binary relative entropy KL(q || p) between Bernoulli(q) and Bernoulli(p).
// DomainError unless both arguments lie in [0, 1].
Nats kl_binary(double q, double p);

// Marginal over the tuple positions in `coords` (0-based, in the given
// order). Colliding sub-tuples are merged; the result is ordered
// lexicographically. DomainError if a coordinate is out of range for some
// outcome.
Distribution project(const Distribution& d, std::span<const std::size_t> coords);

// Image distribution under `phi`, ordered lexicographically by label.
Distribution push_forward(const Distribution& d,
                          const std::function<Outcome(const Outcome&)>& phi);

}  // namespace readk

#endif  // READK_INFO_THEORY_H_
