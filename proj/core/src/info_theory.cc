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

#include "readk/info_theory.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "readk/errors.h"

namespace readk {

Distribution::Distribution(std::vector<Outcome> outcomes, std::vector<double> probs)
    : outcomes_(std::move(outcomes)), probs_(std::move(probs)) {
  if (outcomes_.size() != probs_.size()) {
    throw ValidationError("distribution: " + std::to_string(outcomes_.size()) +
                          " outcomes but " + std::to_string(probs_.size()) + " probabilities");
  }
  if (probs_.empty()) throw ValidationError("distribution: empty outcome set");
  double total = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw ValidationError("distribution: probability " + std::to_string(p) +
                            " is negative or not finite");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw ValidationError("distribution: probabilities sum to " + std::to_string(total));
  }
  std::vector<const Outcome*> sorted;
  sorted.reserve(outcomes_.size());
  for (const auto& o : outcomes_) sorted.push_back(&o);
  std::sort(sorted.begin(), sorted.end(),
            [](const Outcome* a, const Outcome* b) { return *a < *b; });
  auto dup = std::adjacent_find(sorted.begin(), sorted.end(),
                                [](const Outcome* a, const Outcome* b) { return *a == *b; });
  if (dup != sorted.end()) throw ValidationError("distribution: repeated outcome label");
}

Distribution Distribution::FromProbs(std::vector<double> probs) {
  std::vector<Outcome> outcomes;
  outcomes.reserve(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) outcomes.push_back({static_cast<int>(i)});
  return Distribution(std::move(outcomes), std::move(probs));
}

Distribution Distribution::Uniform(std::size_t n) {
  if (n == 0) throw ValidationError("distribution: empty outcome set");
  return FromProbs(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double Distribution::prob_of(const Outcome& outcome) const {
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    if (outcomes_[i] == outcome) return probs_[i];
  }
  return 0.0;
}

Nats entropy(const Distribution& d) {
  double h = 0.0;
  for (double p : d.probs()) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return Nats{std::max(h, 0.0)};
}

Nats kl_divergence(const Distribution& d1, const Distribution& d2) {
  if (d1.outcomes() != d2.outcomes()) {
    throw DomainError("kl_divergence: distributions are over different outcome lists");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < d1.size(); ++i) {
    const double a = d1.probs()[i];
    const double b = d2.probs()[i];
    if (a == 0.0) continue;
    if (b == 0.0) return Nats::infinity();
    sum += a * std::log(a / b);
  }
  return Nats{std::max(sum, 0.0)};
}

Nats kl_to_uniform(const Distribution& d, double domain_size) {
  std::size_t support = 0;
  for (double p : d.probs()) support += p > 0.0 ? 1 : 0;
  if (!(domain_size >= static_cast<double>(support)) || !std::isfinite(domain_size)) {
    throw DomainError("kl_to_uniform: domain of size " + std::to_string(domain_size) +
                      " cannot contain a support of size " + std::to_string(support));
  }
  double sum = 0.0;
  for (double p : d.probs()) {
    if (p > 0.0) sum += p * std::log(p * domain_size);
  }
  return Nats{std::max(sum, 0.0)};
}

Nats kl_binary(double q, double p) {
  if (!(q >= 0.0 && q <= 1.0) || !(p >= 0.0 && p <= 1.0)) {
    throw DomainError("kl_binary: arguments must lie in [0, 1], got q=" + std::to_string(q) +
                      " p=" + std::to_string(p));
  }
  if (q == p) return Nats{0.0};

  double ones = 0.0;
  if (q > 0.0) {
    if (p == 0.0) return Nats::infinity();
    ones = q == 1.0 ? -std::log(p) : q * std::log(q / p);
  }
  double zeros = 0.0;
  if (q < 1.0) {
    if (p == 1.0) return Nats::infinity();
    zeros = q == 0.0 ? -std::log1p(-p) : (1.0 - q) * std::log((1.0 - q) / (1.0 - p));
  }
  return Nats{std::max(ones + zeros, 0.0)};
}

namespace {

Distribution from_map(const std::map<Outcome, double>& mass) {
  std::vector<Outcome> outcomes;
  std::vector<double> probs;
  outcomes.reserve(mass.size());
  probs.reserve(mass.size());
  for (const auto& [label, p] : mass) {
    outcomes.push_back(label);
    probs.push_back(p);
  }
  return Distribution(std::move(outcomes), std::move(probs));
}

}  // namespace

Distribution project(const Distribution& d, std::span<const std::size_t> coords) {
  std::map<Outcome, double> mass;
  Outcome sub(coords.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Outcome& o = d.outcomes()[i];
    for (std::size_t c = 0; c < coords.size(); ++c) {
      if (coords[c] >= o.size()) {
        throw DomainError("project: coordinate " + std::to_string(coords[c]) +
                          " out of range for a tuple of length " + std::to_string(o.size()));
      }
      sub[c] = o[coords[c]];
    }
    mass[sub] += d.probs()[i];
  }
  return from_map(mass);
}

Distribution push_forward(const Distribution& d,
                          const std::function<Outcome(const Outcome&)>& phi) {
  std::map<Outcome, double> mass;
  for (std::size_t i = 0; i < d.size(); ++i) mass[phi(d.outcomes()[i])] += d.probs()[i];
  return from_map(mass);
}

}  // namespace readk
