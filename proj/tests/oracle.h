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

// Test-only reference computations. Nothing here goes through the library's
// enumeration or convolution code: assignments are walked by a plain
// odometer and every function value comes from eval_function().

#ifndef READK_TESTS_ORACLE_H_
#define READK_TESTS_ORACLE_H_

#include <cmath>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "readk/family.h"
#include "readk/info_theory.h"
#include "readk/tail.h"

namespace readk::testing {

// Calls visit(assignment, weight) for every full assignment of the family.
template <class Visit>
void for_each_assignment(const FamilySpec& spec, Visit&& visit) {
  const std::size_t m = spec.num_variables();
  std::vector<int> a(m, 0);
  for (;;) {
    double w = 1.0;
    for (std::size_t i = 0; i < m; ++i) w *= spec.variable(i).prob(a[i]);
    visit(a, w);
    std::size_t d = m;
    while (d > 0) {
      --d;
      if (++a[d] < spec.variable(d).support) break;
      a[d] = 0;
      if (d == 0) return;
    }
    if (m == 0) return;
  }
}

inline int brute_sum(const FamilySpec& spec, const std::vector<int>& a) {
  int s = 0;
  for (std::size_t j = 0; j < spec.num_functions(); ++j) s += eval_function(spec, j, a);
  return s;
}

inline std::vector<double> brute_pmf(const FamilySpec& spec) {
  std::vector<double> pmf(spec.num_functions() + 1, 0.0);
  for_each_assignment(spec, [&](const std::vector<int>& a, double w) {
    pmf[static_cast<std::size_t>(brute_sum(spec, a))] += w;
  });
  return pmf;
}

inline bool brute_in_tail(int s, const TailQuery& q) {
  return q.tail == Tail::kUpper ? s >= std::ceil(q.threshold) : s <= std::floor(q.threshold);
}

inline double brute_tail(const FamilySpec& spec, const TailQuery& q) {
  double total = 0.0;
  for_each_assignment(spec, [&](const std::vector<int>& a, double w) {
    if (brute_in_tail(brute_sum(spec, a), q)) total += w;
  });
  return total;
}

// Pr[f_j = 1 | tail] by brute force; returns an empty vector when the event
// has no mass.
inline std::vector<double> brute_conditional(const FamilySpec& spec, const TailQuery& q) {
  std::vector<double> ones(spec.num_functions(), 0.0);
  double mass = 0.0;
  for_each_assignment(spec, [&](const std::vector<int>& a, double w) {
    if (!brute_in_tail(brute_sum(spec, a), q)) return;
    mass += w;
    for (std::size_t j = 0; j < spec.num_functions(); ++j) {
      if (eval_function(spec, j, a)) ones[j] += w;
    }
  });
  if (mass == 0.0) return {};
  for (auto& o : ones) o /= mass;
  return ones;
}

// Poisson-binomial law of independent Bernoulli(p_j) by the textbook
// one-variable-at-a-time recurrence.
inline std::vector<double> poisson_binomial(const std::vector<double>& ps) {
  std::vector<double> pmf{1.0};
  for (double p : ps) {
    std::vector<double> next(pmf.size() + 1, 0.0);
    for (std::size_t s = 0; s < pmf.size(); ++s) {
      next[s] += pmf[s] * (1.0 - p);
      next[s + 1] += pmf[s] * p;
    }
    pmf = std::move(next);
  }
  return pmf;
}

// Pr[Binomial(n, p) >= c] from explicit binomial coefficients.
inline double binomial_upper_tail(int n, double p, int c) {
  double total = 0.0;
  for (int s = std::max(c, 0); s <= n; ++s) {
    total += std::exp(std::lgamma(n + 1.0) - std::lgamma(s + 1.0) - std::lgamma(n - s + 1.0)) *
             std::pow(p, s) * std::pow(1.0 - p, n - s);
  }
  return total;
}

inline ReadFunction fn(std::string name, std::vector<std::size_t> vars, const std::string& table) {
  ReadFunction f{std::move(name), std::move(vars), {}};
  for (char c : table) f.table.push_back(static_cast<std::uint8_t>(c - '0'));
  return f;
}

inline Variable fair_bit(std::string name) { return Variable{std::move(name), 2, {}}; }

// Y1 = X1, Y2 = X1 xor X2 on fair bits.
inline FamilySpec xor_family() {
  return FamilySpec({fair_bit("x1"), fair_bit("x2")},
                    {fn("y1", {0}, "01"), fn("y2", {0, 1}, "0110")});
}

// Y1 = Y2 = X1, Y3 = Y4 = X2 on fair bits.
inline FamilySpec block_family() {
  return FamilySpec({fair_bit("x1"), fair_bit("x2")},
                    {fn("y1", {0}, "01"), fn("y2", {0}, "01"), fn("y3", {1}, "01"),
                     fn("y4", {1}, "01")});
}

inline std::vector<double> random_probs(std::mt19937_64& rng, std::size_t n,
                                        double zero_chance = 0.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (auto& x : p) {
    x = u(rng) < zero_chance ? 0.0 : u(rng) + 1e-3;
    total += x;
  }
  if (total == 0.0) {
    p[0] = 1.0;
    total = 1.0;
  }
  for (auto& x : p) x /= total;
  return p;
}

// A random joint law over all tuples of the given supports.
inline Distribution random_joint(std::mt19937_64& rng, const std::vector<int>& supports,
                                 double zero_chance = 0.0) {
  std::vector<Outcome> outcomes{{}};
  for (int s : supports) {
    std::vector<Outcome> next;
    for (const auto& o : outcomes) {
      for (int x = 0; x < s; ++x) {
        next.push_back(o);
        next.back().push_back(x);
      }
    }
    outcomes = std::move(next);
  }
  auto probs = random_probs(rng, outcomes.size(), zero_chance);
  return Distribution(std::move(outcomes), std::move(probs));
}

// H(target | given) as the average entropy of explicit conditional laws.
inline double conditional_entropy(const Distribution& joint, const std::vector<std::size_t>& target,
                                  const std::vector<std::size_t>& given) {
  std::map<Outcome, std::map<Outcome, double>> groups;
  for (std::size_t i = 0; i < joint.size(); ++i) {
    Outcome g, t;
    for (std::size_t c : given) g.push_back(joint.outcomes()[i][c]);
    for (std::size_t c : target) t.push_back(joint.outcomes()[i][c]);
    groups[g][t] += joint.probs()[i];
  }
  double h = 0.0;
  for (const auto& [g, law] : groups) {
    double mass = 0.0;
    for (const auto& [t, p] : law) mass += p;
    if (mass == 0.0) continue;
    for (const auto& [t, p] : law) {
      if (p > 0.0) h -= p * std::log(p / mass);
    }
  }
  return h;
}

}  // namespace readk::testing

#endif  // READK_TESTS_ORACLE_H_
