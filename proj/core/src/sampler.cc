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

#include "readk/sampler.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "readk/errors.h"
#include "readk/exact_engine.h"

namespace readk {

namespace {

class FamilySampler {
 public:
  explicit FamilySampler(const FamilySpec& spec) : spec_(spec) {
    cdfs_.reserve(spec.num_variables());
    for (const auto& v : spec.variables()) {
      std::vector<double> cdf(static_cast<std::size_t>(v.support));
      double acc = 0.0;
      for (int x = 0; x < v.support; ++x) {
        acc += v.prob(x);
        cdf[static_cast<std::size_t>(x)] = acc;
      }
      cdfs_.push_back(std::move(cdf));
    }
  }

  void draw(RandomEngine& engine, std::vector<int>& out) const {
    out.resize(cdfs_.size());
    for (std::size_t i = 0; i < cdfs_.size(); ++i) out[i] = invert(i, uniform01(engine));
  }

  long long function_sum(const std::vector<int>& assignment) const {
    long long sum = 0;
    for (const auto& f : spec_.functions()) {
      std::size_t row = 0;
      for (std::size_t v : f.vars) {
        row = row * static_cast<std::size_t>(spec_.variable(v).support) +
              static_cast<std::size_t>(assignment[v]);
      }
      sum += f.table[row];
    }
    return sum;
  }

 private:
  int invert(std::size_t i, double u) const {
    const auto& cdf = cdfs_[i];
    for (std::size_t x = 0; x < cdf.size(); ++x) {
      if (u < cdf[x]) return static_cast<int>(x);
    }
    // u landed above a cdf that rounds below 1: take the last value with mass.
    const Variable& v = spec_.variable(i);
    for (int x = v.support - 1; x > 0; --x) {
      if (v.prob(x) > 0.0) return x;
    }
    return 0;
  }

  const FamilySpec& spec_;
  std::vector<std::vector<double>> cdfs_;
};

}  // namespace

std::vector<int> sample_assignment(const FamilySpec& spec, RandomEngine& engine) {
  std::vector<int> out;
  FamilySampler(spec).draw(engine, out);
  return out;
}

double hoeffding_half_width(std::uint64_t samples, double alpha) {
  if (samples == 0) throw DomainError("confidence interval needs at least one sample");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(samples)));
}

McEstimate estimate_tail(const FamilySpec& spec, const TailQuery& query,
                         std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (samples == 0) throw DomainError("estimate_tail needs at least one sample");
  if (std::isnan(query.threshold)) throw DomainError("tail threshold is NaN");

  const FamilySampler sampler(spec);
  const std::uint64_t streams = (samples + kSamplesPerStream - 1) / kSamplesPerStream;
  std::vector<std::uint64_t> hits(streams, 0);

  auto run_stream = [&](std::uint64_t b) {
    RandomEngine engine = make_engine(seed, b);
    const std::uint64_t n = std::min(kSamplesPerStream, samples - b * kSamplesPerStream);
    std::vector<int> assignment;
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      sampler.draw(engine, assignment);
      if (in_tail(sampler.function_sum(assignment), query)) ++count;
    }
    hits[b] = count;
  };

  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(workers, 1u), streams));
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < streams; ++b) run_stream(b);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t b = next++; b < streams; b = next++) run_stream(b);
      });
    }
  }

  std::uint64_t total_hits = 0;
  for (std::uint64_t h : hits) total_hits += h;

  McEstimate out;
  out.samples = samples;
  out.seed = seed;
  out.estimate = static_cast<double>(total_hits) / static_cast<double>(samples);
  const double half = hoeffding_half_width(samples);
  out.ci_low = std::max(0.0, out.estimate - half);
  out.ci_high = std::min(1.0, out.estimate + half);
  return out;
}

}  // namespace readk
