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

#ifndef READK_SRC_ENUMERATE_H_
#define READK_SRC_ENUMERATE_H_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "readk/family.h"

namespace readk::internal {

// Neumaier compensated sum.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }
  CompensatedSum& operator+=(const CompensatedSum& other) {
    *this += other.sum_;
    carry_ += other.carry_;
    return *this;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// P(bit = 1) from the accumulated masses of each value. Exactly 0 or 1 when
// one side never occurs, so rounding cannot make a constant look random.
inline double bernoulli_mean(double ones, double zeros) {
  if (zeros <= 0.0) return ones > 0.0 ? 1.0 : 0.0;
  if (ones <= 0.0) return 0.0;
  return std::clamp(ones / (ones + zeros), 0.0, 1.0);
}

// Snapshot handed to visitors for each assignment.
struct WalkState {
  double weight = 1.0;
  long long sum = 0;
  std::span<const int> digits;             // values of the walked variables
  std::span<const std::size_t> rows;       // truth-table row per walked function
  std::span<const std::uint8_t> bits;      // value per walked function
};

// Visits every joint assignment of a subset of variables in lexicographic
// order (first variable most significant), tracking the product weight and
// the values of a subset of functions incrementally. Every function in the
// subset must read only walked variables.
class AssignmentWalker {
 public:
  AssignmentWalker(const FamilySpec& spec, std::vector<std::size_t> vars,
                   std::vector<std::size_t> funcs);

  std::uint64_t total() const { return total_; }
  std::size_t num_functions() const { return tables_.size(); }

  // Visits assignments whose linear index lies in [begin, end).
  template <class Visit>
  void walk(std::uint64_t begin, std::uint64_t end, Visit&& visit) const;

 private:
  struct Reader {
    std::size_t function;
    std::size_t stride;
  };

  std::vector<int> supports_;
  std::vector<std::vector<double>> probs_;
  std::vector<std::vector<Reader>> readers_;  // per walked variable
  std::vector<const std::vector<std::uint8_t>*> tables_;
  std::uint64_t total_ = 1;
};

inline AssignmentWalker::AssignmentWalker(const FamilySpec& spec, std::vector<std::size_t> vars,
                                          std::vector<std::size_t> funcs) {
  std::vector<std::size_t> position(spec.num_variables(), vars.size());
  for (std::size_t d = 0; d < vars.size(); ++d) {
    const Variable& v = spec.variable(vars[d]);
    position[vars[d]] = d;
    supports_.push_back(v.support);
    std::vector<double> probs(static_cast<std::size_t>(v.support));
    for (int x = 0; x < v.support; ++x) probs[static_cast<std::size_t>(x)] = v.prob(x);
    probs_.push_back(std::move(probs));
    const auto s = static_cast<std::uint64_t>(v.support);
    total_ = total_ > UINT64_MAX / s ? UINT64_MAX : total_ * s;
  }
  readers_.resize(vars.size());
  for (std::size_t f = 0; f < funcs.size(); ++f) {
    const ReadFunction& fn = spec.function(funcs[f]);
    tables_.push_back(&fn.table);
    std::size_t stride = 1;
    for (std::size_t a = fn.vars.size(); a-- > 0;) {
      readers_[position[fn.vars[a]]].push_back({f, stride});
      stride *= static_cast<std::size_t>(spec.variable(fn.vars[a]).support);
    }
  }
}

template <class Visit>
void AssignmentWalker::walk(std::uint64_t begin, std::uint64_t end, Visit&& visit) const {
  if (begin >= end) return;
  const std::size_t n = supports_.size();
  const std::size_t nf = tables_.size();
  std::vector<int> digits(n, 0);
  std::vector<double> prefix(n + 1, 1.0);
  std::vector<std::size_t> rows(nf, 0);
  std::vector<std::uint8_t> bits(nf, 0);

  std::uint64_t rest = begin;
  for (std::size_t d = n; d-- > 0;) {
    const auto s = static_cast<std::uint64_t>(supports_[d]);
    digits[d] = static_cast<int>(rest % s);
    rest /= s;
  }
  for (std::size_t d = 0; d < n; ++d) {
    prefix[d + 1] = prefix[d] * probs_[d][static_cast<std::size_t>(digits[d])];
    for (const Reader& rd : readers_[d]) {
      rows[rd.function] += static_cast<std::size_t>(digits[d]) * rd.stride;
    }
  }
  long long sum = 0;
  for (std::size_t f = 0; f < nf; ++f) {
    bits[f] = (*tables_[f])[rows[f]];
    sum += bits[f];
  }

  WalkState state;
  state.digits = digits;
  state.rows = rows;
  state.bits = bits;
  for (std::uint64_t i = begin; i < end; ++i) {
    state.weight = prefix[n];
    state.sum = sum;
    visit(state);

    // Odometer step; the last variable moves fastest.
    std::size_t d = n;
    while (d-- > 0) {
      const int next = digits[d] + 1;
      const bool wrap = next == supports_[d];
      const long long delta = wrap ? -static_cast<long long>(digits[d]) : 1;
      digits[d] = wrap ? 0 : next;
      for (const Reader& rd : readers_[d]) {
        rows[rd.function] = static_cast<std::size_t>(
            static_cast<long long>(rows[rd.function]) + delta * static_cast<long long>(rd.stride));
        const std::uint8_t bit = (*tables_[rd.function])[rows[rd.function]];
        sum += static_cast<long long>(bit) - bits[rd.function];
        bits[rd.function] = bit;
      }
      if (!wrap) break;
    }
    if (d >= n) break;  // wrapped past the first variable
    for (std::size_t e = d; e < n; ++e) {
      prefix[e + 1] = prefix[e] * probs_[e][static_cast<std::size_t>(digits[e])];
    }
  }
}

// Splits [0, total) into a number of chunks that depends only on `total`,
// runs `visit` over each chunk into its own accumulator, and returns the
// accumulators in chunk order. Callers merge them sequentially, which keeps
// floating-point results independent of the thread count.
template <class Acc, class Make, class Visit>
std::vector<Acc> run_chunked(const AssignmentWalker& walker, unsigned threads, Make make,
                             Visit visit) {
  constexpr std::uint64_t kChunks = 64;
  constexpr std::uint64_t kMinParallel = std::uint64_t{1} << 14;
  const std::uint64_t total = walker.total();
  const std::uint64_t chunks = total < kMinParallel ? 1 : kChunks;

  std::vector<Acc> accs;
  accs.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) accs.push_back(make());

  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t base = total / chunks;
    const std::uint64_t extra = total % chunks;
    const std::uint64_t lo = c * base + std::min(c, extra);
    const std::uint64_t hi = lo + base + (c < extra ? 1 : 0);
    Acc& acc = accs[c];
    walker.walk(lo, hi, [&](const WalkState& s) { visit(acc, s); });
  };

  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(workers, 1u), chunks));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    return accs;
  }
  std::atomic<std::uint64_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
  }
  return accs;
}

}  // namespace readk::internal

#endif  // READK_SRC_ENUMERATE_H_
