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

#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "oracle.h"
#include "readk/errors.h"
#include "readk/exact_engine.h"
#include "readk/generators.h"
#include "readk/random.h"

namespace readk {
namespace {

using ::readk::testing::fn;
using ::readk::testing::xor_family;

TEST(RandomTest, Uniform01InHalfOpenUnitInterval) {
  RandomEngine e = make_engine(1, 0);
  for (int i = 0; i < 10000; ++i) {
    const double u = uniform01(e);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RandomTest, UniformBelowCoversRange) {
  RandomEngine e = make_engine(2, 0);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto v = uniform_below(e, 5);
    ASSERT_LT(v, 5u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 5u);
}

TEST(RandomTest, StreamsDiffer) {
  RandomEngine a = make_engine(3, 0);
  RandomEngine b = make_engine(3, 1);
  RandomEngine c = make_engine(3, 0);
  const auto first = a();
  EXPECT_NE(first, b());
  EXPECT_EQ(first, c());
}

TEST(SampleAssignmentTest, NeverDrawsZeroMassValues) {
  const FamilySpec spec({Variable{"x", 2, {1.0, 0.0}}, Variable{"z", 3, {0.0, 0.5, 0.5}}},
                        {fn("y", {0}, "01")});
  RandomEngine e = make_engine(0, 0);
  for (int i = 0; i < 5000; ++i) {
    const auto a = sample_assignment(spec, e);
    ASSERT_EQ(a[0], 0);
    ASSERT_NE(a[1], 0);
  }
}

TEST(SampleAssignmentTest, BernoulliQuarterMean) {
  const FamilySpec spec({Variable{"x", 2, {0.75, 0.25}}}, {fn("y", {0}, "01")});
  RandomEngine e = make_engine(11, 0);
  const int n = 100000;
  int ones = 0;
  for (int i = 0; i < n; ++i) ones += sample_assignment(spec, e)[0];
  // Four standard deviations of the sample mean.
  EXPECT_NEAR(static_cast<double>(ones) / n, 0.25, 0.0055);
}

TEST(EstimateTailTest, ConstantFamilyIsCertain) {
  const FamilySpec spec({testing::fair_bit("x")}, {fn("one", {}, "1"), fn("x", {0}, "01")});
  const McEstimate est = estimate_tail(spec, {1.0, Tail::kUpper}, 1000, 5);
  EXPECT_EQ(est.estimate, 1.0);
  EXPECT_EQ(est.ci_high, 1.0);
  EXPECT_EQ(est.samples, 1000u);
  EXPECT_EQ(est.seed, 5u);
}

TEST(EstimateTailTest, XorWithinConfidenceInterval) {
  const McEstimate est = estimate_tail(xor_family(), {2.0, Tail::kUpper}, 1000000, 1);
  EXPECT_LE(est.ci_low, 0.25);
  EXPECT_GE(est.ci_high, 0.25);
  EXPECT_NEAR(est.ci_high - est.ci_low, 2 * hoeffding_half_width(1000000), 1e-15);
}

TEST(EstimateTailTest, HoeffdingHalfWidth) {
  EXPECT_NEAR(hoeffding_half_width(1000), std::sqrt(std::log(200.0) / 2000.0), 1e-15);
  EXPECT_THROW(hoeffding_half_width(0), DomainError);
}

TEST(EstimateTailTest, ZeroSamplesRejected) {
  EXPECT_THROW(estimate_tail(xor_family(), {1.0, Tail::kUpper}, 0, 1), DomainError);
}

TEST(EstimateTailTest, DeterministicAndThreadIndependent) {
  const auto spec = gen_random_family({6, 6, 2, 3, 4, 3, true});
  const TailQuery q{3.0, Tail::kUpper};
  const std::uint64_t n = 3 * kSamplesPerStream + 17;
  const McEstimate a = estimate_tail(spec, q, n, 42, 1);
  const McEstimate b = estimate_tail(spec, q, n, 42, 4);
  const McEstimate c = estimate_tail(spec, q, n, 42, 0);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_NE(a.estimate, estimate_tail(spec, q, n, 43, 1).estimate);
}

TEST(EstimateTailTest, CoverageOverSeeds) {
  const auto spec = gen_random_family({5, 5, 2, 2, 8, 3, true});
  const TailQuery q{3.0, Tail::kUpper};
  const double exact = tail_prob(sum_pmf(spec), q);
  int covered = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const McEstimate est = estimate_tail(spec, q, 2000, seed);
    covered += (est.ci_low <= exact && exact <= est.ci_high) ? 1 : 0;
  }
  EXPECT_GE(covered, 97);
}

}  // namespace
}  // namespace readk
