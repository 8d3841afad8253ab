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

#include "readk/generators.h"

#include <cmath>

#include "gtest/gtest.h"
#include "oracle.h"
#include "readk/bounds.h"
#include "readk/errors.h"
#include "readk/exact_engine.h"
#include "readk/family_io.h"

namespace readk {
namespace {

TEST(RationalTest, Parse) {
  const Rational half = Rational::Parse("1/2");
  EXPECT_EQ(half.num, 1);
  EXPECT_EQ(half.den, 2);
  EXPECT_EQ(Rational::Parse("1").value(), 1.0);
  EXPECT_EQ(Rational::Parse("0").value(), 0.0);
  EXPECT_EQ(Rational::Parse("3/8").to_string(), "3/8");
  EXPECT_THROW(Rational::Parse("3/2"), DomainError);
  EXPECT_THROW(Rational::Parse("1/0"), DomainError);
  EXPECT_THROW(Rational::Parse("1/65"), DomainError);
  EXPECT_THROW(Rational::Parse("0.5"), DomainError);
  EXPECT_THROW(Rational::Parse("-1/2"), DomainError);
  EXPECT_THROW(Rational::Parse(""), DomainError);
}

TEST(BlockTightTest, Shape) {
  const FamilySpec spec = gen_block_tight(3, 2, Rational{1, 2});
  EXPECT_EQ(spec.num_variables(), 2u);
  EXPECT_EQ(spec.num_functions(), 6u);
  EXPECT_EQ(read_width(spec), 3);
  EXPECT_EQ(spec.function(0).name, "y1");
  EXPECT_EQ(spec.function(3).vars, std::vector<std::size_t>{1});
  const FamilySpec weighted = gen_block_tight(2, 1, Rational{1, 4});
  EXPECT_EQ(weighted.variable(0).probs, (std::vector<double>{0.75, 0.25}));
  EXPECT_THROW(gen_block_tight(0, 2, Rational{1, 2}), DomainError);
  EXPECT_THROW(gen_block_tight(2, 0, Rational{1, 2}), DomainError);
}

TEST(BlockTightTest, TailIsBinomialOverBlocks) {
  for (int k : {1, 2, 3}) {
    for (int blocks = 1; blocks <= 6; ++blocks) {
      for (const Rational& p : {Rational{1, 2}, Rational{1, 4}, Rational{5, 8}}) {
        const FamilySpec spec = gen_block_tight(k, blocks, p);
        const SumPmf pmf = sum_pmf(spec);
        for (int c = 0; c <= blocks; ++c) {
          EXPECT_NEAR(tail_prob(pmf, {static_cast<double>(k * c), Tail::kUpper}),
                      testing::binomial_upper_tail(blocks, p.value(), c), 1e-12);
        }
        // All-ones event meets the AND bound with equality.
        EXPECT_NEAR(tail_prob(pmf, {static_cast<double>(k * blocks), Tail::kUpper}),
                    shearer_and_bound(k * blocks, k, p.value()).bound, 1e-12);
      }
    }
  }
}

TEST(RandomFamilyTest, DeterministicAndRespectsK) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const RandomFamilyParams params{8, 10, 2 + static_cast<int>(seed % 3), 3, seed, 3,
                                    seed % 2 == 0};
    const FamilySpec a = gen_random_family(params);
    const FamilySpec b = gen_random_family(params);
    EXPECT_EQ(dump_family(a), dump_family(b));
    EXPECT_LE(read_width(a), params.k);
    EXPECT_EQ(a.num_functions(), 10u);
    EXPECT_EQ(a.num_variables(), 8u);
    for (const auto& f : a.functions()) {
      EXPECT_GE(f.vars.size(), 1u);
      EXPECT_LE(f.vars.size(), 3u);
    }
    for (const auto& v : a.variables()) {
      EXPECT_GE(v.support, 2);
      EXPECT_LE(v.support, 3);
      EXPECT_EQ(v.has_explicit_probs(), params.weighted);
    }
  }
  EXPECT_NE(dump_family(gen_random_family({8, 10, 3, 3, 1})),
            dump_family(gen_random_family({8, 10, 3, 3, 2})));
}

TEST(RandomFamilyTest, FillsExactCapacity) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    // r = m * k leaves no spare reads.
    const FamilySpec spec = gen_random_family({4, 8, 2, 4, seed});
    std::vector<int> reads(4, 0);
    for (const auto& f : spec.functions()) {
      EXPECT_EQ(f.vars.size(), 1u);
      for (std::size_t v : f.vars) ++reads[v];
    }
    EXPECT_EQ(reads, (std::vector<int>{2, 2, 2, 2}));
  }
}

TEST(RandomFamilyTest, InfeasibleParameters) {
  EXPECT_THROW(gen_random_family({2, 5, 2, 1, 0}), DomainError);
  EXPECT_THROW(gen_random_family({0, 5, 2, 1, 0}), DomainError);
  EXPECT_THROW(gen_random_family({3, 2, 1, 4, 0}), DomainError);
  EXPECT_THROW(gen_random_family({3, 2, 1, 1, 0, 1}), DomainError);
}

TEST(RandomFamilyTest, SoundnessOnMediumFamilies) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const FamilySpec spec = gen_random_family({6, 8, 3, 3, seed});
    const long long r = 8;
    const long long k = std::max(1, read_width(spec));
    const double p = function_marginals(spec).mean;
    const SumPmf pmf = sum_pmf(spec);
    for (long long t = 0; t <= r; ++t) {
      const double eps = eps_for_threshold(static_cast<double>(t), r, p, Tail::kUpper);
      if (!(eps > 0.0)) continue;
      EXPECT_LE(tail_prob(pmf, {static_cast<double>(t), Tail::kUpper}),
                read_k_tail_bound({r, k, p, eps, Tail::kUpper}).bound * (1 + 1e-9));
    }
  }
}

}  // namespace
}  // namespace readk
