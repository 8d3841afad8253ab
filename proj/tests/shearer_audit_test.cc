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

#include "readk/shearer_audit.h"

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracle.h"
#include "readk/bounds.h"
#include "readk/errors.h"
#include "readk/generators.h"

namespace readk {
namespace {

using ::readk::testing::block_family;
using ::readk::testing::xor_family;

const double kLn2 = std::log(2.0);

Distribution fair_bits(std::size_t n) {
  std::vector<Outcome> outcomes;
  for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
    Outcome o(n);
    for (std::size_t i = 0; i < n; ++i) o[i] = static_cast<int>((code >> (n - 1 - i)) & 1);
    outcomes.push_back(o);
  }
  return Distribution(outcomes, std::vector<double>(outcomes.size(), 1.0 / outcomes.size()));
}

TEST(GeqWithSlackTest, Behaviour) {
  EXPECT_TRUE(geq_with_slack(1.0, 1.0));
  EXPECT_TRUE(geq_with_slack(1.0, 1.0 + 5e-10));
  EXPECT_FALSE(geq_with_slack(1.0, 1.0 + 1e-8));
  EXPECT_TRUE(geq_with_slack(0.0, 5e-13));
  EXPECT_FALSE(geq_with_slack(0.0, 1e-11));
  EXPECT_TRUE(geq_with_slack(INFINITY, 1e300));
  EXPECT_FALSE(geq_with_slack(1e300, INFINITY));
}

TEST(ShearerEntropyGapTest, Examples) {
  const Distribution three = fair_bits(3);
  const std::vector<std::vector<std::size_t>> pairs{{0, 1}, {1, 2}, {0, 2}};
  const Gap g = shearer_entropy_gap(three, pairs, 2);
  EXPECT_NEAR(g.lhs.value, 6 * kLn2, 1e-12);
  EXPECT_NEAR(g.rhs.value, 6 * kLn2, 1e-12);
  EXPECT_TRUE(g.holds);

  // k copies of the full index set is an equality.
  const std::vector<std::vector<std::size_t>> copies(3, {0, 1, 2});
  const Gap c = shearer_entropy_gap(three, copies, 3);
  EXPECT_NEAR(c.lhs.value, c.rhs.value, 1e-12);
  EXPECT_TRUE(c.holds);

  const Distribution point({{1, 0, 1}}, {1.0});
  const Gap z = shearer_entropy_gap(point, pairs, 2);
  EXPECT_EQ(z.lhs.value, 0.0);
  EXPECT_EQ(z.rhs.value, 0.0);
  EXPECT_TRUE(z.holds);
}

TEST(ShearerEntropyGapTest, RejectsBadCovers) {
  const Distribution three = fair_bits(3);
  const std::vector<std::vector<std::size_t>> thin{{0, 1}, {1, 2}};
  EXPECT_THROW(shearer_entropy_gap(three, thin, 2), DomainError);
  const std::vector<std::vector<std::size_t>> outside{{0, 1, 2, 3}};
  EXPECT_THROW(shearer_entropy_gap(three, outside, 1), DomainError);
  const std::vector<std::vector<std::size_t>> repeated{{0, 0, 1, 2}};
  EXPECT_THROW(shearer_entropy_gap(three, repeated, 1), DomainError);
}

TEST(ShearerKlGapTest, XorPointMass) {
  const Distribution point({{1, 0}}, {1.0});
  const Gap g = shearer_kl_gap(xor_family(), point);
  EXPECT_NEAR(g.lhs.value, 2 * std::log(4.0), 1e-12);
  EXPECT_NEAR(g.rhs.value, kLn2 + std::log(4.0), 1e-12);
  EXPECT_TRUE(g.holds);
}

TEST(ShearerKlGapTest, RejectsWeightedFamiliesAndBadLaws) {
  const auto weighted = gen_block_tight(2, 2, Rational{1, 4});
  const Distribution point({{1, 0}}, {1.0});
  EXPECT_THROW(shearer_kl_gap(weighted, point), DomainError);
  const Distribution wrong_length({{1, 0, 0}}, {1.0});
  EXPECT_THROW(shearer_kl_gap(xor_family(), wrong_length), DomainError);
  const Distribution outside({{2, 0}}, {1.0});
  EXPECT_THROW(shearer_kl_gap(xor_family(), outside), DomainError);
}

TEST(ShearerProperties, EntropyGapHoldsOnRandomJoints) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 2 + rng() % 3;
    std::vector<int> supports(m);
    for (auto& s : supports) s = 2 + static_cast<int>(rng() % 2);
    const Distribution joint = testing::random_joint(rng, supports, trial % 3 == 0 ? 0.4 : 0.0);
    const int k = 1 + static_cast<int>(rng() % 3);
    // Each coordinate goes into k distinct random sets out of k + 1.
    std::vector<std::vector<std::size_t>> cover(static_cast<std::size_t>(k) + 1);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t skip = rng() % cover.size();
      for (std::size_t s = 0; s < cover.size(); ++s) {
        if (s != skip) cover[s].push_back(i);
      }
    }
    EXPECT_TRUE(shearer_entropy_gap(joint, cover, k).holds) << "trial " << trial;
  }
}

TEST(ProofTraceTest, Xor) {
  const ProofTrace t = proof_trace(xor_family(), {2.0, Tail::kUpper});
  EXPECT_NEAR(t.neg_log_tail.value, std::log(4.0), 1e-12);
  EXPECT_NEAR(t.shearer_term.value, 1.0397207708399180, 1e-12);
  EXPECT_NEAR(t.dpi_term.value, kLn2, 1e-12);
  EXPECT_NEAR(t.convexity_term.value, kLn2, 1e-12);
  EXPECT_NEAR(t.final_term.value, kLn2, 1e-12);
  EXPECT_EQ(t.k, 2);
  EXPECT_EQ(t.r, 2);
  EXPECT_TRUE(t.chain_holds());
}

TEST(ProofTraceTest, BlockIsTightEverywhere) {
  const ProofTrace t = proof_trace(block_family(), {4.0, Tail::kUpper});
  for (const Nats& term : t.terms()) EXPECT_NEAR(term.value, std::log(4.0), 1e-12);
  EXPECT_TRUE(t.chain_holds());
}

TEST(ProofTraceTest, WholeSpaceIsAllZero) {
  const ProofTrace t = proof_trace(xor_family(), {0.0, Tail::kUpper});
  for (const Nats& term : t.terms()) EXPECT_NEAR(term.value, 0.0, 1e-15);
  EXPECT_EQ(t.final_term.value, 0.0);
  EXPECT_TRUE(t.chain_holds());
}

TEST(ProofTraceTest, Errors) {
  EXPECT_THROW(proof_trace(xor_family(), {3.0, Tail::kUpper}), DomainError);
  EXPECT_THROW(proof_trace(gen_block_tight(2, 2, Rational{1, 4}), {1.0, Tail::kUpper}),
               DomainError);
  EngineOptions tiny;
  tiny.guard = 2;
  EXPECT_THROW(proof_trace(xor_family(), {1.0, Tail::kUpper}, tiny), ResourceError);
}

TEST(ProofTraceTest, FirstViolationReportsIndex) {
  ProofTrace t;
  t.neg_log_tail = Nats{3.0};
  t.shearer_term = Nats{2.0};
  t.dpi_term = Nats{2.5};
  t.convexity_term = Nats{1.0};
  t.final_term = Nats{0.5};
  EXPECT_EQ(t.first_violation(), 1);
  EXPECT_FALSE(t.chain_holds());
}

TEST(ProofTraceProperties, ChainHoldsOnRandomUniformFamilies) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto spec = gen_random_family({6, 7, 3, 3, seed});
    const long long r = static_cast<long long>(spec.num_functions());
    const SumPmf pmf = sum_pmf(spec);
    for (long long t = 0; t <= r; ++t) {
      for (Tail tail : {Tail::kUpper, Tail::kLower}) {
        const TailQuery q{static_cast<double>(t), tail};
        const double exact = tail_prob(pmf, q);
        if (exact == 0.0) continue;
        const ProofTrace trace = proof_trace(spec, q);
        EXPECT_TRUE(trace.chain_holds()) << "seed=" << seed << " t=" << t;
        EXPECT_NEAR(std::exp(-trace.neg_log_tail.value), exact, 1e-12);
        if (trace.eps > 0.0) {
          const BoundResult b =
              read_k_tail_bound({trace.r, trace.k, trace.p, trace.eps, tail});
          EXPECT_NEAR(trace.final_term.value, -b.log_bound.value,
                      1e-12 * std::max(1.0, trace.final_term.value));
        }
        const Gap gap = shearer_kl_gap(spec, tail_conditioned_law(spec, q));
        EXPECT_TRUE(gap.holds);
        if (read_width(spec) >= 1) {
          EXPECT_NEAR(trace.shearer_term.value, gap.rhs.value / trace.k, 1e-10);
          EXPECT_NEAR(trace.neg_log_tail.value, gap.lhs.value / trace.k, 1e-10);
        }
      }
    }
  }
}

}  // namespace
}  // namespace readk
