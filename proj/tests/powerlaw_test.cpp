// Copyright 2026 The socnetgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "socnetgen/powerlaw.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"

namespace socnetgen {
namespace {

double zeta_by_summation(double s, double q) {
  // Direct sum to a large cutoff plus the integral remainder.
  double sum = 0;
  const int cutoff = 2000000;
  for (int k = cutoff - 1; k >= 0; --k) sum += std::pow(q + k, -s);
  return sum + std::pow(q + cutoff - 0.5, 1 - s) / (s - 1);
}

TEST(PowerLaw, HurwitzZetaKnownValues) {
  EXPECT_NEAR(hurwitz_zeta(2, 1), M_PI * M_PI / 6, 1e-13);
  EXPECT_NEAR(hurwitz_zeta(4, 1), std::pow(M_PI, 4) / 90, 1e-13);
  EXPECT_NEAR(hurwitz_zeta(2, 0.5), M_PI * M_PI / 2, 1e-12);
  EXPECT_THROW(hurwitz_zeta(1, 1), std::domain_error);
}

TEST(PowerLaw, HurwitzZetaMatchesSummation) {
  for (double s : {1.5, 2.5, 3.2}) {
    for (double q : {1.0, 3.0, 57.0}) {
      const double ref = zeta_by_summation(s, q);
      EXPECT_NEAR(hurwitz_zeta(s, q), ref, 1e-9 * ref) << s << " " << q;
    }
  }
}

TEST(PowerLaw, RecoversExponent) {
  oracle::PowerLawSampler sampler(2.5, 1);
  std::mt19937_64 engine(2024);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::uint64_t> x(10000);
    for (auto& v : x) v = sampler(engine);
    const auto fit = powerlaw_fit(x);
    EXPECT_NEAR(fit.alpha, 2.5, 0.15);
    EXPECT_FALSE(fit.degenerate);
    EXPECT_EQ(fit.estimator, PowerLawEstimator::exact);
  }
}

TEST(PowerLaw, ExactMleAtKnownCutoff) {
  // At x_min = 1 with the true cutoff the MLE is within a few standard errors.
  oracle::PowerLawSampler sampler(2.2, 1);
  std::mt19937_64 engine(5);
  std::vector<std::uint64_t> x(20000);
  double log_sum = 0;
  for (auto& v : x) {
    v = sampler(engine);
    log_sum += std::log(static_cast<double>(v));
  }
  EXPECT_NEAR(detail::discrete_mle(x.size(), log_sum, 1), 2.2, 0.05);
}

TEST(PowerLaw, PermutationInvariant) {
  oracle::PowerLawSampler sampler(2.5, 1);
  std::mt19937_64 engine(8);
  std::vector<std::uint64_t> x(3000);
  for (auto& v : x) v = sampler(engine);
  const auto a = powerlaw_fit(x);
  std::shuffle(x.begin(), x.end(), engine);
  const auto b = powerlaw_fit(x);
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_EQ(a.x_min, b.x_min);
}

TEST(PowerLaw, ApproximateEstimatorSelectable) {
  oracle::PowerLawSampler sampler(2.5, 1);
  std::mt19937_64 engine(3);
  std::vector<std::uint64_t> x(5000);
  for (auto& v : x) v = sampler(engine);
  const auto fit = powerlaw_fit(x, PowerLawEstimator::approximate);
  EXPECT_EQ(fit.estimator, PowerLawEstimator::approximate);
  EXPECT_GT(fit.alpha, 1.5);
  EXPECT_LT(fit.alpha, 3.5);
}

TEST(PowerLaw, DegenerateAndInsufficient) {
  const std::vector<std::uint64_t> same(50, 4);
  const auto fit = powerlaw_fit(same);
  EXPECT_TRUE(fit.degenerate);
  EXPECT_EQ(fit.x_min, 4u);
  const std::vector<std::uint64_t> few{1, 2, 3};
  EXPECT_THROW(powerlaw_fit(few), InsufficientDataError);
  const std::vector<std::uint64_t> zeros(100, 0);
  EXPECT_THROW(powerlaw_fit(zeros), InsufficientDataError);
}

TEST(PowerLaw, KsDistanceSmallForTrueModel) {
  oracle::PowerLawSampler sampler(3.0, 1);
  std::mt19937_64 engine(1);
  std::vector<std::uint64_t> x(50000);
  for (auto& v : x) v = sampler(engine);
  std::sort(x.begin(), x.end());
  EXPECT_LT(detail::ks_distance(x, 3.0, 1), 0.01);
  EXPECT_GT(detail::ks_distance(x, 2.0, 1), 0.1);
}

}  // namespace
}  // namespace socnetgen
