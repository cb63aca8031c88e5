// Copyright 2026 The fskill Authors.
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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fskill/rng.hpp"
#include "fskill/stats.hpp"

namespace fskill {
namespace {

std::vector<double> normals(Rng& rng, std::size_t n, double mean) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.normal(mean, 1.0);
  return v;
}

// Exact two-sided permutation p-value over every split of the pooled sample.
double permutation_p(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  const auto n = pooled.size();
  const auto na = a.size();
  auto mean_diff = [&](unsigned mask) {
    double sa = 0, sb = 0;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1u ? sa : sb) += pooled[i];
    return sa / static_cast<double>(na) - sb / static_cast<double>(n - na);
  };
  unsigned obs_mask = (1u << na) - 1;
  const double obs = std::abs(mean_diff(obs_mask));
  std::size_t hits = 0, total = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != na) continue;
    ++total;
    if (std::abs(mean_diff(mask)) >= obs - 1e-12) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

TEST(Bootstrap, IdenticalGroups) {
  const std::vector<double> v = {0.1, 0.5, 0.3, 0.9};
  const auto g = bootstrap_test(v, v, {2000, 1, 1});
  EXPECT_DOUBLE_EQ(g.p_value, 1.0);
  EXPECT_EQ(g.direction, Direction::kEqual);
}

TEST(Bootstrap, DisjointConstants) {
  const std::vector<double> top(50, 1.0), bottom(50, 0.0);
  const auto g = bootstrap_test(top, bottom, {10000, 2, 1});
  EXPECT_LT(g.p_value, 0.001);
  EXPECT_EQ(g.direction, Direction::kTopHigher);
  EXPECT_DOUBLE_EQ(g.mean_top, 1.0);
  EXPECT_DOUBLE_EQ(g.mean_bottom, 0.0);
}

TEST(Bootstrap, PlantedShift) {
  Rng rng(42);
  const auto top = normals(rng, 200, 1.0);
  const auto bottom = normals(rng, 200, 0.0);
  const auto g = bootstrap_test(top, bottom, {10000, 3, 1});
  EXPECT_LT(g.p_value, 0.001);
  // Exact permutation oracle on a size-10 subsample agrees with the bootstrap.
  const std::vector<double> sa(top.begin(), top.begin() + 5), sb(bottom.begin(), bottom.begin() + 5);
  const double exact = permutation_p(sa, sb);
  const auto small = bootstrap_test(sa, sb, {20000, 4, 1});
  EXPECT_NEAR(small.p_value, exact, 0.1) << "exact " << exact;
}

TEST(Bootstrap, AgreesWithPermutationOnSmallSamples) {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = normals(rng, 8, 0.8 * rng.uniform());
    const auto b = normals(rng, 8, 0.0);
    const double exact = permutation_p(a, b);
    const auto g = bootstrap_test(a, b, {20000, static_cast<std::uint64_t>(trial), 1});
    // Resampled means have variance (n-1)/n of the permutation spread, so the
    // bootstrap runs slightly small at tiny n.
    ASSERT_NEAR(g.p_value, exact, 0.1) << "trial " << trial;
  }
}

TEST(Bootstrap, EmptyGroupRejected) {
  const std::vector<double> v = {1.0};
  EXPECT_THROW(bootstrap_test({}, v), Error);
  EXPECT_THROW(bootstrap_test(v, {}), Error);
}

TEST(BootstrapProperty, PermutationInvariant) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = normals(rng, 1 + rng.below(30), 0.3);
    auto b = normals(rng, 1 + rng.below(30), 0.0);
    const auto g1 = bootstrap_test(a, b, {1000, 9, 1});
    rng.shuffle(a);
    rng.shuffle(b);
    const auto g2 = bootstrap_test(a, b, {1000, 9, 1});
    ASSERT_EQ(g1.p_value, g2.p_value);
  }
}

TEST(BootstrapProperty, ThreadCountDoesNotMatter) {
  Rng rng(6);
  const auto a = normals(rng, 40, 0.2);
  const auto b = normals(rng, 60, 0.0);
  const auto g1 = bootstrap_test(a, b, {5000, 17, 1});
  for (unsigned t : {2u, 3u, 8u}) {
    const auto gt = bootstrap_test(a, b, {5000, 17, t});
    ASSERT_EQ(g1.p_value, gt.p_value);
  }
}

TEST(BootstrapProperty, PValueInUnitInterval) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = normals(rng, 1 + rng.below(10), rng.normal());
    const auto b = normals(rng, 1 + rng.below(10), 0.0);
    const auto g = bootstrap_test(a, b, {1000, 1, 1});
    ASSERT_GE(g.p_value, 0.0);
    ASSERT_LE(g.p_value, 1.0);
  }
}

TEST(Bonferroni, Threshold) {
  const auto r = bonferroni({{"a", 0.001}, {"b", 0.002}}, 0.05, 30);
  EXPECT_TRUE(r.at("a"));
  EXPECT_FALSE(r.at("b"));
  const auto one = bonferroni({{"a", 0.049}, {"b", 0.05}}, 0.05, 1);
  EXPECT_TRUE(one.at("a"));
  EXPECT_FALSE(one.at("b"));
  EXPECT_THROW(bonferroni({}, 0.05, 0), Error);
}

TEST(CompareGroups, MarksPassesAndIsStable) {
  Rng rng(10);
  std::vector<MetricSamples> s = {{"shifted", normals(rng, 100, 1.0), normals(rng, 100, 0.0)},
                                  {"null", normals(rng, 100, 0.0), normals(rng, 100, 0.0)}};
  const auto out = compare_groups(s, {2000, 3, 2}, 0.05, 30);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_TRUE(out[0].passes_bonferroni);
  for (const auto& g : out) EXPECT_EQ(g.passes_bonferroni, g.p_value < 0.05 / 30);
  const std::vector<MetricSamples> only_null = {s[1]};
  EXPECT_EQ(compare_groups(only_null, {2000, 3, 1})[0].p_value, out[1].p_value);
}

TEST(Spearman, Examples) {
  const std::vector<double> x = {1, 2, 3, 4};
  EXPECT_NEAR(spearman_rho(x, std::vector<double>{10, 20, 30, 40}), 1.0, 1e-12);
  EXPECT_NEAR(spearman_rho(x, std::vector<double>{4, 3, 2, 1}), -1.0, 1e-12);
  EXPECT_NEAR(spearman_rho(x, std::vector<double>{2, 1, 4, 3}), 0.6, 1e-12);
  EXPECT_THROW(spearman_rho(x, std::vector<double>{1, 2}), Error);
  EXPECT_THROW(spearman_rho(x, std::vector<double>{1, 1, 1, 1}), Error);
}

TEST(Spearman, TiesUseAverageRanks) {
  const std::vector<double> x = {1, 2, 2, 3};
  EXPECT_EQ(fractional_ranks(x), (std::vector<double>{1, 2.5, 2.5, 4}));
}

TEST(SpearmanProperty, SymmetricAndMonotoneInvariant) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 2 + rng.below(30);
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = std::round(rng.normal() * 3);
    for (auto& v : y) v = rng.normal();
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; })) continue;
    const double r = spearman_rho(x, y);
    ASSERT_NEAR(r, spearman_rho(y, x), 1e-12);
    ASSERT_GE(r, -1.0);
    ASSERT_LE(r, 1.0);
    std::vector<double> tx(n);
    std::transform(x.begin(), x.end(), tx.begin(), [](double v) { return std::exp(v / 4) + 3 * v; });
    ASSERT_NEAR(r, spearman_rho(tx, y), 1e-12);
  }
}

}  // namespace
}  // namespace fskill
