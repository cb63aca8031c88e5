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
#include <map>
#include <string>
#include <vector>

#include "fskill/rng.hpp"
#include "fskill/scoring.hpp"

namespace fskill {
namespace {

ForecastRecord binary(std::string id, std::string author, std::string question, double est,
                      double outcome) {
  ForecastRecord r;
  r.record_id = std::move(id);
  r.author_id = std::move(author);
  r.target_id = std::move(question);
  r.estimate = est;
  r.outcome = outcome;
  return r;
}

ForecastRecord eps(std::string id, std::string analyst, double est, double actual) {
  ForecastRecord r;
  r.record_id = std::move(id);
  r.author_id = std::move(analyst);
  r.target_id = "ACME";
  r.estimate = est;
  r.outcome = actual;
  r.domain = Domain::kEps;
  return r;
}

TEST(Brier, Examples) {
  EXPECT_DOUBLE_EQ(brier(1.0, 1), 0.0);
  EXPECT_NEAR(brier(0.05, 0), 0.0025, 1e-15);
  EXPECT_DOUBLE_EQ(brier(0.5, 1), 0.25);
  EXPECT_THROW(brier(1.1, 1), Error);
  EXPECT_THROW(brier(-0.1, 0), Error);
  EXPECT_THROW(brier(0.5, 0.5), Error);
}

TEST(Brier, LabelSymmetry) {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double f = rng.uniform();
    const double o = rng.bernoulli(0.5) ? 1.0 : 0.0;
    ASSERT_NEAR(brier(f, o), brier(1.0 - f, 1.0 - o), 1e-15);
  }
}

TEST(Standardize, TwoScores) {
  const std::vector<GroupedScore> s = {{"r1", "q", 0.2}, {"r2", "q", 0.4}};
  const auto out = standardize_within_question(s);
  EXPECT_NEAR(out.z.at("r1"), -1.0, 1e-12);
  EXPECT_NEAR(out.z.at("r2"), 1.0, 1e-12);
  EXPECT_TRUE(out.warnings.empty());
}

TEST(Standardize, ZeroVarianceWarns) {
  const std::vector<GroupedScore> s = {{"r1", "q", 0.3}, {"r2", "q", 0.3}};
  const auto out = standardize_within_question(s);
  EXPECT_EQ(out.z.at("r1"), 0.0);
  EXPECT_EQ(out.z.at("r2"), 0.0);
  EXPECT_EQ(out.warnings.size(), 1u);
}

TEST(Standardize, SingleForecastWarns) {
  const std::vector<GroupedScore> s = {{"r1", "q", 0.3}};
  const auto out = standardize_within_question(s);
  EXPECT_EQ(out.z.at("r1"), 0.0);
  EXPECT_EQ(out.warnings.size(), 1u);
}

TEST(Standardize, QuestionsIndependent) {
  const std::vector<GroupedScore> a = {{"a1", "qa", 0.1}, {"a2", "qa", 0.5}, {"a3", "qa", 0.9}};
  const std::vector<GroupedScore> b = {{"b1", "qb", 0.04}, {"b2", "qb", 0.64}};
  std::vector<GroupedScore> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const auto za = standardize_within_question(a).z;
  const auto zb = standardize_within_question(b).z;
  const auto zab = standardize_within_question(both).z;
  for (const auto& [k, v] : za) EXPECT_DOUBLE_EQ(zab.at(k), v);
  for (const auto& [k, v] : zb) EXPECT_DOUBLE_EQ(zab.at(k), v);
}

TEST(Standardize, DuplicateRecordIdRejected) {
  const std::vector<GroupedScore> s = {{"r1", "q", 0.2}, {"r1", "q", 0.4}};
  EXPECT_THROW(standardize_within_question(s), Error);
}

TEST(StandardizeProperty, MeanZeroVarianceOne) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<GroupedScore> s;
    const auto nq = 1 + rng.below(8);
    for (std::uint64_t q = 0; q < nq; ++q) {
      const auto n = 2 + rng.below(40);
      for (std::uint64_t i = 0; i < n; ++i)
        s.push_back({"r" + std::to_string(s.size()), "q" + std::to_string(q),
                     brier(rng.uniform(), rng.bernoulli(0.4) ? 1.0 : 0.0)});
    }
    const auto out = standardize_within_question(s);
    std::map<std::string, std::vector<double>> per_q;
    for (const auto& g : s) per_q[g.group_id].push_back(out.z.at(g.record_id));
    for (const auto& [q, zs] : per_q) {
      double mean = 0.0;
      for (double z : zs) mean += z;
      mean /= static_cast<double>(zs.size());
      double var = 0.0;
      for (double z : zs) var += (z - mean) * (z - mean);
      var /= static_cast<double>(zs.size());
      ASSERT_LT(std::abs(mean), 1e-9);
      ASSERT_LT(std::abs(var - 1.0), 1e-9);
    }
  }
}

TEST(Rank, OrderingAndTies) {
  const std::vector<ForecastRecord> recs = {binary("1", "b", "q", 0, 0), binary("2", "a", "q", 0, 0),
                                            binary("3", "c", "q", 0, 0), binary("4", "d", "q", 0, 0),
                                            binary("5", "e", "q", 0, 0)};
  const std::map<std::string, double> z = {{"1", 0.0}, {"2", -0.5}, {"3", 0.7}, {"4", 0.1}, {"5", 0.1}};
  auto ranked = rank_forecasters(recs, z);
  ASSERT_EQ(ranked.size(), 5u);
  EXPECT_EQ(ranked[0].author_id, "a");
  EXPECT_EQ(ranked[1].author_id, "b");
  EXPECT_EQ(ranked[2].author_id, "d");  // tie with e at 0.1
  EXPECT_EQ(ranked[3].author_id, "e");
  EXPECT_EQ(ranked[4].author_id, "c");
  for (std::size_t i = 0; i < ranked.size(); ++i) EXPECT_EQ(ranked[i].rank, i + 1);
  const auto sel = select_groups(ranked, 1);
  EXPECT_EQ(sel.top, std::vector<std::string>{"a"});
  EXPECT_EQ(sel.bottom, std::vector<std::string>{"c"});
  EXPECT_THROW(select_groups(ranked, 3), Error);
}

TEST(Rank, HalfPartitionAssignsEveryone) {
  std::vector<ForecastRecord> recs;
  std::map<std::string, double> z;
  for (int i = 0; i < 6; ++i) {
    recs.push_back(binary(std::to_string(i), "a" + std::to_string(i), "q", 0, 0));
    z[std::to_string(i)] = i * 0.1;
  }
  auto ranked = rank_forecasters(recs, z);
  select_groups(ranked, 3);
  for (const auto& p : ranked) EXPECT_NE(p.group, SkillGroup::kMiddle);
}

TEST(RankProperty, InvariantUnderPerQuestionAffineRescale) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ForecastRecord> recs;
    for (int q = 0; q < 5; ++q)
      for (int a = 0; a < 8; ++a)
        recs.push_back(binary("r" + std::to_string(recs.size()), "a" + std::to_string(a),
                              "q" + std::to_string(q), rng.uniform(), rng.bernoulli(0.5) ? 1 : 0));
    auto scores = brier_scores(recs);
    const auto base = rank_forecasters(recs, standardize_within_question(scores).z);
    std::map<std::string, std::pair<double, double>> affine;
    for (int q = 0; q < 5; ++q) affine["q" + std::to_string(q)] = {0.1 + 3 * rng.uniform(), rng.uniform() - 0.5};
    for (auto& s : scores) s.score = affine[s.group_id].first * s.score + affine[s.group_id].second;
    const auto moved = rank_forecasters(recs, standardize_within_question(scores).z);
    ASSERT_EQ(base.size(), moved.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      ASSERT_EQ(base[i].author_id, moved[i].author_id);
      ASSERT_NEAR(base[i].mean_std_brier, moved[i].mean_std_brier, 1e-9);
    }
  }
}

TEST(SelectProperty, TopSetsNest) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ForecastRecord> recs;
    std::map<std::string, double> z;
    const auto n = 2 + rng.below(30);
    for (std::uint64_t i = 0; i < n; ++i) {
      recs.push_back(binary(std::to_string(i), "a" + std::to_string(rng.below(n)), "q", 0, 0));
      z[std::to_string(i)] = std::round(rng.normal() * 4) / 4;  // induce ties
    }
    auto ranked = rank_forecasters(recs, z);
    for (std::size_t k = 1; 2 * (k + 1) <= ranked.size(); ++k) {
      auto small = select_groups(ranked, k).top;
      auto large = select_groups(ranked, k + 1).top;
      std::sort(small.begin(), small.end());
      std::sort(large.begin(), large.end());
      ASSERT_TRUE(std::includes(large.begin(), large.end(), small.begin(), small.end()));
    }
  }
}

TEST(Calibration, PerfectForecasts) {
  const std::vector<double> e = {1.0, 1.0, 1.0};
  const std::vector<double> o = {1.0, 1.0, 1.0};
  const auto c = calibration_curve(e, o, 10);
  ASSERT_EQ(c.bins.size(), 10u);
  EXPECT_EQ(c.bins[9].count, 3u);
  EXPECT_DOUBLE_EQ(*c.bins[9].mean_estimate, 1.0);
  EXPECT_DOUBLE_EQ(*c.bins[9].frequency, 1.0);
  EXPECT_EQ(c.bins[0].count, 0u);
  EXPECT_FALSE(c.bins[0].frequency.has_value());
  EXPECT_EQ(c.total(), 3u);
}

TEST(Calibration, Errors) {
  EXPECT_THROW(calibration_curve(std::vector<double>{}, std::vector<double>{}, 10), Error);
  const std::vector<double> one = {0.5};
  EXPECT_THROW(calibration_curve(one, one, 1), Error);
}

TEST(CalibrationProperty, CountsSumAndFrequenciesBounded) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> e, o;
    const auto n = 1 + rng.below(300);
    for (std::uint64_t i = 0; i < n; ++i) {
      e.push_back(rng.below(5) == 0 ? std::round(rng.uniform() * 10) / 10 : rng.uniform());
      o.push_back(rng.bernoulli(e.back()) ? 1.0 : 0.0);
    }
    const auto c = calibration_curve(e, o, 2 + rng.below(15));
    ASSERT_EQ(c.total(), n);
    for (const auto& b : c.bins) {
      if (b.frequency) {
        ASSERT_GE(*b.frequency, 0.0);
        ASSERT_LE(*b.frequency, 1.0);
        ASSERT_GE(*b.mean_estimate, b.lo - 1e-12);
        ASSERT_LE(*b.mean_estimate, b.hi + 1e-12);
      }
    }
  }
}

TEST(EpsError, Examples) {
  EXPECT_NEAR(eps_error(1.63, -0.01), 164.0, 1e-9);
  EXPECT_EQ(eps_error(2.5, 2.5), 0.0);
  EXPECT_THROW(eps_error(1.0, 0.0), Error);
}

TEST(EpsErrorProperty, ScaleInvariant) {
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const double e = rng.normal(0, 3), o = rng.normal(0, 3), c = rng.uniform(-10, 10);
    if (o == 0.0 || c == 0.0) continue;
    ASSERT_NEAR(eps_error(e, o), eps_error(c * e, c * o), 1e-9 * (1 + eps_error(e, o)));
  }
}

TEST(AnalystErrors, TrimmedMoments) {
  // 10 errors 0..9: trimmed set is 0..8 (mean 4, population sd sqrt(60/9)).
  std::vector<RawError> errs;
  for (int i = 0; i < 10; ++i) errs.push_back({"r" + std::to_string(i), static_cast<double>(i)});
  const auto out = standardize_analyst_errors(errs, {0.9, 10});
  const double sd = std::sqrt(60.0 / 9.0);
  for (int i = 0; i < 10; ++i) EXPECT_NEAR(out.z.at("r" + std::to_string(i)), (i - 4.0) / sd, 1e-12);
}

TEST(AnalystErrors, ZeroVarianceAndMinN) {
  std::vector<RawError> errs;
  for (int i = 0; i < 10; ++i) errs.push_back({"r" + std::to_string(i), 0.2});
  const auto out = standardize_analyst_errors(errs, {0.9, 10});
  for (const auto& [k, z] : out.z) EXPECT_EQ(z, 0.0);
  EXPECT_EQ(out.warnings.size(), 1u);
  EXPECT_THROW(standardize_analyst_errors(errs, {0.9, 100}), Error);
}

TEST(AnalystErrors, ScoreEpsRecords) {
  std::vector<ForecastRecord> recs;
  for (int i = 0; i < 100; ++i) recs.push_back(eps("a" + std::to_string(i), "A", 1.0 + i * 0.01, 1.0));
  for (int i = 0; i < 5; ++i) recs.push_back(eps("b" + std::to_string(i), "B", 1.0, 2.0));
  recs.push_back(eps("z", "A", 1.0, 0.0));
  const auto out = score_eps_records(recs);
  EXPECT_EQ(out.records.size(), 100u);
  EXPECT_EQ(out.excluded_analysts, std::vector<std::string>{"B"});
  EXPECT_EQ(out.warnings.size(), 2u);
  EXPECT_EQ(out.records.front().record_id, "a0");
  EXPECT_LT(out.records.front().std_error, 0.0);
}

}  // namespace
}  // namespace fskill
