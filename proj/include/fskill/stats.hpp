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

#pragma once

// Two-sample bootstrap test, Bonferroni correction, Spearman correlation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fskill/error.hpp"
#include "fskill/hash.hpp"
#include "fskill/parallel.hpp"
#include "fskill/rng.hpp"

namespace fskill {

enum class Direction { kTopHigher, kBottomHigher, kEqual };

inline std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::kTopHigher: return "top_higher";
    case Direction::kBottomHigher: return "bottom_higher";
    case Direction::kEqual: return "equal";
  }
  return "equal";
}

struct GroupComparison {
  std::string metric;
  double mean_top = 0.0;
  double mean_bottom = 0.0;
  Direction direction = Direction::kEqual;
  double p_value = 1.0;
  bool passes_bonferroni = false;
  std::size_t n_bootstrap = 0;
  std::size_t n_top = 0;
  std::size_t n_bottom = 0;
};

struct BootstrapConfig {
  std::size_t n_iter = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// Resamples per chunk. Fixed so the random streams do not depend on the
// thread count.
inline constexpr std::size_t kBootstrapChunk = 512;

namespace detail {

inline double mean_of(std::span<const double> xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

inline double resample_mean(std::span<const double> xs, Rng& rng) {
  double s = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) s += xs[rng.below(xs.size())];
  return s / static_cast<double>(xs.size());
}

}  // namespace detail

// Observed d = mean(top) - mean(bottom). Each group is resampled with
// replacement at its own size; p is the fraction of resamples with
// |d* - d| >= |d|. Inputs are sorted first so the result does not depend on
// their order.
inline GroupComparison bootstrap_test(std::span<const double> top, std::span<const double> bottom,
                                      const BootstrapConfig& cfg = {}) {
  if (top.empty() || bottom.empty())
    fail(ErrorKind::kInvalidArgument, "bootstrap_test: empty group");
  require(cfg.n_iter >= 1, "bootstrap_test: n_iter must be positive");
  std::vector<double> a(top.begin(), top.end()), b(bottom.begin(), bottom.end());
  for (double x : a) require(std::isfinite(x), "bootstrap_test: non-finite value");
  for (double x : b) require(std::isfinite(x), "bootstrap_test: non-finite value");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  GroupComparison g;
  g.mean_top = detail::mean_of(a);
  g.mean_bottom = detail::mean_of(b);
  g.direction = g.mean_top > g.mean_bottom   ? Direction::kTopHigher
                : g.mean_top < g.mean_bottom ? Direction::kBottomHigher
                                             : Direction::kEqual;
  g.n_bootstrap = cfg.n_iter;
  g.n_top = a.size();
  g.n_bottom = b.size();

  const double observed = g.mean_top - g.mean_bottom;
  const std::size_t n_chunks = (cfg.n_iter + kBootstrapChunk - 1) / kBootstrapChunk;
  std::vector<std::size_t> extreme(n_chunks, 0);
  parallel_for(n_chunks, cfg.threads, [&](std::size_t c) {
    Rng rng = Rng::derive(cfg.seed, c);
    const std::size_t first = c * kBootstrapChunk;
    const std::size_t last = std::min(cfg.n_iter, first + kBootstrapChunk);
    std::size_t hits = 0;
    for (std::size_t i = first; i < last; ++i) {
      const double d = detail::resample_mean(a, rng) - detail::resample_mean(b, rng);
      if (std::abs(d - observed) >= std::abs(observed)) ++hits;
    }
    extreme[c] = hits;
  });
  const std::size_t total = std::accumulate(extreme.begin(), extreme.end(), std::size_t{0});
  g.p_value = static_cast<double>(total) / static_cast<double>(cfg.n_iter);
  return g;
}

// Pass iff p < alpha / m.
inline std::map<std::string, bool> bonferroni(const std::map<std::string, double>& p_values,
                                              double alpha = 0.05, std::size_t m = 1) {
  require(m >= 1, "bonferroni: m must be at least 1");
  std::map<std::string, bool> out;
  const double threshold = alpha / static_cast<double>(m);
  for (const auto& [k, p] : p_values) out[k] = p < threshold;
  return out;
}

struct MetricSamples {
  std::string metric;
  std::vector<double> top;
  std::vector<double> bottom;
};

// Runs bootstrap_test per metric and marks Bonferroni passes with denominator
// m (0 means "number of metrics"). Each metric's stream is seeded from the
// base seed and the metric name, so adding a metric does not change others.
inline std::vector<GroupComparison> compare_groups(std::span<const MetricSamples> samples,
                                                   const BootstrapConfig& cfg, double alpha = 0.05,
                                                   std::size_t m = 0) {
  const std::size_t denom = m == 0 ? std::max<std::size_t>(samples.size(), 1) : m;
  std::vector<GroupComparison> out;
  out.reserve(samples.size());
  for (const auto& s : samples) {
    BootstrapConfig c = cfg;
    c.seed = fnv1a64(s.metric, cfg.seed ^ 0xcbf29ce484222325ULL);
    auto g = bootstrap_test(s.top, s.bottom, c);
    g.metric = s.metric;
    g.passes_bonferroni = g.p_value < alpha / static_cast<double>(denom);
    out.push_back(std::move(g));
  }
  return out;
}

// 1-based fractional ranks; ties share their average rank.
inline std::vector<double> fractional_ranks(std::span<const double> xs) {
  std::vector<std::size_t> idx(xs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto i, auto j) { return xs[i] < xs[j]; });
  std::vector<double> r(xs.size());
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j + 1 < idx.size() && xs[idx[j + 1]] == xs[idx[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
    i = j + 1;
  }
  return r;
}

inline double pearson(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size(), "pearson: length mismatch");
  require(x.size() >= 2, "pearson: need at least 2 points");
  const double mx = detail::mean_of(x), my = detail::mean_of(y);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) fail(ErrorKind::kUndefinedMetric, "correlation of a constant list");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

inline double spearman_rho(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) fail(ErrorKind::kInvalidArgument, "spearman_rho: length mismatch");
  if (x.size() < 2) fail(ErrorKind::kInvalidArgument, "spearman_rho: need at least 2 points");
  const auto rx = fractional_ranks(x);
  const auto ry = fractional_ranks(y);
  return pearson(rx, ry);
}

}  // namespace fskill
