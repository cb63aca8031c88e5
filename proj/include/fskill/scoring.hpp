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

// Ground-truth skill: Brier scores, within-question z-scores, author ranking,
// calibration curves and per-analyst standardized EPS errors.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fskill/corpus.hpp"
#include "fskill/error.hpp"

namespace fskill {

inline double brier(double estimate, double outcome) {
  if (!(estimate >= 0.0 && estimate <= 1.0))
    fail(ErrorKind::kInvalidArgument, "brier: estimate outside [0, 1]");
  if (outcome != 0.0 && outcome != 1.0)
    fail(ErrorKind::kInvalidArgument, "brier: outcome must be 0 or 1");
  const double d = estimate - outcome;
  return d * d;
}

struct GroupedScore {
  std::string record_id;
  std::string group_id;  // question (or analyst)
  double score = 0.0;
};

struct Standardized {
  std::map<std::string, double> z;  // record_id -> z
  std::vector<std::string> warnings;
};

namespace detail {

struct Moments {
  double mean = 0.0;
  double sd = 0.0;  // population
  bool degenerate = false;
};

inline Moments population_moments(std::span<const double> xs) {
  Moments m;
  if (xs.empty()) {
    m.degenerate = true;
    return m;
  }
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  double sum = 0.0;
  for (double x : xs) sum += x;
  m.mean = sum / static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  m.sd = std::sqrt(ss / static_cast<double>(xs.size()));
  m.degenerate = *lo == *hi || !(m.sd > 0.0);
  return m;
}

}  // namespace detail

// z = (score - group mean) / group population std. Groups with one member or
// zero variance get z = 0 and a warning.
inline Standardized standardize_within_question(std::span<const GroupedScore> scores) {
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < scores.size(); ++i) groups[scores[i].group_id].push_back(i);
  Standardized out;
  for (const auto& [gid, idx] : groups) {
    std::vector<double> xs;
    xs.reserve(idx.size());
    for (auto i : idx) xs.push_back(scores[i].score);
    const auto m = detail::population_moments(xs);
    if (m.degenerate) {
      out.warnings.push_back("question " + gid + ": degenerate score distribution (n=" +
                             std::to_string(idx.size()) + "), z set to 0");
    }
    for (auto i : idx) {
      const double z = m.degenerate ? 0.0 : (scores[i].score - m.mean) / m.sd;
      if (!out.z.emplace(scores[i].record_id, z).second)
        fail(ErrorKind::kInvalidArgument, "duplicate record_id: " + scores[i].record_id);
    }
  }
  return out;
}

// Brier scores of every resolved binary record, grouped by target_id.
inline std::vector<GroupedScore> brier_scores(std::span<const ForecastRecord> records) {
  std::vector<GroupedScore> out;
  for (const auto& r : records) {
    if (r.domain != Domain::kBinary || !r.outcome) continue;
    out.push_back({r.record_id, r.target_id, brier(r.estimate, *r.outcome)});
  }
  return out;
}

enum class SkillGroup { kTop, kBottom, kMiddle };

inline std::string_view group_name(SkillGroup g) {
  switch (g) {
    case SkillGroup::kTop: return "top";
    case SkillGroup::kBottom: return "bottom";
    case SkillGroup::kMiddle: return "middle";
  }
  return "middle";
}

struct ForecasterProfile {
  std::string author_id;
  std::size_t n_forecasts = 0;
  double mean_std_brier = 0.0;
  std::size_t rank = 0;  // 1 = best
  SkillGroup group = SkillGroup::kMiddle;
};

// Authors ordered by ascending mean z (lower is better), ties by author_id.
// Records without a z-score are ignored.
inline std::vector<ForecasterProfile> rank_forecasters(std::span<const ForecastRecord> records,
                                                       const std::map<std::string, double>& z) {
  std::map<std::string, std::pair<double, std::size_t>> acc;
  for (const auto& r : records) {
    auto it = z.find(r.record_id);
    if (it == z.end()) continue;
    auto& [sum, n] = acc[r.author_id];
    sum += it->second;
    ++n;
  }
  std::vector<ForecasterProfile> out;
  out.reserve(acc.size());
  for (const auto& [author, sn] : acc)
    out.push_back({author, sn.second, sn.first / static_cast<double>(sn.second), 0,
                   SkillGroup::kMiddle});
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.mean_std_brier != b.mean_std_brier) return a.mean_std_brier < b.mean_std_brier;
    return a.author_id < b.author_id;
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = i + 1;
  return out;
}

struct GroupSelection {
  std::vector<std::string> top;
  std::vector<std::string> bottom;
};

// Marks the first K ranked profiles top and the last K bottom. Requires
// 2K <= n.
inline GroupSelection select_groups(std::vector<ForecasterProfile>& ranked, std::size_t k) {
  if (k == 0 || 2 * k > ranked.size())
    fail(ErrorKind::kInvalidArgument, "select_groups: need 1 <= K <= n/2 (K=" + std::to_string(k) +
                                          ", n=" + std::to_string(ranked.size()) + ")");
  GroupSelection sel;
  for (auto& p : ranked) p.group = SkillGroup::kMiddle;
  for (std::size_t i = 0; i < k; ++i) {
    ranked[i].group = SkillGroup::kTop;
    sel.top.push_back(ranked[i].author_id);
    auto& b = ranked[ranked.size() - 1 - i];
    b.group = SkillGroup::kBottom;
    sel.bottom.push_back(b.author_id);
  }
  return sel;
}

// ---------------------------------------------------------------------------
// Calibration
// ---------------------------------------------------------------------------

struct CalibrationBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
  std::optional<double> mean_estimate;
  std::optional<double> frequency;
};

struct CalibrationCurve {
  std::vector<CalibrationBin> bins;
  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& b : bins) n += b.count;
    return n;
  }
};

inline std::size_t calibration_bin(double estimate, std::size_t n_bins) {
  const auto b = static_cast<std::size_t>(std::floor(estimate * static_cast<double>(n_bins)));
  return std::min(b, n_bins - 1);
}

// Equal-width bins over [0, 1]; an estimate of exactly 1.0 falls in the last
// bin.
inline CalibrationCurve calibration_curve(std::span<const double> estimates,
                                          std::span<const double> outcomes,
                                          std::size_t n_bins = 10) {
  require(estimates.size() == outcomes.size(), "calibration_curve: size mismatch");
  require(n_bins >= 2, "calibration_curve: need at least 2 bins");
  if (estimates.empty()) fail(ErrorKind::kInvalidArgument, "calibration_curve: no resolved records");
  std::vector<double> est_sum(n_bins, 0.0), out_sum(n_bins, 0.0);
  CalibrationCurve c;
  c.bins.resize(n_bins);
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    const double e = estimates[i];
    if (!(e >= 0.0 && e <= 1.0)) fail(ErrorKind::kInvalidArgument, "calibration_curve: estimate outside [0, 1]");
    const auto b = calibration_bin(e, n_bins);
    ++c.bins[b].count;
    est_sum[b] += e;
    out_sum[b] += outcomes[i];
  }
  for (std::size_t b = 0; b < n_bins; ++b) {
    auto& bin = c.bins[b];
    bin.lo = static_cast<double>(b) / static_cast<double>(n_bins);
    bin.hi = static_cast<double>(b + 1) / static_cast<double>(n_bins);
    if (bin.count > 0) {
      bin.mean_estimate = est_sum[b] / static_cast<double>(bin.count);
      bin.frequency = out_sum[b] / static_cast<double>(bin.count);
    }
  }
  return c;
}

inline CalibrationCurve calibration_curve(std::span<const ForecastRecord> records,
                                          std::size_t n_bins = 10) {
  std::vector<double> e, o;
  for (const auto& r : records) {
    if (r.domain != Domain::kBinary || !r.outcome) continue;
    e.push_back(r.estimate);
    o.push_back(*r.outcome);
  }
  return calibration_curve(e, o, n_bins);
}

// ---------------------------------------------------------------------------
// EPS forecast error
// ---------------------------------------------------------------------------

inline double eps_error(double estimate, double actual) {
  if (actual == 0.0) fail(ErrorKind::kInvalidArgument, "eps_error: actual EPS is zero");
  if (!std::isfinite(estimate) || !std::isfinite(actual))
    fail(ErrorKind::kInvalidArgument, "eps_error: non-finite input");
  return std::abs(estimate - actual) / std::abs(actual);
}

struct RawError {
  std::string record_id;
  double raw_error = 0.0;
};

struct AnalystErrorConfig {
  double trim = 0.9;
  std::size_t min_n = 100;
};

// Moments come from the floor(trim * n) smallest errors (ties by record_id);
// every error of the analyst is then standardized with them.
inline Standardized standardize_analyst_errors(std::span<const RawError> errors,
                                               const AnalystErrorConfig& cfg = {}) {
  require(cfg.trim > 0.0 && cfg.trim <= 1.0, "trim must be in (0, 1]");
  if (errors.size() < cfg.min_n)
    fail(ErrorKind::kInvalidArgument, "analyst has " + std::to_string(errors.size()) +
                                          " errors, fewer than min_n=" + std::to_string(cfg.min_n));
  std::vector<const RawError*> sorted;
  for (const auto& e : errors) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(), [](const RawError* a, const RawError* b) {
    if (a->raw_error != b->raw_error) return a->raw_error < b->raw_error;
    return a->record_id < b->record_id;
  });
  // floor(trim * n) with a small guard so trim = 0.9, n = 10 keeps 9.
  auto keep = static_cast<std::size_t>(std::floor(cfg.trim * static_cast<double>(errors.size()) + 1e-9));
  keep = std::max<std::size_t>(keep, 1);
  std::vector<double> kept;
  for (std::size_t i = 0; i < keep; ++i) kept.push_back(sorted[i]->raw_error);
  const auto m = detail::population_moments(kept);
  Standardized out;
  if (m.degenerate) out.warnings.push_back("analyst errors have zero trimmed variance, std_error set to 0");
  for (const auto& e : errors) {
    const double z = m.degenerate ? 0.0 : (e.raw_error - m.mean) / m.sd;
    if (!out.z.emplace(e.record_id, z).second)
      fail(ErrorKind::kInvalidArgument, "duplicate record_id: " + e.record_id);
  }
  return out;
}

struct ErrorRecord {
  std::string record_id;
  std::string analyst_id;
  double raw_error = 0.0;
  double std_error = 0.0;
};

struct EpsScoring {
  std::vector<ErrorRecord> records;  // in input order
  std::vector<std::string> excluded_analysts;
  std::vector<std::string> warnings;
};

// Scores every resolved EPS record. Records with actual = 0 and analysts
// below min_n are excluded with a warning.
inline EpsScoring score_eps_records(std::span<const ForecastRecord> records,
                                    const AnalystErrorConfig& cfg = {}) {
  EpsScoring out;
  std::map<std::string, std::vector<RawError>> by_analyst;
  std::vector<std::pair<const ForecastRecord*, double>> scored;
  for (const auto& r : records) {
    if (r.domain != Domain::kEps || !r.outcome) continue;
    if (*r.outcome == 0.0) {
      out.warnings.push_back("record " + r.record_id + ": actual EPS is zero, excluded");
      continue;
    }
    const double err = eps_error(r.estimate, *r.outcome);
    by_analyst[r.author_id].push_back({r.record_id, err});
    scored.emplace_back(&r, err);
  }
  std::map<std::string, double> z;
  for (const auto& [analyst, errs] : by_analyst) {
    if (errs.size() < cfg.min_n) {
      out.excluded_analysts.push_back(analyst);
      out.warnings.push_back("analyst " + analyst + ": " + std::to_string(errs.size()) +
                             " forecasts, below min_n, excluded");
      continue;
    }
    auto s = standardize_analyst_errors(errs, cfg);
    for (auto& w : s.warnings) out.warnings.push_back("analyst " + analyst + ": " + w);
    z.merge(s.z);
  }
  for (const auto& [r, err] : scored) {
    auto it = z.find(r->record_id);
    if (it == z.end()) continue;
    out.records.push_back({r->record_id, r->author_id, err, it->second});
  }
  return out;
}

}  // namespace fskill
