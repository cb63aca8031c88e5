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


// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fskill/fskill.hpp"

#ifndef FSKILL_CLI
#error "FSKILL_CLI must name the fskill executable"
#endif

namespace {

using namespace fskill;
using Clock = std::chrono::steady_clock;

unsigned hw_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Verdict {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double budget_s, const std::function<Verdict()>& body) {
  const auto t0 = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_time = secs < budget_s;
  const bool pass = v.pass && in_time;
  if (!pass) ++failures;
  std::printf("ACCEPTANCE %d %s  %s: %s [%.2f s, budget %.0f s%s]\n", id, pass ? "PASS" : "FAIL", title,
              v.detail.c_str(), secs, budget_s, in_time ? "" : ", over budget");
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1 -------------------------------------------------------------------------

Verdict worked_examples() {
  Verdict v;
  const double err = eps_error(1.63, -0.01);
  const double b = brier(0.05, 0.0);
  using Pairs = std::vector<std::pair<std::string, double>>;
  auto pairs = [](std::string_view text) {
    Pairs out;
    for (const auto& e : extract_eps(text, bundled_patterns())) out.emplace_back(e.time_label, e.value);
    return out;
  };
  const std::vector<std::pair<std::string, Pairs>> cases = {
      {"We trim our 12-month target price to $20 from $23 , 10X our '16 EPS estimate of $2.01 "
       "-LRB- trimmed today from $2.10 -RRB- .",
       {{"'16", 2.01}}},
      {"We raise '18 and '19 EPS estimates by $4.61 and $5.72 to $19.85 and $25.95 .",
       {{"'18", 19.85}, {"'19", 25.95}}},
      {"We raise our FY 17 EPS estimate to $3.23 from $2.96 and set FY 18 's at $3.43 .",
       {{"FY 17", 3.23}, {"FY 18", 3.43}}},
  };
  int exact = 0;
  for (const auto& [text, want] : cases) exact += pairs(text) == want ? 1 : 0;
  v.pass = std::abs(err - 164.0) < 1e-9 && std::abs(b - 0.0025) < 1e-15 && exact == 3;
  v.detail = fmt("eps_error=%.12g brier=%.12g extraction %d/3 exact", err, b, exact);
  return v;
}

// 2 -------------------------------------------------------------------------

Verdict standardization() {
  double worst_mean = 0.0, worst_var = 0.0;
  std::size_t questions = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SynthConfig cfg;
    cfg.seed = 900 + seed;
    cfg.n_authors = 80;
    cfg.forecasts_min = 5;
    cfg.forecasts_max = 30;
    cfg.n_questions = 25;
    const auto corpus = generate_corpus(cfg);
    const auto scores = brier_scores(corpus.records);
    const auto z = standardize_within_question(scores).z;
    std::map<std::string, std::vector<std::pair<double, double>>> by_q;  // (raw, z)
    for (const auto& s : scores) by_q[s.group_id].emplace_back(s.score, z.at(s.record_id));
    for (const auto& [q, xs] : by_q) {
      double lo = xs.front().first, hi = lo;
      for (auto [raw, _] : xs) lo = std::min(lo, raw), hi = std::max(hi, raw);
      if (xs.size() < 2 || lo == hi) continue;
      long double sum = 0, sq = 0;
      for (auto [_, zz] : xs) sum += zz;
      const long double mean = sum / xs.size();
      for (auto [_, zz] : xs) sq += (zz - mean) * (zz - mean);
      const double var = static_cast<double>(sq / xs.size());
      worst_mean = std::max(worst_mean, static_cast<double>(std::fabs(mean)));
      worst_var = std::max(worst_var, std::abs(var - 1.0));
      ++questions;
    }
  }
  return {questions > 0 && worst_mean < 1e-9 && worst_var < 1e-9,
          fmt("%zu questions, max |mean|=%.2e, max |var-1|=%.2e", questions, worst_mean, worst_var)};
}

// 3 -------------------------------------------------------------------------

Verdict gradient_check() {
  double worst = 0.0;
  const int instances = 200;
  for (int t = 0; t < instances; ++t) {
    Rng rng = Rng::derive(3000, static_cast<std::uint64_t>(t));
    std::vector<SparseRow> rows(5);
    std::vector<int> y(5);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::uint32_t j = 0; j < 8; ++j) rows[i].emplace_back(j, rng.normal());
      y[i] = rng.bernoulli(0.5) ? 1 : 0;
    }
    std::vector<double> w(9);
    for (auto& x : w) x = rng.normal();
    const double l2 = rng.uniform(0.0, 0.1);
    const auto analytic = logreg_loss_grad(rows, y, w, l2).grad;
    const double h = 1e-5;
    for (std::size_t k = 0; k < w.size(); ++k) {
      auto wp = w, wm = w;
      wp[k] += h;
      wm[k] -= h;
      const double numeric =
          (logreg_loss_grad(rows, y, wp, l2).loss - logreg_loss_grad(rows, y, wm, l2).loss) / (2 * h);
      const double denom = std::max({std::abs(analytic[k]), std::abs(numeric), 1e-6});
      worst = std::max(worst, std::abs(analytic[k] - numeric) / denom);
    }
  }
  return {worst < 1e-4, fmt("%d random 5x8 instances, max relative error %.2e", instances, worst)};
}

// 4 -------------------------------------------------------------------------

Verdict bootstrap_calibration() {
  const std::size_t runs = 200, n = 200;
  std::vector<int> null_reject(runs), shift_hit(runs);
  parallel_for(runs, hw_threads(), [&](std::size_t r) {
    auto draw = [&](std::uint64_t stream, double shift) {
      Rng rng = Rng::derive(4000 + stream, r);
      std::vector<double> xs(n);
      for (auto& x : xs) x = rng.normal(shift, 1.0);
      return xs;
    };
    BootstrapConfig cfg{10000, 7000 + r, 1};
    const auto a = draw(0, 0.0), b = draw(1, 0.0);
    null_reject[r] = bootstrap_test(a, b, cfg).p_value < 0.05 ? 1 : 0;
    const auto c = draw(2, 1.0), d = draw(3, 0.0);
    shift_hit[r] = bootstrap_test(c, d, cfg).p_value < 0.001 ? 1 : 0;
  });
  std::size_t rejects = 0, hits = 0;
  for (std::size_t r = 0; r < runs; ++r) rejects += null_reject[r], hits += shift_hit[r];
  const double rate = static_cast<double>(rejects) / static_cast<double>(runs);
  return {rate >= 0.02 && rate <= 0.09 && hits >= 195,
          fmt("null rejection rate %.3f (band [0.02, 0.09]), shift detected at p<0.001 in %zu/200", rate, hits)};
}

// 5 -------------------------------------------------------------------------

Verdict skill_recovery() {
  const unsigned threads = hw_threads();
  SynthConfig cfg;  // 200 authors, 50 forecasts each, sigma 0.2, seed 0
  cfg.threads = threads;
  const auto corpus = generate_corpus(cfg);
  const auto z = standardize_within_question(brier_scores(corpus.records)).z;
  auto ranked = rank_forecasters(corpus.records, z);

  std::map<std::string, double> skill;
  for (const auto& t : corpus.truth) skill[t.id] = t.skill;
  std::vector<double> truth, observed;
  for (const auto& p : ranked) {
    truth.push_back(skill.at(p.author_id));
    observed.push_back(-p.mean_std_brier);  // lower Brier is better
  }
  const double rho = spearman_rho(truth, observed);

  const auto groups = select_groups(ranked, 50);
  std::map<std::string, std::vector<std::string>> texts;
  for (const auto& r : corpus.records) texts[r.author_id].push_back(r.justification);
  std::vector<Document> docs;
  for (const auto& id : groups.top) docs.push_back({id, texts[id], {}, 1});
  for (const auto& id : groups.bottom) docs.push_back({id, texts[id], {}, 0});
  TrainConfig tcfg;
  tcfg.threads = threads;
  const double cv = crossval_accuracy(docs, 5, 0, FeatureConfig{}, tcfg).mean_accuracy;

  EarlyConfig ecfg;
  ecfg.ns = {10};
  ecfg.train.threads = threads;
  const auto early = early_identification(corpus.records, z, ranked, ecfg);
  const double p10 = early.model_precision[0];
  return {rho >= 0.8 && cv >= 0.65 && p10 >= 0.7,
          fmt("spearman rho %.3f (>=0.8), 5-fold CV accuracy %.3f (>=0.65), P@10 %.2f (>=0.7; baseline %.2f)", rho,
              cv, p10, early.baseline_precision[0])};
}

// 6 -------------------------------------------------------------------------

Verdict calibration() {
  Rng rng(6);
  std::vector<double> est(10000), out(10000);
  for (std::size_t i = 0; i < est.size(); ++i) {
    est[i] = rng.uniform();
    out[i] = rng.bernoulli(est[i]) ? 1.0 : 0.0;
  }
  const auto curve = calibration_curve(est, out, 10);
  double worst = 0.0;
  std::size_t occupied = 0;
  bool ok = true;
  for (const auto& b : curve.bins) {
    if (b.count == 0) continue;
    ++occupied;
    const double m = *b.mean_estimate;
    const double sd = std::sqrt(m * (1.0 - m) / static_cast<double>(b.count));
    const double dev = std::abs(*b.frequency - m) / sd;
    worst = std::max(worst, dev);
    ok = ok && dev <= 3.0;
  }
  return {ok && curve.total() == 10000, fmt("%zu occupied bins, worst deviation %.2f binomial SDs", occupied, worst)};
}

// 7 -------------------------------------------------------------------------

Verdict metric_sanity() {
  const auto res = MetricResources::bundled();
  const double uncertain = uncertainty_rate(
      tokenize("It seems unlikely that the court would transfer the terms of that contract to Uber ."), res.hedge);
  const double certain = uncertainty_rate(
      tokenize("To date , Toyota has distributed only 100 of the 300 Mirais preordered in California ..."), res.hedge);
  const auto ago = temporal_orientation({"ago"}, res.temporal);
  const auto will = temporal_orientation({"will"}, res.temporal);

  // Flesch: 206.835 - 1.015 * words/sentences - 84.6 * syllables/words.
  // "The cat sat on the mat ." : 6 words, 6 syllables, 1 sentence.
  const double f1 = flesch_reading_ease(tokenize("The cat sat on the mat ."));
  const double f1_want = 206.835 - 1.015 * 6.0 - 84.6 * 1.0;
  // the(1) committee(3) will(1) approve(2) the(1) merger(2) next(1) June(1):
  // 8 words, 12 syllables.
  const double f2 = flesch_reading_ease(tokenize("The committee will approve the merger next June ."));
  const double f2_want = 206.835 - 1.015 * 8.0 - 84.6 * 12.0 / 8.0;
  // prices(2) fell(1) . sales(2) rose(1) last(1) week(1) . :
  // 6 words, 8 syllables, 2 sentences.
  const double f3 = flesch_reading_ease(tokenize("Prices fell. Sales rose last week."));
  const double f3_want = 206.835 - 1.015 * 3.0 - 84.6 * 8.0 / 6.0;
  // Dale-Chall: 0.1579 * pct_difficult + 0.0496 * words/sentences, + 3.6365
  // when more than 5% of words are difficult.
  const double d1 = dale_chall(tokenize("the boy and the girl ran to the big house ."), res.easy_words);
  const double d1_want = 0.0496 * 10.0;
  const double d2 = dale_chall(tokenize("the boy ran to the zorbly house ."), res.easy_words);
  const double d2_want = 0.1579 * (100.0 / 7.0) + 0.0496 * 7.0 + 3.6365;

  double worst = 0.0;
  for (auto [got, want] : {std::pair{f1, f1_want}, {f2, f2_want}, {f3, f3_want}, {d1, d1_want}, {d2, d2_want}})
    worst = std::max(worst, std::abs(got - want));
  const bool hedges = uncertain == 1.0 && certain == 0.0;
  const bool temporal = ago.first == 1.0 && ago.second == 0.0 && will.first == 0.0 && will.second == 1.0;
  return {hedges && temporal && worst < 1e-9,
          fmt("hedge sentences %s, ago->past %s, will->present/future %s, readability max |error| %.1e",
              hedges ? "ok" : "WRONG", ago.first == 1.0 ? "ok" : "WRONG", will.second == 1.0 ? "ok" : "WRONG",
              worst)};
}

// 8 -------------------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("fskill_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string cli = FSKILL_CLI;
  auto sh = [&](const std::string& args, const fs::path& out) {
    const std::string cmd = "\"" + cli + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
    return std::system(cmd.c_str());
  };
  const auto bin = (dir / "bin.jsonl").string(), eps = (dir / "eps.jsonl").string();
  if (sh("synth --authors 80 --forecasts 15 --seed 11 --truth " + (dir / "t1.csv").string(), bin) != 0 ||
      sh("synth --domain eps --authors 12 --forecasts 110 --seed 12 --truth " + (dir / "t2.csv").string(), eps) != 0)
    return {false, "synth failed"};
  const std::vector<std::string> invocations = {
      "synth --authors 40 --forecasts 10 --seed 3",
      "ingest -c " + bin,
      "filter -c " + bin,
      "score -c " + bin,
      "rank -c " + bin + " --k 10",
      "metrics -c " + bin,
      "compare -c " + bin + " --k 20 --bootstrap 2000 --seed 5",
      "compare -c " + bin + " --k 20 --bootstrap 2000 --seed 5 --format text",
      "train -c " + bin + " --k 20 --folds 4 --seed 2",
      "early -c " + bin + " --ns 5 --seed 4",
      "calibration -c " + bin + " --k 10",
      "score -c " + eps,
      "split-financial -c " + eps + " --seed 9",
      "train -c " + eps + " --seed 9 --features ngrams,financial",
      "extract-eps -c " + eps + " --earliest",
  };
  std::size_t ok = 0;
  std::string bad;
  for (std::size_t i = 0; i < invocations.size(); ++i) {
    std::vector<std::string> outputs;
    bool ran = true;
    for (const char* threads : {"1", "1", "4", "8"}) {
      const auto out = dir / ("out" + std::to_string(i) + "_" + std::to_string(outputs.size()));
      ran = ran && sh(invocations[i] + " --threads " + threads, out) == 0;
      outputs.push_back(slurp(out));
    }
    const bool same = ran && !outputs[0].empty() && outputs[0] == outputs[1] && outputs[0] == outputs[2] &&
                      outputs[0] == outputs[3];
    if (same) ++ok;
    else bad += " [" + invocations[i].substr(0, invocations[i].find(' ')) + "]";
  }
  fs::remove_all(dir);
  return {ok == invocations.size(),
          fmt("%zu/%zu invocations byte-identical across repeats and --threads 1/4/8%s", ok, invocations.size(),
              bad.c_str())};
}

}  // namespace

int main() {
  run(1, "worked examples", 1, worked_examples);
  run(2, "within-question standardization", 1, standardization);
  run(3, "gradient correctness", 1, gradient_check);
  run(4, "bootstrap calibration", 120, bootstrap_calibration);
  run(5, "end-to-end skill recovery", 300, skill_recovery);
  run(6, "calibration curve", 10, calibration);
  run(7, "metric suite sanity", 5, metric_sanity);
  run(8, "CLI determinism", 300, determinism);
  std::printf("ACCEPTANCE SUMMARY %d/8 passed\n", 8 - failures);
  return failures;
}
