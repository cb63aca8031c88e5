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

// Bag-of-n-gram features, L2-regularized logistic regression trained by
// full-batch gradient descent, cross-validation and the ranking protocols
// built on top of it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fskill/corpus.hpp"
#include "fskill/error.hpp"
#include "fskill/hash.hpp"
#include "fskill/parallel.hpp"
#include "fskill/rng.hpp"
#include "fskill/scoring.hpp"
#include "fskill/textproc.hpp"

namespace fskill {

inline constexpr std::string_view kUnk = "<UNK>";
inline constexpr std::string_view kBos = "<s>";
inline constexpr std::string_view kEos = "</s>";

// ---------------------------------------------------------------------------
// Features
// ---------------------------------------------------------------------------

// Lowercase; every ASCII digit becomes '0'.
inline std::string normalize_token(std::string_view token) {
  std::string out = to_lower(token);
  for (auto& c : out)
    if (is_ascii_digit(c)) c = '0';
  return out;
}

// All n-grams of the requested sizes over "<s> tokens </s>". N-grams made only
// of boundary marks are skipped; an empty text yields nothing.
inline std::vector<std::string> extract_ngrams(std::string_view text, std::span<const int> sizes) {
  const auto tt = tokenize(text);
  std::vector<std::string> out;
  if (tt.tokens.empty()) return out;
  std::vector<std::string> seq;
  seq.reserve(tt.tokens.size() + 2);
  seq.emplace_back(kBos);
  for (const auto& t : tt.tokens) seq.push_back(normalize_token(t));
  seq.emplace_back(kEos);
  for (int n : sizes) {
    const auto len = static_cast<std::size_t>(n);
    if (len == 0 || len > seq.size()) continue;
    for (std::size_t i = 0; i + len <= seq.size(); ++i) {
      bool only_pads = true;
      std::string g;
      for (std::size_t k = 0; k < len; ++k) {
        if (k > 0) g += ' ';
        g += seq[i + k];
        only_pads = only_pads && (seq[i + k] == kBos || seq[i + k] == kEos);
      }
      if (!only_pads) out.push_back(std::move(g));
    }
  }
  return out;
}

struct FeatureConfig {
  std::vector<int> ngram_sizes{1, 2};
  std::size_t min_count = 2;  // n-grams seen fewer times map to UNK
  bool use_ngrams = true;
  std::vector<std::string> dense_names;  // optional metric features
};

using SparseRow = std::vector<std::pair<std::uint32_t, double>>;  // sorted by index

// One training or scoring unit: an author's combined justifications, or a
// single note.
struct Document {
  std::string id;
  std::vector<std::string> texts;
  std::vector<std::optional<double>> dense;  // aligned with FeatureConfig::dense_names
  int label = 0;
};

class FeatureSpace {
 public:
  FeatureSpace() = default;

  // Vocabulary from training texts only: UNK at index 0, then every n-gram
  // with count >= min_count in lexicographic order. Dense moments are taken
  // from the training documents.
  static FeatureSpace build(std::span<const Document> train, const FeatureConfig& cfg) {
    FeatureSpace fs;
    fs.config_ = cfg;
    fs.vocab_.emplace_back(kUnk);
    if (cfg.use_ngrams) {
      std::map<std::string, std::size_t> counts;
      for (const auto& d : train)
        for (const auto& t : d.texts)
          for (auto& g : extract_ngrams(t, cfg.ngram_sizes)) ++counts[std::move(g)];
      for (const auto& [g, c] : counts)
        if (c >= cfg.min_count) fs.vocab_.push_back(g);
      if (fs.vocab_.size() == 1 && cfg.dense_names.empty())
        fail(ErrorKind::kInvalidArgument, "empty vocabulary: no n-gram reaches min_count");
    } else if (cfg.dense_names.empty()) {
      fail(ErrorKind::kInvalidArgument, "no features enabled");
    }
    fs.rebuild_index();
    const auto nd = cfg.dense_names.size();
    fs.dense_mean_.assign(nd, 0.0);
    fs.dense_sd_.assign(nd, 0.0);
    for (std::size_t j = 0; j < nd; ++j) {
      std::vector<double> xs;
      for (const auto& d : train) {
        require(d.dense.size() == nd, "document dense feature count mismatch");
        if (d.dense[j]) xs.push_back(*d.dense[j]);
      }
      if (xs.empty()) continue;
      const auto m = detail::population_moments(xs);
      fs.dense_mean_[j] = m.mean;
      fs.dense_sd_[j] = m.degenerate ? 0.0 : m.sd;
    }
    return fs;
  }

  // Restores a saved space.
  static FeatureSpace restore(FeatureConfig cfg, std::vector<std::string> vocab,
                              std::vector<double> dense_mean, std::vector<double> dense_sd) {
    require(!vocab.empty() && vocab[0] == kUnk, "vocabulary must start with <UNK>");
    require(dense_mean.size() == cfg.dense_names.size() && dense_sd.size() == cfg.dense_names.size(),
            "dense moment count mismatch");
    FeatureSpace fs;
    fs.config_ = std::move(cfg);
    fs.vocab_ = std::move(vocab);
    fs.dense_mean_ = std::move(dense_mean);
    fs.dense_sd_ = std::move(dense_sd);
    fs.rebuild_index();
    return fs;
  }

  const FeatureConfig& config() const { return config_; }
  const std::vector<std::string>& vocabulary() const { return vocab_; }
  const std::vector<double>& dense_mean() const { return dense_mean_; }
  const std::vector<double>& dense_sd() const { return dense_sd_; }
  std::size_t vocab_size() const { return vocab_.size(); }
  std::size_t dim() const { return vocab_.size() + config_.dense_names.size(); }

  std::optional<std::size_t> index_of(std::string_view ngram) const {
    auto it = index_.find(std::string(ngram));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Name of feature i: the n-gram, or "metric:<name>" for dense features.
  std::string feature_name(std::size_t i) const {
    if (i < vocab_.size()) return vocab_[i];
    return "metric:" + config_.dense_names.at(i - vocab_.size());
  }

  // Raw n-gram counts summed over the texts; unseen n-grams count as UNK.
  std::map<std::uint32_t, double> ngram_counts(std::span<const std::string> texts) const {
    std::map<std::uint32_t, double> counts;
    if (!config_.use_ngrams) return counts;
    for (const auto& t : texts)
      for (const auto& g : extract_ngrams(t, config_.ngram_sizes)) {
        auto it = index_.find(g);
        counts[it == index_.end() ? 0u : static_cast<std::uint32_t>(it->second)] += 1.0;
      }
    return counts;
  }

  // Model input: L2-normalized n-gram counts followed by z-normalized dense
  // features (missing -> 0).
  SparseRow featurize(const Document& doc) const {
    SparseRow row;
    const auto counts = ngram_counts(doc.texts);
    double norm = 0.0;
    for (const auto& [i, c] : counts) norm += c * c;
    norm = std::sqrt(norm);
    for (const auto& [i, c] : counts) row.emplace_back(i, c / norm);
    const auto nd = config_.dense_names.size();
    if (nd > 0) require(doc.dense.size() == nd, "document dense feature count mismatch");
    for (std::size_t j = 0; j < nd; ++j) {
      if (!doc.dense[j] || dense_sd_[j] == 0.0) continue;
      const double z = (*doc.dense[j] - dense_mean_[j]) / dense_sd_[j];
      if (z != 0.0) row.emplace_back(static_cast<std::uint32_t>(vocab_.size() + j), z);
    }
    return row;
  }

  std::uint64_t vocab_hash() const {
    std::uint64_t h = fnv1a64("vocab");
    for (const auto& v : vocab_) h = fnv1a64(std::string_view(v.data(), v.size() + 1), h);
    for (const auto& n : config_.dense_names) h = fnv1a64(n + "\n", h);
    return h;
  }

 private:
  void rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < vocab_.size(); ++i)
      if (!index_.emplace(vocab_[i], i).second)
        fail(ErrorKind::kParse, "duplicate vocabulary entry: " + vocab_[i]);
  }

  FeatureConfig config_;
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> dense_mean_;
  std::vector<double> dense_sd_;
};

inline std::vector<SparseRow> featurize_all(const FeatureSpace& fs, std::span<const Document> docs,
                                            unsigned threads = 1) {
  std::vector<SparseRow> rows(docs.size());
  parallel_for(docs.size(), threads, [&](std::size_t i) { rows[i] = fs.featurize(docs[i]); });
  return rows;
}

// ---------------------------------------------------------------------------
// Logistic regression
// ---------------------------------------------------------------------------

struct TrainConfig {
  double learning_rate = 0.1;
  double l2 = 1e-4;
  std::size_t epochs = 500;
  double grad_tol = 1e-6;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// Weights over the feature dimensions followed by the bias.
struct LogRegState {
  std::vector<double> w;
  double bias() const { return w.back(); }
};

struct LossAndGradient {
  double loss = 0.0;
  std::vector<double> grad;  // same layout as weights (bias last)
};

// Examples per reduction chunk; fixed so sums do not depend on thread count.
inline constexpr std::size_t kGradChunk = 128;

namespace detail {

inline double softplus(double x) { return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x))); }

inline double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

inline double row_dot(const SparseRow& row, std::span<const double> w) {
  double s = w.back();
  for (const auto& [i, v] : row) s += w[i] * v;
  return s;
}

}  // namespace detail

// Mean cross-entropy + (l2 / 2) * ||w||^2, bias unpenalized.
inline LossAndGradient logreg_loss_grad(std::span<const SparseRow> rows, std::span<const int> y,
                                        std::span<const double> w, double l2,
                                        unsigned threads = 1) {
  require(rows.size() == y.size() && !rows.empty(), "logreg: bad example count");
  const std::size_t dim = w.size();
  const std::size_t n_chunks = (rows.size() + kGradChunk - 1) / kGradChunk;
  std::vector<double> chunk_loss(n_chunks, 0.0);
  std::vector<std::vector<double>> chunk_grad(n_chunks);
  parallel_for(n_chunks, threads, [&](std::size_t c) {
    auto& g = chunk_grad[c];
    g.assign(dim, 0.0);
    double loss = 0.0;
    const std::size_t last = std::min(rows.size(), (c + 1) * kGradChunk);
    for (std::size_t k = c * kGradChunk; k < last; ++k) {
      const double s = detail::row_dot(rows[k], w);
      loss += y[k] == 1 ? detail::softplus(-s) : detail::softplus(s);
      const double r = detail::sigmoid(s) - static_cast<double>(y[k]);
      for (const auto& [i, v] : rows[k]) g[i] += r * v;
      g[dim - 1] += r;
    }
    chunk_loss[c] = loss;
  });
  LossAndGradient out;
  out.grad.assign(dim, 0.0);
  const double inv_n = 1.0 / static_cast<double>(rows.size());
  for (std::size_t c = 0; c < n_chunks; ++c) {
    out.loss += chunk_loss[c];
    for (std::size_t i = 0; i < dim; ++i) out.grad[i] += chunk_grad[c][i];
  }
  out.loss *= inv_n;
  double penalty = 0.0;
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    out.grad[i] = out.grad[i] * inv_n + l2 * w[i];
    penalty += w[i] * w[i];
  }
  out.grad[dim - 1] *= inv_n;
  out.loss += 0.5 * l2 * penalty;
  return out;
}

struct TrainResult {
  std::vector<double> weights;  // dim + 1, bias last
  std::vector<double> loss_history;  // loss at the start of each epoch, then final
  double final_grad_norm = 0.0;
  std::size_t epochs_run = 0;
};

inline double l2_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Deterministic full-batch gradient descent from zero weights. A step that
// would raise the loss is halved until it does not, so the recorded loss
// never increases.
inline TrainResult train_logreg(std::span<const SparseRow> rows, std::span<const int> y,
                                std::size_t dim, const TrainConfig& cfg = {}) {
  require(rows.size() == y.size(), "train_logreg: label count mismatch");
  std::size_t pos = 0, neg = 0;
  for (int label : y) {
    require(label == 0 || label == 1, "train_logreg: labels must be 0 or 1");
    (label == 1 ? pos : neg) += 1;
  }
  if (pos < 2 || neg < 2)
    fail(ErrorKind::kInvalidArgument, "train_logreg: need at least 2 examples per class");
  require(cfg.learning_rate > 0.0 && cfg.l2 >= 0.0, "train_logreg: bad hyperparameters");

  TrainResult res;
  std::vector<double> w(dim + 1, 0.0);
  auto cur = logreg_loss_grad(rows, y, w, cfg.l2, cfg.threads);
  std::vector<double> trial(w.size());
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    res.loss_history.push_back(cur.loss);
    if (l2_norm(cur.grad) < cfg.grad_tol) break;
    double step = cfg.learning_rate;
    bool moved = false;
    for (int halvings = 0; halvings < 50; ++halvings, step *= 0.5) {
      for (std::size_t i = 0; i < w.size(); ++i) trial[i] = w[i] - step * cur.grad[i];
      auto next = logreg_loss_grad(rows, y, trial, cfg.l2, cfg.threads);
      if (next.loss <= cur.loss) {
        w.swap(trial);
        cur = std::move(next);
        moved = true;
        break;
      }
    }
    ++res.epochs_run;
    if (!moved) break;
  }
  res.loss_history.push_back(cur.loss);
  res.final_grad_norm = l2_norm(cur.grad);
  res.weights = std::move(w);
  return res;
}

// ---------------------------------------------------------------------------
// Trained model
// ---------------------------------------------------------------------------

struct ModelArtifact {
  FeatureSpace space;
  std::vector<double> weights;  // space.dim() + 1, bias last
  TrainConfig config;
  std::string data_hash;
  double final_loss = 0.0;
  double final_grad_norm = 0.0;

  double logit(const Document& doc) const { return detail::row_dot(space.featurize(doc), weights); }
  double probability(const Document& doc) const { return detail::sigmoid(logit(doc)); }
  int predict(const Document& doc) const { return logit(doc) >= 0.0 ? 1 : 0; }
};

inline std::string documents_hash(std::span<const Document> docs) {
  std::uint64_t h = fnv1a64("docs");
  for (const auto& d : docs) {
    h = fnv1a64(d.id + "\x1f" + std::to_string(d.label) + "\x1e", h);
    for (const auto& t : d.texts) h = fnv1a64(t + "\x1d", h);
  }
  return hex64(h);
}

inline ModelArtifact fit_model(std::span<const Document> train, const FeatureConfig& fcfg,
                               const TrainConfig& tcfg = {}) {
  ModelArtifact m;
  m.space = FeatureSpace::build(train, fcfg);
  const auto rows = featurize_all(m.space, train, tcfg.threads);
  std::vector<int> y;
  for (const auto& d : train) y.push_back(d.label);
  auto res = train_logreg(rows, y, m.space.dim(), tcfg);
  m.weights = std::move(res.weights);
  m.config = tcfg;
  m.data_hash = documents_hash(train);
  m.final_loss = res.loss_history.back();
  m.final_grad_norm = res.final_grad_norm;
  return m;
}

// ---------------------------------------------------------------------------
// Cross-validation
// ---------------------------------------------------------------------------

// Stratified fold ids: each class is shuffled with the seed and dealt
// round-robin into k folds.
inline std::vector<std::size_t> stratified_folds(std::span<const int> labels, std::size_t k,
                                                 std::uint64_t seed) {
  require(k >= 2, "need at least 2 folds");
  std::vector<std::size_t> fold(labels.size(), 0);
  for (int cls : {0, 1}) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == cls) idx.push_back(i);
    if (idx.size() < k)
      fail(ErrorKind::kInvalidArgument, "k=" + std::to_string(k) + " exceeds class size " +
                                            std::to_string(idx.size()));
    Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(cls));
    rng.shuffle(idx);
    for (std::size_t j = 0; j < idx.size(); ++j) fold[idx[j]] = j % k;
  }
  return fold;
}

struct CrossValResult {
  std::vector<double> fold_accuracy;
  double mean_accuracy = 0.0;
};

// The vocabulary and dense moments are rebuilt on each fold's training split.
inline CrossValResult crossval_accuracy(std::span<const Document> docs, std::size_t k,
                                        std::uint64_t seed, const FeatureConfig& fcfg,
                                        const TrainConfig& tcfg = {}) {
  std::vector<int> labels;
  for (const auto& d : docs) labels.push_back(d.label);
  const auto fold = stratified_folds(labels, k, seed);
  CrossValResult out;
  for (std::size_t f = 0; f < k; ++f) {
    std::vector<Document> train, test;
    for (std::size_t i = 0; i < docs.size(); ++i) (fold[i] == f ? test : train).push_back(docs[i]);
    const auto model = fit_model(train, fcfg, tcfg);
    std::size_t correct = 0;
    for (const auto& d : test) correct += model.predict(d) == d.label ? 1 : 0;
    out.fold_accuracy.push_back(static_cast<double>(correct) / static_cast<double>(test.size()));
  }
  out.mean_accuracy = std::accumulate(out.fold_accuracy.begin(), out.fold_accuracy.end(), 0.0) /
                      static_cast<double>(k);
  return out;
}

// ---------------------------------------------------------------------------
// Inspection and ranking
// ---------------------------------------------------------------------------

struct WeightedFeature {
  std::string name;
  double weight = 0.0;
};

// n highest and n lowest weighted features; ties by feature name.
inline std::pair<std::vector<WeightedFeature>, std::vector<WeightedFeature>> top_features(
    const ModelArtifact& m, std::size_t n) {
  const std::size_t dim = m.space.dim();
  if (n > dim) fail(ErrorKind::kInvalidArgument, "top_features: n exceeds feature count");
  std::vector<WeightedFeature> all;
  all.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) all.push_back({m.space.feature_name(i), m.weights[i]});
  auto high = all, low = all;
  std::sort(high.begin(), high.end(), [](const auto& a, const auto& b) {
    return a.weight != b.weight ? a.weight > b.weight : a.name < b.name;
  });
  std::sort(low.begin(), low.end(), [](const auto& a, const auto& b) {
    return a.weight != b.weight ? a.weight < b.weight : a.name < b.name;
  });
  high.resize(n);
  low.resize(n);
  return {high, low};
}

struct ScoredAuthor {
  std::string author_id;
  double score = 0.0;  // higher = predicted more skilled
};

// Fraction of true positives among the N highest scores (ties by author_id).
inline double precision_at_n(std::vector<ScoredAuthor> scored, const std::set<std::string>& positives,
                             std::size_t n) {
  if (n == 0 || n > scored.size())
    fail(ErrorKind::kInvalidArgument, "precision_at_n: N=" + std::to_string(n) +
                                          " outside [1, " + std::to_string(scored.size()) + "]");
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    return a.score != b.score ? a.score > b.score : a.author_id < b.author_id;
  });
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) hits += positives.contains(scored[i].author_id) ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(n);
}

// ---------------------------------------------------------------------------
// Early identification protocol
// ---------------------------------------------------------------------------

struct EarlyConfig {
  FeatureConfig features;
  TrainConfig train;
  std::uint64_t seed = 0;
  std::vector<std::size_t> ns{5, 10, 20};
  double train_frac = 0.6;
  double val_frac = 0.2;
};

struct EarlySplit {
  std::vector<std::string> train, val, test;
};

struct EarlyResult {
  std::vector<std::size_t> ns;
  std::vector<double> model_precision;
  std::vector<double> baseline_precision;
  EarlySplit split;
  std::size_t test_top = 0;
  ModelArtifact model;
};

namespace detail {

inline void split_group(std::vector<std::string> ids, Rng& rng, double train_frac, double val_frac,
                        EarlySplit& out) {
  rng.shuffle(ids);
  const auto n = ids.size();
  const auto n_train = static_cast<std::size_t>(std::floor(train_frac * static_cast<double>(n) + 1e-9));
  const auto n_val = static_cast<std::size_t>(std::floor(val_frac * static_cast<double>(n) + 1e-9));
  for (std::size_t i = 0; i < n; ++i) {
    auto& dst = i < n_train ? out.train : i < n_train + n_val ? out.val : out.test;
    dst.push_back(ids[i]);
  }
}

}  // namespace detail

// Authors are split into top and bottom halves by rank, then 60/20/20 within
// each half. The model trains on each training author's combined
// justifications and scores each test author by their earliest justification
// alone. The baseline ranks test authors by the z-score of that same earliest
// forecast.
inline EarlyResult early_identification(std::span<const ForecastRecord> records,
                                        const std::map<std::string, double>& z,
                                        const std::vector<ForecasterProfile>& ranked,
                                        const EarlyConfig& cfg) {
  const std::size_t half = ranked.size() / 2;
  require(half >= 2, "early_identification: need at least 4 ranked authors");
  std::vector<std::string> top_ids, bottom_ids;
  for (std::size_t i = 0; i < half; ++i) {
    top_ids.push_back(ranked[i].author_id);
    bottom_ids.push_back(ranked[ranked.size() - 1 - i].author_id);
  }
  std::sort(top_ids.begin(), top_ids.end());
  std::sort(bottom_ids.begin(), bottom_ids.end());
  const std::set<std::string> top_set(top_ids.begin(), top_ids.end());

  EarlyResult res;
  Rng rng_top = Rng::derive(cfg.seed, 101), rng_bottom = Rng::derive(cfg.seed, 102);
  detail::split_group(top_ids, rng_top, cfg.train_frac, cfg.val_frac, res.split);
  detail::split_group(bottom_ids, rng_bottom, cfg.train_frac, cfg.val_frac, res.split);

  std::map<std::string, std::vector<const ForecastRecord*>> by_author;
  for (const auto& r : records) by_author[r.author_id].push_back(&r);
  for (auto& [a, rs] : by_author)
    std::sort(rs.begin(), rs.end(), [](const auto* x, const auto* y) {
      return x->timestamp != y->timestamp ? x->timestamp < y->timestamp : x->record_id < y->record_id;
    });

  std::vector<Document> train;
  for (const auto& a : res.split.train) {
    Document d;
    d.id = a;
    d.label = top_set.contains(a) ? 1 : 0;
    for (const auto* r : by_author[a]) d.texts.push_back(r->justification);
    train.push_back(std::move(d));
  }
  res.model = fit_model(train, cfg.features, cfg.train);

  std::vector<ScoredAuthor> model_scores, baseline_scores;
  for (const auto& a : res.split.test) {
    const auto& rs = by_author[a];
    if (rs.empty()) fail(ErrorKind::kInvalidArgument, "author without records: " + a);
    const auto* first = rs.front();
    Document d;
    d.id = a;
    d.texts = {first->justification};
    model_scores.push_back({a, res.model.logit(d)});
    auto it = z.find(first->record_id);
    // Lower z is better, so negate for "higher = more skilled".
    baseline_scores.push_back({a, it == z.end() ? 0.0 : -it->second});
    res.test_top += top_set.contains(a) ? 1 : 0;
  }
  for (auto n : cfg.ns) {
    res.ns.push_back(n);
    res.model_precision.push_back(precision_at_n(model_scores, top_set, n));
    res.baseline_precision.push_back(precision_at_n(baseline_scores, top_set, n));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Financial split
// ---------------------------------------------------------------------------

struct FinancialSplitConfig {
  double eval_frac = 0.2;
  std::uint64_t seed = 0;
  std::size_t k = 0;  // top-K / bottom-K notes; 0 = largest balanced K
  int train_first_year = 2014;
  int train_last_year = 2016;
  int dev_year = 2017;
  int test_year = 2018;
};

struct LabeledNote {
  ForecastRecord record;
  double std_error = 0.0;
  int label = 0;  // 1 = accurate (among the K lowest standardized errors)
};

struct FinancialSplit {
  std::vector<LabeledNote> train, dev, test;
  std::vector<std::string> train_companies, eval_companies;
};

// Labels the K most and K least accurate notes, splits companies into
// train/eval with the seed, then keeps train-company notes from the train
// years and eval-company notes from the dev and test years. Dev and test are
// balanced by downsampling the majority class.
inline FinancialSplit financial_split(std::span<const ForecastRecord> records,
                                      const std::map<std::string, double>& std_errors,
                                      const FinancialSplitConfig& cfg = {}) {
  require(cfg.eval_frac > 0.0 && cfg.eval_frac < 1.0, "eval_frac must be in (0, 1)");
  std::vector<LabeledNote> scored;
  for (const auto& r : records) {
    auto it = std_errors.find(r.record_id);
    if (it != std_errors.end()) scored.push_back({r, it->second, 0});
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    return a.std_error != b.std_error ? a.std_error < b.std_error : a.record.record_id < b.record.record_id;
  });
  const std::size_t k = cfg.k == 0 ? scored.size() / 2 : cfg.k;
  if (k == 0 || 2 * k > scored.size())
    fail(ErrorKind::kInvalidArgument, "financial_split: need 1 <= K <= n/2 scored notes");
  std::vector<LabeledNote> chosen;
  for (std::size_t i = 0; i < k; ++i) {
    chosen.push_back(scored[i]);
    chosen.back().label = 1;
    chosen.push_back(scored[scored.size() - 1 - i]);
    chosen.back().label = 0;
  }

  std::set<std::string> company_set;
  for (const auto& n : chosen) company_set.insert(n.record.target_id);
  std::vector<std::string> companies(company_set.begin(), company_set.end());
  require(companies.size() >= 2, "financial_split: need at least 2 companies");
  Rng rng = Rng::derive(cfg.seed, 201);
  rng.shuffle(companies);
  auto n_eval = static_cast<std::size_t>(std::llround(cfg.eval_frac * static_cast<double>(companies.size())));
  n_eval = std::clamp<std::size_t>(n_eval, 1, companies.size() - 1);
  FinancialSplit out;
  out.eval_companies.assign(companies.begin(), companies.begin() + static_cast<std::ptrdiff_t>(n_eval));
  out.train_companies.assign(companies.begin() + static_cast<std::ptrdiff_t>(n_eval), companies.end());
  std::sort(out.eval_companies.begin(), out.eval_companies.end());
  std::sort(out.train_companies.begin(), out.train_companies.end());
  const std::set<std::string> eval_set(out.eval_companies.begin(), out.eval_companies.end());

  std::sort(chosen.begin(), chosen.end(),
            [](const auto& a, const auto& b) { return a.record.record_id < b.record.record_id; });
  for (auto& n : chosen) {
    const int year = year_of(n.record.timestamp);
    const bool eval = eval_set.contains(n.record.target_id);
    if (!eval && year >= cfg.train_first_year && year <= cfg.train_last_year) out.train.push_back(n);
    else if (eval && year == cfg.dev_year) out.dev.push_back(n);
    else if (eval && year == cfg.test_year) out.test.push_back(n);
  }

  auto balance = [&](std::vector<LabeledNote>& split, std::uint64_t stream) {
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < split.size(); ++i) (split[i].label == 1 ? pos : neg).push_back(i);
    auto& major = pos.size() > neg.size() ? pos : neg;
    const auto target = std::min(pos.size(), neg.size());
    Rng r = Rng::derive(cfg.seed, stream);
    r.shuffle(major);
    major.resize(target);
    std::vector<std::size_t> keep = pos;
    keep.insert(keep.end(), neg.begin(), neg.end());
    std::sort(keep.begin(), keep.end());
    std::vector<LabeledNote> out_split;
    for (auto i : keep) out_split.push_back(split[i]);
    split = std::move(out_split);
  };
  balance(out.dev, 202);
  balance(out.test, 203);
  if (out.train.empty() || out.dev.empty() || out.test.empty())
    fail(ErrorKind::kInvalidArgument, "financial_split: a split is empty after filtering (train=" +
                                          std::to_string(out.train.size()) + ", dev=" +
                                          std::to_string(out.dev.size()) + ", test=" +
                                          std::to_string(out.test.size()) + ")");
  return out;
}

inline std::vector<Document> notes_to_documents(std::span<const LabeledNote> notes) {
  std::vector<Document> docs;
  for (const auto& n : notes) docs.push_back({n.record.record_id, {n.record.justification}, {}, n.label});
  return docs;
}

}  // namespace fskill
