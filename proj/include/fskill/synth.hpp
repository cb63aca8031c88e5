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

// Seeded synthetic corpora with planted skill and planted text effects.
//
// Binary domain: a pool of questions, each with a latent probability p and an
// outcome drawn from it. Every forecast picks a question uniformly; the
// author's estimate is clamp(p + (1 - skill) * sigma * e) where e is a unit
// noise draw. Justification length, hedge rate and sentiment rate are linear
// in skill.
//
// EPS domain: analysts write notes on companies in 2014-2018. Each note has
// its own quality q ~ U[0, 1]; the estimate misses the actual EPS by
// (1 - q) * sigma * |e| relative, and the note text is generated from q.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fskill/corpus.hpp"
#include "fskill/error.hpp"
#include "fskill/parallel.hpp"
#include "fskill/rng.hpp"

namespace fskill {

enum class NoiseShape { kRademacher, kGaussian };

// Linear effect: value = base + slope * skill.
struct Effect {
  double base = 0.0;
  double slope = 0.0;
  double at(double skill) const { return base + slope * skill; }
};

struct SynthConfig {
  Domain domain = Domain::kBinary;
  std::size_t n_authors = 200;
  std::size_t forecasts_min = 50;
  std::size_t forecasts_max = 50;
  std::size_t n_questions = 50;   // binary
  std::size_t n_companies = 40;   // eps
  double skill_lo = 0.0;
  double skill_hi = 1.0;
  double sigma = 0.2;
  NoiseShape noise = NoiseShape::kRademacher;
  Effect hedge{0.1, 0.6};       // per-sentence probability of a hedge phrase
  Effect sentiment{0.6, -0.5};  // per-sentence probability of a sentiment word
  Effect sentences{2.0, 4.0};   // sentences = floor(base + slope * skill + U)
  std::uint64_t seed = 0;
  unsigned threads = 1;

  void validate() const {
    require(n_authors >= 1, "synth: need at least one author");
    require(forecasts_min >= 1 && forecasts_min <= forecasts_max, "synth: bad forecasts range");
    require(domain != Domain::kBinary || n_questions >= 1, "synth: need at least one question");
    require(domain != Domain::kEps || n_companies >= 1, "synth: need at least one company");
    require(skill_lo >= 0.0 && skill_lo <= skill_hi && skill_hi <= 1.0, "synth: skill range must lie in [0, 1]");
    require(std::isfinite(sigma) && sigma >= 0.0, "synth: sigma must be finite and >= 0");
    for (const Effect* e : {&hedge, &sentiment, &sentences})
      require(std::isfinite(e->base) && std::isfinite(e->slope), "synth: effect sizes must be finite");
    for (const Effect* e : {&hedge, &sentiment}) {
      const double lo = std::min(e->at(0.0), e->at(1.0)), hi = std::max(e->at(0.0), e->at(1.0));
      require(lo >= 0.0 && hi <= 1.0, "synth: effect probabilities must lie in [0, 1] over the skill range");
    }
    require(std::min(sentences.at(0.0), sentences.at(1.0)) >= 1.0, "synth: at least one sentence per justification");
  }
};

// Template bank. Skeletons contain no hedge cue and no sentiment word; slots
// are {noun}, {noun2}, {num} and {month}.
inline constexpr std::string_view kSynthTemplates = R"tpl([skeleton]
the {noun} reported {num} new {noun2} in {month} .
officials said the {noun} will review the {noun2} before {month} .
the {noun} has held {num} meetings on the {noun2} this year .
in {month} the {noun} announced a plan for the {noun2} .
the {noun2} rose to {num} after the {noun} vote .
reports show the {noun} met with the {noun2} {num} times .
the {noun} set a deadline in {month} for the {noun2} .
local media say the {noun} wants more {noun2} .
the last {noun2} took {num} days to finish .
the {noun} and the {noun2} signed a deal in {month} .
[hedge]
it seems that
perhaps
it is likely that
there is a chance that
i expect that
it appears that
possibly
i doubt that
[positive]
great
excellent
wonderful
impressive
[negative]
terrible
awful
disappointing
dreadful
[noun]
council
ministry
parliament
committee
company
court
agency
government
union
board
[noun2]
budget
treaty
election
tariffs
contract
merger
talks
proposal
reforms
summit
[month]
january
february
march
april
june
july
august
september
october
november
)tpl";

struct TemplateBank {
  std::map<std::string, std::vector<std::string>> sections;

  static TemplateBank parse(std::string_view content) {
    TemplateBank b;
    std::istringstream in{std::string(content)};
    std::string line, current;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      if (line.front() == '[' && line.back() == ']') {
        current = line.substr(1, line.size() - 2);
        continue;
      }
      if (current.empty()) fail(ErrorKind::kParse, "templates line " + std::to_string(lineno) + ": entry before section");
      b.sections[current].push_back(line);
    }
    for (const char* s : {"skeleton", "hedge", "positive", "negative", "noun", "noun2", "month"})
      if (b.sections[s].empty()) fail(ErrorKind::kParse, std::string("templates: missing section ") + s);
    return b;
  }

  const std::vector<std::string>& get(const std::string& s) const { return sections.at(s); }
};

inline const TemplateBank& bundled_templates() {
  static const TemplateBank b = TemplateBank::parse(kSynthTemplates);
  return b;
}

namespace detail {

template <typename T>
const T& pick(const std::vector<T>& xs, Rng& rng) {
  return xs[rng.below(xs.size())];
}

inline std::string fill_skeleton(const std::string& skel, const TemplateBank& bank, Rng& rng) {
  std::string out;
  std::size_t i = 0;
  while (i < skel.size()) {
    if (skel[i] == '{') {
      const auto close = skel.find('}', i);
      const auto slot = skel.substr(i + 1, close - i - 1);
      if (slot == "num") out += std::to_string(2 + rng.below(98));
      else out += pick(bank.get(slot), rng);
      i = close + 1;
    } else {
      out += skel[i++];
    }
  }
  return out;
}

// polarity: +1 or -1, fixed per author so sentiment accumulates.
inline std::string justification(double skill, int polarity, const SynthConfig& cfg,
                                 const TemplateBank& bank, Rng& rng) {
  const auto n = static_cast<std::size_t>(std::max(1.0, std::floor(cfg.sentences.at(skill) + rng.uniform())));
  std::string text;
  for (std::size_t s = 0; s < n; ++s) {
    std::string sent = fill_skeleton(pick(bank.get("skeleton"), rng), bank, rng);
    if (rng.bernoulli(cfg.sentiment.at(skill))) {
      const auto& words = bank.get(polarity > 0 ? "positive" : "negative");
      sent.insert(sent.size() - 2, " , a " + pick(words, rng) + " sign");
    }
    if (rng.bernoulli(cfg.hedge.at(skill))) sent = pick(bank.get("hedge"), rng) + " " + sent;
    sent[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(sent[0])));
    if (!text.empty()) text += ' ';
    text += sent;
  }
  return text;
}

inline double unit_noise(NoiseShape shape, Rng& rng) {
  return shape == NoiseShape::kRademacher ? (rng.bernoulli(0.5) ? 1.0 : -1.0) : rng.normal();
}

inline std::string padded(const char* prefix, std::size_t i, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%0*zu", prefix, width, i);
  return buf;
}

}  // namespace detail

struct TruthRow {
  std::string id;  // author_id (binary) or record_id (eps)
  double skill = 0.0;
};

struct SynthCorpus {
  std::vector<ForecastRecord> records;
  std::vector<TruthRow> truth;
};

inline SynthCorpus generate_corpus(const SynthConfig& cfg, const TemplateBank& bank = bundled_templates()) {
  cfg.validate();
  struct Question {
    double p;
    double outcome;
  };
  std::vector<Question> questions;
  std::vector<std::map<int, double>> actuals;  // eps: per company, fiscal year -> actual
  Rng pool = Rng::derive(cfg.seed, 0);
  if (cfg.domain == Domain::kBinary) {
    for (std::size_t q = 0; q < cfg.n_questions; ++q) {
      const double p = pool.uniform();
      questions.push_back({p, pool.bernoulli(p) ? 1.0 : 0.0});
    }
  } else {
    actuals.resize(cfg.n_companies);
    for (auto& a : actuals)
      for (int y = 2014; y <= 2020; ++y) {
        const double mag = 0.5 + 4.5 * pool.uniform();
        a[y] = std::round((pool.bernoulli(0.1) ? -mag : mag) * 100.0) / 100.0;
      }
  }

  const UtcTime base = make_utc(2015, 1, 1);
  constexpr std::int64_t kDay = 86400;
  std::vector<SynthCorpus> per_author(cfg.n_authors);
  parallel_for(cfg.n_authors, cfg.threads, [&](std::size_t a) {
    Rng rng = Rng::derive(cfg.seed, 1000 + a);
    auto& out = per_author[a];
    const std::string author = detail::padded("u", a, 4);
    const double skill = rng.uniform(cfg.skill_lo, cfg.skill_hi);
    const int polarity = rng.bernoulli(0.5) ? 1 : -1;
    const std::size_t n = cfg.forecasts_min + rng.below(cfg.forecasts_max - cfg.forecasts_min + 1);
    if (cfg.domain == Domain::kBinary) out.truth.push_back({author, skill});
    UtcTime t{base.seconds + static_cast<std::int64_t>(rng.below(365)) * kDay};
    if (cfg.domain == Domain::kEps) t = make_utc(2014, 1, 1);
    const std::int64_t eps_stride = (make_utc(2019, 1, 1).seconds - t.seconds) / static_cast<std::int64_t>(n);
    for (std::size_t k = 0; k < n; ++k) {
      ForecastRecord r;
      r.record_id = author + "-" + detail::padded("", k, 4);
      r.author_id = author;
      r.domain = cfg.domain;
      if (cfg.domain == Domain::kBinary) {
        t.seconds += static_cast<std::int64_t>(1 + rng.below(5)) * kDay + static_cast<std::int64_t>(rng.below(kDay));
        const auto q = rng.below(questions.size());
        r.target_id = detail::padded("q", q, 3);
        const double e = questions[q].p + (1.0 - skill) * cfg.sigma * detail::unit_noise(cfg.noise, rng);
        r.estimate = std::clamp(e, 0.0, 1.0);
        r.outcome = questions[q].outcome;
        r.justification = detail::justification(skill, polarity, cfg, bank, rng);
      } else {
        // Notes spread evenly over 2014-2018 with jitter inside each stride.
        r.timestamp = UtcTime{t.seconds + static_cast<std::int64_t>(k) * eps_stride +
                              static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(std::max<std::int64_t>(eps_stride, 1))))};
        const auto c = rng.below(cfg.n_companies);
        const int fy = year_of(r.timestamp) + 1;
        const double actual = actuals[c].at(fy);
        const double quality = rng.uniform();
        const double miss = (1.0 - quality) * cfg.sigma * std::abs(detail::unit_noise(NoiseShape::kGaussian, rng));
        const double est = std::round(actual * (1.0 + (rng.bernoulli(0.5) ? miss : -miss)) * 100.0) / 100.0;
        r.target_id = detail::padded("C", c, 3);
        r.estimate = est;
        r.outcome = actual;
        char buf[160];
        std::snprintf(buf, sizeof buf, " We set our FY %02d EPS estimate at $%.2f .", fy % 100, est);
        r.justification = detail::justification(quality, polarity, cfg, bank, rng) + buf;
        out.truth.push_back({r.record_id, quality});
      }
      if (cfg.domain == Domain::kBinary) r.timestamp = t;
      out.records.push_back(std::move(r));
    }
  });
  SynthCorpus corpus;
  for (auto& pa : per_author) {
    for (auto& r : pa.records) corpus.records.push_back(std::move(r));
    for (auto& t : pa.truth) corpus.truth.push_back(std::move(t));
  }
  return corpus;
}

}  // namespace fskill
