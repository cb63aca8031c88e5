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

// Linguistic metrics computed per justification and aggregated per author.
//
// Rate denominators: lexicon and part-of-speech rates are per token,
// uncertainty is per sentence, quote presence is per forecast. A metric that
// is undefined for a text (no tokens, no sentences, no words) is left empty
// and excluded from author means; it is never coerced to zero.

#include <array>
#include <cmath>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fskill/easy_words.hpp"
#include "fskill/error.hpp"
#include "fskill/lexicon.hpp"
#include "fskill/resources.hpp"
#include "fskill/textproc.hpp"

namespace fskill {

enum class Metric : std::size_t {
  kTokenCount,
  kPctOver100Tokens,
  kTokensPerSentence,
  kFlesch,
  kDaleChall,
  kSentimentAbs,
  kFinPositiveRatio,
  kFinNegativeRatio,
  kPctUncertainSentences,
  kTentativeRate,
  kQuotePresence,
  kFocusPastRate,
  kFocusPresentFutureRate,
  kCardinalRate,
  kNounRate,
  kPrepositionRate,
  kPronounRate,
  kFirstPersonPronounRate,
  kVerbRate,
  kComparisonRate,
  kContingencyRate,
  kExpansionRate,
  kTemporalRate,
  kAnalyticalScore,
};

inline constexpr std::size_t kMetricCount = 24;

enum class MetricGroup { kTextual, kCognitive, kFinancial };

struct MetricInfo {
  Metric id;
  std::string_view name;
  MetricGroup group;
  bool is_rate;  // bounded to [0, 1]
};

inline constexpr std::array<MetricInfo, kMetricCount> kMetrics = {{
    {Metric::kTokenCount, "token_count", MetricGroup::kTextual, false},
    {Metric::kPctOver100Tokens, "pct_over_100_tokens", MetricGroup::kTextual, true},
    {Metric::kTokensPerSentence, "tokens_per_sentence", MetricGroup::kTextual, false},
    {Metric::kFlesch, "flesch", MetricGroup::kTextual, false},
    {Metric::kDaleChall, "dale_chall", MetricGroup::kTextual, false},
    {Metric::kSentimentAbs, "sentiment_abs", MetricGroup::kTextual, false},
    {Metric::kFinPositiveRatio, "fin_positive_ratio", MetricGroup::kFinancial, true},
    {Metric::kFinNegativeRatio, "fin_negative_ratio", MetricGroup::kFinancial, true},
    {Metric::kPctUncertainSentences, "pct_uncertain_sentences", MetricGroup::kCognitive, true},
    {Metric::kTentativeRate, "tentative_rate", MetricGroup::kCognitive, true},
    {Metric::kQuotePresence, "quote_presence", MetricGroup::kCognitive, true},
    {Metric::kFocusPastRate, "focuspast_rate", MetricGroup::kCognitive, true},
    {Metric::kFocusPresentFutureRate, "focuspresentfuture_rate", MetricGroup::kCognitive, true},
    {Metric::kCardinalRate, "cardinal_rate", MetricGroup::kTextual, true},
    {Metric::kNounRate, "noun_rate", MetricGroup::kTextual, true},
    {Metric::kPrepositionRate, "preposition_rate", MetricGroup::kTextual, true},
    {Metric::kPronounRate, "pronoun_rate", MetricGroup::kTextual, true},
    {Metric::kFirstPersonPronounRate, "first_person_pronoun_rate", MetricGroup::kTextual, true},
    {Metric::kVerbRate, "verb_rate", MetricGroup::kTextual, true},
    {Metric::kComparisonRate, "comparison_rate", MetricGroup::kCognitive, true},
    {Metric::kContingencyRate, "contingency_rate", MetricGroup::kCognitive, true},
    {Metric::kExpansionRate, "expansion_rate", MetricGroup::kCognitive, true},
    {Metric::kTemporalRate, "temporal_rate", MetricGroup::kCognitive, true},
    {Metric::kAnalyticalScore, "analytical_score", MetricGroup::kCognitive, false},
}};

inline const MetricInfo& metric_info(Metric m) { return kMetrics[static_cast<std::size_t>(m)]; }

inline std::optional<Metric> metric_by_name(std::string_view name) {
  for (const auto& info : kMetrics)
    if (info.name == name) return info.id;
  return std::nullopt;
}

class MetricVector {
 public:
  std::optional<double> get(Metric m) const { return values_[index(m)]; }
  void set(Metric m, std::optional<double> v) { values_[index(m)] = v; }
  std::optional<double>& operator[](Metric m) { return values_[index(m)]; }
  const std::optional<double>& operator[](Metric m) const { return values_[index(m)]; }

  bool operator==(const MetricVector&) const = default;

 private:
  static std::size_t index(Metric m) { return static_cast<std::size_t>(m); }
  std::array<std::optional<double>, kMetricCount> values_{};
};

// ---------------------------------------------------------------------------
// Resources
// ---------------------------------------------------------------------------

class WordList {
 public:
  WordList() = default;
  static WordList parse(std::string_view content) {
    WordList w;
    std::istringstream in{std::string(content)};
    for (std::string word; in >> word;) w.words_.insert(to_lower(word));
    return w;
  }
  static WordList load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::kIo, "cannot read word list: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }
  bool contains(std::string_view lower) const { return words_.contains(std::string(lower)); }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Sentiment scoring modifiers.
struct SentimentModifiers {
  std::unordered_set<std::string> negators;
  std::unordered_map<std::string, double> intensifiers;
  std::size_t negation_window = 2;

  static SentimentModifiers bundled() {
    SentimentModifiers m;
    for (auto n : resources::kNegators) m.negators.emplace(n);
    for (auto [w, mult] : resources::kIntensifiers) m.intensifiers.emplace(w, mult);
    return m;
  }
};

// Everything compute_metrics needs. bundled() gives the open fallback lists;
// any member can be replaced with a user-supplied lexicon.
struct MetricResources {
  CategoryLexicon hedge;
  CategoryLexicon tentative;
  CategoryLexicon temporal;
  CategoryLexicon sentiment;
  SentimentModifiers modifiers;
  CategoryLexicon financial;
  CategoryLexicon connectives;
  CategoryLexicon analytic;
  WordList easy_words;
  std::optional<PosTagOverrides> pos_overrides;

  static MetricResources bundled() {
    MetricResources r;
    r.hedge = CategoryLexicon::parse(resources::kHedgeLexicon, "hedge");
    r.tentative = CategoryLexicon::parse(resources::kTentativeLexicon, "tentative");
    r.temporal = CategoryLexicon::parse(resources::kTemporalLexicon, "temporal");
    r.sentiment = CategoryLexicon::parse(resources::kSentimentLexicon, "sentiment");
    r.modifiers = SentimentModifiers::bundled();
    r.financial = CategoryLexicon::parse(resources::kFinancialLexicon, "financial");
    r.connectives = CategoryLexicon::parse(resources::kConnectiveLexicon, "connectives");
    r.analytic = CategoryLexicon::parse(resources::kAnalyticLexicon, "analytic");
    r.easy_words = WordList::parse(resources::kDaleChallEasyWords);
    return r;
  }
};

// ---------------------------------------------------------------------------
// Readability
// ---------------------------------------------------------------------------

namespace detail {

struct WordStats {
  std::size_t words = 0;
  std::size_t syllables = 0;
  std::size_t difficult = 0;
};

inline WordStats word_stats(const TokenizedText& tt, const WordList* easy) {
  WordStats s;
  for (const auto& tok : tt.tokens) {
    if (!has_letter(tok)) continue;
    ++s.words;
    s.syllables += static_cast<std::size_t>(count_syllables(tok));
    if (easy != nullptr && !easy->contains(to_lower(tok))) ++s.difficult;
  }
  return s;
}

inline void require_readable(const TokenizedText& tt, const WordStats& s, const char* what) {
  if (s.words == 0 || tt.sentence_count() == 0)
    fail(ErrorKind::kUndefinedMetric, std::string(what) + " needs at least one word and sentence");
}

inline double safe_rate(std::size_t count, std::size_t total, const char* what) {
  if (total == 0) fail(ErrorKind::kUndefinedMetric, std::string(what) + " needs at least one token");
  return static_cast<double>(count) / static_cast<double>(total);
}

}  // namespace detail

// 206.835 - 1.015 (words / sentences) - 84.6 (syllables / words), where words
// are letter-bearing tokens.
inline double flesch_reading_ease(const TokenizedText& tt) {
  const auto s = detail::word_stats(tt, nullptr);
  detail::require_readable(tt, s, "flesch_reading_ease");
  const double wps = static_cast<double>(s.words) / static_cast<double>(tt.sentence_count());
  const double spw = static_cast<double>(s.syllables) / static_cast<double>(s.words);
  return 206.835 - 1.015 * wps - 84.6 * spw;
}

// 0.1579 (% difficult words) + 0.0496 (words / sentences), plus 3.6365 when
// more than 5% of words are difficult (absent from the easy-word list).
inline double dale_chall(const TokenizedText& tt, const WordList& easy_words) {
  const auto s = detail::word_stats(tt, &easy_words);
  detail::require_readable(tt, s, "dale_chall");
  const double pct = 100.0 * static_cast<double>(s.difficult) / static_cast<double>(s.words);
  const double wps = static_cast<double>(s.words) / static_cast<double>(tt.sentence_count());
  double score = 0.1579 * pct + 0.0496 * wps;
  if (pct > 5.0) score += 3.6365;
  return score;
}

// ---------------------------------------------------------------------------
// Lexicon metrics
// ---------------------------------------------------------------------------

// |sum of word scores|. A negator up to `negation_window` tokens before a
// scored word flips its sign; an intensifier immediately before scales it.
inline double sentiment_strength(const std::vector<std::string>& tokens,
                                 const CategoryLexicon& lexicon,
                                 const SentimentModifiers& modifiers) {
  double total = 0.0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const auto m = lexicon.match_at(tokens, i);
    if (m.entry == nullptr || !m.entry->score) {
      ++i;
      continue;
    }
    double score = *m.entry->score;
    if (i >= 1) {
      auto it = modifiers.intensifiers.find(to_lower(tokens[i - 1]));
      if (it != modifiers.intensifiers.end()) score *= it->second;
    }
    for (std::size_t back = 1; back <= modifiers.negation_window && back <= i; ++back) {
      if (modifiers.negators.contains(to_lower(tokens[i - back]))) {
        score = -score;
        break;
      }
    }
    total += score;
    i += m.length;
  }
  return std::abs(total);
}

// (positive matches / tokens, negative matches / tokens).
inline std::pair<double, double> financial_sentiment(const std::vector<std::string>& tokens,
                                                     const CategoryLexicon& lexicon) {
  const auto m = match_lexicon(tokens, lexicon);
  return {detail::safe_rate(m.count("positive"), tokens.size(), "financial_sentiment"),
          detail::safe_rate(m.count("negative"), tokens.size(), "financial_sentiment")};
}

// Fraction of sentences containing at least one hedge cue.
inline double uncertainty_rate(const TokenizedText& tt, const CategoryLexicon& hedges) {
  if (tt.sentence_count() == 0)
    fail(ErrorKind::kUndefinedMetric, "uncertainty_rate needs at least one sentence");
  std::size_t uncertain = 0;
  for (std::size_t s = 0; s < tt.sentence_count(); ++s) {
    const auto [first, last] = tt.sentence(s);
    for (std::size_t i = first; i < last; ++i) {
      const auto m = hedges.match_at(tt.tokens, i);
      if (m.entry != nullptr && i + m.length <= last) {
        ++uncertain;
        break;
      }
    }
  }
  return static_cast<double>(uncertain) / static_cast<double>(tt.sentence_count());
}

// Same metric from externally supplied per-sentence labels (e.g. a neural
// uncertainty classifier).
inline double uncertainty_rate_from_labels(std::span<const bool> sentence_is_uncertain) {
  if (sentence_is_uncertain.empty())
    fail(ErrorKind::kUndefinedMetric, "uncertainty_rate needs at least one sentence");
  std::size_t n = 0;
  for (bool b : sentence_is_uncertain) n += b ? 1 : 0;
  return static_cast<double>(n) / static_cast<double>(sentence_is_uncertain.size());
}

inline int quote_presence(std::string_view text) {
  return find_quote_spans(text).empty() ? 0 : 1;
}

struct ConnectiveRates {
  double comparison = 0, contingency = 0, expansion = 0, temporal = 0;
};

inline ConnectiveRates connective_rates(const std::vector<std::string>& tokens,
                                        const CategoryLexicon& lexicon) {
  const auto m = match_lexicon(tokens, lexicon);
  const auto n = tokens.size();
  return {detail::safe_rate(m.count("comparison"), n, "connective_rates"),
          detail::safe_rate(m.count("contingency"), n, "connective_rates"),
          detail::safe_rate(m.count("expansion"), n, "connective_rates"),
          detail::safe_rate(m.count("temporal"), n, "connective_rates")};
}

// (focuspast / tokens, (focuspresent + focusfuture) / tokens).
inline std::pair<double, double> temporal_orientation(const std::vector<std::string>& tokens,
                                                      const CategoryLexicon& lexicon) {
  const auto m = match_lexicon(tokens, lexicon);
  const auto n = tokens.size();
  return {detail::safe_rate(m.count("focuspast"), n, "temporal_orientation"),
          detail::safe_rate(m.count("focuspresent") + m.count("focusfuture"), n,
                            "temporal_orientation")};
}

inline double tentative_rate(const std::vector<std::string>& tokens,
                             const CategoryLexicon& lexicon) {
  const auto m = match_lexicon(tokens, lexicon);
  std::size_t hits = 0;
  for (const auto& [cat, c] : m.counts) hits += c;
  return detail::safe_rate(hits, tokens.size(), "tentative_rate");
}

struct PosRates {
  double cardinal = 0, noun = 0, preposition = 0, pronoun = 0, first_person_pronoun = 0, verb = 0;
};

// First-person pronouns are counted separately from (not inside) pronouns.
inline PosRates pos_rates(const TokenizedText& tt, const PosTagOverrides* overrides = nullptr) {
  const auto n = tt.token_count();
  if (n == 0) fail(ErrorKind::kUndefinedMetric, "pos_rates needs at least one token");
  std::array<std::size_t, kAllPosCategories.size()> counts{};
  for (auto tag : pos_tag(tt, overrides)) ++counts[static_cast<std::size_t>(tag)];
  auto rate = [&](PosCategory c) {
    return static_cast<double>(counts[static_cast<std::size_t>(c)]) / static_cast<double>(n);
  };
  return {rate(PosCategory::kCardinal), rate(PosCategory::kNoun),
          rate(PosCategory::kPreposition), rate(PosCategory::kPronoun),
          rate(PosCategory::kFirstPersonPronoun), rate(PosCategory::kVerb)};
}

// Linear proxy for LIWC's analytic-thinking composite (not the proprietary
// formula): (article + preposition) - (pronoun + auxverb + negation), each a
// per-token rate, mapped from [-1, 1] onto [0, 100].
inline double analytical_score(const std::vector<std::string>& tokens,
                               const CategoryLexicon& lexicon) {
  const auto m = match_lexicon(tokens, lexicon);
  const auto n = tokens.size();
  if (n == 0) fail(ErrorKind::kUndefinedMetric, "analytical_score needs at least one token");
  const double formal = static_cast<double>(m.count("article") + m.count("preposition"));
  const double narrative =
      static_cast<double>(m.count("pronoun") + m.count("auxverb") + m.count("negation"));
  const double raw = (formal - narrative) / static_cast<double>(n);
  return 50.0 * (raw + 1.0);
}

// ---------------------------------------------------------------------------
// Per-record and per-author vectors
// ---------------------------------------------------------------------------

namespace detail {

template <typename F>
auto defined(F&& f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kUndefinedMetric) throw;
    return std::nullopt;
  }
}

}  // namespace detail

inline MetricVector compute_metrics(std::string_view text, const MetricResources& res) {
  const auto tt = tokenize(text);
  const auto& toks = tt.tokens;
  const double n = static_cast<double>(tt.token_count());
  MetricVector v;
  v[Metric::kTokenCount] = n;
  v[Metric::kPctOver100Tokens] = tt.token_count() >= 100 ? 1.0 : 0.0;
  if (tt.sentence_count() > 0)
    v[Metric::kTokensPerSentence] = n / static_cast<double>(tt.sentence_count());
  v[Metric::kFlesch] = detail::defined([&] { return flesch_reading_ease(tt); });
  v[Metric::kDaleChall] = detail::defined([&] { return dale_chall(tt, res.easy_words); });
  v[Metric::kSentimentAbs] = sentiment_strength(toks, res.sentiment, res.modifiers);
  if (auto fin = detail::defined([&] { return financial_sentiment(toks, res.financial); })) {
    v[Metric::kFinPositiveRatio] = fin->first;
    v[Metric::kFinNegativeRatio] = fin->second;
  }
  v[Metric::kPctUncertainSentences] = detail::defined([&] { return uncertainty_rate(tt, res.hedge); });
  v[Metric::kTentativeRate] = detail::defined([&] { return tentative_rate(toks, res.tentative); });
  v[Metric::kQuotePresence] = static_cast<double>(quote_presence(text));
  if (auto t = detail::defined([&] { return temporal_orientation(toks, res.temporal); })) {
    v[Metric::kFocusPastRate] = t->first;
    v[Metric::kFocusPresentFutureRate] = t->second;
  }
  const PosTagOverrides* overrides = res.pos_overrides ? &*res.pos_overrides : nullptr;
  if (auto p = detail::defined([&] { return pos_rates(tt, overrides); })) {
    v[Metric::kCardinalRate] = p->cardinal;
    v[Metric::kNounRate] = p->noun;
    v[Metric::kPrepositionRate] = p->preposition;
    v[Metric::kPronounRate] = p->pronoun;
    v[Metric::kFirstPersonPronounRate] = p->first_person_pronoun;
    v[Metric::kVerbRate] = p->verb;
  }
  if (auto c = detail::defined([&] { return connective_rates(toks, res.connectives); })) {
    v[Metric::kComparisonRate] = c->comparison;
    v[Metric::kContingencyRate] = c->contingency;
    v[Metric::kExpansionRate] = c->expansion;
    v[Metric::kTemporalRate] = c->temporal;
  }
  v[Metric::kAnalyticalScore] = detail::defined([&] { return analytical_score(toks, res.analytic); });
  return v;
}

// Unweighted per-metric mean over the records where the metric is defined.
// pct_over_100_tokens and quote_presence therefore become the fraction of the
// author's records with >= 100 tokens and with quotes.
inline MetricVector author_aggregate(std::span<const MetricVector> records) {
  require(!records.empty(), "author_aggregate needs at least one record");
  MetricVector out;
  for (const auto& info : kMetrics) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& r : records) {
      if (const auto v = r[info.id]) {
        sum += *v;
        ++n;
      }
    }
    if (n > 0) out[info.id] = sum / static_cast<double>(n);
  }
  return out;
}

}  // namespace fskill
