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

#include <sstream>
#include <string>
#include <vector>

#include "fskill/extract.hpp"
#include "fskill/rng.hpp"

namespace fskill {
namespace {

using Pairs = std::vector<std::pair<std::string, double>>;

Pairs pairs_of(const std::vector<EpsEstimate>& es) {
  Pairs out;
  for (const auto& e : es) out.emplace_back(e.time_label, e.value);
  return out;
}

TEST(Mask, SimpleSentence) {
  const auto ms = mask_entities("our '16 EPS estimate of $2.01");
  EXPECT_EQ(ms.masked_text(), "our <TIME> EPS estimate of <MONEY>");
  ASSERT_EQ(ms.spans.size(), 2u);
  EXPECT_EQ(ms.spans[0].surface, "'16");
  EXPECT_EQ(ms.spans[1].surface, "$2.01");
  EXPECT_DOUBLE_EQ(*ms.spans[1].value, 2.01);
}

TEST(Mask, NoEntities) {
  const auto ms = mask_entities("Shares look cheap here .");
  EXPECT_TRUE(ms.spans.empty());
  EXPECT_EQ(ms.masked_text(), "Shares look cheap here .");
}

TEST(Mask, TwoMoneyMasks) {
  const auto ms = mask_entities("$19.85 and $25.95");
  EXPECT_EQ(ms.masked_text(), "<MONEY> and <MONEY>");
  ASSERT_EQ(ms.spans.size(), 2u);
  EXPECT_EQ(ms.spans[0].range, (CharRange{0, 6}));
  EXPECT_EQ(ms.spans[1].range, (CharRange{11, 17}));
  EXPECT_DOUBLE_EQ(*ms.spans[1].value, 25.95);
}

TEST(Mask, TimeForms) {
  for (const char* t : {"'16", "FY 17", "FY17", "FY2017", "2016", "full-year 2016", "fiscal 2016",
                        "Q1", "Q1 2017", "4Q17", "12-month", "fiscal year 2018", "1Q FY18"}) {
    const auto ms = mask_entities(std::string(t));
    ASSERT_EQ(ms.masked.size(), 1u) << t;
    EXPECT_EQ(ms.masked[0], "<TIME>") << t;
  }
}

TEST(Mask, MoneyForms) {
  const std::vector<std::pair<std::string, double>> cases = {
      {"$2.01", 2.01}, {"$1,234.50", 1234.5}, {"($0.10)", -0.10}, {"-$0.25", -0.25}, {"$20", 20.0},
      {"-LRB- $0.10 -RRB-", -0.10}};
  for (const auto& [text, value] : cases) {
    const auto ms = mask_entities(text);
    ASSERT_EQ(ms.masked.size(), 1u) << text;
    EXPECT_EQ(ms.masked[0], "<MONEY>") << text;
    EXPECT_DOUBLE_EQ(*ms.spans[0].value, value) << text;
  }
}

TEST(Mask, UnmaskRoundTrip) {
  Rng rng(4);
  const std::vector<std::string> pool = {"We", "raise", "our", "FY", "17", "'18", "EPS", "estimate",
                                         "to", "$3.23", "(", "$0.10", ")", "-LRB-", "-RRB-", "2016",
                                         ".", ",", "Q1", "4Q17", "12-month", "'s", "by", "from", "set"};
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    const auto n = rng.below(25);
    for (std::uint64_t i = 0; i < n; ++i) {
      text += std::string(1 + rng.below(2), rng.bernoulli(0.2) ? '\t' : ' ');
      text += pool[rng.below(pool.size())];
      if (rng.bernoulli(0.2)) text += ",";
    }
    const auto ms = mask_entities(text);
    ASSERT_EQ(ms.unmask(), text);
    for (std::size_t s = 1; s < ms.spans.size(); ++s) ASSERT_LE(ms.spans[s - 1].range.end, ms.spans[s].range.begin);
  }
}

TEST(Extract, ExampleOne) {
  const auto es = extract_eps(
      "We trim our 12-month target price to $20 from $23 , 10X our '16 EPS estimate of $2.01 "
      "-LRB- trimmed today from $2.10 -RRB- .",
      bundled_patterns());
  EXPECT_EQ(pairs_of(es), (Pairs{{"'16", 2.01}}));
}

TEST(Extract, ExampleTwo) {
  const auto es = extract_eps("We raise '18 and '19 EPS estimates by $4.61 and $5.72 to $19.85 and $25.95 .",
                              bundled_patterns());
  EXPECT_EQ(pairs_of(es), (Pairs{{"'18", 19.85}, {"'19", 25.95}}));
}

TEST(Extract, ExampleThree) {
  const auto es = extract_eps("We raise our FY 17 EPS estimate to $3.23 from $2.96 and set FY 18 's at $3.43 .",
                              bundled_patterns());
  EXPECT_EQ(pairs_of(es), (Pairs{{"FY 17", 3.23}, {"FY 18", 3.43}}));
}

TEST(Extract, RequiresEpsAnchor) {
  const auto ps = PatternSet::parse("<TIME> target of <MONEY>\n");
  EXPECT_TRUE(extract_eps("our '16 target of $20 .", ps).empty());
  EXPECT_TRUE(extract_eps("We set a 12-month target price of $20 .", bundled_patterns()).empty());
}

TEST(Extract, MatchDoesNotCrossSentence) {
  EXPECT_TRUE(extract_eps("Our '17 EPS estimate . Of $2.00 we are sure .", bundled_patterns()).empty());
}

TEST(Extract, CarriesRecordAndSpans) {
  const std::string note = "Intro . Our 2017 EPS estimate is $1.50 .";
  const auto es = extract_eps(note, bundled_patterns(), "n1");
  ASSERT_EQ(es.size(), 1u);
  EXPECT_EQ(es[0].record_id, "n1");
  EXPECT_EQ(note.substr(es[0].time_span.begin, es[0].time_span.size()), "2017");
  EXPECT_EQ(note.substr(es[0].value_span.begin, es[0].value_span.size()), "$1.50");
  EXPECT_GT(es[0].pattern_id, 0u);
}

TEST(ExtractProperty, DeterministicAndWithinSentence) {
  Rng rng(6);
  const std::vector<std::string> pool = {"We", "raise", "our", "FY", "17", "'18", "'19", "EPS",
                                         "estimate", "estimates", "to", "$3.23", "$1.10", "of", "and",
                                         "set", "'s", "at", "by", "from", "2016", ".", ","};
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    const auto n = rng.below(30);
    for (std::uint64_t i = 0; i < n; ++i) text += pool[rng.below(pool.size())] + " ";
    const auto a = extract_eps(text, bundled_patterns());
    const auto b = extract_eps(text, bundled_patterns());
    ASSERT_EQ(pairs_of(a), pairs_of(b));
    for (const auto& e : a) {
      const std::string inner = text.substr(e.span.begin, e.span.size());
      ASSERT_EQ(inner.find(" . "), std::string::npos) << text;
      ASSERT_GE(e.time_span.begin, e.span.begin);
      ASSERT_LE(e.time_span.end, e.span.end);
      ASSERT_GE(e.value_span.begin, e.span.begin);
      ASSERT_LE(e.value_span.end, e.span.end);
      ASSERT_TRUE(std::isfinite(e.value));
      ASSERT_FALSE(e.time_label.empty());
    }
  }
}

TEST(Patterns, ParseErrorsCarryLine) {
  try {
    PatternSet::parse("<TIME> EPS of <MONEY>\n<TIME> EPS <BOGUS> <MONEY>\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(PatternSet::parse("<TIME> EPS of <MONEY> => (TIME2,MONEY1)\n"), Error);
  EXPECT_THROW(PatternSet::parse("<TIME> EPS of <MONEY> => garbage\n"), Error);
  EXPECT_THROW(PatternSet::parse("EPS of <MONEY>\n"), Error);
  EXPECT_THROW(PatternSet::parse("<TIME> <TIME> EPS of <MONEY>\n"), Error);
  EXPECT_EQ(PatternSet::parse("# comment only\n\n").patterns().size(), 0u);
}

TEST(Patterns, ExplicitEmission) {
  const auto ps = PatternSet::parse("<TIME> and <TIME> EPS of <MONEY> => (TIME2,MONEY1)\n");
  const auto es = extract_eps("'17 and '18 EPS of $2.00", ps);
  EXPECT_EQ(pairs_of(es), (Pairs{{"'18", 2.0}}));
}

TEST(Patterns, BundledSetParses) {
  EXPECT_GE(bundled_patterns().patterns().size(), 10u);
}

EpsEstimate est(std::string label, double v, std::size_t begin) {
  EpsEstimate e;
  e.time_label = std::move(label);
  e.value = v;
  e.span = {begin, begin + 1};
  return e;
}

TEST(Earliest, Examples) {
  const std::vector<EpsEstimate> two = {est("'19", 2.0, 0), est("'18", 1.0, 10)};
  EXPECT_EQ(earliest_forecast(two).estimate->time_label, "'18");
  const std::vector<EpsEstimate> one = {est("FY 17", 1.0, 0)};
  EXPECT_EQ(earliest_forecast(one).estimate->time_label, "FY 17");
  const std::vector<EpsEstimate> out = {est("2012", 1.0, 0), est("'20", 1.0, 5)};
  EXPECT_FALSE(earliest_forecast(out).estimate.has_value());
  const std::vector<EpsEstimate> bad = {est("12-month", 1.0, 0), est("2016", 3.0, 4), est("FY16", 4.0, 2)};
  const auto r = earliest_forecast(bad);
  EXPECT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(r.estimate->value, 4.0);  // tie on 2016 broken by earlier span
}

TEST(Labels, Canonical) {
  EXPECT_EQ(canonical_time_label("'16"), "2016");
  EXPECT_EQ(canonical_time_label("FY 17"), "2017");
  EXPECT_EQ(canonical_time_label("FY2017"), "2017");
  EXPECT_EQ(canonical_time_label("full-year 2016"), "2016");
  EXPECT_EQ(canonical_time_label("4Q17"), "Q4 2017");
  EXPECT_EQ(canonical_time_label("Q1 2017"), "Q1 2017");
  EXPECT_EQ(canonical_time_label("12-month"), "12-month");
  EXPECT_FALSE(label_year("Q1").has_value());
}

TEST(Evaluate, Ratios) {
  std::vector<GoldEps> gold;
  std::vector<EpsEstimate> pred;
  for (int i = 0; i < 5; ++i) {
    gold.push_back({"r" + std::to_string(i), "'16", 1.0 + i});
    auto e = est("FY 16", 1.0 + i, 0);
    e.record_id = "r" + std::to_string(i);
    pred.push_back(e);
  }
  auto s = evaluate_extraction(pred, gold);
  EXPECT_DOUBLE_EQ(*s.precision, 1.0);
  EXPECT_DOUBLE_EQ(s.recall, 1.0);

  pred.pop_back();
  pred.push_back(est("FY 16", 99.0, 0));
  pred.back().record_id = "r4";
  for (int i = 5; i < 8; ++i) gold.push_back({"r" + std::to_string(i), "'16", 0.5});
  s = evaluate_extraction(pred, gold);
  EXPECT_DOUBLE_EQ(*s.precision, 0.8);
  EXPECT_DOUBLE_EQ(s.recall, 0.5);

  s = evaluate_extraction({}, gold);
  EXPECT_FALSE(s.precision.has_value());
  EXPECT_DOUBLE_EQ(s.recall, 0.0);
  EXPECT_THROW(evaluate_extraction(pred, {}), Error);
}

TEST(Gold, Parse) {
  std::istringstream in("# header\nr1\t'16\t$2.01\nr2\tFY 17\t3.23\n");
  const auto g = parse_gold(in);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_DOUBLE_EQ(g[0].value, 2.01);
  EXPECT_EQ(g[1].time_label, "FY 17");
  std::istringstream bad("r1\t'16\n");
  EXPECT_THROW(parse_gold(bad), Error);
}

}  // namespace
}  // namespace fskill
