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

// EPS forecast extraction: mask money and time expressions, then match
// token patterns over the masked stream.
//
// Pattern file: one pattern per line, '#' starts a comment. Tokens are
// literals (case-insensitive; "a|b" lists alternatives) or the slots <TIME>,
// <MONEY>, <BY-MASK> and <FROM-MASK>. The skip slots match "by" / "from"
// followed by 1 to 6 tokens. An optional emission rule follows "=>":
//
//   <TIME> and <TIME> EPS estimates <BY-MASK> to <MONEY> and <MONEY> => (TIME1,MONEY1)(TIME2,MONEY2)
//
// Without a rule the i-th TIME pairs with the i-th MONEY.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fskill/error.hpp"
#include "fskill/textproc.hpp"

namespace fskill {

// ---------------------------------------------------------------------------
// Tokens and masking
// ---------------------------------------------------------------------------

struct EpsToken {
  std::string surface;  // exactly as written
  std::string norm;     // lowercase; -LRB-/-RRB- become ( and ), curly quotes straightened
  CharRange range;
};

namespace detail {

inline std::string eps_norm(std::string_view surface) {
  if (surface == "-LRB-") return "(";
  if (surface == "-RRB-") return ")";
  std::string s(surface);
  for (std::string_view curly : {"\xE2\x80\x98", "\xE2\x80\x99"}) {
    for (auto pos = s.find(curly); pos != std::string::npos; pos = s.find(curly, pos + 1))
      s.replace(pos, curly.size(), "'");
  }
  return to_lower(s);
}

inline bool is_trailing_punct(char c) {
  return c == ',' || c == '.' || c == ';' || c == ':' || c == '!' || c == '?' || c == ')' ||
         c == '"' || c == ']';
}

inline bool is_leading_punct(char c) { return c == '(' || c == '"' || c == '['; }

}  // namespace detail

// Splits on whitespace, then peels brackets, quotes and trailing punctuation
// off each chunk and separates a final "'s".
inline std::vector<EpsToken> eps_tokenize(std::string_view text) {
  std::vector<EpsToken> out;
  auto emit = [&](std::size_t b, std::size_t e) {
    if (b < e) out.push_back({std::string(text.substr(b, e - b)), detail::eps_norm(text.substr(b, e - b)), {b, e}});
  };
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_ascii_space(text[i])) ++i;
    std::size_t b = i;
    while (i < text.size() && !is_ascii_space(text[i])) ++i;
    std::size_t e = i;
    if (b == e) break;
    const std::string_view chunk = text.substr(b, e - b);
    if (chunk == "-LRB-" || chunk == "-RRB-") {
      emit(b, e);
      continue;
    }
    while (b < e && detail::is_leading_punct(text[b])) {
      emit(b, b + 1);
      ++b;
    }
    std::vector<std::pair<std::size_t, std::size_t>> tail;
    while (e > b && detail::is_trailing_punct(text[e - 1])) {
      tail.emplace_back(e - 1, e);
      --e;
    }
    std::optional<std::pair<std::size_t, std::size_t>> clitic;
    const std::string_view core = text.substr(b, e - b);
    if (core.size() > 2 && (core.ends_with("'s") || core.ends_with("'S"))) {
      clitic = std::pair{e - 2, e};
      e -= 2;
    } else if (core.size() > 4 && core.ends_with("\xE2\x80\x99s")) {
      clitic = std::pair{e - 4, e};
      e -= 4;
    }
    emit(b, e);
    if (clitic) emit(clitic->first, clitic->second);
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) emit(it->first, it->second);
  }
  return out;
}

enum class EntityKind { kTime, kMoney };

struct MaskSpan {
  EntityKind kind = EntityKind::kTime;
  std::size_t first_token = 0;  // [first_token, last_token)
  std::size_t last_token = 0;
  CharRange range;
  std::string surface;  // original text of the span, internal whitespace kept
  std::optional<double> value;  // money only
};

struct MaskedSentence {
  std::string original;
  std::vector<EpsToken> tokens;
  // One element per unmasked token or mask: "<TIME>", "<MONEY>" or the token's
  // normalized form.
  std::vector<std::string> masked;
  std::vector<CharRange> element_range;
  std::vector<std::optional<std::size_t>> span_of;  // element -> span index
  std::vector<MaskSpan> spans;

  std::string masked_text() const {
    std::string out;
    std::size_t prev = 0;
    for (std::size_t k = 0; k < masked.size(); ++k) {
      out.append(original, prev, element_range[k].begin - prev);
      out += span_of[k] ? masked[k] : original.substr(element_range[k].begin, element_range[k].size());
      prev = element_range[k].end;
    }
    out.append(original, prev, std::string::npos);
    return out;
  }

  // Rebuilds the source from whitespace, token surfaces and span surfaces.
  std::string unmask() const {
    std::string out;
    std::size_t prev = 0;
    for (std::size_t k = 0; k < masked.size(); ++k) {
      out.append(original, prev, element_range[k].begin - prev);
      if (span_of[k]) {
        out += spans[*span_of[k]].surface;
      } else {
        out += original.substr(element_range[k].begin, element_range[k].size());
      }
      prev = element_range[k].end;
    }
    out.append(original, prev, std::string::npos);
    return out;
  }
};

namespace detail {

inline bool matches(const std::string& s, const std::regex& re) { return std::regex_match(s, re); }

struct Shapes {
  std::regex apos_year{R"('\d{2})"};
  std::regex year4{R"((19|20)\d{2}e?)"};
  std::regex fy_joined{R"((fy|cy)('?\d{2}|\d{4})e?)"};
  std::regex year_like{R"('?\d{2}|(19|20)\d{2})"};
  std::regex quarter{R"(q[1-4])"};
  std::regex quarter_joined{R"(q[1-4](fy|cy)?('?\d{2}|\d{4})|[1-4]q(fy|cy)?('?\d{2}|\d{4}))"};
  std::regex quarter_prefix{R"([1-4]q)"};
  std::regex relative{R"(\d+-(month|year|quarter|week|day)s?)"};
  std::regex money{R"(-?\$-?(\d{1,3}(,\d{3})+|\d+)(\.\d+)?)"};
};

inline const Shapes& shapes() {
  static const Shapes s;
  return s;
}

// Length in tokens of the time expression starting at i (0 if none).
inline std::size_t time_length(const std::vector<EpsToken>& t, std::size_t i) {
  const auto& sh = shapes();
  const auto& a = t[i].norm;
  auto next_is = [&](std::size_t k, const std::regex& re) { return i + k < t.size() && matches(t[i + k].norm, re); };
  auto year_after = [&](std::size_t k) -> std::size_t {
    if (next_is(k, sh.year_like)) return 1;
    if (next_is(k, sh.fy_joined)) return 1;
    if (i + k < t.size() && (t[i + k].norm == "fy" || t[i + k].norm == "cy") && next_is(k + 1, sh.year_like)) return 2;
    return 0;
  };
  if (a == "fy" || a == "cy") return next_is(1, sh.year_like) ? 2 : 0;
  if (a == "full-year" || a == "fiscal" || a == "fiscal-year") {
    if (next_is(1, sh.year_like)) return 2;
    if (a != "fiscal-year" && i + 1 < t.size() && t[i + 1].norm == "year" && next_is(2, sh.year_like)) return 3;
    return 0;
  }
  if (a == "full" && i + 1 < t.size() && t[i + 1].norm == "year" && next_is(2, sh.year_like)) return 3;
  if (matches(a, sh.quarter) || matches(a, sh.quarter_prefix)) return 1 + year_after(1);
  if (matches(a, sh.apos_year) || matches(a, sh.year4) || matches(a, sh.fy_joined) ||
      matches(a, sh.quarter_joined) || matches(a, sh.relative))
    return 1;
  return 0;
}

inline std::size_t money_length(const std::vector<EpsToken>& t, std::size_t i) {
  const auto& sh = shapes();
  if (matches(t[i].norm, sh.money)) return 1;
  if (t[i].norm == "(" && i + 2 < t.size() && matches(t[i + 1].norm, sh.money) && t[i + 2].norm == ")")
    return 3;
  return 0;
}

}  // namespace detail

// "$1,234.50" -> 1234.5; parentheses or a minus sign make it negative.
inline std::optional<double> parse_money(std::string_view surface) {
  bool negative = false;
  std::string digits;
  for (std::size_t i = 0; i < surface.size(); ++i) {
    const char c = surface[i];
    if (surface.substr(i).starts_with("-LRB-")) {
      negative = true;
      i += 4;
    } else if (surface.substr(i).starts_with("-RRB-")) {
      i += 4;
    } else if (c == '(' || c == '-') {
      negative = true;
    } else if (is_ascii_digit(c) || c == '.') {
      digits += c;
    }
  }
  if (digits.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(digits.c_str(), &end);
  if (end != digits.c_str() + digits.size() || !std::isfinite(v)) return std::nullopt;
  return negative ? -v : v;
}

// Longest match left to right; money wins a tie with time.
inline MaskedSentence mask_entities(std::string_view text) {
  MaskedSentence ms;
  ms.original = std::string(text);
  ms.tokens = eps_tokenize(text);
  const auto& t = ms.tokens;
  std::size_t i = 0;
  while (i < t.size()) {
    const std::size_t m = detail::money_length(t, i);
    const std::size_t tl = detail::time_length(t, i);
    if (m == 0 && tl == 0) {
      ms.masked.push_back(t[i].norm);
      ms.element_range.push_back(t[i].range);
      ms.span_of.emplace_back();
      ++i;
      continue;
    }
    MaskSpan sp;
    sp.kind = m >= tl ? EntityKind::kMoney : EntityKind::kTime;
    const std::size_t len = std::max(m, tl);
    sp.first_token = i;
    sp.last_token = i + len;
    sp.range = {t[i].range.begin, t[i + len - 1].range.end};
    sp.surface = ms.original.substr(sp.range.begin, sp.range.size());
    if (sp.kind == EntityKind::kMoney) sp.value = parse_money(sp.surface);
    ms.masked.push_back(sp.kind == EntityKind::kMoney ? "<MONEY>" : "<TIME>");
    ms.element_range.push_back(sp.range);
    ms.span_of.push_back(ms.spans.size());
    ms.spans.push_back(std::move(sp));
    i += len;
  }
  return ms;
}

// ---------------------------------------------------------------------------
// Patterns
// ---------------------------------------------------------------------------

enum class SlotKind { kLiteral, kTime, kMoney, kByMask, kFromMask };

struct PatternElement {
  SlotKind kind = SlotKind::kLiteral;
  std::vector<std::string> alternatives;  // literal only, lowercase
};

struct ExtractionPattern {
  std::size_t id = 0;  // 1-based position in the file
  std::size_t line = 0;
  std::string source;
  std::vector<PatternElement> elements;
  std::vector<std::pair<std::size_t, std::size_t>> emit;  // (time slot, money slot), 0-based
};

inline constexpr std::size_t kSkipMaxTokens = 6;

class PatternSet {
 public:
  static PatternSet parse(std::string_view content) {
    PatternSet ps;
    std::istringstream in{std::string(content)};
    std::string line;
    std::size_t lineno = 0;
    static const std::regex rule_re(R"(\(TIME(\d+),MONEY(\d+)\))");
    while (std::getline(in, line)) {
      ++lineno;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::string lhs = line, rhs;
      bool has_rule = false;
      if (const auto arrow = line.find("=>"); arrow != std::string::npos) {
        lhs = line.substr(0, arrow);
        rhs = line.substr(arrow + 2);
        has_rule = true;
      }
      std::istringstream toks(lhs);
      ExtractionPattern p;
      p.line = lineno;
      std::size_t n_time = 0, n_money = 0;
      for (std::string tok; toks >> tok;) {
        PatternElement e;
        if (tok == "<TIME>") {
          e.kind = SlotKind::kTime;
          ++n_time;
        } else if (tok == "<MONEY>") {
          e.kind = SlotKind::kMoney;
          ++n_money;
        } else if (tok == "<BY-MASK>") {
          e.kind = SlotKind::kByMask;
        } else if (tok == "<FROM-MASK>") {
          e.kind = SlotKind::kFromMask;
        } else if (tok.starts_with("<") && tok.ends_with(">") && tok.size() > 2) {
          fail(ErrorKind::kParse, "patterns line " + std::to_string(lineno) + ": unknown slot " + tok);
        } else {
          std::size_t start = 0;
          for (;;) {
            const auto bar = tok.find('|', start);
            std::string alt = detail::eps_norm(tok.substr(start, bar - start));
            if (alt.empty())
              fail(ErrorKind::kParse, "patterns line " + std::to_string(lineno) + ": empty alternative in " + tok);
            e.alternatives.push_back(std::move(alt));
            if (bar == std::string::npos) break;
            start = bar + 1;
          }
        }
        p.elements.push_back(std::move(e));
      }
      if (p.elements.empty()) {
        if (has_rule) fail(ErrorKind::kParse, "patterns line " + std::to_string(lineno) + ": rule without pattern");
        continue;
      }
      if (n_time == 0 || n_money == 0)
        fail(ErrorKind::kParse, "patterns line " + std::to_string(lineno) + ": needs at least one <TIME> and one <MONEY>");
      if (has_rule) {
        std::string compact;
        for (char c : rhs)
          if (!is_ascii_space(c)) compact += c;
        if (compact.empty() || !std::regex_match(compact, std::regex(R"((\(TIME\d+,MONEY\d+\))+)")))
          fail(ErrorKind::kParse, "patterns line " + std::to_string(lineno) + ": bad emission rule '" + rhs + "'");
        for (std::sregex_iterator it(compact.begin(), compact.end(), rule_re), end; it != end; ++it) {
          const auto ti = std::stoul((*it)[1]);
          const auto mi = std::stoul((*it)[2]);
          if (ti == 0 || ti > n_time || mi == 0 || mi > n_money)
            fail(ErrorKind::kParse, "patterns line " + std::to_string(lineno) + ": emission references a missing slot");
          p.emit.emplace_back(ti - 1, mi - 1);
        }
      } else {
        if (n_time != n_money)
          fail(ErrorKind::kParse, "patterns line " + std::to_string(lineno) +
                                      ": unequal TIME/MONEY counts need an explicit emission rule");
        for (std::size_t k = 0; k < n_time; ++k) p.emit.emplace_back(k, k);
      }
      p.source = lhs;
      while (!p.source.empty() && is_ascii_space(p.source.back())) p.source.pop_back();
      p.id = ps.patterns_.size() + 1;
      ps.patterns_.push_back(std::move(p));
    }
    return ps;
  }

  static PatternSet load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::kIo, "cannot read pattern file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  const std::vector<ExtractionPattern>& patterns() const { return patterns_; }

 private:
  std::vector<ExtractionPattern> patterns_;
};

// Bundled patterns. Longer patterns come first so they win at a position.
inline constexpr std::string_view kBundledEpsPatterns = R"(# two periods, two values
<TIME> and <TIME> EPS estimates <BY-MASK> to <MONEY> and <MONEY> => (TIME1,MONEY1)(TIME2,MONEY2)
<TIME> and <TIME> EPS estimates <FROM-MASK> to <MONEY> and <MONEY> => (TIME1,MONEY1)(TIME2,MONEY2)
<TIME> and <TIME> EPS estimates to|at|of|are <MONEY> and <MONEY> => (TIME1,MONEY1)(TIME2,MONEY2)
<TIME> and <TIME> EPS estimates to|at|of|are <MONEY> <FROM-MASK> and <MONEY> => (TIME1,MONEY1)(TIME2,MONEY2)
# raise one period, set the next
<TIME> EPS estimate|estimates to <MONEY> <FROM-MASK> and set|introduce|initiate <TIME> 's at|of <MONEY>
<TIME> EPS estimate|estimates to <MONEY> <FROM-MASK> and set|introduce|initiate <TIME> at|of <MONEY>
<TIME> EPS estimate|estimates to <MONEY> and set|introduce|initiate <TIME> 's at|of <MONEY>
<TIME> EPS estimate|estimates to <MONEY> and set|introduce|initiate <TIME> at|of <MONEY>
# single period
<TIME> EPS estimate|estimates <BY-MASK> to <MONEY>
<TIME> EPS estimate|estimates <FROM-MASK> to <MONEY>
<TIME> EPS estimate|estimates to|at|of|is <MONEY>
<TIME> EPS estimate|estimates remains|stays at <MONEY>
<TIME> EPS estimate|estimates remains|stays <MONEY>
)";

inline const PatternSet& bundled_patterns() {
  static const PatternSet ps = PatternSet::parse(kBundledEpsPatterns);
  return ps;
}

// ---------------------------------------------------------------------------
// Extraction
// ---------------------------------------------------------------------------

struct EpsEstimate {
  std::string time_label;  // surface of the time span, whitespace collapsed
  double value = 0.0;
  std::string record_id;
  std::size_t pattern_id = 0;
  CharRange span;        // whole match
  CharRange time_span;
  CharRange value_span;
};

namespace detail {

inline bool is_terminator(const std::string& norm) { return norm == "." || norm == "!" || norm == "?"; }

inline std::string collapse_ws(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (is_ascii_space(c)) {
      space = !out.empty();
    } else {
      if (space) out += ' ';
      out += c;
      space = false;
    }
  }
  return out;
}

struct MatchState {
  std::vector<std::size_t> times, moneys;  // element indices
};

inline bool match_from(const MaskedSentence& ms, const ExtractionPattern& p, std::size_t pi,
                       std::size_t ei, std::size_t limit, MatchState& st, std::size_t& end_out) {
  if (pi == p.elements.size()) {
    end_out = ei;
    return true;
  }
  if (ei >= limit) return false;
  const auto& pe = p.elements[pi];
  const auto& el = ms.masked[ei];
  switch (pe.kind) {
    case SlotKind::kLiteral:
      if (ms.span_of[ei]) return false;
      if (std::find(pe.alternatives.begin(), pe.alternatives.end(), el) == pe.alternatives.end()) return false;
      return match_from(ms, p, pi + 1, ei + 1, limit, st, end_out);
    case SlotKind::kTime:
    case SlotKind::kMoney: {
      if (!ms.span_of[ei]) return false;
      const auto kind = ms.spans[*ms.span_of[ei]].kind;
      const bool want_time = pe.kind == SlotKind::kTime;
      if ((kind == EntityKind::kTime) != want_time) return false;
      auto& vec = want_time ? st.times : st.moneys;
      vec.push_back(ei);
      if (match_from(ms, p, pi + 1, ei + 1, limit, st, end_out)) return true;
      vec.pop_back();
      return false;
    }
    case SlotKind::kByMask:
    case SlotKind::kFromMask: {
      const char* head = pe.kind == SlotKind::kByMask ? "by" : "from";
      if (ms.span_of[ei] || el != head) return false;
      for (std::size_t len = 1; len <= kSkipMaxTokens && ei + 1 + len <= limit; ++len) {
        if (!ms.span_of[ei + len] && is_terminator(ms.masked[ei + len])) break;
        if (match_from(ms, p, pi + 1, ei + 1 + len, limit, st, end_out)) return true;
      }
      return false;
    }
  }
  return false;
}

}  // namespace detail

// Masks the note, then scans each sentence left to right; at each position
// the first pattern (file order) that matches and contains an "EPS" token
// wins, and scanning resumes after it.
inline std::vector<EpsEstimate> extract_eps(std::string_view note, const PatternSet& patterns,
                                            std::string_view record_id = {}) {
  const auto ms = mask_entities(note);
  std::vector<EpsEstimate> out;
  const std::size_t n = ms.masked.size();
  std::size_t sent_begin = 0;
  while (sent_begin < n) {
    std::size_t sent_end = sent_begin;
    while (sent_end < n && (ms.span_of[sent_end] || !detail::is_terminator(ms.masked[sent_end]))) ++sent_end;
    std::size_t i = sent_begin;
    while (i < sent_end) {
      bool matched = false;
      for (const auto& p : patterns.patterns()) {
        detail::MatchState st;
        std::size_t end = 0;
        if (!detail::match_from(ms, p, 0, i, sent_end, st, end)) continue;
        bool anchored = false;
        for (std::size_t k = i; k < end && !anchored; ++k) anchored = !ms.span_of[k] && ms.masked[k] == "eps";
        if (!anchored) continue;
        for (const auto& [ti, mi] : p.emit) {
          const auto& tspan = ms.spans[*ms.span_of[st.times[ti]]];
          const auto& mspan = ms.spans[*ms.span_of[st.moneys[mi]]];
          if (!mspan.value) continue;
          EpsEstimate e;
          e.time_label = detail::collapse_ws(tspan.surface);
          e.value = *mspan.value;
          e.record_id = std::string(record_id);
          e.pattern_id = p.id;
          e.span = {ms.element_range[i].begin, ms.element_range[end - 1].end};
          e.time_span = tspan.range;
          e.value_span = mspan.range;
          out.push_back(std::move(e));
        }
        i = end;
        matched = true;
        break;
      }
      if (!matched) ++i;
    }
    sent_begin = sent_end + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Time labels
// ---------------------------------------------------------------------------

// Fiscal year of a time label: "'16" -> 2016, "FY 17" -> 2017, "4Q17" ->
// 2017, "full-year 2016" -> 2016. Relative forms and bare quarters have no
// year.
inline std::optional<int> label_year(std::string_view label) {
  const std::string lower = detail::eps_norm(label);
  static const std::regex relative(R"(.*\d+-(month|year|quarter|week|day)s?.*)");
  if (std::regex_match(lower, relative)) return std::nullopt;
  std::size_t end = lower.size();
  while (end > 0 && !is_ascii_digit(lower[end - 1])) --end;
  std::size_t begin = end;
  while (begin > 0 && is_ascii_digit(lower[begin - 1])) --begin;
  const std::size_t len = end - begin;
  if (len == 4) return std::stoi(lower.substr(begin, 4));
  if (len == 2) return 2000 + std::stoi(lower.substr(begin, 2));
  return std::nullopt;
}

inline std::optional<int> label_quarter(std::string_view label) {
  const std::string lower = detail::eps_norm(label);
  static const std::regex q1(R"((^|[^a-z0-9])q([1-4]).*)"), q2(R"((^|[^0-9])([1-4])q.*)");
  std::smatch m;
  if (std::regex_match(lower, m, q1)) return m[2].str()[0] - '0';
  if (std::regex_match(lower, m, q2)) return m[2].str()[0] - '0';
  return std::nullopt;
}

// "2016", "Q1 2017", or the collapsed lowercase label when no year is found.
inline std::string canonical_time_label(std::string_view label) {
  const auto year = label_year(label);
  if (!year) return detail::collapse_ws(detail::eps_norm(label));
  if (const auto q = label_quarter(label)) return "Q" + std::to_string(*q) + " " + std::to_string(*year);
  return std::to_string(*year);
}

struct EarliestResult {
  std::optional<EpsEstimate> estimate;
  std::vector<std::string> warnings;
};

// Smallest in-range year wins; ties go to the earliest span.
inline EarliestResult earliest_forecast(std::span<const EpsEstimate> estimates, int first_year = 2014,
                                        int last_year = 2018) {
  EarliestResult r;
  std::optional<std::pair<int, std::size_t>> best_key;
  for (const auto& e : estimates) {
    const auto y = label_year(e.time_label);
    if (!y) {
      r.warnings.push_back("cannot normalize time label '" + e.time_label + "', skipped");
      continue;
    }
    if (*y < first_year || *y > last_year) continue;
    const std::pair<int, std::size_t> key{*y, e.span.begin};
    if (!best_key || key < *best_key) {
      best_key = key;
      r.estimate = e;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

struct GoldEps {
  std::string record_id;
  std::string time_label;
  double value = 0.0;
};

struct ExtractionScore {
  std::optional<double> precision;  // none when nothing was predicted
  double recall = 0.0;
  std::size_t correct = 0;
  std::size_t predicted = 0;
  std::size_t gold = 0;
};

inline constexpr double kEpsValueTolerance = 1e-9;

// A prediction is correct when record_id, canonical time label and value
// match an unused gold tuple.
inline ExtractionScore evaluate_extraction(std::span<const EpsEstimate> predicted,
                                           std::span<const GoldEps> gold) {
  if (gold.empty()) fail(ErrorKind::kUndefinedMetric, "evaluate_extraction: empty gold set, recall undefined");
  std::vector<bool> used(gold.size(), false);
  ExtractionScore s;
  s.predicted = predicted.size();
  s.gold = gold.size();
  for (const auto& p : predicted) {
    const auto label = canonical_time_label(p.time_label);
    for (std::size_t g = 0; g < gold.size(); ++g) {
      if (used[g] || gold[g].record_id != p.record_id) continue;
      if (canonical_time_label(gold[g].time_label) != label) continue;
      if (std::abs(gold[g].value - p.value) > kEpsValueTolerance) continue;
      used[g] = true;
      ++s.correct;
      break;
    }
  }
  if (s.predicted > 0) s.precision = static_cast<double>(s.correct) / static_cast<double>(s.predicted);
  s.recall = static_cast<double>(s.correct) / static_cast<double>(s.gold);
  return s;
}

// Tab-separated record_id, time_label, value ("$2.01" or "2.01").
inline std::vector<GoldEps> parse_gold(std::istream& in) {
  std::vector<GoldEps> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (;;) {
      const auto tab = line.find('\t', start);
      f.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (f.size() != 3) fail(ErrorKind::kParse, "gold line " + std::to_string(lineno) + ": expected 3 tab-separated fields");
    const auto v = parse_money(f[2]);
    if (!v || f[0].empty() || f[1].empty())
      fail(ErrorKind::kParse, "gold line " + std::to_string(lineno) + ": bad record");
    out.push_back({f[0], f[1], *v});
  }
  return out;
}

inline std::vector<GoldEps> load_gold(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kIo, "cannot read gold file: " + path);
  return parse_gold(in);
}

}  // namespace fskill
