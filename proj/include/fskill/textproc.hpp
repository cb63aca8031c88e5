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

// Deterministic text primitives: tokenization with sentence splitting,
// quote-span detection, syllable counting and a closed-class/suffix
// part-of-speech categorizer.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fskill/error.hpp"
#include "fskill/resources.hpp"

namespace fskill {

// Half-open byte range [begin, end) into the source text.
struct CharRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool operator==(const CharRange&) const = default;
};

struct TokenizedText {
  std::vector<std::string> tokens;
  // Byte range of each token in the source text.
  std::vector<CharRange> offsets;
  // Exclusive end index of each sentence; strictly increasing, last element
  // equals tokens.size(). Empty iff there are no tokens.
  std::vector<std::size_t> sentence_boundaries;
  std::vector<CharRange> quote_spans;

  std::size_t token_count() const { return tokens.size(); }
  std::size_t sentence_count() const { return sentence_boundaries.size(); }

  // Token index range [first, last) of sentence s.
  std::pair<std::size_t, std::size_t> sentence(std::size_t s) const {
    return {s == 0 ? 0 : sentence_boundaries[s - 1], sentence_boundaries[s]};
  }
};

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline bool is_ascii_alpha(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}
inline bool is_ascii_digit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}
inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline bool has_letter(std::string_view token) {
  return std::any_of(token.begin(), token.end(), is_ascii_alpha);
}

namespace detail {

// Multi-byte punctuation that always forms its own token.
inline constexpr std::array<std::string_view, 8> kUnicodePunct = {
    "“", "”", "‘", "’", "–", "—", "…", "«"};

inline std::size_t unicode_punct_at(std::string_view s, std::size_t i) {
  for (auto p : kUnicodePunct)
    if (s.substr(i, p.size()) == p) return p.size();
  return 0;
}

inline bool is_word_byte(std::string_view s, std::size_t i) {
  const auto c = static_cast<unsigned char>(s[i]);
  if (c >= 0x80) return unicode_punct_at(s, i) == 0;
  return std::isalnum(c) != 0;
}

inline bool is_clitic(std::string_view lower) {
  return lower == "'s" || lower == "'re" || lower == "'ve" || lower == "'ll" ||
         lower == "'d" || lower == "'m";
}

inline bool is_abbreviation(std::string_view chunk) {
  const std::string lower = to_lower(chunk);
  for (auto a : resources::kAbbreviations)
    if (a == lower) return true;
  // Initialisms such as "U.S." or "N.A.T.O.".
  if (chunk.size() >= 4 && chunk.size() % 2 == 0) {
    for (std::size_t i = 0; i < chunk.size(); i += 2)
      if (!is_ascii_alpha(chunk[i]) || chunk[i + 1] != '.') return false;
    return true;
  }
  return false;
}

// Length of the word starting at i (i is a word byte, or '$' before a digit).
inline std::size_t scan_word(std::string_view s, std::size_t i) {
  std::size_t j = i;
  if (s[j] == '$') ++j;
  while (j < s.size()) {
    if (is_word_byte(s, j)) {
      ++j;
      continue;
    }
    const char c = s[j];
    const bool prev_digit = j > i && is_ascii_digit(s[j - 1]);
    const bool next_digit = j + 1 < s.size() && is_ascii_digit(s[j + 1]);
    const bool prev_word = j > i && is_word_byte(s, j - 1);
    const bool next_word = j + 1 < s.size() && is_word_byte(s, j + 1);
    if ((c == '.' || c == ',') && prev_digit && next_digit) {
      ++j;
    } else if (c == '-' && prev_word && next_word) {
      ++j;
    } else if (c == '\'' && prev_word && j + 1 < s.size() && is_ascii_alpha(s[j + 1])) {
      ++j;
    } else if (c == '%' && prev_digit) {
      ++j;
      break;
    } else {
      break;
    }
  }
  return j - i;
}

inline void emit_word(std::string_view word, std::size_t base,
                      TokenizedText& out) {
  const std::string lower = to_lower(word);
  auto push = [&](std::size_t from, std::size_t len) {
    out.tokens.emplace_back(word.substr(from, len));
    out.offsets.push_back({base + from, base + from + len});
  };
  if (lower.size() > 3 && lower.ends_with("n't")) {
    push(0, word.size() - 3);
    push(word.size() - 3, 3);
    return;
  }
  const auto apos = lower.rfind('\'');
  if (apos != std::string::npos && apos > 0 &&
      is_clitic(std::string_view(lower).substr(apos))) {
    push(0, apos);
    push(apos, word.size() - apos);
    return;
  }
  push(0, word.size());
}

inline void tokenize_chunk(std::string_view text, std::size_t begin,
                           std::size_t end, TokenizedText& out) {
  const std::string_view chunk = text.substr(begin, end - begin);
  if (is_abbreviation(chunk)) {
    out.tokens.emplace_back(chunk);
    out.offsets.push_back({begin, end});
    return;
  }
  std::size_t i = 0;
  while (i < chunk.size()) {
    const std::size_t at = begin + i;
    const char c = chunk[i];
    if (const auto ulen = unicode_punct_at(chunk, i); ulen > 0) {
      out.tokens.emplace_back(chunk.substr(i, ulen));
      out.offsets.push_back({at, at + ulen});
      i += ulen;
      continue;
    }
    const bool dollar_number = c == '$' && i + 1 < chunk.size() && is_ascii_digit(chunk[i + 1]);
    if (is_word_byte(chunk, i) || dollar_number) {
      const std::size_t len = scan_word(chunk, i);
      emit_word(chunk.substr(i, len), at, out);
      i += len;
      continue;
    }
    if (c == '\'') {
      // Two-digit year shorthand ('16) and detached clitics ('s, 're, ...).
      std::size_t j = i + 1;
      while (j < chunk.size() && is_ascii_alpha(chunk[j])) ++j;
      const std::string lower = to_lower(chunk.substr(i, j - i));
      const bool word_ends = j == chunk.size() || !is_word_byte(chunk, j);
      if (j > i + 1 && word_ends && is_clitic(lower)) {
        out.tokens.push_back(std::string(chunk.substr(i, j - i)));
        out.offsets.push_back({at, begin + j});
        i = j;
        continue;
      }
      if (i + 2 < chunk.size() && is_ascii_digit(chunk[i + 1]) &&
          is_ascii_digit(chunk[i + 2]) &&
          (i + 3 == chunk.size() || !is_word_byte(chunk, i + 3))) {
        out.tokens.push_back(std::string(chunk.substr(i, 3)));
        out.offsets.push_back({at, at + 3});
        i += 3;
        continue;
      }
    }
    if (c == '.') {
      std::size_t j = i;
      while (j < chunk.size() && chunk[j] == '.') ++j;
      out.tokens.push_back(std::string(chunk.substr(i, j - i)));
      out.offsets.push_back({at, begin + j});
      i = j;
      continue;
    }
    out.tokens.push_back(std::string(1, c));
    out.offsets.push_back({at, at + 1});
    ++i;
  }
}

inline bool is_terminal(std::string_view t) {
  return t == "." || t == "!" || t == "?" || t == "..." || t == "…";
}

inline bool is_closer(std::string_view t) {
  return t == "\"" || t == "'" || t == ")" || t == "]" || t == "”" ||
         t == "’";
}

inline bool is_opener(std::string_view t) {
  return t == "\"" || t == "(" || t == "[" || t == "“" || t == "‘";
}

inline bool starts_upper(std::string_view t) {
  return !t.empty() && std::isupper(static_cast<unsigned char>(t[0])) != 0;
}

inline std::vector<std::size_t> split_sentences(const TokenizedText& tt) {
  std::vector<std::size_t> bounds;
  const std::size_t n = tt.tokens.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_terminal(tt.tokens[i])) continue;
    std::size_t j = i + 1;
    while (j < n && is_terminal(tt.tokens[j])) ++j;
    while (j < n && is_closer(tt.tokens[j]) &&
           tt.offsets[j].begin == tt.offsets[j - 1].end)
      ++j;
    if (j >= n) break;
    const bool gap = tt.offsets[j].begin > tt.offsets[j - 1].end;
    const bool capital =
        starts_upper(tt.tokens[j]) ||
        (is_opener(tt.tokens[j]) && j + 1 < n && starts_upper(tt.tokens[j + 1]));
    if (gap && capital) bounds.push_back(j);
    i = j - 1;
  }
  if (n > 0) bounds.push_back(n);
  return bounds;
}

}  // namespace detail

// Character ranges enclosed by paired quotation marks, quote marks included.
// Straight quotes toggle; curly quotes open with U+201C and close with U+201D
// (a straight quote also closes a curly one). An unpaired opening mark extends
// its span to the end of the text.
inline std::vector<CharRange> find_quote_spans(std::string_view text) {
  static constexpr std::string_view kOpenCurly = "“";
  static constexpr std::string_view kCloseCurly = "”";
  std::vector<CharRange> spans;
  bool open = false;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t len = 0;
    bool straight = false, opener = false, closer = false;
    if (text[i] == '"') {
      len = 1;
      straight = true;
    } else if (text.substr(i, kOpenCurly.size()) == kOpenCurly) {
      len = kOpenCurly.size();
      opener = true;
    } else if (text.substr(i, kCloseCurly.size()) == kCloseCurly) {
      len = kCloseCurly.size();
      closer = true;
    }
    if (len == 0) {
      ++i;
      continue;
    }
    if (!open && (straight || opener)) {
      open = true;
      start = i;
    } else if (open && (straight || closer)) {
      open = false;
      spans.push_back({start, i + len});
    }
    i += len;
  }
  if (open) spans.push_back({start, text.size()});
  return spans;
}

// Whitespace-delimited chunks are split into words and standalone
// punctuation. Words keep internal apostrophes, hyphens and digit-grouping
// punctuation ("12-month", "$2.01", "1,000", "45%"); "n't" and 's-type
// clitics are split off. Abbreviations from the guard list and initialisms
// keep their periods. A sentence ends at . ! ? (plus trailing closers) when
// followed by whitespace and a capitalized token, or at end of text.
inline TokenizedText tokenize(std::string_view text) {
  TokenizedText out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_ascii_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_ascii_space(text[j])) ++j;
    if (j > i) detail::tokenize_chunk(text, i, j, out);
    i = j;
  }
  out.sentence_boundaries = detail::split_sentences(out);
  out.quote_spans = find_quote_spans(text);
  return out;
}

// Vowel-group heuristic: maximal runs of a/e/i/o/u/y, minus one for a final
// silent "e" (an "e" preceded by a consonant), never below 1.
inline int count_syllables(std::string_view word) {
  std::string letters;
  for (char c : word)
    if (is_ascii_alpha(c))
      letters.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (letters.empty())
    fail(ErrorKind::kInvalidArgument,
         "count_syllables: word has no letters: '" + std::string(word) + "'");
  auto vowel = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
  };
  int groups = 0;
  bool in_group = false;
  for (char c : letters) {
    const bool v = vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  const std::size_t n = letters.size();
  if (n >= 2 && letters[n - 1] == 'e' && !vowel(letters[n - 2]) && groups > 1)
    --groups;
  return std::max(groups, 1);
}

// ---------------------------------------------------------------------------
// Part-of-speech categories
// ---------------------------------------------------------------------------

enum class PosCategory {
  kCardinal,
  kNoun,
  kPreposition,
  kPronoun,
  kFirstPersonPronoun,
  kVerb,
  kOther,
};

inline constexpr std::array<PosCategory, 7> kAllPosCategories = {
    PosCategory::kCardinal, PosCategory::kNoun,
    PosCategory::kPreposition, PosCategory::kPronoun,
    PosCategory::kFirstPersonPronoun, PosCategory::kVerb,
    PosCategory::kOther};

inline std::string_view pos_name(PosCategory c) {
  switch (c) {
    case PosCategory::kCardinal: return "cardinal";
    case PosCategory::kNoun: return "noun";
    case PosCategory::kPreposition: return "preposition";
    case PosCategory::kPronoun: return "pronoun";
    case PosCategory::kFirstPersonPronoun: return "first_person_pronoun";
    case PosCategory::kVerb: return "verb";
    case PosCategory::kOther: return "other";
  }
  return "other";
}

struct PosContext {
  bool sentence_initial = false;
};

namespace detail {

template <std::size_t N>
std::unordered_set<std::string_view> make_set(
    const std::array<std::string_view, N>& words) {
  return {words.begin(), words.end()};
}

struct PosTables {
  std::unordered_set<std::string_view> first_person = make_set(resources::kFirstPersonPronouns);
  std::unordered_set<std::string_view> pronouns = make_set(resources::kPronouns);
  std::unordered_set<std::string_view> prepositions = make_set(resources::kPrepositions);
  std::unordered_set<std::string_view> number_words = make_set(resources::kNumberWords);
  std::unordered_set<std::string_view> verbs = make_set(resources::kCommonVerbs);
  std::unordered_set<std::string_view> nouns = make_set(resources::kCommonNouns);
};

inline const PosTables& pos_tables() {
  static const PosTables tables;
  return tables;
}

// Digits with optional leading '$', grouping commas, one decimal point and a
// trailing '%'.
inline bool is_numeric_token(std::string_view t) {
  std::size_t i = 0;
  if (i < t.size() && t[i] == '$') ++i;
  if (!t.empty() && t.back() == '%') t.remove_suffix(1);
  bool digit = false;
  bool dot = false;
  for (; i < t.size(); ++i) {
    if (is_ascii_digit(t[i])) {
      digit = true;
    } else if (t[i] == ',' && digit && i + 1 < t.size() && is_ascii_digit(t[i + 1])) {
    } else if (t[i] == '.' && !dot && i + 1 < t.size() && is_ascii_digit(t[i + 1])) {
      dot = true;
    } else {
      return false;
    }
  }
  return digit;
}

inline bool all_letters(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_ascii_alpha);
}

}  // namespace detail

// Optional externally supplied tags ("token<TAB>tag" per line). Tags may be
// category names or Penn Treebank tags (CD, NN, NNS, IN, PRP, PRP$, VB*).
class PosTagOverrides {
 public:
  static PosTagOverrides parse(std::string_view content) {
    PosTagOverrides o;
    std::istringstream in{std::string(content)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos || tab == 0)
        fail(ErrorKind::kParse, "pos tags line " + std::to_string(lineno) +
                                    ": expected token<TAB>tag");
      const auto cat = tag_to_category(line.substr(tab + 1));
      if (!cat)
        fail(ErrorKind::kParse, "pos tags line " + std::to_string(lineno) +
                                    ": unknown tag '" + line.substr(tab + 1) + "'");
      o.tags_[to_lower(line.substr(0, tab))] = *cat;
    }
    return o;
  }

  static PosTagOverrides load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::kIo, "cannot read pos tag file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  const PosCategory* find(const std::string& lower) const {
    auto it = tags_.find(lower);
    return it == tags_.end() ? nullptr : &it->second;
  }

  bool empty() const { return tags_.empty(); }

 private:
  static std::optional<PosCategory> tag_to_category(const std::string& tag) {
    for (auto c : kAllPosCategories)
      if (tag == pos_name(c)) return c;
    if (tag == "CD") return PosCategory::kCardinal;
    if (tag == "NN" || tag == "NNS") return PosCategory::kNoun;
    if (tag == "IN") return PosCategory::kPreposition;
    if (tag == "PRP" || tag == "PRP$") return PosCategory::kPronoun;
    if (tag.starts_with("VB")) return PosCategory::kVerb;
    if (!tag.empty() && std::all_of(tag.begin(), tag.end(), [](char ch) {
          return std::isupper(static_cast<unsigned char>(ch)) || ch == '$' || ch == ':' ||
                 ch == '.' || ch == ',' || ch == '-';
        }))
      return PosCategory::kOther;
    return std::nullopt;
  }

  std::unordered_map<std::string, PosCategory> tags_;
};

inline PosCategory pos_categorize(std::string_view token, PosContext ctx = {},
                                  const PosTagOverrides* overrides = nullptr) {
  const auto& t = detail::pos_tables();
  const std::string lower = to_lower(token);
  const bool first_person = t.first_person.contains(lower);
  if (overrides != nullptr) {
    if (const auto* tag = overrides->find(lower)) {
      if (*tag == PosCategory::kFirstPersonPronoun || *tag == PosCategory::kPronoun)
        return first_person ? PosCategory::kFirstPersonPronoun : PosCategory::kPronoun;
      return *tag;
    }
  }
  if (first_person) return PosCategory::kFirstPersonPronoun;
  if (t.pronouns.contains(lower)) return PosCategory::kPronoun;
  if (t.prepositions.contains(lower)) return PosCategory::kPreposition;
  if (detail::is_numeric_token(token) || t.number_words.contains(lower))
    return PosCategory::kCardinal;
  if (!has_letter(token)) return PosCategory::kOther;
  // Only common nouns are counted: a capitalized word that does not open a
  // sentence is taken to be a proper noun.
  if (!ctx.sentence_initial && detail::starts_upper(token)) return PosCategory::kOther;
  if (t.verbs.contains(lower)) return PosCategory::kVerb;
  if (t.nouns.contains(lower)) return PosCategory::kNoun;
  if (!detail::all_letters(lower)) return PosCategory::kOther;
  for (std::string_view suffix : {"tion", "ment", "ness"})
    if (lower.size() > suffix.size() + 1 && lower.ends_with(suffix)) return PosCategory::kNoun;
  if (lower.ends_with("thing")) return PosCategory::kOther;
  for (std::string_view suffix : {"ize", "ed", "ing"})
    if (lower.size() >= suffix.size() + 3 && lower.ends_with(suffix)) return PosCategory::kVerb;
  return PosCategory::kOther;
}

// Categorizes every token of a tokenized text, marking sentence starts.
inline std::vector<PosCategory> pos_tag(const TokenizedText& tt,
                                        const PosTagOverrides* overrides = nullptr) {
  std::vector<PosCategory> tags;
  tags.reserve(tt.tokens.size());
  std::size_t start = 0;
  for (std::size_t s = 0; s < tt.sentence_boundaries.size(); ++s) {
    const std::size_t end = tt.sentence_boundaries[s];
    for (std::size_t i = start; i < end; ++i) {
      const bool initial =
          i == start || (i == start + 1 && detail::is_opener(tt.tokens[start]));
      tags.push_back(pos_categorize(tt.tokens[i], PosContext{initial}, overrides));
    }
    start = end;
  }
  return tags;
}

}  // namespace fskill
