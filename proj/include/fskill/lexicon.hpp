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

// Category lexicons in a LIWC-like format:
//
//   pattern<TAB>category[<TAB>score]
//
// A trailing '*' makes the pattern a prefix wildcard. Patterns containing
// spaces match that exact sequence of tokens (no wildcards). Lines starting
// with '#' are comments. Matching is case-insensitive.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fskill/error.hpp"
#include "fskill/textproc.hpp"

namespace fskill {

class CategoryLexicon {
 public:
  struct Entry {
    std::size_t category = 0;  // index into categories()
    std::optional<double> score;
  };

  struct Match {
    const Entry* entry = nullptr;
    std::size_t length = 0;  // tokens consumed
  };

  CategoryLexicon() = default;

  static CategoryLexicon parse(std::string_view content, std::string name) {
    CategoryLexicon lex;
    lex.name_ = std::move(name);
    std::istringstream in{std::string(content)};
    std::string line;
    std::size_t lineno = 0;
    auto error = [&](const std::string& msg) {
      fail(ErrorKind::kParse, "lexicon '" + lex.name_ + "' line " +
                                  std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string> fields;
      std::size_t start = 0;
      for (;;) {
        const auto tab = line.find('\t', start);
        fields.push_back(line.substr(start, tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
      }
      if (fields.size() < 2 || fields.size() > 3) error("expected pattern<TAB>category[<TAB>score]");
      std::string pattern = to_lower(fields[0]);
      const std::string& category = fields[1];
      if (pattern.empty() || pattern == "*") error("empty pattern");
      if (category.empty()) error("empty category");
      Entry entry;
      entry.category = lex.category_index(category);
      if (fields.size() == 3) {
        double v = 0.0;
        const auto& f = fields[2];
        auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
        if (ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(v))
          error("score is not a finite number: '" + f + "'");
        entry.score = v;
        lex.has_scores_ = true;
      }
      if (!lex.patterns_.insert(pattern).second) error("duplicate pattern '" + pattern + "'");
      if (pattern.find(' ') != std::string::npos) {
        if (pattern.find('*') != std::string::npos) error("wildcards are not allowed in phrases");
        std::vector<std::string> words;
        std::istringstream ws(pattern);
        for (std::string w; ws >> w;) words.push_back(w);
        lex.phrases_[words.front()].push_back({std::move(words), entry});
      } else if (pattern.back() == '*') {
        pattern.pop_back();
        lex.prefixes_.push_back({std::move(pattern), entry});
      } else {
        lex.literals_.emplace(std::move(pattern), entry);
      }
    }
    for (auto& [first, list] : lex.phrases_)
      std::stable_sort(list.begin(), list.end(), [](const Phrase& a, const Phrase& b) {
        return a.words.size() > b.words.size();
      });
    std::stable_sort(lex.prefixes_.begin(), lex.prefixes_.end(),
                     [](const Prefix& a, const Prefix& b) {
                       return a.prefix.size() > b.prefix.size();
                     });
    return lex;
  }

  static CategoryLexicon load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::kIo, "cannot read lexicon: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
  }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& categories() const { return categories_; }
  bool has_scores() const { return has_scores_; }
  std::size_t size() const { return patterns_.size(); }

  std::optional<std::size_t> find_category(std::string_view label) const {
    for (std::size_t i = 0; i < categories_.size(); ++i)
      if (categories_[i] == label) return i;
    return std::nullopt;
  }

  // Single-token lookup: literal first, then the longest matching prefix.
  const Entry* lookup(std::string_view token) const {
    const std::string lower = to_lower(token);
    if (auto it = literals_.find(lower); it != literals_.end()) return &it->second;
    for (const auto& p : prefixes_)
      if (lower.starts_with(p.prefix)) return &p.entry;
    return nullptr;
  }

  // Longest match starting at tokens[i]; phrases take precedence over words.
  Match match_at(const std::vector<std::string>& tokens, std::size_t i) const {
    if (!phrases_.empty()) {
      const std::string first = to_lower(tokens[i]);
      if (auto it = phrases_.find(first); it != phrases_.end()) {
        for (const auto& ph : it->second) {
          if (i + ph.words.size() > tokens.size()) continue;
          bool ok = true;
          for (std::size_t k = 1; k < ph.words.size() && ok; ++k)
            ok = to_lower(tokens[i + k]) == ph.words[k];
          if (ok) return {&ph.entry, ph.words.size()};
        }
      }
    }
    if (const Entry* e = lookup(tokens[i])) return {e, 1};
    return {};
  }

 private:
  struct Phrase {
    std::vector<std::string> words;
    Entry entry;
  };
  struct Prefix {
    std::string prefix;
    Entry entry;
  };

  std::size_t category_index(const std::string& label) {
    if (auto idx = find_category(label)) return *idx;
    categories_.push_back(label);
    return categories_.size() - 1;
  }

  std::string name_;
  std::vector<std::string> categories_;
  std::unordered_map<std::string, Entry> literals_;
  std::unordered_map<std::string, std::vector<Phrase>> phrases_;
  std::vector<Prefix> prefixes_;
  std::unordered_set<std::string> patterns_;
  bool has_scores_ = false;
};

struct LexiconCounts {
  std::map<std::string, std::size_t> counts;
  std::map<std::string, double> score_sums;  // only populated for scored lexicons

  std::size_t count(const std::string& category) const {
    auto it = counts.find(category);
    return it == counts.end() ? 0 : it->second;
  }
};

// Left-to-right longest match; every token contributes to at most one entry.
inline LexiconCounts match_lexicon(const std::vector<std::string>& tokens,
                                   const CategoryLexicon& lexicon) {
  LexiconCounts out;
  for (const auto& c : lexicon.categories()) {
    out.counts[c] = 0;
    if (lexicon.has_scores()) out.score_sums[c] = 0.0;
  }
  std::size_t i = 0;
  while (i < tokens.size()) {
    const auto m = lexicon.match_at(tokens, i);
    if (m.entry == nullptr) {
      ++i;
      continue;
    }
    const auto& label = lexicon.categories()[m.entry->category];
    ++out.counts[label];
    if (m.entry->score) out.score_sums[label] += *m.entry->score;
    i += m.length;
  }
  return out;
}

}  // namespace fskill
