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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "fskill/error.hpp"
#include "fskill/resources.hpp"
#include "fskill/textproc.hpp"

namespace fskill {

// ---------------------------------------------------------------------------
// Time
// ---------------------------------------------------------------------------

// Seconds since 1970-01-01T00:00:00Z.
struct UtcTime {
  std::int64_t seconds = 0;
  auto operator<=>(const UtcTime&) const = default;
};

namespace detail {

// Howard Hinnant's days_from_civil / civil_from_days.
inline std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct Civil {
  std::int64_t year;
  unsigned month, day;
};

inline Civil civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const auto doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp < 10 ? mp + 3 : mp - 9;
  return {static_cast<std::int64_t>(yoe) + era * 400 + (m <= 2), m, d};
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a / b - ((a % b != 0) && ((a < 0) != (b < 0)));
}

}  // namespace detail

// Accepts "YYYY-MM-DDTHH:MM:SS[.frac](Z|±HH:MM)"; a bare date "YYYY-MM-DD"
// is read as midnight UTC. Fractional seconds are truncated.
inline std::optional<UtcTime> parse_rfc3339(std::string_view s) {
  auto num = [&](std::size_t pos, std::size_t len, int& out) {
    if (pos + len > s.size()) return false;
    out = 0;
    for (std::size_t i = pos; i < pos + len; ++i) {
      if (!is_ascii_digit(s[i])) return false;
      out = out * 10 + (s[i] - '0');
    }
    return true;
  };
  int y, mo, d, h = 0, mi = 0, sec = 0;
  if (!num(0, 4, y) || s.size() < 10 || s[4] != '-' || !num(5, 2, mo) || s[7] != '-' ||
      !num(8, 2, d))
    return std::nullopt;
  if (mo < 1 || mo > 12 || d < 1 || d > 31) return std::nullopt;
  std::int64_t offset = 0;
  if (s.size() > 10) {
    if ((s[10] != 'T' && s[10] != 't' && s[10] != ' ') || !num(11, 2, h) || s.size() < 19 ||
        s[13] != ':' || !num(14, 2, mi) || s[16] != ':' || !num(17, 2, sec))
      return std::nullopt;
    if (h > 23 || mi > 59 || sec > 60) return std::nullopt;
    std::size_t i = 19;
    if (i < s.size() && s[i] == '.') {
      ++i;
      const std::size_t frac = i;
      while (i < s.size() && is_ascii_digit(s[i])) ++i;
      if (i == frac) return std::nullopt;
    }
    if (i == s.size()) return std::nullopt;
    if (s[i] == 'Z' || s[i] == 'z') {
      if (i + 1 != s.size()) return std::nullopt;
    } else if (s[i] == '+' || s[i] == '-') {
      int oh, om;
      if (i + 6 != s.size() || !num(i + 1, 2, oh) || s[i + 3] != ':' || !num(i + 4, 2, om))
        return std::nullopt;
      offset = (oh * 3600 + om * 60) * (s[i] == '+' ? 1 : -1);
    } else {
      return std::nullopt;
    }
  }
  const auto days = detail::days_from_civil(y, static_cast<unsigned>(mo), static_cast<unsigned>(d));
  return UtcTime{days * 86400 + h * 3600 + mi * 60 + sec - offset};
}

inline std::string format_rfc3339(UtcTime t) {
  const auto days = detail::floor_div(t.seconds, 86400);
  const auto rem = t.seconds - days * 86400;
  const auto c = detail::civil_from_days(days);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<long long>(c.year), c.month, c.day,
                static_cast<long long>(rem / 3600), static_cast<long long>(rem / 60 % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

inline int year_of(UtcTime t) {
  return static_cast<int>(detail::civil_from_days(detail::floor_div(t.seconds, 86400)).year);
}

inline UtcTime make_utc(int year, unsigned month, unsigned day) {
  return UtcTime{detail::days_from_civil(year, month, day) * 86400};
}

// ---------------------------------------------------------------------------
// Records
// ---------------------------------------------------------------------------

enum class Domain { kBinary, kEps };

inline std::string_view domain_name(Domain d) {
  return d == Domain::kBinary ? "binary" : "eps";
}

struct ForecastRecord {
  std::string record_id;
  std::string author_id;
  std::string target_id;  // question id or company ticker
  UtcTime timestamp;
  double estimate = 0.0;
  std::string justification;
  std::optional<double> outcome;
  Domain domain = Domain::kBinary;

  bool operator==(const ForecastRecord&) const = default;
};

enum class CorpusFormat { kAuto, kJsonl, kCsv };

struct LoadError {
  std::size_t line = 0;
  std::string message;
};

struct LoadResult {
  std::vector<ForecastRecord> records;
  std::vector<LoadError> errors;
};

namespace detail {

using RawFields = std::map<std::string, std::optional<std::string>, std::less<>>;

inline double parse_number(const std::string& field, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v))
    throw std::invalid_argument(field + " is not a finite number: '" + text + "'");
  return v;
}

// Builds and validates a record; throws std::invalid_argument on violations.
inline ForecastRecord build_record(const std::function<std::optional<std::string>(const char*)>& str,
                                   const std::function<std::optional<double>(const char*)>& number) {
  ForecastRecord r;
  auto required = [&](const char* key) {
    auto v = str(key);
    if (!v || v->empty()) throw std::invalid_argument(std::string("missing field ") + key);
    return *v;
  };
  r.record_id = required("record_id");
  r.author_id = required("author_id");
  r.target_id = required("target_id");
  const auto ts = required("timestamp");
  const auto parsed = parse_rfc3339(ts);
  if (!parsed) throw std::invalid_argument("timestamp is not RFC 3339: '" + ts + "'");
  r.timestamp = *parsed;
  const auto est = number("estimate");
  if (!est) throw std::invalid_argument("missing field estimate");
  r.estimate = *est;
  r.justification = str("justification").value_or("");
  r.outcome = number("outcome");
  const auto tag = required("domain_tag");
  if (tag == "binary") {
    r.domain = Domain::kBinary;
  } else if (tag == "eps") {
    r.domain = Domain::kEps;
  } else {
    throw std::invalid_argument("domain_tag must be binary or eps, got '" + tag + "'");
  }
  if (r.domain == Domain::kBinary) {
    if (r.estimate < 0.0 || r.estimate > 1.0)
      throw std::invalid_argument("binary estimate out of range [0,1]: " + std::to_string(r.estimate));
    if (r.outcome && *r.outcome != 0.0 && *r.outcome != 1.0)
      throw std::invalid_argument("binary outcome must be 0 or 1");
  }
  return r;
}

inline void load_jsonl(std::istream& in, LoadResult& out) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      if (!j.is_object()) throw std::invalid_argument("line is not a JSON object");
      if (j.contains("_meta")) continue;
      auto str = [&](const char* key) -> std::optional<std::string> {
        auto it = j.find(key);
        if (it == j.end() || it->is_null()) return std::nullopt;
        if (!it->is_string()) throw std::invalid_argument(std::string(key) + " must be a string");
        return it->get<std::string>();
      };
      auto number = [&](const char* key) -> std::optional<double> {
        auto it = j.find(key);
        if (it == j.end() || it->is_null()) return std::nullopt;
        if (!it->is_number()) throw std::invalid_argument(std::string(key) + " must be a number");
        const double v = it->get<double>();
        if (!std::isfinite(v)) throw std::invalid_argument(std::string(key) + " is not finite");
        return v;
      };
      out.records.push_back(build_record(str, number));
    } catch (const nlohmann::json::exception& e) {
      out.errors.push_back({lineno, std::string("invalid JSON: ") + e.what()});
    } catch (const std::invalid_argument& e) {
      out.errors.push_back({lineno, e.what()});
    }
  }
}

// RFC 4180 rows; quoted fields may span lines. Returns false at end of input.
inline bool read_csv_row(std::istream& in, std::vector<std::string>& row, std::size_t& lineno) {
  row.clear();
  std::string field;
  bool quoted = false, any = false, was_quoted = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++lineno;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty() && !was_quoted) {
      quoted = was_quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else if (c == '\n') {
      ++lineno;
      break;
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  if (!any) return false;
  row.push_back(std::move(field));
  return true;
}

inline void load_csv(std::istream& in, LoadResult& out) {
  std::vector<std::string> header, row;
  std::size_t lineno = 0;
  if (!read_csv_row(in, header, lineno)) return;
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  for (const char* key : {"record_id", "author_id", "target_id", "timestamp", "estimate",
                          "justification", "outcome", "domain_tag"})
    if (!col.contains(key)) {
      out.errors.push_back({1, std::string("csv header lacks column ") + key});
      return;
    }
  for (;;) {
    const std::size_t start = lineno + 1;
    if (!read_csv_row(in, row, lineno)) break;
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() != header.size()) {
      out.errors.push_back({start, "expected " + std::to_string(header.size()) + " fields, got " +
                                       std::to_string(row.size())});
      continue;
    }
    auto str = [&](const char* key) -> std::optional<std::string> {
      const auto& v = row[col.at(key)];
      if (v.empty()) return std::nullopt;
      return v;
    };
    auto number = [&](const char* key) -> std::optional<double> {
      const auto& v = row[col.at(key)];
      if (v.empty() || v == "null" || v == "NA") return std::nullopt;
      return parse_number(key, v);
    };
    try {
      out.records.push_back(build_record(str, number));
    } catch (const std::invalid_argument& e) {
      out.errors.push_back({start, e.what()});
    }
  }
}

}  // namespace detail

// Parses a corpus from a stream. Malformed lines are reported in
// LoadResult::errors with their line number; duplicate record ids are
// rejected the same way.
inline LoadResult parse_corpus(std::istream& in, CorpusFormat format) {
  LoadResult out;
  if (format == CorpusFormat::kCsv) {
    detail::load_csv(in, out);
  } else {
    detail::load_jsonl(in, out);
  }
  std::unordered_set<std::string> seen;
  std::vector<ForecastRecord> unique;
  unique.reserve(out.records.size());
  for (auto& r : out.records) {
    if (!seen.insert(r.record_id).second) {
      out.errors.push_back({0, "duplicate record_id '" + r.record_id + "'"});
      continue;
    }
    unique.push_back(std::move(r));
  }
  out.records = std::move(unique);
  return out;
}

inline CorpusFormat format_for_path(const std::string& path, CorpusFormat format) {
  if (format != CorpusFormat::kAuto) return format;
  return path.ends_with(".csv") ? CorpusFormat::kCsv : CorpusFormat::kJsonl;
}

inline LoadResult load_corpus(const std::string& path, CorpusFormat format = CorpusFormat::kAuto) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kIo, "cannot read corpus: " + path);
  return parse_corpus(in, format_for_path(path, format));
}

inline nlohmann::ordered_json record_to_json(const ForecastRecord& r) {
  nlohmann::ordered_json j;
  j["record_id"] = r.record_id;
  j["author_id"] = r.author_id;
  j["target_id"] = r.target_id;
  j["timestamp"] = format_rfc3339(r.timestamp);
  j["estimate"] = r.estimate;
  j["justification"] = r.justification;
  j["outcome"] = r.outcome ? nlohmann::ordered_json(*r.outcome) : nlohmann::ordered_json(nullptr);
  j["domain_tag"] = domain_name(r.domain);
  return j;
}

// ---------------------------------------------------------------------------
// Filtering
// ---------------------------------------------------------------------------

// Stop-word coverage heuristic: at least 2 of the 20 most frequent word
// tokens are English function words, and at least 40% of non-whitespace
// characters are ASCII letters.
inline bool is_english(std::string_view text) {
  std::size_t chars = 0, letters = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if ((c & 0xC0) == 0x80 || is_ascii_space(text[i])) continue;
    ++chars;
    if (is_ascii_alpha(text[i])) ++letters;
  }
  if (chars == 0 || letters * 10 < chars * 4) return false;

  const auto tt = tokenize(text);
  std::vector<std::pair<std::string, std::size_t>> freq;  // first-occurrence order
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& tok : tt.tokens) {
    if (!has_letter(tok)) continue;
    const auto lower = to_lower(tok);
    auto [it, inserted] = index.emplace(lower, freq.size());
    if (inserted) freq.emplace_back(lower, 0);
    ++freq[it->second].second;
  }
  std::stable_sort(freq.begin(), freq.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  static const std::unordered_set<std::string_view> function_words(
      resources::kEnglishFunctionWords.begin(), resources::kEnglishFunctionWords.end());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < freq.size() && i < 20; ++i)
    if (function_words.contains(freq[i].first)) ++hits;
  return hits >= 2;
}

// Fraction of non-whitespace characters (code points) inside quote spans.
inline double quote_ratio(std::string_view text) {
  const auto spans = find_quote_spans(text);
  std::size_t total = 0, quoted = 0;
  std::size_t span = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if ((c & 0xC0) == 0x80 || is_ascii_space(text[i])) continue;
    ++total;
    while (span < spans.size() && spans[span].end <= i) ++span;
    if (span < spans.size() && spans[span].begin <= i) ++quoted;
  }
  return total == 0 ? 0.0 : static_cast<double>(quoted) / static_cast<double>(total);
}

struct CorpusFilterConfig {
  std::size_t min_tokens_per_justification = 10;
  double max_quote_ratio = 0.5;
  std::size_t min_forecasts_per_author = 5;
  bool require_english = true;
};

struct FilterReport {
  std::size_t input = 0;
  std::size_t dropped_length = 0;
  std::size_t dropped_quotes = 0;
  std::size_t dropped_language = 0;
  std::size_t dropped_author = 0;
  std::size_t authors_dropped = 0;
  std::size_t retained = 0;

  std::size_t dropped() const {
    return dropped_length + dropped_quotes + dropped_language + dropped_author;
  }
};

using LanguagePredicate = std::function<bool(std::string_view)>;

enum class FilterVerdict { kKeep, kLength, kQuotes, kLanguage };

inline FilterVerdict classify_record(const ForecastRecord& r, const CorpusFilterConfig& config,
                                     const LanguagePredicate& english) {
  if (tokenize(r.justification).token_count() < config.min_tokens_per_justification)
    return FilterVerdict::kLength;
  if (quote_ratio(r.justification) > config.max_quote_ratio) return FilterVerdict::kQuotes;
  if (config.require_english && !english(r.justification)) return FilterVerdict::kLanguage;
  return FilterVerdict::kKeep;
}

// Per-record rules (length, quotes, language) run first and a record is
// charged to the first rule it fails; the per-author minimum then counts only
// surviving records. Output keeps input order.
inline std::pair<std::vector<ForecastRecord>, FilterReport> apply_filters(
    const std::vector<ForecastRecord>& records, const CorpusFilterConfig& config,
    const LanguagePredicate& english = is_english) {
  require(config.max_quote_ratio >= 0.0 && config.max_quote_ratio <= 1.0,
          "max_quote_ratio must lie in [0,1]");
  FilterReport report;
  report.input = records.size();
  std::vector<const ForecastRecord*> survivors;
  for (const auto& r : records) {
    switch (classify_record(r, config, english)) {
      case FilterVerdict::kKeep: survivors.push_back(&r); break;
      case FilterVerdict::kLength: ++report.dropped_length; break;
      case FilterVerdict::kQuotes: ++report.dropped_quotes; break;
      case FilterVerdict::kLanguage: ++report.dropped_language; break;
    }
  }
  std::map<std::string, std::size_t> per_author;
  for (const auto* r : survivors) ++per_author[r->author_id];
  std::vector<ForecastRecord> kept;
  for (const auto* r : survivors) {
    if (per_author[r->author_id] >= config.min_forecasts_per_author) {
      kept.push_back(*r);
    } else {
      ++report.dropped_author;
    }
  }
  for (const auto& [author, n] : per_author)
    if (n < config.min_forecasts_per_author) ++report.authors_dropped;
  report.retained = kept.size();
  return {std::move(kept), report};
}

}  // namespace fskill
