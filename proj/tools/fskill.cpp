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


// fskill command-line driver.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fskill/fskill.hpp"
#include "json.hpp"

namespace {

using fskill::Domain;
using fskill::ErrorKind;
using fskill::ForecastRecord;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Flag combinations the parser cannot reject on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Options shared by subcommands
// ---------------------------------------------------------------------------

struct Common {
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::string out = "-";
  std::string format = "jsonl";
};

struct InputOpts {
  std::string path = "-";
  std::string format = "auto";
  bool keep_going = false;
};

struct FilterOpts {
  fskill::CorpusFilterConfig cfg;
  bool no_english = false;
  bool skip = false;
  bool score_all = false;
};

struct LexiconOpts {
  std::string hedge, tentative, temporal, sentiment, financial, connectives, analytic, easy_words,
      pos_overrides;
};

struct ModelOpts {
  std::vector<int> ngrams{1, 2};
  std::size_t min_count = 2;
  std::vector<std::string> features{"ngrams"};
  fskill::TrainConfig train;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--threads", c.threads, "Worker threads (output does not depend on it)")
      ->check(CLI::Range(1u, 1024u));
  app->add_option("--seed", c.seed, "Seed for every random draw");
  app->add_option("-o,--out", c.out, "Output path, - for stdout");
  app->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"jsonl", "text"}));
}

void add_input(CLI::App* app, InputOpts& in) {
  app->add_option("-c,--corpus", in.path, "Corpus file, - for stdin");
  app->add_option("--input-format", in.format)->check(CLI::IsMember({"auto", "jsonl", "csv"}));
  app->add_flag("--keep-going", in.keep_going, "Skip malformed corpus lines instead of failing");
}

void add_filter(CLI::App* app, FilterOpts& f, bool skippable) {
  app->add_option("--min-tokens", f.cfg.min_tokens_per_justification);
  app->add_option("--max-quote-ratio", f.cfg.max_quote_ratio)->check(CLI::Range(0.0, 1.0));
  app->add_option("--min-forecasts", f.cfg.min_forecasts_per_author);
  app->add_flag("--no-english", f.no_english, "Disable the English-language filter");
  if (skippable) {
    app->add_flag("--no-filter", f.skip, "Use the corpus as given");
    app->add_flag("--score-all-forecasts", f.score_all,
                  "Standardize and rank with every resolved forecast, not only filtered ones");
  }
}

void add_lexicons(CLI::App* app, LexiconOpts& l) {
  app->add_option("--hedge-lexicon", l.hedge)->check(CLI::ExistingFile);
  app->add_option("--tentative-lexicon", l.tentative)->check(CLI::ExistingFile);
  app->add_option("--temporal-lexicon", l.temporal)->check(CLI::ExistingFile);
  app->add_option("--sentiment-lexicon", l.sentiment)->check(CLI::ExistingFile);
  app->add_option("--financial-lexicon", l.financial)->check(CLI::ExistingFile);
  app->add_option("--connective-lexicon", l.connectives)->check(CLI::ExistingFile);
  app->add_option("--analytic-lexicon", l.analytic)->check(CLI::ExistingFile);
  app->add_option("--easy-words", l.easy_words)->check(CLI::ExistingFile);
  app->add_option("--pos-overrides", l.pos_overrides)->check(CLI::ExistingFile);
}

void add_model(CLI::App* app, ModelOpts& m) {
  app->add_option("--ngrams", m.ngrams, "N-gram sizes")->delimiter(',')->check(CLI::Range(1, 5));
  app->add_option("--min-count", m.min_count, "Rarer n-grams map to UNK");
  app->add_option("--features", m.features, "Feature groups: ngrams,textual,cognitive,financial")
      ->delimiter(',')
      ->check(CLI::IsMember({"ngrams", "textual", "cognitive", "financial"}));
  app->add_option("--lr", m.train.learning_rate)->check(CLI::PositiveNumber);
  app->add_option("--l2", m.train.l2)->check(CLI::NonNegativeNumber);
  app->add_option("--epochs", m.train.epochs)->check(CLI::Range(1ul, 1000000ul));
  app->add_option("--grad-tol", m.train.grad_tol)->check(CLI::NonNegativeNumber);
}

// ---------------------------------------------------------------------------
// Input
// ---------------------------------------------------------------------------

std::string read_all(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) fskill::fail(ErrorKind::kIo, "cannot read " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

bool is_control_line(std::string_view line) {
  const auto p = line.find_first_not_of(" \t");
  return p != std::string_view::npos && line.substr(p).starts_with("{\"_");
}

struct Corpus {
  std::vector<ForecastRecord> records;
  std::string hash;
  std::size_t bad_lines = 0;
};

Corpus parse_corpus_bytes(const std::string& bytes, const InputOpts& in) {
  Corpus c;
  c.hash = fskill::hex64(fskill::fnv1a64(bytes));
  auto format = fskill::CorpusFormat::kJsonl;
  if (in.format == "csv") {
    format = fskill::CorpusFormat::kCsv;
  } else if (in.format == "auto") {
    const auto p = bytes.find_first_not_of(" \t\r\n");
    if (in.path.ends_with(".csv") || (p != std::string::npos && bytes[p] != '{'))
      format = fskill::CorpusFormat::kCsv;
  }
  std::string body;
  if (format == fskill::CorpusFormat::kJsonl) {
    // Report lines from an upstream subcommand are blanked so line numbers
    // in errors still match the input.
    std::istringstream lines(bytes);
    for (std::string line; std::getline(lines, line);) {
      if (!is_control_line(line)) body += line;
      body += '\n';
    }
  } else {
    body = bytes;
  }
  std::istringstream stream(body);
  auto res = fskill::parse_corpus(stream, format);
  for (const auto& e : res.errors) {
    if (e.line > 0) std::cerr << "fskill: line " << e.line << ": " << e.message << "\n";
    else std::cerr << "fskill: " << e.message << "\n";
  }
  c.bad_lines = res.errors.size();
  if (c.bad_lines > 0 && !in.keep_going)
    fskill::fail(ErrorKind::kParse, std::to_string(c.bad_lines) + " malformed corpus line(s)");
  c.records = std::move(res.records);
  return c;
}

Corpus read_corpus(const InputOpts& in) { return parse_corpus_bytes(read_all(in.path), in); }

Domain corpus_domain(const std::vector<ForecastRecord>& records) {
  if (records.empty()) return Domain::kBinary;
  const Domain d = records.front().domain;
  for (const auto& r : records)
    if (r.domain != d) fskill::fail(ErrorKind::kParse, "corpus mixes binary and eps records");
  return d;
}

fskill::MetricResources load_resources(const LexiconOpts& l) {
  auto r = fskill::MetricResources::bundled();
  auto lex = [](const std::string& path, fskill::CategoryLexicon& slot) {
    if (!path.empty()) slot = fskill::CategoryLexicon::load(path);
  };
  lex(l.hedge, r.hedge);
  lex(l.tentative, r.tentative);
  lex(l.temporal, r.temporal);
  lex(l.sentiment, r.sentiment);
  lex(l.financial, r.financial);
  lex(l.connectives, r.connectives);
  lex(l.analytic, r.analytic);
  if (!l.easy_words.empty()) r.easy_words = fskill::WordList::load(l.easy_words);
  if (!l.pos_overrides.empty()) r.pos_overrides = fskill::PosTagOverrides::load(l.pos_overrides);
  return r;
}

json lexicon_config(const LexiconOpts& l) {
  json j = json::object();
  auto put = [&](const char* key, const std::string& path) {
    if (!path.empty()) j[key] = fskill::hex64(fskill::fnv1a64(read_all(path)));
  };
  put("hedge", l.hedge);
  put("tentative", l.tentative);
  put("temporal", l.temporal);
  put("sentiment", l.sentiment);
  put("financial", l.financial);
  put("connectives", l.connectives);
  put("analytic", l.analytic);
  put("easy_words", l.easy_words);
  put("pos_overrides", l.pos_overrides);
  return j;
}

json filter_config(const FilterOpts& f) {
  return {{"min_tokens", f.cfg.min_tokens_per_justification},
          {"max_quote_ratio", f.cfg.max_quote_ratio},
          {"min_forecasts", f.cfg.min_forecasts_per_author},
          {"english", !f.no_english},
          {"skip", f.skip},
          {"score_all_forecasts", f.score_all}};
}

json report_json(const fskill::FilterReport& r) {
  return {{"input", r.input},
          {"dropped_length", r.dropped_length},
          {"dropped_quotes", r.dropped_quotes},
          {"dropped_language", r.dropped_language},
          {"dropped_author", r.dropped_author},
          {"authors_dropped", r.authors_dropped},
          {"retained", r.retained}};
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

std::string fixed(double v, int prec = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

std::string fixed(const std::optional<double>& v, int prec = 4) { return v ? fixed(*v, prec) : "-"; }

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

struct Table {
  std::vector<std::string> head;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& os) const {
    std::vector<std::size_t> width(head.size(), 0);
    auto cells = [](const std::string& s) {
      std::size_t n = 0;
      for (unsigned char c : s) n += (c & 0xC0) != 0x80 ? 1 : 0;
      return n;
    };
    for (std::size_t i = 0; i < head.size(); ++i) width[i] = cells(head[i]);
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells(r[i]));
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t i = 0; i < r.size(); ++i) {
        const std::string pad(width[i] - cells(r[i]), ' ');
        if (i > 0) s += "  ";
        s += i == 0 ? r[i] + pad : pad + r[i];
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      os << s << "\n";
    };
    line(head);
    std::size_t total = 0;
    for (auto w : width) total += w;
    os << std::string(total + 2 * (width.size() - 1), '-') << "\n";
    for (const auto& r : rows) line(r);
  }
};

class Report {
 public:
  Report(const Common& c, std::string command, std::string input_hash, json config)
      : common_(c) {
    meta_["command"] = std::move(command);
    meta_["seed"] = c.seed;
    meta_["input_hash"] = std::move(input_hash);
    meta_["config"] = std::move(config);
  }

  json& meta() { return meta_; }
  bool text() const { return common_.format == "text"; }

  void row(const json& j) {
    if (!text()) rows_.push_back(j);
  }
  void table(std::string title, Table t) { tables_.emplace_back(std::move(title), std::move(t)); }
  void note(std::string s) { notes_.push_back(std::move(s)); }

  void write() const {
    std::ostringstream os;
    if (text()) {
      os << "# fskill " << meta_["command"].get<std::string>() << "  seed=" << common_.seed
         << "  input=" << meta_["input_hash"].get<std::string>() << "\n";
      os << "# config " << meta_["config"].dump() << "\n";
      for (const auto& n : notes_) os << n << "\n";
      for (const auto& [title, t] : tables_) {
        os << "\n";
        if (!title.empty()) os << title << "\n";
        t.print(os);
      }
    } else {
      os << json{{"_meta", meta_}}.dump() << "\n";
      for (const auto& r : rows_) os << r.dump() << "\n";
    }
    emit(common_.out, os.str());
  }

  static void emit(const std::string& path, const std::string& bytes) {
    if (path == "-") {
      std::cout << bytes;
      std::cout.flush();
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) fskill::fail(ErrorKind::kIo, "cannot write " + path);
    f << bytes;
    if (!f) fskill::fail(ErrorKind::kIo, "write failed: " + path);
  }

 private:
  const Common& common_;
  json meta_;
  std::vector<json> rows_;
  std::vector<std::pair<std::string, Table>> tables_;
  std::vector<std::string> notes_;
};

// ---------------------------------------------------------------------------
// Shared pipeline steps
// ---------------------------------------------------------------------------

std::vector<ForecastRecord> run_filters(const std::vector<ForecastRecord>& records, const FilterOpts& f,
                                        Report& rep) {
  if (f.skip) return records;
  auto cfg = f.cfg;
  cfg.require_english = !f.no_english;
  auto [kept, report] = fskill::apply_filters(records, cfg);
  rep.meta()["filter"] = report_json(report);
  return std::move(kept);
}

struct Scored {
  std::map<std::string, double> z;  // record_id -> standardized score
  std::map<std::string, double> raw;
  std::vector<std::string> warnings;
};

fskill::AnalystErrorConfig analyst_cfg(double trim, std::size_t min_n) { return {trim, min_n}; }

Scored score_records(std::span<const ForecastRecord> records, const fskill::AnalystErrorConfig& acfg) {
  Scored s;
  if (corpus_domain({records.begin(), records.end()}) == Domain::kBinary) {
    const auto scores = fskill::brier_scores(records);
    auto st = fskill::standardize_within_question(scores);
    for (const auto& g : scores) s.raw[g.record_id] = g.score;
    s.z = std::move(st.z);
    s.warnings = std::move(st.warnings);
  } else {
    auto eps = fskill::score_eps_records(records, acfg);
    for (const auto& e : eps.records) {
      s.raw[e.record_id] = e.raw_error;
      s.z[e.record_id] = e.std_error;
    }
    s.warnings = std::move(eps.warnings);
  }
  return s;
}

struct Ranking {
  Scored scored;
  std::vector<fskill::ForecasterProfile> profiles;
};

// Ranks the authors of `kept`. With score_all the z-scores and author means
// come from every record of those authors in `all`.
Ranking rank_authors(const std::vector<ForecastRecord>& all, const std::vector<ForecastRecord>& kept,
                     bool score_all, const fskill::AnalystErrorConfig& acfg) {
  Ranking r;
  if (!score_all) {
    r.scored = score_records(kept, acfg);
    r.profiles = fskill::rank_forecasters(kept, r.scored.z);
    return r;
  }
  std::set<std::string> authors;
  for (const auto& k : kept) authors.insert(k.author_id);
  std::vector<ForecastRecord> pool;
  for (const auto& a : all)
    if (authors.contains(a.author_id)) pool.push_back(a);
  r.scored = score_records(all, acfg);
  r.profiles = fskill::rank_forecasters(pool, r.scored.z);
  return r;
}

std::vector<fskill::MetricVector> record_metrics(std::span<const ForecastRecord> records,
                                                 const fskill::MetricResources& res, unsigned threads) {
  std::vector<fskill::MetricVector> out(records.size());
  fskill::parallel_for(records.size(), threads,
                       [&](std::size_t i) { out[i] = fskill::compute_metrics(records[i].justification, res); });
  return out;
}

std::map<std::string, fskill::MetricVector> author_metrics(std::span<const ForecastRecord> records,
                                                           const fskill::MetricResources& res,
                                                           unsigned threads) {
  const auto per = record_metrics(records, res, threads);
  std::map<std::string, std::vector<fskill::MetricVector>> by;
  for (std::size_t i = 0; i < records.size(); ++i) by[records[i].author_id].push_back(per[i]);
  std::map<std::string, fskill::MetricVector> out;
  for (const auto& [a, vs] : by) out.emplace(a, fskill::author_aggregate(vs));
  return out;
}

std::vector<std::string> dense_names(const std::vector<std::string>& groups) {
  std::vector<std::string> names;
  for (const auto& info : fskill::kMetrics) {
    const char* g = info.group == fskill::MetricGroup::kTextual     ? "textual"
                    : info.group == fskill::MetricGroup::kCognitive ? "cognitive"
                                                                    : "financial";
    if (std::find(groups.begin(), groups.end(), g) != groups.end()) names.emplace_back(info.name);
  }
  return names;
}

fskill::FeatureConfig feature_config(const ModelOpts& m) {
  fskill::FeatureConfig f;
  f.ngram_sizes = m.ngrams;
  f.min_count = m.min_count;
  f.use_ngrams = std::find(m.features.begin(), m.features.end(), "ngrams") != m.features.end();
  f.dense_names = dense_names(m.features);
  if (!f.use_ngrams && f.dense_names.empty())
    throw UsageError("no feature group selected");
  return f;
}

json model_config(const ModelOpts& m) {
  return {{"ngrams", m.ngrams},
          {"min_count", m.min_count},
          {"features", m.features},
          {"lr", m.train.learning_rate},
          {"l2", m.train.l2},
          {"epochs", m.train.epochs},
          {"grad_tol", m.train.grad_tol}};
}

std::vector<std::optional<double>> dense_values(const fskill::MetricVector& v,
                                                const std::vector<std::string>& names) {
  std::vector<std::optional<double>> out;
  for (const auto& n : names) out.push_back(v[*fskill::metric_by_name(n)]);
  return out;
}

// Author documents labelled 1 for the top K and 0 for the bottom K.
std::vector<fskill::Document> author_documents(const std::vector<ForecastRecord>& records,
                                               std::vector<fskill::ForecasterProfile>& profiles,
                                               std::size_t k, const fskill::FeatureConfig& fcfg,
                                               const fskill::MetricResources& res, unsigned threads) {
  const auto groups = fskill::select_groups(profiles, k);
  std::map<std::string, std::vector<std::string>> texts;
  for (const auto& r : records) texts[r.author_id].push_back(r.justification);
  std::map<std::string, fskill::MetricVector> metrics;
  if (!fcfg.dense_names.empty()) metrics = author_metrics(records, res, threads);
  std::vector<fskill::Document> docs;
  auto add = [&](const std::vector<std::string>& ids, int label) {
    for (const auto& id : ids) {
      fskill::Document d{id, texts[id], {}, label};
      if (!fcfg.dense_names.empty()) d.dense = dense_values(metrics.at(id), fcfg.dense_names);
      docs.push_back(std::move(d));
    }
  };
  add(groups.top, 1);
  add(groups.bottom, 0);
  return docs;
}

std::vector<fskill::Document> note_documents(std::span<const fskill::LabeledNote> notes,
                                             const fskill::FeatureConfig& fcfg,
                                             const fskill::MetricResources& res, unsigned threads) {
  auto docs = fskill::notes_to_documents(notes);
  if (fcfg.dense_names.empty()) return docs;
  std::vector<ForecastRecord> recs;
  for (const auto& n : notes) recs.push_back(n.record);
  const auto per = record_metrics(recs, res, threads);
  for (std::size_t i = 0; i < docs.size(); ++i) docs[i].dense = dense_values(per[i], fcfg.dense_names);
  return docs;
}

double accuracy(const fskill::ModelArtifact& m, std::span<const fskill::Document> docs) {
  if (docs.empty()) fskill::fail(ErrorKind::kUndefinedMetric, "accuracy: no documents");
  std::size_t correct = 0;
  for (const auto& d : docs) correct += m.predict(d) == d.label ? 1 : 0;
  return static_cast<double>(correct) / static_cast<double>(docs.size());
}

std::string arrow(fskill::Direction d) {
  switch (d) {
    case fskill::Direction::kTopHigher: return "↑";
    case fskill::Direction::kBottomHigher: return "↓";
    case fskill::Direction::kEqual: return "=";
  }
  return "=";
}

std::string p_band(double p) { return p < 0.001 ? "<0.001" : fixed(p, 3); }

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

struct Args {
  Common common;
  InputOpts input;
  FilterOpts filter;
  LexiconOpts lex;
  ModelOpts model;
  fskill::SynthConfig synth;
  std::string noise = "rademacher";
  std::string domain = "binary";
  std::size_t forecasts = 0;
  std::string truth_path;
  std::string templates_path;
  std::size_t k = 0;
  std::size_t bootstrap = 10000;
  double alpha = 0.05;
  std::size_t m = 0;
  std::vector<std::string> metric_subset;
  bool per_record = false;
  std::size_t folds = 5;
  std::size_t top_n = 20;
  std::string model_path;
  std::string split = "test";
  std::vector<std::size_t> ns{5, 10, 20};
  double train_frac = 0.6;
  double val_frac = 0.2;
  double eval_frac = 0.2;
  double trim = 0.9;
  std::size_t min_analyst = 100;
  std::string patterns_path;
  std::string gold_path;
  bool earliest = false;
  int first_year = 2014;
  int last_year = 2018;
  std::size_t bins = 10;
};

fskill::AnalystErrorConfig analyst_cfg(const Args& a) { return analyst_cfg(a.trim, a.min_analyst); }

json analyst_config(const Args& a) { return {{"trim", a.trim}, {"min_analyst_forecasts", a.min_analyst}}; }

void cmd_ingest(const Args& a) {
  const auto c = read_corpus(a.input);
  Report rep(a.common, "ingest", c.hash, {{"input_format", a.input.format}});
  rep.meta()["records"] = c.records.size();
  rep.meta()["bad_lines"] = c.bad_lines;
  std::map<std::string, std::size_t> authors, targets;
  std::size_t resolved = 0;
  for (const auto& r : c.records) {
    rep.row(fskill::record_to_json(r));
    ++authors[r.author_id];
    ++targets[r.target_id];
    resolved += r.outcome ? 1 : 0;
  }
  Table t{{"quantity", "value"},
          {{"records", std::to_string(c.records.size())},
           {"bad_lines", std::to_string(c.bad_lines)},
           {"authors", std::to_string(authors.size())},
           {"targets", std::to_string(targets.size())},
           {"resolved", std::to_string(resolved)}}};
  rep.table("", std::move(t));
  rep.write();
}

void cmd_filter(const Args& a) {
  const auto c = read_corpus(a.input);
  Report rep(a.common, "filter", c.hash, filter_config(a.filter));
  auto cfg = a.filter.cfg;
  cfg.require_english = !a.filter.no_english;
  const auto [kept, report] = fskill::apply_filters(c.records, cfg);
  rep.meta()["filter"] = report_json(report);
  for (const auto& r : kept) rep.row(fskill::record_to_json(r));
  Table t{{"rule", "records"}, {}};
  const json counts = report_json(report);
  for (const auto& [k, v] : counts.items()) t.rows.push_back({k, std::to_string(v.get<std::size_t>())});
  rep.table("", std::move(t));
  rep.write();
}

void cmd_score(const Args& a) {
  const auto c = read_corpus(a.input);
  Report rep(a.common, "score", c.hash, analyst_config(a));
  const auto s = score_records(c.records, analyst_cfg(a));
  rep.meta()["warnings"] = s.warnings;
  Table t{{"record_id", "author_id", "target_id", "score", "std_score"}, {}};
  for (const auto& r : c.records) {
    auto it = s.z.find(r.record_id);
    if (it == s.z.end()) continue;
    const double raw = s.raw.at(r.record_id);
    rep.row({{"record_id", r.record_id},
             {"author_id", r.author_id},
             {"target_id", r.target_id},
             {"score", raw},
             {"std_score", it->second}});
    t.rows.push_back({r.record_id, r.author_id, r.target_id, fixed(raw), fixed(it->second)});
  }
  rep.table("", std::move(t));
  rep.write();
}

void cmd_rank(const Args& a) {
  const std::string bytes = read_all(a.input.path);
  const std::string hash = fskill::hex64(fskill::fnv1a64(bytes));
  // Accepts either score output (lines carrying std_score) or a corpus.
  std::vector<ForecastRecord> records;
  std::map<std::string, double> z;
  bool from_scores = false;
  {
    std::istringstream lines(bytes);
    std::size_t lineno = 0;
    for (std::string line; std::getline(lines, line);) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos || is_control_line(line)) continue;
      json j;
      try {
        j = json::parse(line);
      } catch (const json::exception&) {
        break;
      }
      if (!j.is_object() || !j.contains("std_score")) break;
      from_scores = true;
      try {
        ForecastRecord r;
        r.record_id = j.at("record_id").get<std::string>();
        r.author_id = j.at("author_id").get<std::string>();
        if (!z.emplace(r.record_id, j.at("std_score").get<double>()).second)
          fskill::fail(ErrorKind::kParse, "duplicate record_id '" + r.record_id + "'");
        records.push_back(std::move(r));
      } catch (const json::exception& e) {
        fskill::fail(ErrorKind::kParse, "line " + std::to_string(lineno) + ": " + e.what());
      }
    }
  }
  std::vector<std::string> warnings;
  if (!from_scores) {
    records = parse_corpus_bytes(bytes, a.input).records;
    auto s = score_records(records, analyst_cfg(a));
    z = std::move(s.z);
    warnings = std::move(s.warnings);
  }
  Report rep(a.common, "rank", hash, {{"k", a.k}, {"input", from_scores ? "scores" : "corpus"}});
  auto profiles = fskill::rank_forecasters(records, z);
  if (a.k > 0) fskill::select_groups(profiles, a.k);
  rep.meta()["authors"] = profiles.size();
  rep.meta()["warnings"] = warnings;
  Table t{{"rank", "author_id", "n", "mean_std_score", "group"}, {}};
  for (const auto& p : profiles) {
    rep.row({{"rank", p.rank},
             {"author_id", p.author_id},
             {"n_forecasts", p.n_forecasts},
             {"mean_std_score", p.mean_std_brier},
             {"group", fskill::group_name(p.group)}});
    t.rows.push_back({std::to_string(p.rank), p.author_id, std::to_string(p.n_forecasts),
                      fixed(p.mean_std_brier), std::string(fskill::group_name(p.group))});
  }
  rep.table("", std::move(t));
  rep.write();
}

void cmd_metrics(const Args& a) {
  const auto c = read_corpus(a.input);
  json cfg = {{"per_record", a.per_record}, {"lexicons", lexicon_config(a.lex)}};
  Report rep(a.common, "metrics", c.hash, cfg);
  const auto res = load_resources(a.lex);
  Table t{{"id", "n"}, {}};
  for (const auto& info : fskill::kMetrics) t.head.emplace_back(info.name);
  auto emit = [&](const std::string& key, const std::string& id, std::size_t n, const fskill::MetricVector& v) {
    json j;
    j[key] = id;
    j["n_records"] = n;
    std::vector<std::string> cells{id, std::to_string(n)};
    for (const auto& info : fskill::kMetrics) {
      j[std::string(info.name)] = opt_json(v[info.id]);
      cells.push_back(fixed(v[info.id]));
    }
    rep.row(j);
    t.rows.push_back(std::move(cells));
  };
  if (a.per_record) {
    const auto per = record_metrics(c.records, res, a.common.threads);
    for (std::size_t i = 0; i < per.size(); ++i) emit("record_id", c.records[i].record_id, 1, per[i]);
  } else {
    std::map<std::string, std::size_t> counts;
    for (const auto& r : c.records) ++counts[r.author_id];
    for (const auto& [author, v] : author_metrics(c.records, res, a.common.threads))
      emit("author_id", author, counts[author], v);
  }
  rep.table("", std::move(t));
  rep.write();
}

std::vector<fskill::Metric> selected_metrics(const std::vector<std::string>& names) {
  std::vector<fskill::Metric> out;
  if (names.empty()) {
    for (const auto& info : fskill::kMetrics) out.push_back(info.id);
    return out;
  }
  for (const auto& n : names) {
    const auto m = fskill::metric_by_name(n);
    if (!m) throw UsageError("unknown metric: " + n);
    out.push_back(*m);
  }
  return out;
}

void cmd_compare(const Args& a) {
  const auto c = read_corpus(a.input);
  json cfg = {{"k", a.k},
              {"bootstrap", a.bootstrap},
              {"alpha", a.alpha},
              {"m", a.m},
              {"metrics", a.metric_subset},
              {"filter", filter_config(a.filter)},
              {"analyst", analyst_config(a)},
              {"lexicons", lexicon_config(a.lex)}};
  Report rep(a.common, "compare", c.hash, cfg);
  const auto kept = run_filters(c.records, a.filter, rep);
  const auto res = load_resources(a.lex);
  const auto metrics = selected_metrics(a.metric_subset);

  std::vector<fskill::MetricVector> top_vecs, bottom_vecs;
  if (corpus_domain(kept) == Domain::kBinary) {
    auto ranking = rank_authors(c.records, kept, a.filter.score_all, analyst_cfg(a));
    const std::size_t k = a.k == 0 ? ranking.profiles.size() / 2 : a.k;
    const auto groups = fskill::select_groups(ranking.profiles, k);
    const auto per_author = author_metrics(kept, res, a.common.threads);
    for (const auto& id : groups.top) top_vecs.push_back(per_author.at(id));
    for (const auto& id : groups.bottom) bottom_vecs.push_back(per_author.at(id));
    rep.meta()["unit"] = "author";
  } else {
    // Notes are the unit: the K lowest and K highest standardized errors.
    const auto s = score_records(kept, analyst_cfg(a));
    std::vector<std::pair<double, const ForecastRecord*>> order;
    for (const auto& r : kept)
      if (auto it = s.z.find(r.record_id); it != s.z.end()) order.emplace_back(it->second, &r);
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
      return x.first != y.first ? x.first < y.first : x.second->record_id < y.second->record_id;
    });
    const std::size_t k = a.k == 0 ? order.size() / 2 : a.k;
    if (k == 0 || 2 * k > order.size())
      fskill::fail(ErrorKind::kInvalidArgument, "compare: need 1 <= K <= n/2 scored notes");
    for (std::size_t i = 0; i < k; ++i) {
      top_vecs.push_back(fskill::compute_metrics(order[i].second->justification, res));
      bottom_vecs.push_back(fskill::compute_metrics(order[order.size() - 1 - i].second->justification, res));
    }
    rep.meta()["unit"] = "note";
    rep.meta()["warnings"] = s.warnings;
  }

  std::vector<fskill::MetricSamples> samples;
  std::vector<std::string> skipped;
  for (auto m : metrics) {
    fskill::MetricSamples s{std::string(fskill::metric_info(m).name), {}, {}};
    for (const auto& v : top_vecs)
      if (v[m]) s.top.push_back(*v[m]);
    for (const auto& v : bottom_vecs)
      if (v[m]) s.bottom.push_back(*v[m]);
    if (s.top.empty() || s.bottom.empty()) {
      skipped.push_back(s.metric);
      continue;
    }
    samples.push_back(std::move(s));
  }
  fskill::BootstrapConfig bcfg{a.bootstrap, a.common.seed, a.common.threads};
  const auto rows = fskill::compare_groups(samples, bcfg, a.alpha, a.m);
  const std::size_t denom = a.m == 0 ? std::max<std::size_t>(samples.size(), 1) : a.m;
  rep.meta()["bonferroni_threshold"] = a.alpha / static_cast<double>(denom);
  rep.meta()["n_top"] = top_vecs.size();
  rep.meta()["n_bottom"] = bottom_vecs.size();
  rep.meta()["skipped_metrics"] = skipped;
  Table t{{"metric", "top", "bottom", "dir", "p", "sig"}, {}};
  for (const auto& g : rows) {
    rep.row({{"metric", g.metric},
             {"mean_top", g.mean_top},
             {"mean_bottom", g.mean_bottom},
             {"direction", fskill::direction_name(g.direction)},
             {"p_value", g.p_value},
             {"bonferroni", g.passes_bonferroni},
             {"n_top", g.n_top},
             {"n_bottom", g.n_bottom},
             {"n_bootstrap", g.n_bootstrap}});
    t.rows.push_back({g.metric, fixed(g.mean_top), fixed(g.mean_bottom), arrow(g.direction), p_band(g.p_value),
                      g.passes_bonferroni ? "*" : ""});
  }
  rep.note("# ↑ top group higher, ↓ bottom group higher, * passes Bonferroni at " +
           fixed(a.alpha / static_cast<double>(denom), 6));
  rep.table("", std::move(t));
  rep.write();
}

fskill::TrainConfig train_config(const Args& a) {
  auto t = a.model.train;
  t.seed = a.common.seed;
  t.threads = a.common.threads;
  return t;
}

fskill::FinancialSplitConfig split_config(const Args& a) {
  fskill::FinancialSplitConfig cfg;
  cfg.eval_frac = a.eval_frac;
  cfg.seed = a.common.seed;
  cfg.k = a.k;
  return cfg;
}

fskill::FinancialSplit eps_split(const std::vector<ForecastRecord>& records, const Args& a) {
  const auto s = score_records(records, analyst_cfg(a));
  return fskill::financial_split(records, s.z, split_config(a));
}

void add_features(Report& rep, Table& t, const fskill::ModelArtifact& m, std::size_t n) {
  n = std::min(n, m.space.dim());
  if (n == 0) return;
  const auto [high, low] = fskill::top_features(m, n);
  for (const auto* side : {&high, &low}) {
    const char* label = side == &high ? "top" : "bottom";
    for (const auto& f : *side) {
      rep.row({{"kind", "feature"}, {"side", label}, {"name", f.name}, {"weight", f.weight}});
      t.rows.push_back({label, f.name, fixed(f.weight)});
    }
  }
}

json model_summary(const fskill::ModelArtifact& m) {
  return {{"dim", m.space.dim()},
          {"vocab_size", m.space.vocab_size()},
          {"final_loss", m.final_loss},
          {"final_grad_norm", m.final_grad_norm},
          {"data_hash", m.data_hash}};
}

void cmd_train(const Args& a) {
  const auto c = read_corpus(a.input);
  json cfg = {{"k", a.k},
              {"folds", a.folds},
              {"model", model_config(a.model)},
              {"filter", filter_config(a.filter)},
              {"analyst", analyst_config(a)},
              {"eval_frac", a.eval_frac},
              {"lexicons", lexicon_config(a.lex)}};
  Report rep(a.common, "train", c.hash, cfg);
  const auto kept = run_filters(c.records, a.filter, rep);
  const auto res = load_resources(a.lex);
  const auto fcfg = feature_config(a.model);
  const auto tcfg = train_config(a);
  Table summary{{"quantity", "value"}, {}};

  std::vector<fskill::Document> docs;
  std::optional<fskill::FinancialSplit> split;
  if (corpus_domain(kept) == Domain::kBinary) {
    auto ranking = rank_authors(c.records, kept, a.filter.score_all, analyst_cfg(a));
    const std::size_t k = a.k == 0 ? ranking.profiles.size() / 2 : a.k;
    docs = author_documents(kept, ranking.profiles, k, fcfg, res, a.common.threads);
    if (a.folds > 0) {
      const auto cv = fskill::crossval_accuracy(docs, a.folds, a.common.seed, fcfg, tcfg);
      for (std::size_t f = 0; f < cv.fold_accuracy.size(); ++f) {
        rep.row({{"kind", "cv_fold"}, {"fold", f}, {"accuracy", cv.fold_accuracy[f]}});
        summary.rows.push_back({"fold " + std::to_string(f) + " accuracy", fixed(cv.fold_accuracy[f])});
      }
      rep.row({{"kind", "cv_mean"}, {"folds", a.folds}, {"accuracy", cv.mean_accuracy}});
      summary.rows.push_back({"cv accuracy", fixed(cv.mean_accuracy)});
    }
  } else {
    split = eps_split(kept, a);
    docs = note_documents(split->train, fcfg, res, a.common.threads);
    rep.meta()["split"] = {{"train", split->train.size()}, {"dev", split->dev.size()}, {"test", split->test.size()}};
  }
  const auto model = fskill::fit_model(docs, fcfg, tcfg);
  if (!a.model_path.empty()) fskill::save_model(a.model_path, model);
  rep.row({{"kind", "model"}, {"documents", docs.size()}, {"summary", model_summary(model)}});
  summary.rows.push_back({"documents", std::to_string(docs.size())});
  summary.rows.push_back({"features", std::to_string(model.space.dim())});
  summary.rows.push_back({"final loss", fixed(model.final_loss, 6)});
  summary.rows.push_back({"gradient norm", fixed(model.final_grad_norm, 8)});
  if (split) {
    const auto dev = note_documents(split->dev, fcfg, res, a.common.threads);
    const double acc = accuracy(model, dev);
    rep.row({{"kind", "dev_accuracy"}, {"documents", dev.size()}, {"accuracy", acc}});
    summary.rows.push_back({"dev accuracy", fixed(acc)});
  }
  Table feats{{"side", "feature", "weight"}, {}};
  add_features(rep, feats, model, a.top_n);
  rep.table("", std::move(summary));
  rep.table("Highest and lowest weighted features", std::move(feats));
  rep.write();
}

void cmd_evaluate(const Args& a) {
  const auto c = read_corpus(a.input);
  const auto model = fskill::load_model(a.model_path);
  json cfg = {{"k", a.k},
              {"model", fskill::hex64(fskill::fnv1a64(read_all(a.model_path)))},
              {"split", a.split},
              {"filter", filter_config(a.filter)},
              {"analyst", analyst_config(a)},
              {"eval_frac", a.eval_frac},
              {"lexicons", lexicon_config(a.lex)}};
  Report rep(a.common, "evaluate", c.hash, cfg);
  const auto kept = run_filters(c.records, a.filter, rep);
  const auto res = load_resources(a.lex);
  const auto& fcfg = model.space.config();
  std::vector<fskill::Document> docs;
  if (corpus_domain(kept) == Domain::kBinary) {
    auto ranking = rank_authors(c.records, kept, a.filter.score_all, analyst_cfg(a));
    const std::size_t k = a.k == 0 ? ranking.profiles.size() / 2 : a.k;
    docs = author_documents(kept, ranking.profiles, k, fcfg, res, a.common.threads);
  } else {
    const auto split = eps_split(kept, a);
    docs = note_documents(a.split == "dev" ? split.dev : split.test, fcfg, res, a.common.threads);
  }
  Table t{{"id", "label", "probability", "prediction"}, {}};
  for (const auto& d : docs) {
    const double p = model.probability(d);
    const int pred = model.predict(d);
    rep.row({{"id", d.id}, {"label", d.label}, {"probability", p}, {"prediction", pred}});
    t.rows.push_back({d.id, std::to_string(d.label), fixed(p), std::to_string(pred)});
  }
  const double acc = accuracy(model, docs);
  rep.meta()["accuracy"] = acc;
  rep.meta()["documents"] = docs.size();
  rep.note("accuracy " + fixed(acc) + " over " + std::to_string(docs.size()) + " documents");
  rep.table("", std::move(t));
  rep.write();
}

void cmd_early(const Args& a) {
  const auto c = read_corpus(a.input);
  json cfg = {{"ns", a.ns},
              {"train_frac", a.train_frac},
              {"val_frac", a.val_frac},
              {"model", model_config(a.model)},
              {"filter", filter_config(a.filter)}};
  Report rep(a.common, "early", c.hash, cfg);
  const auto kept = run_filters(c.records, a.filter, rep);
  if (corpus_domain(kept) != Domain::kBinary)
    fskill::fail(ErrorKind::kInvalidArgument, "early needs a binary-domain corpus");
  auto ranking = rank_authors(c.records, kept, a.filter.score_all, analyst_cfg(a));
  fskill::EarlyConfig ecfg;
  ecfg.features = feature_config(a.model);
  if (!ecfg.features.dense_names.empty())
    throw UsageError("early supports the ngrams feature group only");
  ecfg.train = train_config(a);
  ecfg.seed = a.common.seed;
  ecfg.ns = a.ns;
  ecfg.train_frac = a.train_frac;
  ecfg.val_frac = a.val_frac;
  const auto r = fskill::early_identification(kept, ranking.scored.z, ranking.profiles, ecfg);
  rep.meta()["split"] = {{"train", r.split.train.size()},
                         {"val", r.split.val.size()},
                         {"test", r.split.test.size()},
                         {"test_top", r.test_top}};
  Table t{{"N", "model", "baseline"}, {}};
  for (std::size_t i = 0; i < r.ns.size(); ++i) {
    rep.row({{"n", r.ns[i]}, {"model_precision", r.model_precision[i]},
             {"baseline_precision", r.baseline_precision[i]}});
    t.rows.push_back({std::to_string(r.ns[i]), fixed(r.model_precision[i], 3), fixed(r.baseline_precision[i], 3)});
  }
  rep.table("Precision@N on test authors", std::move(t));
  rep.write();
}

void cmd_split_financial(const Args& a) {
  const auto c = read_corpus(a.input);
  json cfg = {{"k", a.k}, {"eval_frac", a.eval_frac}, {"analyst", analyst_config(a)}};
  Report rep(a.common, "split-financial", c.hash, cfg);
  if (corpus_domain(c.records) != Domain::kEps)
    fskill::fail(ErrorKind::kInvalidArgument, "split-financial needs an eps-domain corpus");
  const auto split = eps_split(c.records, a);
  rep.meta()["train_companies"] = split.train_companies;
  rep.meta()["eval_companies"] = split.eval_companies;
  Table t{{"split", "notes", "accurate", "inaccurate"}, {}};
  for (const auto& [name, notes] : {std::pair{"train", &split.train}, {"dev", &split.dev}, {"test", &split.test}}) {
    std::size_t pos = 0;
    for (const auto& n : *notes) {
      pos += n.label;
      rep.row({{"split", name},
               {"record_id", n.record.record_id},
               {"author_id", n.record.author_id},
               {"target_id", n.record.target_id},
               {"year", fskill::year_of(n.record.timestamp)},
               {"std_error", n.std_error},
               {"label", n.label}});
    }
    t.rows.push_back({name, std::to_string(notes->size()), std::to_string(pos), std::to_string(notes->size() - pos)});
  }
  rep.table("", std::move(t));
  rep.write();
}

const fskill::PatternSet& patterns_for(const std::string& path, std::optional<fskill::PatternSet>& storage) {
  if (path.empty()) return fskill::bundled_patterns();
  storage = fskill::PatternSet::load(path);
  return *storage;
}

json estimate_json(const fskill::EpsEstimate& e) {
  return {{"record_id", e.record_id},
          {"pattern_id", e.pattern_id},
          {"time_label", e.time_label},
          {"canonical", fskill::canonical_time_label(e.time_label)},
          {"value", e.value},
          {"begin", e.span.begin},
          {"end", e.span.end}};
}

void cmd_extract_eps(const Args& a) {
  const auto c = read_corpus(a.input);
  json cfg = {{"earliest", a.earliest}, {"first_year", a.first_year}, {"last_year", a.last_year}};
  if (!a.patterns_path.empty()) cfg["patterns"] = fskill::hex64(fskill::fnv1a64(read_all(a.patterns_path)));
  Report rep(a.common, "extract-eps", c.hash, cfg);
  std::optional<fskill::PatternSet> storage;
  const auto& patterns = patterns_for(a.patterns_path, storage);
  std::vector<std::vector<fskill::EpsEstimate>> found(c.records.size());
  fskill::parallel_for(c.records.size(), a.common.threads, [&](std::size_t i) {
    found[i] = fskill::extract_eps(c.records[i].justification, patterns, c.records[i].record_id);
  });
  Table t{{"record_id", "time", "value", "pattern"}, {}};
  std::vector<std::string> warnings;
  std::size_t total = 0;
  auto emit = [&](const fskill::EpsEstimate& e) {
    rep.row(estimate_json(e));
    t.rows.push_back({e.record_id, fskill::canonical_time_label(e.time_label), fixed(e.value, 2),
                      std::to_string(e.pattern_id)});
    ++total;
  };
  for (const auto& es : found) {
    if (!a.earliest) {
      for (const auto& e : es) emit(e);
      continue;
    }
    auto r = fskill::earliest_forecast(es, a.first_year, a.last_year);
    for (auto& w : r.warnings) warnings.push_back(std::move(w));
    if (r.estimate) emit(*r.estimate);
  }
  rep.meta()["estimates"] = total;
  rep.meta()["warnings"] = warnings;
  rep.table("", std::move(t));
  rep.write();
}

void cmd_eval_eps(const Args& a) {
  const auto c = read_corpus(a.input);
  json cfg = {{"gold", fskill::hex64(fskill::fnv1a64(read_all(a.gold_path)))}};
  if (!a.patterns_path.empty()) cfg["patterns"] = fskill::hex64(fskill::fnv1a64(read_all(a.patterns_path)));
  Report rep(a.common, "eval-eps", c.hash, cfg);
  std::optional<fskill::PatternSet> storage;
  const auto& patterns = patterns_for(a.patterns_path, storage);
  const auto gold = fskill::load_gold(a.gold_path);
  std::vector<fskill::EpsEstimate> predicted;
  for (const auto& r : c.records)
    for (auto& e : fskill::extract_eps(r.justification, patterns, r.record_id)) predicted.push_back(std::move(e));
  const auto s = fskill::evaluate_extraction(predicted, gold);
  rep.row({{"precision", opt_json(s.precision)},
           {"recall", s.recall},
           {"correct", s.correct},
           {"predicted", s.predicted},
           {"gold", s.gold}});
  rep.table("", Table{{"precision", "recall", "correct", "predicted", "gold"},
                      {{fixed(s.precision), fixed(s.recall), std::to_string(s.correct), std::to_string(s.predicted),
                        std::to_string(s.gold)}}});
  rep.write();
}

void cmd_calibration(const Args& a) {
  const auto c = read_corpus(a.input);
  Report rep(a.common, "calibration", c.hash, {{"bins", a.bins}, {"k", a.k}});
  std::vector<std::pair<std::string, std::vector<ForecastRecord>>> groups{{"all", c.records}};
  if (a.k > 0) {
    const auto s = score_records(c.records, analyst_cfg(a));
    auto profiles = fskill::rank_forecasters(c.records, s.z);
    const auto sel = fskill::select_groups(profiles, a.k);
    const std::set<std::string> top(sel.top.begin(), sel.top.end()), bottom(sel.bottom.begin(), sel.bottom.end());
    std::vector<ForecastRecord> t, b;
    for (const auto& r : c.records) {
      if (top.contains(r.author_id)) t.push_back(r);
      if (bottom.contains(r.author_id)) b.push_back(r);
    }
    groups.emplace_back("top", std::move(t));
    groups.emplace_back("bottom", std::move(b));
  }
  for (const auto& [name, records] : groups) {
    const auto curve = fskill::calibration_curve(records, a.bins);
    Table t{{"bin", "lo", "hi", "count", "mean_estimate", "frequency"}, {}};
    for (std::size_t i = 0; i < curve.bins.size(); ++i) {
      const auto& b = curve.bins[i];
      rep.row({{"group", name},
               {"bin", i},
               {"lo", b.lo},
               {"hi", b.hi},
               {"count", b.count},
               {"mean_estimate", opt_json(b.mean_estimate)},
               {"frequency", opt_json(b.frequency)}});
      t.rows.push_back({std::to_string(i), fixed(b.lo, 2), fixed(b.hi, 2), std::to_string(b.count),
                        fixed(b.mean_estimate), fixed(b.frequency)});
    }
    rep.table("group " + name + " (" + std::to_string(curve.total()) + " forecasts)", std::move(t));
  }
  rep.write();
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void cmd_synth(Args a) {
  auto& s = a.synth;
  s.seed = a.common.seed;
  s.threads = a.common.threads;
  s.domain = a.domain == "eps" ? Domain::kEps : Domain::kBinary;
  s.noise = a.noise == "gaussian" ? fskill::NoiseShape::kGaussian : fskill::NoiseShape::kRademacher;
  if (a.forecasts > 0) s.forecasts_min = s.forecasts_max = a.forecasts;
  json cfg = {{"domain", a.domain},
              {"authors", s.n_authors},
              {"forecasts_min", s.forecasts_min},
              {"forecasts_max", s.forecasts_max},
              {"questions", s.n_questions},
              {"companies", s.n_companies},
              {"skill_lo", s.skill_lo},
              {"skill_hi", s.skill_hi},
              {"sigma", s.sigma},
              {"noise", a.noise},
              {"hedge", {s.hedge.base, s.hedge.slope}},
              {"sentiment", {s.sentiment.base, s.sentiment.slope}},
              {"sentences", {s.sentences.base, s.sentences.slope}}};
  std::optional<fskill::TemplateBank> bank;
  if (!a.templates_path.empty()) {
    const auto bytes = read_all(a.templates_path);
    cfg["templates"] = fskill::hex64(fskill::fnv1a64(bytes));
    bank = fskill::TemplateBank::parse(bytes);
  }
  Report rep(a.common, "synth", fskill::hex64(fskill::fnv1a64("")), cfg);
  const auto corpus = fskill::generate_corpus(s, bank ? *bank : fskill::bundled_templates());
  rep.meta()["records"] = corpus.records.size();
  for (const auto& r : corpus.records) rep.row(fskill::record_to_json(r));

  std::string truth_path = a.truth_path;
  if (truth_path.empty() && a.common.out != "-") truth_path = a.common.out + ".truth.csv";
  if (!truth_path.empty()) {
    std::string body = s.domain == Domain::kBinary ? "author_id,skill\n" : "record_id,quality\n";
    for (const auto& t : corpus.truth) body += t.id + "," + format_real(t.skill) + "\n";
    Report::emit(truth_path, body);
    rep.meta()["truth"] = truth_path;
  }
  rep.table("", Table{{"quantity", "value"},
                      {{"records", std::to_string(corpus.records.size())},
                       {"truth rows", std::to_string(corpus.truth.size())}}});
  rep.write();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fskill: forecasting skill from text"};
  app.require_subcommand(1);
  Args a;

  auto* ingest = app.add_subcommand("ingest", "Load a corpus and echo normalized records");
  add_common(ingest, a.common);
  add_input(ingest, a.input);

  auto* filter = app.add_subcommand("filter", "Apply length, quote, language and per-author filters");
  add_common(filter, a.common);
  add_input(filter, a.input);
  add_filter(filter, a.filter, false);

  auto* score = app.add_subcommand("score", "Brier or EPS-error scores, standardized");
  add_common(score, a.common);
  add_input(score, a.input);

  auto* rank = app.add_subcommand("rank", "Rank authors by mean standardized score");
  add_common(rank, a.common);
  add_input(rank, a.input);
  rank->add_option("--k", a.k, "Mark top-K and bottom-K groups (0 = none)");

  auto* metrics = app.add_subcommand("metrics", "Linguistic metrics per author or per record");
  add_common(metrics, a.common);
  add_input(metrics, a.input);
  add_lexicons(metrics, a.lex);
  metrics->add_flag("--per-record", a.per_record);

  auto* compare = app.add_subcommand("compare", "Bootstrap comparison of top-K and bottom-K groups");
  add_common(compare, a.common);
  add_input(compare, a.input);
  add_filter(compare, a.filter, true);
  add_lexicons(compare, a.lex);
  compare->add_option("--k", a.k, "Group size (0 = half)");
  compare->add_option("--bootstrap", a.bootstrap, "Resamples")->check(CLI::Range(1000ul, 100000000ul));
  compare->add_option("--alpha", a.alpha)->check(CLI::Range(0.0, 1.0));
  compare->add_option("--m", a.m, "Bonferroni denominator (0 = metrics tested)");
  compare->add_option("--metrics", a.metric_subset, "Metric names to test")->delimiter(',');

  auto* train = app.add_subcommand("train", "Train the text classifier");
  add_common(train, a.common);
  add_input(train, a.input);
  add_filter(train, a.filter, true);
  add_lexicons(train, a.lex);
  add_model(train, a.model);
  train->add_option("--k", a.k, "Group size (0 = half)");
  train->add_option("--folds", a.folds, "Cross-validation folds (0 = skip)");
  train->add_option("--model", a.model_path, "Write the trained model here");
  train->add_option("--top-features", a.top_n);
  train->add_option("--eval-frac", a.eval_frac)->check(CLI::Range(0.0, 1.0));

  auto* evaluate = app.add_subcommand("evaluate", "Score a saved model on a corpus");
  add_common(evaluate, a.common);
  add_input(evaluate, a.input);
  add_filter(evaluate, a.filter, true);
  add_lexicons(evaluate, a.lex);
  evaluate->add_option("--model", a.model_path)->required()->check(CLI::ExistingFile);
  evaluate->add_option("--k", a.k, "Group size (0 = half)");
  evaluate->add_option("--split", a.split, "Financial split to score")->check(CLI::IsMember({"dev", "test"}));
  evaluate->add_option("--eval-frac", a.eval_frac)->check(CLI::Range(0.0, 1.0));

  auto* early = app.add_subcommand("early", "Identify skilled authors from their first justification");
  add_common(early, a.common);
  add_input(early, a.input);
  add_filter(early, a.filter, true);
  add_model(early, a.model);
  early->add_option("--ns", a.ns, "Cutoffs for Precision@N")->delimiter(',');
  early->add_option("--train-frac", a.train_frac)->check(CLI::Range(0.0, 1.0));
  early->add_option("--val-frac", a.val_frac)->check(CLI::Range(0.0, 1.0));

  auto* split = app.add_subcommand("split-financial", "Company and year split of labelled notes");
  add_common(split, a.common);
  add_input(split, a.input);
  split->add_option("--k", a.k, "Notes per class (0 = half)");
  split->add_option("--eval-frac", a.eval_frac)->check(CLI::Range(0.0, 1.0));

  auto* extract = app.add_subcommand("extract-eps", "Extract EPS estimates from note text");
  add_common(extract, a.common);
  add_input(extract, a.input);
  extract->add_option("--patterns", a.patterns_path)->check(CLI::ExistingFile);
  extract->add_flag("--earliest", a.earliest, "Keep only the earliest in-range estimate per note");
  extract->add_option("--first-year", a.first_year);
  extract->add_option("--last-year", a.last_year);

  auto* eval_eps = app.add_subcommand("eval-eps", "Precision and recall of extraction against gold");
  add_common(eval_eps, a.common);
  add_input(eval_eps, a.input);
  eval_eps->add_option("--gold", a.gold_path)->required()->check(CLI::ExistingFile);
  eval_eps->add_option("--patterns", a.patterns_path)->check(CLI::ExistingFile);

  auto* calibration = app.add_subcommand("calibration", "Calibration table for plotting");
  add_common(calibration, a.common);
  add_input(calibration, a.input);
  calibration->add_option("--bins", a.bins)->check(CLI::Range(2ul, 1000ul));
  calibration->add_option("--k", a.k, "Also tabulate top-K and bottom-K groups");

  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus with planted skill");
  add_common(synth, a.common);
  synth->add_option("--domain", a.domain)->check(CLI::IsMember({"binary", "eps"}));
  synth->add_option("--authors", a.synth.n_authors)->check(CLI::Range(1ul, 1000000ul));
  synth->add_option("--forecasts", a.forecasts, "Forecasts per author (sets min and max)");
  synth->add_option("--forecasts-min", a.synth.forecasts_min);
  synth->add_option("--forecasts-max", a.synth.forecasts_max);
  synth->add_option("--questions", a.synth.n_questions);
  synth->add_option("--companies", a.synth.n_companies);
  synth->add_option("--skill-lo", a.synth.skill_lo);
  synth->add_option("--skill-hi", a.synth.skill_hi);
  synth->add_option("--sigma", a.synth.sigma);
  synth->add_option("--noise", a.noise)->check(CLI::IsMember({"rademacher", "gaussian"}));
  synth->add_option("--hedge-base", a.synth.hedge.base);
  synth->add_option("--hedge-slope", a.synth.hedge.slope);
  synth->add_option("--sentiment-base", a.synth.sentiment.base);
  synth->add_option("--sentiment-slope", a.synth.sentiment.slope);
  synth->add_option("--sentences-base", a.synth.sentences.base);
  synth->add_option("--sentences-slope", a.synth.sentences.slope);
  synth->add_option("--templates", a.templates_path)->check(CLI::ExistingFile);
  synth->add_option("--truth", a.truth_path, "Truth sidecar path (default <out>.truth.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ingest) cmd_ingest(a);
    else if (*filter) cmd_filter(a);
    else if (*score) cmd_score(a);
    else if (*rank) cmd_rank(a);
    else if (*metrics) cmd_metrics(a);
    else if (*compare) cmd_compare(a);
    else if (*train) cmd_train(a);
    else if (*evaluate) cmd_evaluate(a);
    else if (*early) cmd_early(a);
    else if (*split) cmd_split_financial(a);
    else if (*extract) cmd_extract_eps(a);
    else if (*eval_eps) cmd_eval_eps(a);
    else if (*calibration) cmd_calibration(a);
    else if (*synth) cmd_synth(a);
  } catch (const UsageError& e) {
    std::cerr << "fskill: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "fskill: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}
