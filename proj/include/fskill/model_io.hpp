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

// Model file: text header of key=value lines, the vocabulary one n-gram per
// line, then "WEIGHTS <n>" and n little-endian IEEE-754 doubles.
//
//   FSKMODEL 1
//   ngram_sizes=1,2
//   ...
//   VOCAB <V>
//   <UNK>
//   ...
//   WEIGHTS <n>
//   <binary>

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fskill/error.hpp"
#include "fskill/hash.hpp"
#include "fskill/model.hpp"

namespace fskill {

inline constexpr std::string_view kModelMagic = "FSKMODEL 1";

namespace detail {

inline std::string hexfloat(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

inline double parse_hexfloat(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) fail(ErrorKind::kParse, "model: bad number '" + s + "'");
  return v;
}

template <typename T, typename F>
std::string join(const std::vector<T>& xs, F&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += fmt(xs[i]);
  }
  return out;
}

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    out.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline void put_le_double(std::ostream& out, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
  out.write(bytes, 8);
}

inline double get_le_double(std::istream& in) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) fail(ErrorKind::kParse, "model: truncated weights");
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) bits = (bits << 8) | bytes[i];
  return std::bit_cast<double>(bits);
}

}  // namespace detail

inline void write_model(std::ostream& out, const ModelArtifact& m) {
  const auto& cfg = m.space.config();
  out << kModelMagic << '\n';
  out << "ngram_sizes=" << detail::join(cfg.ngram_sizes, [](int n) { return std::to_string(n); }) << '\n';
  out << "min_count=" << cfg.min_count << '\n';
  out << "use_ngrams=" << (cfg.use_ngrams ? 1 : 0) << '\n';
  out << "dense_names=" << detail::join(cfg.dense_names, [](const std::string& s) { return s; }) << '\n';
  out << "dense_mean=" << detail::join(m.space.dense_mean(), detail::hexfloat) << '\n';
  out << "dense_sd=" << detail::join(m.space.dense_sd(), detail::hexfloat) << '\n';
  out << "learning_rate=" << detail::hexfloat(m.config.learning_rate) << '\n';
  out << "l2=" << detail::hexfloat(m.config.l2) << '\n';
  out << "epochs=" << m.config.epochs << '\n';
  out << "grad_tol=" << detail::hexfloat(m.config.grad_tol) << '\n';
  out << "seed=" << m.config.seed << '\n';
  out << "data_hash=" << m.data_hash << '\n';
  out << "vocab_hash=" << hex64(m.space.vocab_hash()) << '\n';
  out << "final_loss=" << detail::hexfloat(m.final_loss) << '\n';
  out << "final_grad_norm=" << detail::hexfloat(m.final_grad_norm) << '\n';
  out << "VOCAB " << m.space.vocab_size() << '\n';
  for (const auto& v : m.space.vocabulary()) out << v << '\n';
  out << "WEIGHTS " << m.weights.size() << '\n';
  for (double w : m.weights) detail::put_le_double(out, w);
}

inline void save_model(const std::string& path, const ModelArtifact& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::kIo, "cannot write model: " + path);
  write_model(out, m);
  if (!out) fail(ErrorKind::kIo, "error writing model: " + path);
}

inline ModelArtifact read_model(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kModelMagic)
    fail(ErrorKind::kParse, "model: missing FSKMODEL 1 header");
  std::map<std::string, std::string> kv;
  std::size_t vocab_n = 0;
  for (;;) {
    if (!std::getline(in, line)) fail(ErrorKind::kParse, "model: truncated header");
    if (line.starts_with("VOCAB ")) {
      vocab_n = std::stoul(line.substr(6));
      break;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorKind::kParse, "model: bad header line '" + line + "'");
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  auto get = [&](const char* key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) fail(ErrorKind::kParse, std::string("model: missing key ") + key);
    return it->second;
  };
  std::vector<std::string> vocab(vocab_n);
  for (auto& v : vocab)
    if (!std::getline(in, v)) fail(ErrorKind::kParse, "model: truncated vocabulary");

  FeatureConfig fcfg;
  fcfg.ngram_sizes.clear();
  for (const auto& s : detail::split_csv(get("ngram_sizes"))) fcfg.ngram_sizes.push_back(std::stoi(s));
  fcfg.min_count = std::stoul(get("min_count"));
  fcfg.use_ngrams = get("use_ngrams") == "1";
  fcfg.dense_names = detail::split_csv(get("dense_names"));
  std::vector<double> mean, sd;
  for (const auto& s : detail::split_csv(get("dense_mean"))) mean.push_back(detail::parse_hexfloat(s));
  for (const auto& s : detail::split_csv(get("dense_sd"))) sd.push_back(detail::parse_hexfloat(s));

  ModelArtifact m;
  m.space = FeatureSpace::restore(std::move(fcfg), std::move(vocab), std::move(mean), std::move(sd));
  if (hex64(m.space.vocab_hash()) != get("vocab_hash"))
    fail(ErrorKind::kParse, "model: vocabulary hash mismatch");
  m.config.learning_rate = detail::parse_hexfloat(get("learning_rate"));
  m.config.l2 = detail::parse_hexfloat(get("l2"));
  m.config.epochs = std::stoul(get("epochs"));
  m.config.grad_tol = detail::parse_hexfloat(get("grad_tol"));
  m.config.seed = std::stoull(get("seed"));
  m.data_hash = get("data_hash");
  m.final_loss = detail::parse_hexfloat(get("final_loss"));
  m.final_grad_norm = detail::parse_hexfloat(get("final_grad_norm"));

  if (!std::getline(in, line) || !line.starts_with("WEIGHTS "))
    fail(ErrorKind::kParse, "model: missing WEIGHTS section");
  const std::size_t n = std::stoul(line.substr(8));
  if (n != m.space.dim() + 1) fail(ErrorKind::kParse, "model: weight count does not match features");
  m.weights.resize(n);
  for (auto& w : m.weights) w = detail::get_le_double(in);
  return m;
}

inline ModelArtifact load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kIo, "cannot read model: " + path);
  try {
    return read_model(in);
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::kParse, "model: malformed number in " + path);
  } catch (const std::out_of_range&) {
    fail(ErrorKind::kParse, "model: number out of range in " + path);
  }
}

}  // namespace fskill
