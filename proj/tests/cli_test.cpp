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
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#ifndef FSKILL_CLI
#error "FSKILL_CLI must name the fskill executable"
#endif

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct Result {
  int rc = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = "\"" FSKILL_CLI "\" " + args + " 2>/dev/null";
  Result r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = ::pclose(p);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fskill_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& body) const {
    std::ofstream(path(name), std::ios::binary) << body;
    return path(name);
  }

  fs::path dir_;
};

const char* kRecord =
    R"({"record_id":"r1","author_id":"a","target_id":"q","timestamp":"2016-01-01T00:00:00Z",)"
    R"("estimate":0.7,"justification":"x","outcome":1,"domain_tag":"binary"})";

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(run("").rc, 1);
  EXPECT_EQ(run("score --no-such-flag").rc, 1);
  EXPECT_EQ(run("evaluate -c x").rc, 1);  // --model is required
  EXPECT_EQ(run("synth --noise uniform").rc, 1);
  EXPECT_EQ(run("--help").rc, 0);
}

TEST_F(CliTest, DataErrorsExitTwo) {
  EXPECT_EQ(run("score -c " + path("missing.jsonl")).rc, 2);
  const auto bad = write("bad.jsonl", std::string(kRecord) + "\n{\"record_id\":3}\n");
  EXPECT_EQ(run("ingest -c " + bad).rc, 2);
  const auto r = run("ingest --keep-going -c " + bad);
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(lines(r.out).size(), 2u);
}

TEST_F(CliTest, MetaLineEchoesSeedConfigAndHash) {
  const auto c = write("c.jsonl", std::string(kRecord) + "\n");
  const auto r = run("score --seed 42 -c " + c);
  ASSERT_EQ(r.rc, 0);
  const auto meta = json::parse(lines(r.out).at(0)).at("_meta");
  EXPECT_EQ(meta.at("command"), "score");
  EXPECT_EQ(meta.at("seed"), 42);
  EXPECT_TRUE(meta.at("config").is_object());
  EXPECT_EQ(meta.at("input_hash").get<std::string>().size(), 16u);
  const auto other = write("d.jsonl", std::string(kRecord) + "\n\n");
  EXPECT_NE(json::parse(lines(run("score --seed 42 -c " + other).out).at(0))["_meta"]["input_hash"],
            meta.at("input_hash"));
}

TEST_F(CliTest, SynthScoreRankPipelineKeepsAuthors) {
  const auto r = run("synth --authors 200 --forecasts 8 --seed 1 | \"" FSKILL_CLI "\" score | \"" FSKILL_CLI "\" rank");
  ASSERT_EQ(r.rc, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 201u);
  EXPECT_EQ(json::parse(ls[1]).at("rank"), 1);
  EXPECT_EQ(json::parse(ls[200]).at("rank"), 200);
}

TEST_F(CliTest, RankAcceptsCorpusDirectly) {
  const auto c = path("s.jsonl");
  ASSERT_EQ(run("synth --authors 30 --forecasts 6 --seed 2 --out " + c).rc, 0);
  const auto direct = run("rank -c " + c);
  const auto piped = run("score -c " + c + " | \"" FSKILL_CLI "\" rank");
  ASSERT_EQ(direct.rc, 0);
  auto body = [](const std::string& s) {
    auto ls = lines(s);
    ls.erase(ls.begin());
    return ls;
  };
  EXPECT_EQ(body(direct.out), body(piped.out));
}

TEST_F(CliTest, SynthWritesTruthSidecar) {
  const auto c = path("s.jsonl");
  ASSERT_EQ(run("synth --authors 25 --forecasts 4 --out " + c).rc, 0);
  std::ifstream truth(c + ".truth.csv");
  std::string all((std::istreambuf_iterator<char>(truth)), std::istreambuf_iterator<char>());
  const auto ls = lines(all);
  ASSERT_EQ(ls.size(), 26u);
  EXPECT_EQ(ls[0], "author_id,skill");
}

TEST_F(CliTest, FilterOutputIsACorpusAndIdempotent) {
  const auto c = path("s.jsonl");
  ASSERT_EQ(run("synth --authors 20 --forecasts 5 --out " + c).rc, 0);
  const auto once = run("filter -c " + c + " --min-tokens 40");
  ASSERT_EQ(once.rc, 0);
  const auto f1 = write("f1.jsonl", once.out);
  const auto twice = run("filter -c " + f1 + " --min-tokens 40");
  ASSERT_EQ(twice.rc, 0);
  auto body = [](const std::string& s) {
    auto ls = lines(s);
    ls.erase(ls.begin());
    return ls;
  };
  EXPECT_EQ(body(once.out), body(twice.out));
  const auto meta = json::parse(lines(once.out)[0])["_meta"]["filter"];
  EXPECT_EQ(meta["input"].get<int>(), 100);
  EXPECT_EQ(meta["retained"].get<int>() + meta["dropped_length"].get<int>() + meta["dropped_quotes"].get<int>() +
                meta["dropped_language"].get<int>() + meta["dropped_author"].get<int>(),
            100);
}

TEST_F(CliTest, CsvInputMatchesJsonl) {
  const auto j = write("c.jsonl", std::string(kRecord) + "\n");
  const auto c = write("c.csv",
                       "record_id,author_id,target_id,timestamp,estimate,justification,outcome,domain_tag\n"
                       "r1,a,q,2016-01-01T00:00:00Z,0.7,x,1,binary\n");
  const auto a = lines(run("ingest -c " + j).out), b = lines(run("ingest -c " + c).out);
  ASSERT_EQ(a.size(), 2u);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(a[1], b[1]);
}

TEST_F(CliTest, CompareTextTableUsesArrowsAndStars) {
  const auto c = path("s.jsonl");
  ASSERT_EQ(run("synth --authors 60 --forecasts 20 --seed 3 --out " + c).rc, 0);
  const auto r = run("compare -c " + c + " --k 20 --bootstrap 2000 --format text");
  ASSERT_EQ(r.rc, 0);
  EXPECT_NE(r.out.find("pct_uncertain_sentences"), std::string::npos);
  EXPECT_NE(r.out.find("↑"), std::string::npos);
  EXPECT_NE(r.out.find("*"), std::string::npos);
  const auto j = run("compare -c " + c + " --k 20 --bootstrap 2000");
  const auto ls = lines(j.out);
  EXPECT_EQ(ls.size(), 25u);  // meta + 24 metrics
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto row = json::parse(ls[i]);
    const double p = row.at("p_value");
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
}

TEST_F(CliTest, TrainThenEvaluateRoundTrip) {
  const auto c = path("s.jsonl"), m = path("m.bin");
  ASSERT_EQ(run("synth --authors 40 --forecasts 15 --seed 4 --out " + c).rc, 0);
  ASSERT_EQ(run("train -c " + c + " --k 10 --folds 0 --model " + m).rc, 0);
  const auto r = run("evaluate -c " + c + " --k 10 --model " + m);
  ASSERT_EQ(r.rc, 0);
  const auto meta = json::parse(lines(r.out)[0])["_meta"];
  EXPECT_EQ(meta["documents"].get<int>(), 20);
  EXPECT_GE(meta["accuracy"].get<double>(), 0.5);
}

TEST_F(CliTest, ExtractAndEvaluateEps) {
  auto rec = [](const std::string& id, const std::string& text) {
    return json{{"record_id", id},       {"author_id", "a"},  {"target_id", "C"},
                {"timestamp", "2016-03-01T00:00:00Z"}, {"estimate", 1.0}, {"justification", text},
                {"outcome", 1.1},       {"domain_tag", "eps"}}
        .dump();
  };
  const auto c = write(
      "notes.jsonl",
      rec("n1", "We raise '18 and '19 EPS estimates by $4.61 and $5.72 to $19.85 and $25.95 .") + "\n" +
          rec("n2", "We raise our FY 17 EPS estimate to $3.23 from $2.96 and set FY 18 's at $3.43 .") + "\n");
  const auto gold = write("gold.tsv", "n1\t'18\t$19.85\nn1\t'19\t$25.95\nn2\tFY 17\t$3.23\nn2\tFY 18\t$3.43\n");
  const auto ex = run("extract-eps -c " + c);
  ASSERT_EQ(ex.rc, 0);
  EXPECT_EQ(lines(ex.out).size(), 5u);
  const auto earliest = run("extract-eps --earliest -c " + c);
  const auto el = lines(earliest.out);
  ASSERT_EQ(el.size(), 3u);
  EXPECT_EQ(json::parse(el[1])["canonical"], "2018");
  EXPECT_EQ(json::parse(el[2])["value"], 3.23);
  const auto ev = run("eval-eps -c " + c + " --gold " + gold);
  ASSERT_EQ(ev.rc, 0);
  const auto row = json::parse(lines(ev.out).at(1));
  EXPECT_EQ(row["precision"], 1.0);
  EXPECT_EQ(row["recall"], 1.0);
}

TEST_F(CliTest, CalibrationBinsCoverAllForecasts) {
  const auto c = path("s.jsonl");
  ASSERT_EQ(run("synth --authors 30 --forecasts 10 --out " + c).rc, 0);
  const auto r = run("calibration -c " + c + " --bins 5");
  ASSERT_EQ(r.rc, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 6u);
  int total = 0;
  for (std::size_t i = 1; i < ls.size(); ++i) total += json::parse(ls[i])["count"].get<int>();
  EXPECT_EQ(total, 300);
}

TEST_F(CliTest, FinancialSplitIsCompanyDisjoint) {
  const auto c = path("e.jsonl");
  ASSERT_EQ(run("synth --domain eps --authors 10 --forecasts 110 --seed 6 --out " + c).rc, 0);
  const auto r = run("split-financial -c " + c + " --seed 3");
  ASSERT_EQ(r.rc, 0);
  std::set<std::string> train, eval;
  const auto ls = lines(r.out);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto row = json::parse(ls[i]);
    const int year = row["year"];
    if (row["split"] == "train") {
      train.insert(row["target_id"]);
      EXPECT_TRUE(year >= 2014 && year <= 2016);
    } else {
      eval.insert(row["target_id"]);
      EXPECT_EQ(year, row["split"] == "dev" ? 2017 : 2018);
    }
  }
  for (const auto& t : train) EXPECT_FALSE(eval.contains(t)) << t;
}

}  // namespace
