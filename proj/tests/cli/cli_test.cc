// Copyright 2026 The Viewex Authors.
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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include <json.hpp>

namespace viewex {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;
using ::testing::HasSubstr;

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("viewex_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ASSERT_EQ(Run("synth --graphs 8 --base-nodes 12 --seed 3 --out " +
                  Path("SYN"))
                  .code,
              0);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  RunResult Run(const std::string& args, const std::string& env = "") {
    const std::string out = Path("stdout.txt");
    const std::string err = Path("stderr.txt");
    const std::string cmd = env + " " + VIEWEX_CLI + " " + args + " >" + out +
                            " 2>" + err;
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, Slurp(out),
            Slurp(err)};
  }

  std::string Common() const {
    return " --dataset " + Path("SYN") + " --weights " +
           Path("SYN/SYN_weights.json");
  }

  std::string Golden(const std::string& name) const {
    return (fs::path(VIEWEX_TEST_DATA_DIR) / "golden" / name).string();
  }

  void Explain(const std::string& algo, const std::string& out,
               const std::string& extra = "") {
    const RunResult r = Run("explain" + Common() + " --config " +
                            Golden("config.json") + " --algo " + algo +
                            " --out " + Path(out) + extra);
    ASSERT_EQ(r.code, 0) << r.err;
  }

  RunResult Verify(const std::string& views) {
    return Run("verify" + Common() + " --views " + Path(views));
  }

  void Rewrite(const std::string& name, const std::function<void(Json&)>& f) {
    Json j = Json::parse(Slurp(Path(name)));
    f(j);
    std::ofstream(Path(name)) << j.dump(1);
  }

  fs::path dir_;
};

TEST_F(CliTest, GoldenPipeline) {
  Explain("approx", "views.json");
  const RunResult r = Run("metrics" + Common() + " --views " +
                          Path("views.json") + " --baseline 20 --out " +
                          Path("report.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Slurp(Path("report.json")), Slurp(Golden("report.json")));
}

TEST_F(CliTest, TimingLogsAreJsonLines) {
  const RunResult r = Run("explain" + Common() + " --out " + Path("v.json"));
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.err);
  std::string line;
  int phases = 0;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    EXPECT_EQ(j["command"], "explain");
    EXPECT_TRUE(j["seconds"].is_number());
    ++phases;
  }
  EXPECT_GE(phases, 3);
}

TEST_F(CliTest, VerifyAcceptsExplainOutput) {
  for (const std::string algo : {"approx", "stream"}) {
    Explain(algo, algo + ".json");
    const RunResult r = Verify(algo + ".json");
    EXPECT_EQ(r.code, 0) << algo << ": " << r.err;
    EXPECT_THAT(r.out, HasSubstr("ok:"));
  }
}

// Deletes from a pattern a node whose type occurs in no other pattern of the
// view, so explanation nodes of that type lose their only cover.
TEST_F(CliTest, VerifyRejectsNodeDeletedFromPattern) {
  Explain("approx", "views.json");
  bool corrupted = false;
  Rewrite("views.json", [&](Json& j) {
    for (Json& view : j["views"]) {
      Json& patterns = view["patterns"];
      for (size_t p = 0; p < patterns.size() && !corrupted; ++p) {
        Json& types = patterns[p]["node_types"];
        for (size_t k = 0; k < types.size() && !corrupted; ++k) {
          int occurrences = 0;
          for (const Json& other : patterns) {
            for (const Json& t : other["node_types"]) {
              occurrences += t == types[k];
            }
          }
          if (occurrences != 1) continue;
          types.erase(k);
          Json kept = Json::array();
          for (Json e : patterns[p]["edges"]) {
            if (e[0].get<size_t>() == k || e[1].get<size_t>() == k) continue;
            for (int end = 0; end < 2; ++end) {
              if (e[end].get<size_t>() > k) e[end] = e[end].get<int>() - 1;
            }
            kept.push_back(e);
          }
          patterns[p]["edges"] = kept;
          corrupted = true;
        }
      }
      if (corrupted) break;
    }
  });
  ASSERT_TRUE(corrupted);
  const RunResult r = Verify("views.json");
  EXPECT_EQ(r.code, 1);
  EXPECT_THAT(r.err, HasSubstr("C3"));
}

TEST_F(CliTest, VerifyRejectsSizeOutsideWindow) {
  Explain("approx", "views.json");
  Rewrite("views.json", [](Json& j) {
    j["config"]["coverage"]["default"] = Json::array({1, 2});
  });
  const RunResult r = Verify("views.json");
  EXPECT_EQ(r.code, 1);
  EXPECT_THAT(r.err, HasSubstr("C3"));
}

TEST_F(CliTest, VerifyRejectsLabelFlip) {
  Explain("approx", "views.json");
  Rewrite("views.json", [](Json& j) {
    Json& view = j["views"][0];
    view["label"] = view["label"] == 0 ? 1 : 0;
  });
  const RunResult r = Verify("views.json");
  EXPECT_EQ(r.code, 1);
  EXPECT_THAT(r.err, HasSubstr("C2"));
}

TEST_F(CliTest, WorkersDoNotChangeOutput) {
  for (const std::string algo : {"approx", "stream"}) {
    Explain(algo, "w1.json", " --workers 1");
    Explain(algo, "w4.json", " --workers 4");
    EXPECT_EQ(Slurp(Path("w1.json")), Slurp(Path("w4.json"))) << algo;
    const RunResult r =
        Run("explain" + Common() + " --config " + Golden("config.json") +
                " --algo " + algo + " --out " + Path("env.json"),
            "VIEWEX_WORKERS=3");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Slurp(Path("w1.json")), Slurp(Path("env.json"))) << algo;
  }
}

TEST_F(CliTest, MatchAbsentTypeHasNoHits) {
  const RunResult r = Run("match --dataset " + Path("SYN") + " --types 42");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["graphs_with_match"], 0);
  EXPECT_EQ(j["matches"], 0);
}

TEST_F(CliTest, MatchFindsPlantedHouseAnchors) {
  // Roof apex (type 1) with the two body nodes it joins; they are adjacent.
  const RunResult r = Run("match --dataset " + Path("SYN") +
                          " --types 1,3,3 --edges 0-1,0-2,1-2");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["graphs_with_match"], 4);
}

TEST_F(CliTest, UsageAndInputErrorsFail) {
  EXPECT_NE(Run("").code, 0);
  EXPECT_NE(Run("explain --dataset " + Path("SYN")).code, 0);
  EXPECT_NE(Run("explain" + Common() + " --algo magic --out x").code, 0);
  std::ofstream(Path("SYN/SYN_A.txt"), std::ios::app) << "1, x\n";
  const RunResult r = Run("explain" + Common() + " --out " + Path("v.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_THAT(r.err, HasSubstr("SYN_A.txt:"));
}

}  // namespace
}  // namespace viewex
