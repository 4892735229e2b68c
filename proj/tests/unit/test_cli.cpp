// Copyright 2026 The qcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "oracles.hpp"
#include "qcc/cli.hpp"
#include "qcc/io.hpp"
#include "qcc/simplicial.hpp"

namespace fs = std::filesystem;
using qcc::io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = qcc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qcc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()) + "_" +
            std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ParamsTorusTimesPath) {
  ASSERT_EQ(run({"build", "torus", "--r", "3", "--c", "3", "--out", path("t.json")}).code, 0);
  ASSERT_EQ(run({"build", "code", "--kind", "path", "--m", "2", "--out", path("y.mtx")}).code, 0);
  ASSERT_EQ(run({"product", "--complex", path("t.json"), "--code", path("y.mtx"), "--out", path("p.json")}).code, 0);
  auto r = run({"params", path("p.json"), "--budget", "2^22"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["N"], 72);
  EXPECT_EQ(j["K"]["value"], 2);
  EXPECT_EQ(j["K"]["provenance"], "measured");
  EXPECT_EQ(j["D_X"]["measured"], 6);

  auto torus = qcc::fixture_torus(3, 3).chain();
  auto h = oracle::transpose(oracle::to_dense(torus.boundary(2)));
  auto b = oracle::to_dense(torus.boundary(1));
  EXPECT_EQ(j["D_Z"]["measured"], oracle::min_nontrivial_cycle(h, b, 27, 8));
  EXPECT_TRUE(j["weight_audit"]["passed"].get<bool>());
  EXPECT_EQ(j["config"]["budget"], "2^22");
  EXPECT_FALSE(j["tool"]["version"].get<std::string>().empty());
}

TEST_F(CliTest, CappedParamsReportLowerBound) {
  run({"build", "torus", "--r", "3", "--c", "3", "--out", path("t.json")});
  run({"build", "code", "--kind", "path", "--m", "2", "--out", path("y.mtx")});
  run({"product", "--complex", path("t.json"), "--code", path("y.mtx"), "--out", path("p.json")});
  auto j = Json::parse(run({"params", path("p.json"), "--cap", "3"}).out);
  EXPECT_EQ(j["D_X"]["lower_bounded"], 4);
  EXPECT_FALSE(j["D_X"].contains("measured"));
}

TEST_F(CliTest, SimulateIsByteIdentical) {
  run({"build", "torus", "--r", "3", "--c", "4", "--out", path("t.json")});
  run({"build", "code", "--kind", "path", "--m", "3", "--out", path("y.mtx")});
  run({"product", "--complex", path("t.json"), "--code", path("y.mtx"), "--out", path("p.json")});
  for (std::string type : {"x", "z"}) {
    std::vector<std::string> args = {"simulate", "--code",  path("p.json"), "--type",   type,          "--weight",
                                     "2",        "--up-to", "--trials",     "40",       "--seed",      "11",
                                     "--report", path("r.json")};
    auto first = run(args);
    ASSERT_EQ(first.code, 0) << first.err;
    auto file = qcc::io::read_file(path("r.json"));
    auto second = run(args);
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(file, qcc::io::read_file(path("r.json")));
    auto j = Json::parse(file);
    EXPECT_EQ(j["trials"], 40);
    EXPECT_EQ(j["equivalence_failures"], 0);
    EXPECT_EQ(j["syndrome_failures"], 0);
    EXPECT_EQ(j["successes"].get<int>() + j["stalls"].get<int>() + j["budget_exceeded"].get<int>(), 40);
    EXPECT_EQ(j["config"]["seed"], 11);
  }
}

TEST_F(CliTest, DecodeWritesConsistentCorrection) {
  run({"build", "torus", "--r", "3", "--c", "3", "--out", path("t.json")});
  run({"build", "code", "--kind", "path", "--m", "3", "--out", path("y.mtx")});
  run({"product", "--complex", path("t.json"), "--code", path("y.mtx"), "--out", path("p.json")});
  auto p = qcc::io::product_from_json(qcc::io::read_json(path("p.json")));
  auto e = qcc::BitVector::from_support(p.product.layout().qubits(), {3, 40});
  qcc::io::write_file_atomic(path("s.txt"), qcc::io::vector_to_text(p.product.sigma_x().multiply(e)));
  auto r = run({"decode", "--code", path("p.json"), "--type", "x", "--syndrome", path("s.txt"), "--out", path("c.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["outcome"]["status"], "success");
  auto c = qcc::io::vector_from_text(qcc::io::read_file(path("c.txt")));
  EXPECT_EQ(p.product.sigma_x().multiply(c), p.product.sigma_x().multiply(e));
}

TEST_F(CliTest, InspectSummaries) {
  run({"build", "torus", "--r", "3", "--c", "3", "--out", path("t.json")});
  auto j = Json::parse(run({"inspect", path("t.json")}).out);
  EXPECT_EQ(j["type"], "simplicial");
  EXPECT_EQ(j["complex"]["face_counts"], Json::array({9, 27, 18}));
  EXPECT_TRUE(j["complex"]["valid"].get<bool>());
  EXPECT_EQ(j["cohomology"]["H^1"], 2);
}

TEST_F(CliTest, ErrorsAreMachineReadable) {
  auto r = run({"params", path("missing.json")});
  EXPECT_EQ(r.code, qcc::cli::io_error);
  EXPECT_EQ(Json::parse(r.err)["error"]["kind"], "io");

  r = run({"frobnicate"});
  EXPECT_EQ(r.code, qcc::cli::bad_arguments);
  EXPECT_EQ(Json::parse(r.err)["error"]["kind"], "argument");

  qcc::io::write_file_atomic(path("bad.mtx"), "2 2\n0 9\n");
  r = run({"inspect", path("bad.mtx")});
  EXPECT_EQ(r.code, qcc::cli::bad_input);

  r = run({"build", "lsv", "--q", "2", "--e", "1"});
  EXPECT_EQ(r.code, qcc::cli::bad_input);

  r = run({"build", "lsv", "--q", "2", "--e", "2", "--poly", "1,1,1", "--max-size", "100"});
  EXPECT_EQ(r.code, qcc::cli::budget_refused);
}

TEST(Budget, Parse) {
  EXPECT_EQ(qcc::cli::parse_budget("2^22"), 4194304.0);
  EXPECT_EQ(qcc::cli::parse_budget("1000"), 1000.0);
  EXPECT_THROW(qcc::cli::parse_budget("2^x"), std::invalid_argument);
  EXPECT_THROW(qcc::cli::parse_budget("lots"), std::invalid_argument);
}
