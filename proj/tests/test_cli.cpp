// Copyright 2026 The zxv Authors
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

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "zxv/cli.hpp"

using namespace zxv;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(ZXV_SAMPLES_DIR) + "/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("zxv_test_" + name)).string();
}

}  // namespace

TEST_CASE("eval prints the dimensions and matrix", "[cli]") {
  const Run r = run({"eval", sample("cnot.zxg")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("4x4\n", 0) == 0);
  CHECK(r.out.find("(0.707107,0)") != std::string::npos);
}

TEST_CASE("equal reports the scalar", "[cli]") {
  const Run same = run({"equal", sample("ghz_class4_standard.zxg"), sample("ghz_class4_alternative.zxg")});
  CHECK(same.code == 0);
  CHECK(same.out.rfind("equal up to scalar λ=", 0) == 0);
  const Run diff = run({"equal", sample("ghz.zxg"), sample("w.zxg")});
  CHECK(diff.code == 1);
  CHECK(diff.out.rfind("not equal", 0) == 0);
}

TEST_CASE("rewrite and simplify emit diagrams", "[cli]") {
  const Run r = run({"rewrite", "HOPF", sample("hopf.zxg")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("HOPF at [", 0) == 0);
  const Run none = run({"rewrite", "HOPF", sample("cnot.zxg")});
  CHECK(none.code == 1);
  const Run s = run({"simplify", sample("hopf.zxg")});
  CHECK(s.code == 0);
  CHECK(s.out.find("node ") != std::string::npos);
  const std::string trace = temp_path("trace.txt");
  CHECK(run({"--trace", trace, "simplify", "--full", sample("w.zxg")}).code == 0);
  CHECK(cli::read_file(trace).rfind("step 0: start\n", 0) == 0);
  std::filesystem::remove(trace);
}

TEST_CASE("soundness and derivations pass", "[cli]") {
  const Run s = run({"soundness", "S1", "B2", "--samples", "20", "--seed", "4"});
  CHECK(s.code == 0);
  const Run d = run({"derivations", "hopf", "ghz_plug0"});
  CHECK(d.code == 0);
  CHECK(run({"derivations", "nonsense"}).code == 2);
}

TEST_CASE("verify subcommands", "[cli]") {
  const Run sdc = run({"verify", "sdc-ghz"});
  CHECK(sdc.code == 0);
  CHECK(sdc.out.find("result: PASS") != std::string::npos);
  CHECK(run({"verify", "sdc-ghz", "--n", "4"}).code == 0);
  const Run qkd = run({"verify", "qkd-w3", "--rounds", "3000", "--seed", "7"});
  CHECK(qkd.code == 0);
  CHECK(qkd.out == run({"verify", "qkd-w3", "--rounds", "3000", "--seed", "7"}).out);
}

TEST_CASE("render writes DOT", "[cli]") {
  const Run r = run({"render", sample("ghz.zxg")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("graph zx {", 0) == 0);
  const std::string path = temp_path("g.dot");
  CHECK(run({"render", sample("ghz.zxg"), "-o", path}).code == 0);
  CHECK(cli::read_file(path) == r.out);
  std::filesystem::remove(path);
}

TEST_CASE("usage and input errors exit with status 2", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eval"}).code == 2);
  CHECK(run({"eval", sample("missing.zxg")}).code == 2);
  CHECK(run({"rewrite", "NOPE", sample("cnot.zxg")}).code == 2);
  CHECK(run({"rewrite", "B1", "--backward", sample("cnot.zxg")}).code == 2);
  CHECK(run({"--max-qubits", "1", "eval", sample("cnot.zxg")}).code == 2);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
}
