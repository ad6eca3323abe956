// Copyright 2026 The Authors.
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

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(ISFKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("isfkit_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

const char* kFourVertex = R"({"n":4,"edges":[[1,2],[2,3],[1,4],[2,4]]})";

}  // namespace

TEST_CASE("graph isf prints coefficients") {
  const auto g = write_temp("g.json", kFourVertex);
  const Result r = run("graph isf " + g);
  CHECK(r.code == 0);
  CHECK(r.out == "[\"0\",\"2\",\"5\",\"4\",\"1\"]\n");
}

TEST_CASE("graph actions") {
  const auto g = write_temp("g2.json", kFourVertex);
  CHECK(run("graph chromatic " + g).out == "[\"0\",\"-2\",\"5\",\"-4\",\"1\"]\n");
  const auto peo = nlohmann::json::parse(run("graph peo " + g).out);
  CHECK(peo["is_peo"] == true);
  const auto nbc = nlohmann::json::parse(run("graph nbc " + g).out);
  CHECK(nbc["counts"] == nlohmann::json::parse(R"(["1","4","5","2"])"));
  const Result v = run("graph verify " + g);
  CHECK(v.code == 0);
  CHECK(nlohmann::json::parse(v.out)["passed"] == true);
  // reversing the labels moves vertex 4 to 1
  CHECK(run("graph isf " + g + " --ordering '[4,3,2,1]'").code == 0);
  CHECK(run("graph isf " + g + " --ordering '[1,1,2,3]'").code == 2);
}

TEST_CASE("generated graph verifies and output is deterministic") {
  const Result gen = run("gen graph --seed 7 --n 6");
  REQUIRE(gen.code == 0);
  CHECK(gen.out == run("gen graph --seed 7 --n 6").out);
  const auto path = write_temp("gen.json", gen.out);
  const Result a = run("graph verify " + path + " --seed 3");
  CHECK(a.code == 0);
  CHECK(a.out == run("graph verify " + path + " --seed 3").out);
  CHECK(run("gen complex --seed 1 --n 5").code == 0);
  CHECK(run("gen multigraph --seed 1 --n 3").code == 0);
}

TEST_CASE("input errors exit 2 with no output") {
  const auto bad = write_temp("bad.json", R"({"n":3,)");
  const Result r = run("graph isf " + bad);
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  const auto loop = write_temp("loop.json", R"({"n":3,"edges":[[1,1]]})");
  CHECK(run("graph isf " + loop).code == 2);
  CHECK(run("graph bogus " + loop).code == 2);
  CHECK(run("shape isf " + loop).code == 2);
  CHECK(run("graph isf /nonexistent/file.json").code == 2);
  CHECK(run("graph verify " + write_temp("g3.json", kFourVertex) + " --budget 0").code == 2);
  CHECK(run("graph isf --unknown-flag").code == 2);
}

TEST_CASE("stdin input") {
  const Result r = run("graph isf - < " + write_temp("stdin.json", kFourVertex));
  CHECK(r.code == 0);
  CHECK(r.out == "[\"0\",\"2\",\"5\",\"4\",\"1\"]\n");
}

TEST_CASE("complex, multigraph and forest commands") {
  const auto c = write_temp("c.json", R"({"n":4,"d":2,"facets":[[1,2,3],[1,2,4],[1,3,4]]})");
  CHECK(run("complex cf " + c).out == "[\"2\",\"3\",\"1\"]\n");
  CHECK(run("complex verify " + c).code == 0);
  CHECK(run("complex links " + c).code == 0);
  CHECK(run("complex peo " + c).code == 0);
  const auto w = nlohmann::json::parse(run("complex cf " + c + " --weighted").out);
  CHECK(w.size() == 6);

  const auto m = write_temp("m.json", R"({"n":3,"zero_edges":[1,3],"edges":[[1,2,"2"],[1,2,"3"],[1,3,"5"]]})");
  const auto chi = nlohmann::json::parse(run("multigraph chi " + m).out);
  CHECK(chi["lattice_size"] == 13);
  CHECK(run("multigraph isf " + m).out == "[\"4\",\"8\",\"5\",\"1\"]\n");
  CHECK(nlohmann::json::parse(run("multigraph perfect " + m).out)["perfect"] == true);
  CHECK(run("multigraph verify " + m).code == 0);
  CHECK(run("multigraph regions " + m).code == 0);
  CHECK(run("multigraph signed " + m).code == 2);

  const auto s = write_temp("s.json", R"({"n":2,"zero_edges":[1],"edges":[[1,2,"1"],[1,2,"-1"]]})");
  CHECK(run("multigraph signed " + s).code == 0);
  const auto gz = write_temp("gz.json", R"({"n":2,"edges":[[1,2,{"re":"0","im":"1"}]]})");
  CHECK(run("multigraph verify " + gz).code == 0);

  const auto f = write_temp("f.json", R"({"n":5,"edges":[[1,2],[1,3],[1,5],[2,3],[3,4],[4,5]]})");
  const auto q = nlohmann::json::parse(run("forest qpo " + f).out);
  CHECK(q["qpo"] == true);
  CHECK(q["candidate_paths"] == nlohmann::json::parse("[[1,5,4,3]]"));
  CHECK(run("forest tf " + f).code == 0);
  CHECK(run("forest verify " + f).code == 0);
  CHECK(run("forest roots " + f).code == 0);
  const auto pm = write_temp("pm.json", R"({"labels":[1,2,3,4],"parents":{"1":null,"3":"1","2":"3","4":"1"}})");
  const auto pr = nlohmann::json::parse(run("forest verify " + pm).out);
  CHECK(pr["boolean_facts"]["tight"] == true);
}
