// Copyright 2026 The owamilp Authors
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

#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(OWA_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("solve prints the optimum") {
  const Run r = run("solve -i example1 -v Fz");
  CHECK(r.code == 0);
  CHECK(r.out.find("objective: 23\n") != std::string::npos);
  CHECK(r.out.find("x: 1 0 1\n") != std::string::npos);
}

TEST_CASE("solve output is byte-identical across runs") {
  const Run a = run("solve -i example3 -v FzyR2 --cuts default");
  const Run b = run("solve -i example3 -v FzyR2 --cuts default");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("csv format has a header and one row") {
  const Run r = run("solve -i example2 -v Fs --format csv");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 2);
}

TEST_CASE("oracle subcommand") {
  const Run r = run("oracle -i example1");
  CHECK(r.code == 0);
  CHECK(r.out.find("23") != std::string::npos);
}

TEST_CASE("generate then solve a grid instance") {
  const auto path = std::filesystem::temp_directory_path() / "owa_cli_test_grid.owa";
  CHECK(run("generate --side 3 --p 2 --alpha 0.4 --seed 7 -o " + path.string()).code == 0);
  const Run a = run("solve -i " + path.string() + " -v FGS");
  const Run b = run("solve -i " + path.string() + " -v Fz --eliminate --bounds enumeration");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  auto objective = [](const std::string& out) {
    const auto at = out.find("objective: ");
    return out.substr(at, out.find('\n', at) - at);
  };
  CHECK(objective(a.out) == objective(b.out));
  std::filesystem::remove(path);
}

TEST_CASE("bench with every variant emits one row per variant") {
  const Run r = run("bench --sides 2 --p 2 --alpha 0.5 --seeds 1 --variant all --time-limit 20");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 17);
}

TEST_CASE("export writes MPS and LP") {
  const Run mps = run("export -i example1 -v Fz --format mps");
  CHECK(mps.code == 0);
  CHECK(mps.out.find("ENDATA") != std::string::npos);
  const Run lp = run("export -i example1 -v Fz --format lp");
  CHECK(lp.code == 0);
  CHECK(lp.out.find("End") != std::string::npos);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run("solve -i example1 -v Fnope").code == 1);
  CHECK(run("solve -i example1 -v Fz --cuts bogus").code == 1);
  CHECK(run("solve -i example1 -v Fz --bounds maybe").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("solve").code == 1);
  CHECK(run("bench --sides x").code == 1);
}

TEST_CASE("runtime errors exit with code 2") {
  CHECK(run("solve -i /nonexistent/instance.owa -v Fz").code == 2);
  CHECK(run("solve -i example1 -v Fz --big-m 0.5").code == 2);
}
