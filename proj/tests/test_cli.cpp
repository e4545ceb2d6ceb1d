// Copyright 2026 The uniperturb Authors.
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

// End-to-end tests of the CLI's external surfaces: flags, exit codes,
// report schema, escape convention.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "uniperturb/text.hpp"

using nlohmann::ordered_json;

namespace {

struct RunResult {
  int status = -1;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string command =
      std::string(UNIPERTURB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
    result.output.append(buf, n);
  const int rc = pclose(pipe);
  result.status = WEXITSTATUS(rc);
  return result;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/uniperturb_test_") + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Wall-clock fields are the one permitted difference between two runs.
void zero_wall_times(ordered_json& j) {
  for (auto& record : j["records"]) record["wall_time_ms"] = 0.0;
}

}  // namespace

TEST_CASE("cli usage errors exit 2") {
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("attack --class nosuch --budget 1 --input /dev/null").status ==
        2);
  CHECK(run_cli("attack --class invisible --input /dev/null").status == 2);
  CHECK(run_cli("detect --input /nonexistent/file").status == 2);
  CHECK(run_cli("inspect --char ab").status == 2);
  CHECK(run_cli("reorder --text aaaaaaaaaaaaaaaaa").status == 2);  // 17 chars
  CHECK(run_cli("attack --class invisible --budget 1 --objective targeted "
                "--input /dev/null")
            .status == 2);
}

TEST_CASE("cli reorder") {
  const auto two = run_cli("reorder --text ab");
  CHECK(two.status == 0);
  CHECK(two.output ==
        "ab\n"
        "\\u{202D}\\u{2066}\\u{202E}\\u{2066}b\\u{2069}\\u{2066}a\\u{2069}"
        "\\u{202C}\\u{2069}\\u{202C}\n"
        "count 2\n");

  const auto one = run_cli("reorder --text a");
  CHECK(one.status == 0);
  CHECK(one.output == "a\ncount 1\n");

  // Default output is escaped; --raw emits the controls themselves.
  const auto raw = run_cli("reorder --text ab --raw");
  CHECK(raw.output.find("\xE2\x80\xAD") != std::string::npos);  // U+202D
}

TEST_CASE("cli detect verdicts and exit codes") {
  const std::string clean = temp_file("clean.txt", "plain text\nmore text\n");
  CHECK(run_cli("detect --input " + clean).status == 0);
  CHECK(run_cli("detect --fail-on-suspicious --input " + clean).status == 0);

  const std::string bad =
      temp_file("bad.txt", "ok line\nbad \\u{202E}line\n");
  CHECK(run_cli("detect --input " + bad).status == 0);
  CHECK(run_cli("detect --fail-on-suspicious --input " + bad).status == 1);

  const auto structured =
      run_cli("detect --format structured --input " + bad);
  std::istringstream lines(structured.output);
  std::string line;
  REQUIRE(std::getline(lines, line));
  auto first = ordered_json::parse(line);
  CHECK(first["verdict"] == "clean");
  REQUIRE(std::getline(lines, line));
  auto second = ordered_json::parse(line);
  CHECK(second["verdict"] == "suspicious");
  CHECK(second["findings"][0]["class"] == "reordering");
}

TEST_CASE("cli attack budget zero echoes the original") {
  const std::string input = temp_file("b0.txt", "the cat drinks milk\n");
  const auto run = run_cli(
      "attack --class homoglyph --objective untargeted --budget 0 --input " +
      input + " --target mock-translate --seed 4");
  REQUIRE(run.status == 0);
  const auto j = ordered_json::parse(run.output);
  CHECK(j["records"][0]["perturbed"] == "the cat drinks milk");
  CHECK(j["records"][0]["perturbations"].empty());
}

TEST_CASE("cli attack runs are byte-identical modulo wall time") {
  const std::string input =
      temp_file("det.txt", "the cat drinks milk\nthe old king loves cheese\n");
  const std::string args =
      "attack --class deletion --objective untargeted --budget-sweep 0..2 "
      "--input " +
      input + " --target mock-translate --seed 12";
  auto a = ordered_json::parse(run_cli(args).output);
  auto b = ordered_json::parse(run_cli(args).output);
  zero_wall_times(a);
  zero_wall_times(b);
  CHECK(a.dump() == b.dump());

  // Records are ordered by (input index, budget).
  REQUIRE(a["records"].size() == 6);
  std::size_t r = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t budget = 0; budget <= 2; ++budget, ++r) {
      CHECK(a["records"][r]["input_index"] == i);
      CHECK(a["records"][r]["budget"] == budget);
    }
  }
}

TEST_CASE("cli attack sponge fitness follows the cost model") {
  const std::string input =
      temp_file("sponge.txt", "the quiet ocean sees a red morning sun\n");
  const auto run = run_cli(
      "attack --class reorder --objective sponge --budget 3 --input " +
      input + " --target mock-translate --seed 2");
  REQUIRE(run.status == 0);
  const auto j = ordered_json::parse(run.output);
  const auto& rec = j["records"][0];
  const std::string original = rec["original"].get<std::string>();
  const double fitness = rec["fitness"].get<double>();
  // 3 swaps add 30 controls; every broken word surcharges 2.
  const double base =
      static_cast<double>(uniperturb::utf8_decode(original).size());
  CHECK(fitness >= base + 30.0);
  CHECK(rec["perturbed_output"]["cost"].get<double>() == fitness);
}

TEST_CASE("cli sanitize recovers attacked text and is idempotent") {
  const std::string attacked = temp_file(
      "attacked.txt",
      "p\\u{0430}ypal\n"
      "foq\\u{0008}ol\n"
      "ab\\u{200B}c\n"
      "\\u{202D}\\u{2066}\\u{202E}\\u{2066}b\\u{2069}\\u{2066}a\\u{2069}"
      "\\u{202C}\\u{2069}\\u{202C}\n");
  const std::string out1 = "/tmp/uniperturb_test_sanitized1.txt";
  const std::string out2 = "/tmp/uniperturb_test_sanitized2.txt";
  CHECK(run_cli("sanitize --input " + attacked + " --output " + out1).status ==
        0);
  CHECK(slurp(out1) == "paypal\nfool\nabc\nab\n");
  CHECK(run_cli("sanitize --input " + out1 + " --output " + out2).status == 0);
  CHECK(slurp(out1) == slurp(out2));

  // Disabled stages leave their class untouched.
  const auto partial =
      run_cli("sanitize --no-homoglyphs --input " + attacked);
  CHECK(partial.output.substr(0, partial.output.find('\n')) ==
        "p\\u{0430}ypal");
}

TEST_CASE("cli inspect lists confusables") {
  const auto hit = run_cli("inspect --char a");
  CHECK(hit.status == 0);
  CHECK(hit.output.find("U+0430") != std::string::npos);
  CHECK(hit.output.find("intentional") != std::string::npos);

  const auto by_codepoint = run_cli("inspect --char U+0430");
  CHECK(by_codepoint.status == 0);
  CHECK(by_codepoint.output.find("U+0061") != std::string::npos);

  const auto miss = run_cli("inspect --char Q");
  CHECK(miss.status == 0);
  CHECK(miss.output.find("no confusables") != std::string::npos);
}

TEST_CASE("cli attack report matches the golden schema") {
  const std::string input = temp_file("golden_in.txt", "the cat sees a dog\n");
  const auto run = run_cli(
      "attack --class invisible --objective untargeted --budget-sweep 0..1 "
      "--input " +
      input + " --target mock-translate --seed 7 --pop 8 --iters 2");
  REQUIRE(run.status == 0);
  auto got = ordered_json::parse(run.output);
  zero_wall_times(got);
  // The command echo differs by absolute binary path; pin it separately.
  CHECK(got["command"].get<std::string>().find("--seed 7") !=
        std::string::npos);
  got["command"] = "";

  auto golden = ordered_json::parse(
      slurp(std::string(UNIPERTURB_GOLDEN_DIR) + "/attack_report.json"));
  CHECK(got.dump(2) == golden.dump(2));
}
