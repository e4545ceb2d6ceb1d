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

#include <doctest.h>

#include "uniperturb/defense.hpp"
#include "uniperturb/optimizer.hpp"
#include "uniperturb/report.hpp"
#include "uniperturb/targets.hpp"
#include "uniperturb/unicode_data.hpp"

using namespace uniperturb;

TEST_CASE("run report round-trips losslessly") {
  DictTranslateModel model(demo_dictionary());
  DEParams params;
  params.seed = 21;

  RunReport report;
  report.command = "uniperturb attack --class deletion";
  report.seed = params.seed;
  report.perturbation_class = "deletion";
  report.objective = "untargeted";
  report.target_model = "mock-translate";

  RunRecord record;
  record.input_index = 0;
  record.budget = 2;
  record.original = U"the cat drinks milk";
  record.result = differential_evolution(
      record.original, PerturbationClass::kDeletion,
      ObjectiveSpec::untargeted(), 2, params, model, default_alphabets(),
      builtin_intentional_map());
  record.wall_time_ms = 12.5;
  report.records.push_back(record);

  const auto j = to_json(report);
  const RunReport back = run_report_from_json(j);
  CHECK(to_json(back) == j);

  // The perturbed payload survives raw and escaped, bit for bit.
  const auto& rec = j["records"][0];
  CHECK(utf8_decode(rec["perturbed"].get<std::string>()) ==
        record.result.perturbed);
  CHECK(unescape_text(rec["perturbed_escaped"].get<std::string>()) ==
        record.result.perturbed);
}

TEST_CASE("model response serialization keeps scores and labels") {
  ModelResponse resp;
  resp.output = U"fеar";
  resp.label = "fear";
  resp.scores = {{"calm", 0.25}, {"fear", 0.5}, {"joy", 0.25}};
  resp.cost = 17.0;
  const auto j = to_json(resp);
  CHECK(model_response_from_json(j) == resp);
}

TEST_CASE("report field order is pinned") {
  RunReport report;
  report.command = "x";
  const auto j = to_json(report);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"tool", "version", "format_version",
                                         "command", "seed", "class",
                                         "objective", "target", "records"});
}

TEST_CASE("detection report serialization") {
  const DefenseConfig cfg;
  const Text input = U"pаy​pal";
  const auto j = to_json(detect(input, cfg), input);
  CHECK(j["verdict"] == "suspicious");
  CHECK(j["counts"]["homoglyph"] == 1);
  CHECK(j["counts"]["invisible"] == 1);
  CHECK(j["counts"]["reordering"] == 0);
  CHECK(j["findings"].size() == 2);
  CHECK(j["input"] == "p\\u{0430}y\\u{200B}pal");

  const auto clean = to_json(detect(U"ok", cfg), U"ok");
  CHECK(clean["verdict"] == "clean");
  CHECK(clean["findings"].empty());
}
