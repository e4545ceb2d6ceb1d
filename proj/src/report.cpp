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

#include "uniperturb/report.hpp"

#include "uniperturb/errors.hpp"

namespace uniperturb {

namespace {

using ordered_json = nlohmann::ordered_json;

PerturbationClass class_from_string(const std::string& s) {
  if (s == "invisible") return PerturbationClass::kInvisible;
  if (s == "homoglyph") return PerturbationClass::kHomoglyph;
  if (s == "reordering") return PerturbationClass::kReordering;
  if (s == "deletion") return PerturbationClass::kDeletion;
  throw ArgumentError("unknown perturbation class '" + s + "'");
}

ordered_json to_json(const Perturbation& p) {
  ordered_json j;
  j["class"] = to_string(p.cls);
  j["position"] = p.position;
  j["payload"] = escape_text(p.payload);
  return j;
}

Perturbation perturbation_from_json(const ordered_json& j) {
  Perturbation p;
  p.cls = class_from_string(j.at("class").get<std::string>());
  p.position = j.at("position").get<std::size_t>();
  p.payload = unescape_text(j.at("payload").get<std::string>());
  return p;
}

}  // namespace

ordered_json to_json(const ModelResponse& resp) {
  ordered_json j;
  j["output"] = utf8_encode(resp.output);
  j["label"] = resp.label ? ordered_json(*resp.label) : ordered_json(nullptr);
  if (resp.scores) {
    ordered_json scores = ordered_json::object();
    for (const auto& [label, value] : *resp.scores) scores[label] = value;
    j["scores"] = scores;
  } else {
    j["scores"] = nullptr;
  }
  j["cost"] = resp.cost;
  j["wall_clock_cost"] = resp.wall_clock_cost;
  return j;
}

ModelResponse model_response_from_json(const ordered_json& j) {
  ModelResponse resp;
  resp.output = utf8_decode(j.at("output").get<std::string>());
  if (!j.at("label").is_null()) resp.label = j["label"].get<std::string>();
  if (!j.at("scores").is_null()) {
    resp.scores.emplace();
    for (const auto& [label, value] : j["scores"].items())
      (*resp.scores)[label] = value.get<double>();
  }
  resp.cost = j.at("cost").get<double>();
  resp.wall_clock_cost = j.at("wall_clock_cost").get<bool>();
  return resp;
}

ordered_json to_json(const RunRecord& record) {
  ordered_json j;
  j["input_index"] = record.input_index;
  j["budget"] = record.budget;
  j["original"] = utf8_encode(record.original);
  j["perturbed"] = utf8_encode(record.result.perturbed);
  j["perturbed_escaped"] = escape_text(record.result.perturbed);
  ordered_json ps = ordered_json::array();
  for (const auto& p : record.result.perturbations) ps.push_back(to_json(p));
  j["perturbations"] = ps;
  j["fitness"] = record.result.fitness;
  j["fitness_trajectory"] = record.result.fitness_trajectory;
  j["baseline_output"] = to_json(record.result.baseline_output);
  j["perturbed_output"] = to_json(record.result.perturbed_output);
  j["evaluations"] = record.result.evaluations;
  j["wall_time_ms"] = record.wall_time_ms;
  return j;
}

ordered_json to_json(const RunReport& report) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["format_version"] = kReportFormatVersion;
  j["command"] = report.command;
  j["seed"] = report.seed;
  j["class"] = report.perturbation_class;
  j["objective"] = report.objective;
  j["target"] = report.target_model;
  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) records.push_back(to_json(r));
  j["records"] = records;
  return j;
}

RunReport run_report_from_json(const ordered_json& j) {
  if (j.at("format_version").get<int>() != kReportFormatVersion)
    throw ArgumentError("unsupported report format version");
  RunReport report;
  report.command = j.at("command").get<std::string>();
  report.seed = j.at("seed").get<std::uint64_t>();
  report.perturbation_class = j.at("class").get<std::string>();
  report.objective = j.at("objective").get<std::string>();
  report.target_model = j.at("target").get<std::string>();
  for (const auto& rj : j.at("records")) {
    RunRecord r;
    r.input_index = rj.at("input_index").get<std::size_t>();
    r.budget = rj.at("budget").get<std::size_t>();
    r.original = utf8_decode(rj.at("original").get<std::string>());
    r.result.perturbed = utf8_decode(rj.at("perturbed").get<std::string>());
    if (unescape_text(rj.at("perturbed_escaped").get<std::string>()) !=
        r.result.perturbed)
      throw ArgumentError("perturbed/perturbed_escaped fields disagree");
    for (const auto& pj : rj.at("perturbations"))
      r.result.perturbations.push_back(perturbation_from_json(pj));
    r.result.fitness = rj.at("fitness").get<double>();
    r.result.fitness_trajectory =
        rj.at("fitness_trajectory").get<std::vector<double>>();
    r.result.baseline_output =
        model_response_from_json(rj.at("baseline_output"));
    r.result.perturbed_output =
        model_response_from_json(rj.at("perturbed_output"));
    r.result.evaluations = rj.at("evaluations").get<std::size_t>();
    r.result.budget = r.budget;
    r.wall_time_ms = rj.at("wall_time_ms").get<double>();
    report.records.push_back(std::move(r));
  }
  return report;
}

ordered_json to_json(const DetectionReport& report, TextView input) {
  ordered_json j;
  j["input"] = escape_text(input);
  j["verdict"] = report.suspicious() ? "suspicious" : "clean";
  ordered_json counts;
  counts["invisible"] = report.count(PerturbationClass::kInvisible);
  counts["homoglyph"] = report.count(PerturbationClass::kHomoglyph);
  counts["reordering"] = report.count(PerturbationClass::kReordering);
  counts["deletion"] = report.count(PerturbationClass::kDeletion);
  j["counts"] = counts;
  ordered_json findings = ordered_json::array();
  for (const auto& f : report.findings) {
    ordered_json fj;
    fj["class"] = to_string(f.cls);
    fj["position"] = f.position;
    fj["codepoints"] = escape_text(f.codepoints);
    fj["note"] = f.note;
    findings.push_back(fj);
  }
  j["findings"] = findings;
  return j;
}

}  // namespace uniperturb
