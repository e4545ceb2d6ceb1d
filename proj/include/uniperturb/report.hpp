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

#ifndef UNIPERTURB_REPORT_HPP_
#define UNIPERTURB_REPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "uniperturb/defense.hpp"
#include "uniperturb/optimizer.hpp"
#include "uniperturb/text.hpp"

namespace uniperturb {

inline constexpr const char* kToolName = "uniperturb";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportFormatVersion = 1;

// One attacked (input, budget) pair of a run.
struct RunRecord {
  std::size_t input_index = 0;
  std::size_t budget = 0;
  Text original;
  AttackResult result;
  double wall_time_ms = 0.0;
};

// The machine-readable output of `attack`. Field set and ordering are
// versioned; records are ordered by (input index, budget).
struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  std::string perturbation_class;
  std::string objective;
  std::string target_model;
  std::vector<RunRecord> records;
};

// ordered_json keeps insertion order so serialized field order is stable.
nlohmann::ordered_json to_json(const ModelResponse& resp);
nlohmann::ordered_json to_json(const RunRecord& record);
nlohmann::ordered_json to_json(const RunReport& report);
nlohmann::ordered_json to_json(const DetectionReport& report, TextView input);

ModelResponse model_response_from_json(const nlohmann::ordered_json& j);
RunReport run_report_from_json(const nlohmann::ordered_json& j);

}  // namespace uniperturb

#endif  // UNIPERTURB_REPORT_HPP_
