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

#ifndef UNIPERTURB_OPTIMIZER_HPP_
#define UNIPERTURB_OPTIMIZER_HPP_

#include <cstdint>
#include <vector>

#include "uniperturb/perturb.hpp"
#include "uniperturb/targets.hpp"
#include "uniperturb/text.hpp"
#include "uniperturb/unicode_data.hpp"

namespace uniperturb {

enum class ObjectiveKind {
  kUntargetedIntegrity,
  kTargetedIntegrity,
  kAvailability,
};

// What the attack maximizes. `target` is required exactly when kind is
// TargetedIntegrity: the desired output text, or the desired label when
// label_only is set.
struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::kUntargetedIntegrity;
  Text target;
  bool label_only = false;

  static ObjectiveSpec untargeted() { return {}; }
  static ObjectiveSpec targeted(Text target, bool label_only = false) {
    return {ObjectiveKind::kTargetedIntegrity, std::move(target), label_only};
  }
  static ObjectiveSpec availability() {
    return {ObjectiveKind::kAvailability, {}, false};
  }
};

struct DEParams {
  std::size_t population_size = 32;
  std::size_t iterations = 10;
  double differential_weight = 0.8;   // F in [0, 2]
  double crossover_probability = 0.9; // CR in [0, 1]
  std::uint64_t seed = 1;
};

// Codepoint-level edit distance with unit insert/delete/substitute costs.
std::size_t levenshtein(TextView a, TextView b);

// One fitness evaluation of `candidate` (higher is better for every
// objective): untargeted integrity is the output's distance from the
// baseline output, targeted integrity is the negated distance to the
// target (or a 0/1 label indicator in label-only mode), availability is
// the model-reported cost.
double fitness(const ObjectiveSpec& objective, TargetModel& model, TextView x,
               TextView candidate, const ModelResponse& baseline);

struct AttackResult {
  Text perturbed;
  std::vector<Perturbation> perturbations;
  double fitness = 0.0;
  ModelResponse baseline_output;
  ModelResponse perturbed_output;
  std::size_t evaluations = 0;  // actual model calls, after memoization
  std::size_t budget = 0;
  // Best population fitness after initialization and after each iteration.
  std::vector<double> fitness_trajectory;
};

enum class EvalMode { kSequential, kParallel };

// DE/rand/1/bin over perturbation genomes, generation-synchronous: all
// trial vectors of one generation are derived from the iteration-start
// population, so evaluation order cannot change the outcome. Greedy >=
// selection. Fitness is memoized per decoded candidate text. With a fixed
// seed the result is bit-identical across runs; parallel mode may differ
// only through wall-clock availability costs.
AttackResult differential_evolution(TextView x, PerturbationClass cls,
                                    const ObjectiveSpec& objective,
                                    std::size_t budget, const DEParams& params,
                                    TargetModel& model,
                                    const Alphabets& alphabets,
                                    const ConfusablesMap& map,
                                    EvalMode mode = EvalMode::kSequential);

}  // namespace uniperturb

#endif  // UNIPERTURB_OPTIMIZER_HPP_
