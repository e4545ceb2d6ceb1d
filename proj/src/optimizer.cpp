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

#include "uniperturb/optimizer.hpp"

#include <algorithm>
#include <unordered_map>

#include "uniperturb/errors.hpp"
#include "uniperturb/rng.hpp"

namespace uniperturb {

std::size_t levenshtein(TextView a, TextView b) {
  if (a.size() < b.size()) std::swap(a, b);
  // b is the shorter string; one rolling row of |b|+1 cells.
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = a[i - 1] == b[j - 1]
                   ? diag
                   : 1 + std::min({diag, up, row[j - 1]});
      diag = up;
    }
  }
  return row[b.size()];
}

namespace {

double score_response(const ObjectiveSpec& objective,
                      const ModelResponse& baseline,
                      const ModelResponse& resp) {
  switch (objective.kind) {
    case ObjectiveKind::kUntargetedIntegrity:
      return static_cast<double>(levenshtein(baseline.output, resp.output));
    case ObjectiveKind::kTargetedIntegrity:
      if (objective.label_only) {
        return resp.label && utf8_decode(*resp.label) == objective.target
                   ? 1.0
                   : 0.0;
      }
      // Negated so the driver always maximizes.
      return -static_cast<double>(levenshtein(objective.target, resp.output));
    case ObjectiveKind::kAvailability:
      return resp.cost;
  }
  return 0.0;
}

// Memoizing evaluation frontend. Keyed on the decoded candidate text since
// distinct genomes frequently decode to the same string.
class Evaluator {
 public:
  Evaluator(TargetModel& model, EvalMode mode)
      : model_(model),
        parallel_(mode == EvalMode::kParallel && model.concurrent_safe()) {}

  const ModelResponse& get(const Text& text) {
    auto it = memo_.find(text);
    if (it == memo_.end()) {
      ++calls_;
      it = memo_.emplace(text, model_.evaluate(text)).first;
    }
    return it->second;
  }

  // Evaluates every not-yet-seen text, in first-occurrence order so the
  // call count matches sequential mode exactly.
  void prefetch(const std::vector<Text>& texts) {
    std::vector<const Text*> missing;
    for (const Text& t : texts) {
      if (memo_.count(t)) continue;
      bool queued = false;
      for (const Text* m : missing) {
        if (*m == t) {
          queued = true;
          break;
        }
      }
      if (!queued) missing.push_back(&t);
    }
    if (missing.empty()) return;
    std::vector<ModelResponse> responses(missing.size());
    if (parallel_) {
      // Exceptions must not escape the parallel region; surface the first
      // failure afterwards.
      std::string failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (std::size_t i = 0; i < missing.size(); ++i) {
        try {
          responses[i] = model_.evaluate(*missing[i]);
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
          if (failure.empty()) failure = e.what();
        }
      }
      if (!failure.empty()) throw EvaluationError(failure);
    } else {
      for (std::size_t i = 0; i < missing.size(); ++i)
        responses[i] = model_.evaluate(*missing[i]);
    }
    for (std::size_t i = 0; i < missing.size(); ++i)
      memo_.emplace(*missing[i], std::move(responses[i]));
    calls_ += missing.size();
  }

  std::size_t calls() const { return calls_; }

 private:
  TargetModel& model_;
  bool parallel_;
  std::unordered_map<Text, ModelResponse> memo_;
  std::size_t calls_ = 0;
};

double clamp_gene(double v, const std::pair<double, double>& bounds) {
  return std::min(std::max(v, bounds.first), bounds.second);
}

void validate(const ObjectiveSpec& objective, const DEParams& params) {
  if (params.population_size < 4)
    throw ConfigError("population size must be at least 4 "
                      "(mutation draws 3 distinct other members)");
  if (params.iterations == 0)
    throw ConfigError("iteration count must be positive");
  if (params.differential_weight < 0.0 || params.differential_weight > 2.0)
    throw ConfigError("differential weight F must lie in [0, 2]");
  if (params.crossover_probability < 0.0 ||
      params.crossover_probability > 1.0)
    throw ConfigError("crossover probability CR must lie in [0, 1]");
  if (objective.kind == ObjectiveKind::kTargetedIntegrity &&
      objective.target.empty())
    throw ConfigError("targeted objective needs a target");
  if (objective.kind != ObjectiveKind::kTargetedIntegrity &&
      !objective.target.empty())
    throw ConfigError("only the targeted objective takes a target");
}

}  // namespace

double fitness(const ObjectiveSpec& objective, TargetModel& model, TextView x,
               TextView candidate, const ModelResponse& baseline) {
  (void)x;
  ModelResponse resp;
  try {
    resp = model.evaluate(candidate);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw EvaluationError(std::string("model evaluation failed on \"") +
                          escape_text(candidate) + "\": " + e.what());
  }
  return score_response(objective, baseline, resp);
}

AttackResult differential_evolution(TextView x, PerturbationClass cls,
                                    const ObjectiveSpec& objective,
                                    std::size_t budget, const DEParams& params,
                                    TargetModel& model,
                                    const Alphabets& alphabets,
                                    const ConfusablesMap& map, EvalMode mode) {
  validate(objective, params);

  Evaluator evaluator(model, mode);
  AttackResult result;
  result.budget = budget;
  result.baseline_output = evaluator.get(Text(x));

  if (budget == 0) {
    result.perturbed = Text(x);
    result.perturbed_output = evaluator.get(result.perturbed);
    result.fitness =
        score_response(objective, result.baseline_output,
                       result.perturbed_output);
    result.fitness_trajectory.push_back(result.fitness);
    result.evaluations = evaluator.calls();
    return result;
  }

  const Genome layout = make_genome(budget, x, cls, map, alphabets);
  const std::size_t genes = layout.genes.size();
  const std::size_t s = params.population_size;

  // RNG stream order: initialization draws one uniform01 per gene,
  // member-major; each iteration then draws, per member, the indices
  // a, b, c (one uniform_int each, redrawing collisions), the forced
  // crossover index R, and one uniform01 per gene.
  Rng rng(params.seed);

  std::vector<Genome> population(s, layout);
  for (Genome& member : population) {
    for (std::size_t k = 0; k < genes; ++k) {
      const auto& [lo, hi] = layout.bounds[k];
      member.genes[k] = lo + rng.uniform01() * (hi - lo);
    }
  }

  const auto decode_text = [&](const Genome& g) {
    return apply_perturbations(x, decode_genome(g, x, cls, map, alphabets));
  };

  std::vector<Text> texts(s);
  for (std::size_t j = 0; j < s; ++j) texts[j] = decode_text(population[j]);
  evaluator.prefetch(texts);
  std::vector<double> fitnesses(s);
  for (std::size_t j = 0; j < s; ++j)
    fitnesses[j] = score_response(objective, result.baseline_output,
                                  evaluator.get(texts[j]));
  result.fitness_trajectory.push_back(
      *std::max_element(fitnesses.begin(), fitnesses.end()));

  std::vector<Genome> trials(s, layout);
  std::vector<Text> trial_texts(s);
  for (std::size_t iter = 0; iter < params.iterations; ++iter) {
    for (std::size_t j = 0; j < s; ++j) {
      std::size_t a, b, c;
      do a = rng.uniform_int(s); while (a == j);
      do b = rng.uniform_int(s); while (b == j || b == a);
      do c = rng.uniform_int(s); while (c == j || c == a || c == b);
      const std::size_t forced = rng.uniform_int(genes);
      Genome& trial = trials[j];
      for (std::size_t k = 0; k < genes; ++k) {
        const double r = rng.uniform01();
        if (r < params.crossover_probability || k == forced) {
          const double v =
              population[a].genes[k] +
              params.differential_weight *
                  (population[b].genes[k] - population[c].genes[k]);
          trial.genes[k] = clamp_gene(v, layout.bounds[k]);
        } else {
          trial.genes[k] = population[j].genes[k];
        }
      }
      trial_texts[j] = decode_text(trial);
    }
    evaluator.prefetch(trial_texts);
    for (std::size_t j = 0; j < s; ++j) {
      const double trial_fitness = score_response(
          objective, result.baseline_output, evaluator.get(trial_texts[j]));
      if (trial_fitness >= fitnesses[j]) {
        population[j] = trials[j];
        texts[j] = trial_texts[j];
        fitnesses[j] = trial_fitness;
      }
    }
    result.fitness_trajectory.push_back(
        *std::max_element(fitnesses.begin(), fitnesses.end()));
  }

  const std::size_t best = static_cast<std::size_t>(
      std::max_element(fitnesses.begin(), fitnesses.end()) -
      fitnesses.begin());
  result.perturbations =
      decode_genome(population[best], x, cls, map, alphabets);
  result.perturbed = texts[best];
  result.perturbed_output = evaluator.get(result.perturbed);
  result.fitness = fitnesses[best];
  result.evaluations = evaluator.calls();
  return result;
}

}  // namespace uniperturb
