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

// Compares sequential vs OpenMP-parallel generation evaluation in the DE
// driver on an identical workload and checks that the integrity results
// agree. The workload model wraps the mock translator with deterministic
// busy-work so per-candidate cost resembles a slow pipeline.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "uniperturb/optimizer.hpp"
#include "uniperturb/targets.hpp"
#include "uniperturb/unicode_data.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uniperturb {
namespace {

class SlowTranslateModel : public TargetModel {
 public:
  SlowTranslateModel(Dictionary dictionary, int spin)
      : inner_(std::move(dictionary)), spin_(spin) {}

  ModelResponse evaluate(TextView input) override {
    volatile std::uint64_t sink = 0;
    for (int i = 0; i < spin_; ++i) {
      std::uint64_t h = 1469598103934665603ull;
      for (char32_t cp : input) {
        h ^= cp;
        h *= 1099511628211ull;
      }
      sink += h;
    }
    (void)sink;
    return inner_.evaluate(input);
  }
  bool concurrent_safe() const override { return true; }

 private:
  DictTranslateModel inner_;
  int spin_;
};

double run_mode(EvalMode mode, const Text& input, AttackResult* out) {
  SlowTranslateModel model(demo_dictionary(), 4000);
  DEParams params;
  params.seed = 7;
  const auto start = std::chrono::steady_clock::now();
  AttackResult result = differential_evolution(
      input, PerturbationClass::kHomoglyph, ObjectiveSpec::untargeted(), 3,
      params, model, default_alphabets(), builtin_intentional_map(), mode);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  *out = std::move(result);
  return ms;
}

}  // namespace
}  // namespace uniperturb

int main() {
  using namespace uniperturb;
  const Text input =
      U"the old teacher reads a letter near the window in the evening";

#ifdef _OPENMP
  std::printf("openmp: enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not available, both modes run serially\n");
#endif

  AttackResult sequential, parallel;
  const double t_seq = run_mode(EvalMode::kSequential, input, &sequential);
  const double t_par = run_mode(EvalMode::kParallel, input, &parallel);

  std::printf("%-12s %10s %12s %12s\n", "mode", "time ms", "fitness",
              "evaluations");
  std::printf("%-12s %10.1f %12.2f %12zu\n", "sequential", t_seq,
              sequential.fitness, sequential.evaluations);
  std::printf("%-12s %10.1f %12.2f %12zu\n", "parallel", t_par,
              parallel.fitness, parallel.evaluations);
  std::printf("speedup: %.2fx\n", t_seq / t_par);

  const bool equal = sequential.perturbed == parallel.perturbed &&
                     sequential.fitness == parallel.fitness &&
                     sequential.evaluations == parallel.evaluations;
  std::printf("results identical: %s\n", equal ? "yes" : "NO");
  return equal ? EXIT_SUCCESS : EXIT_FAILURE;
}
