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

// Acceptance suite. Runs every criterion at its stated tolerance and prints
// one pass/fail line each; exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "uniperturb/defense.hpp"
#include "uniperturb/errors.hpp"
#include "uniperturb/optimizer.hpp"
#include "uniperturb/perturb.hpp"
#include "uniperturb/rng.hpp"
#include "uniperturb/targets.hpp"
#include "uniperturb/text.hpp"
#include "uniperturb/unicode_data.hpp"

namespace uniperturb {
namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

const Alphabets& alphabets() {
  static const Alphabets a = default_alphabets();
  return a;
}

const DefenseConfig& defense() {
  static const DefenseConfig cfg;
  return cfg;
}

constexpr PerturbationClass kAllClasses[] = {
    PerturbationClass::kInvisible, PerturbationClass::kHomoglyph,
    PerturbationClass::kReordering, PerturbationClass::kDeletion};

Text random_ascii_sentence(Rng& rng, std::size_t min_len,
                           std::size_t max_len) {
  while (true) {
    const std::size_t len = min_len + rng.uniform_int(max_len - min_len + 1);
    Text t;
    for (std::size_t i = 0; i < len; ++i) {
      if (i > 0 && i + 1 < len && t.back() != U' ' &&
          rng.uniform_int(6) == 0) {
        t.push_back(U' ');
      } else {
        t.push_back(static_cast<char32_t>(U'a' + rng.uniform_int(26)));
      }
    }
    // Homoglyph attacks need at least one confusable character.
    for (char32_t cp : t) {
      if (!builtin_intentional_map().candidates(cp).empty()) return t;
    }
  }
}

std::vector<Perturbation> random_attack(Rng& rng, TextView x,
                                        PerturbationClass cls,
                                        std::size_t budget) {
  Genome g = make_genome(budget, x, cls, builtin_intentional_map(),
                         alphabets());
  for (std::size_t k = 0; k < g.genes.size(); ++k) {
    const auto& [lo, hi] = g.bounds[k];
    g.genes[k] = lo + rng.uniform01() * (hi - lo);
  }
  return decode_genome(g, x, cls, builtin_intentional_map(), alphabets());
}

// --- criterion 1 ---------------------------------------------------------

Check reordering_cardinality() {
  Check check;
  const Text letters = U"abcdefghij";
  for (std::size_t n = 1; n <= 10; ++n) {
    const Text input(letters.substr(0, n));
    const auto members = generate_reorderings(input);
    const std::size_t expected = std::size_t(1) << (n - 1);
    check.expect(members.size() == expected,
                 "n=" + std::to_string(n) + ": got " +
                     std::to_string(members.size()) + " members, expected " +
                     std::to_string(expected));
    for (const Text& member : members) {
      if (visual_normal_form(member, defense()) != input) {
        check.expect(false, "n=" + std::to_string(n) +
                                ": member does not normalize back");
        break;
      }
    }
    if (!check.ok) break;
  }
  return check;
}

// --- criterion 2 ---------------------------------------------------------

Check imperceptibility_trials() {
  Check check;
  Rng rng(20260810);
  for (int trial = 0; trial < 1000 && check.ok; ++trial) {
    const Text x = random_ascii_sentence(rng, 8, 40);
    const auto cls = kAllClasses[rng.uniform_int(4)];
    const std::size_t budget = 1 + rng.uniform_int(5);
    const auto ps = random_attack(rng, x, cls, budget);
    check.expect(ps.size() == budget, "budget not fully spent");
    const Text attacked = apply_perturbations(x, ps);
    check.expect(visual_normal_form(attacked, defense()) ==
                     visual_normal_form(x, defense()),
                 std::string("visual normal form changed for class ") +
                     to_string(cls) + " on \"" + escape_text(x) + "\"");
  }
  return check;
}

// --- criterion 3 ---------------------------------------------------------

Check sanitizer_recovery() {
  Check check;
  Rng rng(31337);
  const auto sentences = testcorpus::translator_sentences();
  for (const auto cls : kAllClasses) {
    for (int trial = 0; trial < 500 && check.ok; ++trial) {
      const Text x =
          utf8_decode(sentences[rng.uniform_int(sentences.size())]);
      const std::size_t budget = 1 + rng.uniform_int(5);
      const Text attacked =
          apply_perturbations(x, random_attack(rng, x, cls, budget));
      const Text recovered = visual_normal_form(attacked, defense());
      check.expect(recovered == x,
                   std::string(to_string(cls)) + ": \"" +
                       escape_text(attacked) + "\" sanitized to \"" +
                       escape_text(recovered) + "\" not \"" + escape_text(x) +
                       "\"");
    }
  }
  return check;
}

// --- criterion 4 ---------------------------------------------------------

Check untargeted_translator() {
  Check check;
  DictTranslateModel model(demo_dictionary());
  const auto sentences = testcorpus::translator_sentences();
  DEParams params;  // pop 32, iters 10

  int class_index = 0;
  for (const auto cls : kAllClasses) {
    std::vector<double> mean_distance(6, 0.0);
    std::size_t changed_at_one = 0;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      const Text x = utf8_decode(sentences[i]);
      for (std::size_t budget = 0; budget <= 5; ++budget) {
        params.seed = 1000003u * class_index + 31u * i + budget;
        const auto result = differential_evolution(
            x, cls, ObjectiveSpec::untargeted(), budget, params, model,
            alphabets(), builtin_intentional_map());
        mean_distance[budget] += result.fitness;
        if (budget == 1 &&
            result.perturbed_output.output != result.baseline_output.output)
          ++changed_at_one;
      }
    }
    for (double& d : mean_distance) d /= sentences.size();

    for (std::size_t b = 1; b <= 5 && check.ok; ++b) {
      check.expect(mean_distance[b] + 1e-9 >= mean_distance[b - 1],
                   std::string(to_string(cls)) + ": mean distance dips at " +
                       "budget " + std::to_string(b) + " (" +
                       std::to_string(mean_distance[b - 1]) + " -> " +
                       std::to_string(mean_distance[b]) + ")");
    }
    check.expect(mean_distance[5] > mean_distance[0],
                 std::string(to_string(cls)) +
                     ": budget 5 does not exceed budget 0");
    if (cls == PerturbationClass::kHomoglyph ||
        cls == PerturbationClass::kReordering) {
      check.expect(changed_at_one * 10 >= sentences.size() * 9,
                   std::string(to_string(cls)) + ": budget 1 changed only " +
                       std::to_string(changed_at_one) + "/" +
                       std::to_string(sentences.size()) + " outputs");
    }
    ++class_index;
  }
  return check;
}

// --- criterion 5 ---------------------------------------------------------

Check targeted_classifier() {
  Check check;
  KeywordClassifyModel model(demo_lexicon());
  const auto sentences = testcorpus::classifier_sentences();
  const std::vector<std::string> labels = {"calm", "fear", "joy"};
  DEParams params;

  std::size_t baseline_hits = 0;
  std::size_t full_hits = 0;
  std::size_t label_only_on_full = 0;
  std::size_t cases = 0;

  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const Text x = utf8_decode(sentences[i].text);
    for (std::size_t t = 0; t < labels.size(); ++t, ++cases) {
      const std::string& target = labels[t];
      if (model.evaluate(x).label == target) ++baseline_hits;

      params.seed = 7000003u * i + 97u * t + 1;
      const auto full = differential_evolution(
          x, PerturbationClass::kHomoglyph,
          ObjectiveSpec::targeted(utf8_decode(target)), 5, params, model,
          alphabets(), builtin_intentional_map());
      const bool full_ok = full.perturbed_output.label == target;
      if (full_ok) ++full_hits;

      params.seed = 9000007u * i + 13u * t + 2;
      const auto label_only = differential_evolution(
          x, PerturbationClass::kHomoglyph,
          ObjectiveSpec::targeted(utf8_decode(target), true), 5, params,
          model, alphabets(), builtin_intentional_map());
      if (full_ok && label_only.perturbed_output.label == target)
        ++label_only_on_full;
    }
  }

  const double baseline_rate = double(baseline_hits) / cases;
  const double full_rate = double(full_hits) / cases;
  check.expect(full_rate >= baseline_rate + 0.30,
               "full-score success " + std::to_string(full_rate) +
                   " does not exceed baseline " +
                   std::to_string(baseline_rate) + " by 30 points");
  check.expect(2 * label_only_on_full >= full_hits,
               "label-only succeeded on " +
                   std::to_string(label_only_on_full) + "/" +
                   std::to_string(full_hits) + " of full-score successes");
  check.detail = "full " + std::to_string(full_hits) + "/" +
                 std::to_string(cases) + ", label-only on those " +
                 std::to_string(label_only_on_full);
  return check;
}

// --- criterion 6 ---------------------------------------------------------

Check sponge_closed_form() {
  Check check;
  DictTranslateModel model(demo_dictionary());
  const Dictionary dict = demo_dictionary();
  const Text x = utf8_decode("the queen opens the castle door in the evening");
  const double base = static_cast<double>(x.size());

  const std::map<PerturbationClass, double> growth = {
      {PerturbationClass::kInvisible, 1.0},
      {PerturbationClass::kReordering, 10.0},
      {PerturbationClass::kDeletion, 2.0}};

  DEParams params;
  for (const auto& [cls, per_unit] : growth) {
    for (std::size_t budget = 1; budget <= 5 && check.ok; ++budget) {
      params.seed = 50021u * static_cast<unsigned>(per_unit) + budget;
      const auto result = differential_evolution(
          x, cls, ObjectiveSpec::availability(), budget, params, model,
          alphabets(), builtin_intentional_map());
      check.expect(result.perturbed.size() == x.size() +
                                                  std::size_t(per_unit) *
                                                      budget,
                   std::string(to_string(cls)) +
                       ": encoded growth is not exactly " +
                       std::to_string(per_unit) + " per unit at budget " +
                       std::to_string(budget));
      std::size_t unk = 0;
      for (const Text& token :
           tokenize(dict_translate(result.perturbed, dict).output))
        if (token == U"<unk>") ++unk;
      const double expected = base + per_unit * budget + 2.0 * unk;
      check.expect(result.fitness == expected,
                   std::string(to_string(cls)) + " budget " +
                       std::to_string(budget) + ": fitness " +
                       std::to_string(result.fitness) + " != " +
                       std::to_string(expected));
    }
  }
  return check;
}

// --- criterion 7 ---------------------------------------------------------

std::size_t lev_oracle(TextView a, TextView b) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  std::size_t best = SIZE_MAX;
  if (a[0] == b[0]) best = lev_oracle(a.substr(1), b.substr(1));
  best = std::min(best, 1 + lev_oracle(a.substr(1), b.substr(1)));
  best = std::min(best, 1 + lev_oracle(a, b.substr(1)));
  best = std::min(best, 1 + lev_oracle(a.substr(1), b));
  return best;
}

Check levenshtein_exhaustive() {
  Check check;
  std::vector<Text> strings = {U""};
  std::size_t start = 0;
  for (int len = 1; len <= 5; ++len) {
    const std::size_t end = strings.size();
    for (std::size_t i = start; i < end; ++i) {
      for (char32_t c : {U'a', U'b', U'c'}) strings.push_back(strings[i] + c);
    }
    start = end;
  }
  for (const Text& a : strings) {
    for (const Text& b : strings) {
      if (levenshtein(a, b) != lev_oracle(a, b)) {
        check.expect(false, "mismatch on (\"" + escape_text(a) + "\", \"" +
                                escape_text(b) + "\")");
        return check;
      }
    }
  }
  check.detail = std::to_string(strings.size() * strings.size()) + " pairs";
  return check;
}

// --- criterion 8 ---------------------------------------------------------

Check parser_fixtures() {
  Check check;
  const auto read = [&](const char* name) {
    std::ifstream in(std::string(UNIPERTURB_DATA_DIR) + "/" + name,
                     std::ios::binary);
    check.expect(bool(in), std::string("missing fixture ") + name);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };
  try {
    const auto intentional = parse_intentional(read("intentional.txt"));
    const auto confusables = parse_confusables(read("confusables.txt"));
    const auto has = [&](char32_t from, char32_t to) {
      for (const Text& c : intentional.candidates(from))
        if (c == Text(1, to)) return true;
      return false;
    };
    check.expect(has(0x0061, 0x0430) && has(0x0430, 0x0061),
                 "pair (U+0061, U+0430) missing");
    check.expect(has(0x0078, 0x0445) && has(0x0445, 0x0078),
                 "pair (U+0078, U+0445) missing");
    check.expect(!confusables.empty(), "confusables snapshot is empty");
  } catch (const ParseError& e) {
    check.expect(false, std::string("fixture failed to parse: ") + e.what());
  }
  return check;
}

// --- criterion 9 ---------------------------------------------------------

Check determinism() {
  Check check;
  DictTranslateModel translate(demo_dictionary());
  KeywordClassifyModel classify(demo_lexicon());
  DEParams params;
  params.seed = 20262026;

  const auto equal = [](const AttackResult& a, const AttackResult& b) {
    return a.perturbed == b.perturbed && a.perturbations == b.perturbations &&
           a.fitness == b.fitness && a.baseline_output == b.baseline_output &&
           a.perturbed_output == b.perturbed_output &&
           a.evaluations == b.evaluations &&
           a.fitness_trajectory == b.fitness_trajectory;
  };

  for (const auto cls : kAllClasses) {
    const Text x = U"the friend drinks coffee near the market";
    const auto a = differential_evolution(x, cls, ObjectiveSpec::untargeted(),
                                          3, params, translate, alphabets(),
                                          builtin_intentional_map());
    const auto b = differential_evolution(x, cls, ObjectiveSpec::untargeted(),
                                          3, params, translate, alphabets(),
                                          builtin_intentional_map());
    check.expect(equal(a, b), std::string("untargeted run differs for ") +
                                  to_string(cls));
  }
  const Text cx = U"danger and dread dim the cheer";
  const auto a = differential_evolution(
      cx, PerturbationClass::kHomoglyph, ObjectiveSpec::targeted(U"joy"), 4,
      params, classify, alphabets(), builtin_intentional_map());
  const auto b = differential_evolution(
      cx, PerturbationClass::kHomoglyph, ObjectiveSpec::targeted(U"joy"), 4,
      params, classify, alphabets(), builtin_intentional_map());
  check.expect(equal(a, b), "targeted classifier run differs");
  return check;
}

// --- criterion 10 --------------------------------------------------------

Check bidi_resolver() {
  Check check;
  Rng rng(555);
  for (int trial = 0; trial < 100 && check.ok; ++trial) {
    const std::size_t len = 1 + rng.uniform_int(8);
    Text x;
    for (std::size_t i = 0; i < len; ++i)
      x.push_back(static_cast<char32_t>(U'a' + rng.uniform_int(26)));
    for (const Text& member : generate_reorderings(x)) {
      if (resolve_bidi(member) != x) {
        check.expect(false, "member of reorderings(\"" + escape_text(x) +
                                "\") does not resolve back");
        break;
      }
    }
  }
  for (int trial = 0; trial < 100 && check.ok; ++trial) {
    Text x;
    const std::size_t len = rng.uniform_int(60);
    for (std::size_t i = 0; i < len; ++i)
      x.push_back(static_cast<char32_t>(0x20 + rng.uniform_int(0x5F)));
    check.expect(resolve_bidi(x) == x,
                 "not the identity on control-free \"" + escape_text(x) +
                     "\"");
  }
  return check;
}

}  // namespace
}  // namespace uniperturb

int main() {
  using namespace uniperturb;
  struct Criterion {
    const char* name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 reordering cardinality 2^(n-1), n=1..10", reordering_cardinality},
      {"2 imperceptibility, 1000 randomized trials", imperceptibility_trials},
      {"3 sanitizer recovery, 500 attacks per class", sanitizer_recovery},
      {"4 untargeted integrity on mock translator", untargeted_translator},
      {"5 targeted mock classification, full + label-only",
       targeted_classifier},
      {"6 sponge closed-form cost growth", sponge_closed_form},
      {"7 levenshtein vs exhaustive oracle", levenshtein_exhaustive},
      {"8 pinned parser fixtures", parser_fixtures},
      {"9 attack determinism under equal seeds", determinism},
      {"10 bidi resolver inverts reorderings", bidi_resolver},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check check;
    try {
      check = criterion.run();
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    std::printf("[%s] criterion %s (%.0f ms)%s%s\n",
                check.ok ? "PASS" : "FAIL", criterion.name, ms,
                check.detail.empty() ? "" : " — ",
                check.detail.c_str());
    std::fflush(stdout);
    if (!check.ok) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
