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

#include <cmath>

#include "uniperturb/errors.hpp"
#include "uniperturb/perturb.hpp"
#include "uniperturb/targets.hpp"
#include "uniperturb/unicode_data.hpp"

using namespace uniperturb;

TEST_CASE("tokenize") {
  CHECK(tokenize(U"Hello, world") ==
        std::vector<Text>{U"Hello", U",", U"world"});
  CHECK(tokenize(U"e​t") == std::vector<Text>{U"e​t"});
  CHECK(tokenize(U"").empty());
  CHECK(tokenize(U"((hi!))") ==
        std::vector<Text>{U"(", U"(", U"hi", U"!", U")", U")"});
  CHECK(tokenize(U"!!!") == std::vector<Text>{U"!", U"!", U"!"});
  CHECK(tokenize(U"a  b") == std::vector<Text>{U"a", U"b"});
  // Every non-whitespace codepoint lands in exactly one token.
  const Text input = U"ab, c​d (e)";
  std::size_t non_ws = 0;
  for (char32_t cp : input)
    if (!is_unicode_whitespace(cp)) ++non_ws;
  std::size_t in_tokens = 0;
  for (const Text& t : tokenize(input)) in_tokens += t.size();
  CHECK(non_ws == in_tokens);
}

TEST_CASE("dict_translate") {
  Dictionary dict;
  dict[U"hello"] = U"bonjour";
  dict[U"world"] = U"monde";

  CHECK(dict_translate(U"hello world", dict).output == U"bonjour monde");
  // Cyrillic е inside "hello" makes the token unknown.
  CHECK(dict_translate(U"hеllo world", dict).output == U"<unk> monde");
  CHECK(dict_translate(U"", dict).output == U"");

  // Token-aligned: output token count equals input token count.
  const auto resp = dict_translate(U"hello there world", dict);
  CHECK(tokenize(resp.output).size() == 3);
}

TEST_CASE("keyword_classify smoothing formula") {
  Lexicon lex;
  lex["benign"] = {U"gentle"};
  lex["toxic"] = {U"awful"};

  // No matches: uniform 1/K, lexicographically first label.
  const auto uniform = keyword_classify(U"nothing to see", lex);
  CHECK(uniform.label == "benign");
  CHECK(uniform.scores->at("benign") == doctest::Approx(0.5));
  CHECK(uniform.scores->at("toxic") == doctest::Approx(0.5));

  // One toxic match, zero others: {toxic: 2/3, benign: 1/3}.
  const auto matched = keyword_classify(U"an awful day", lex);
  CHECK(matched.label == "toxic");
  CHECK(matched.scores->at("toxic") == doctest::Approx(2.0 / 3.0));
  CHECK(matched.scores->at("benign") == doctest::Approx(1.0 / 3.0));

  // Perturbing the matching token returns the scores to uniform.
  const auto broken = keyword_classify(U"an аwful day", lex);
  CHECK(broken.scores->at("toxic") == doctest::Approx(0.5));

  Lexicon tiny;
  tiny["only"] = {U"x"};
  CHECK_THROWS_AS(keyword_classify(U"x", tiny), ConfigError);
}

TEST_CASE("keyword_classify scores form a distribution with argmax label") {
  const auto lex = demo_lexicon();
  const Text inputs[] = {U"danger and dread dim the cheer",
                         U"glee and bliss mask the threat",
                         U"nothing matches here at all",
                         U"quiet gentle serene steady mild"};
  for (const Text& input : inputs) {
    const auto resp = keyword_classify(input, lex);
    REQUIRE(resp.scores.has_value());
    double sum = 0.0;
    double best = -1.0;
    std::string best_label;
    for (const auto& [label, score] : *resp.scores) {
      sum += score;
      if (score > best) {
        best = score;
        best_label = label;
      }
    }
    CHECK(std::abs(sum - 1.0) < 1e-6);
    CHECK(resp.label == best_label);
  }
}

TEST_CASE("cost_model") {
  const Dictionary dict = demo_dictionary();
  CHECK(cost_model(U"ab", nullptr) == 2.0);
  // "the cat" all in dictionary: codepoints only.
  CHECK(cost_model(U"the cat", &dict) == 7.0);
  // One injected invisible char costs exactly one more unit (the token it
  // lands in also goes out of dictionary, +2).
  CHECK(cost_model(U"the​ cat", &dict) == 8.0 + 2.0);
  // A swap adds its ten controls plus the <unk> surcharge for broken words.
  const Text swapped = apply_swap(U"the cat", 1);
  CHECK(cost_model(swapped, &dict) == 7.0 + 10.0 + 2.0);
  // Strictly monotone in injected codepoints.
  double prev = cost_model(U"the cat", &dict);
  Text grow = U"the cat";
  for (int i = 0; i < 5; ++i) {
    grow.push_back(0x200B);
    const double next = cost_model(grow, &dict);
    CHECK(next > prev);
    prev = next;
  }
}

TEST_CASE("dict_translate mirrors per-class embedding damage") {
  const Dictionary dict = demo_dictionary();
  const Text x = U"the cat drinks milk";
  const auto count_unk = [&](TextView s) {
    std::size_t n = 0;
    for (const Text& token : tokenize(dict_translate(s, dict).output))
      if (token == U"<unk>") ++n;
    return n;
  };
  REQUIRE(count_unk(x) == 0);
  // In-word perturbations of every class produce at least one <unk>.
  CHECK(count_unk(inject_invisible(x, 5, 0x200B,
                                   default_alphabets().invisible)) >= 1);
  CHECK(count_unk(swap_homoglyph(x, 4, Text(1, char32_t(0x441)),
                                 builtin_intentional_map())) >= 1);
  CHECK(count_unk(apply_swap(x, 4)) >= 1);
  CHECK(count_unk(inject_deletion(x, 5, U'q',
                                  default_alphabets().deletion_fillers)) >= 1);
}

TEST_CASE("demo corpus words are all in the demo dictionary") {
  const Dictionary dict = demo_dictionary();
  CHECK(dict.size() >= 90);
  for (const auto& [word, translation] : dict) {
    CHECK_FALSE(translation.empty());
    CHECK(dict_translate(word, dict).output != U"<unk>");
  }
}
