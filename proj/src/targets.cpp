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

#include "uniperturb/targets.hpp"

#include "uniperturb/errors.hpp"

namespace uniperturb {

std::vector<Text> tokenize(TextView x) {
  std::vector<Text> tokens;
  std::size_t i = 0;
  while (i < x.size()) {
    if (is_unicode_whitespace(x[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < x.size() && !is_unicode_whitespace(x[j])) ++j;
    const TextView chunk = x.substr(i, j - i);

    std::size_t lead = 0;
    while (lead < chunk.size() && is_ascii_punct(chunk[lead])) {
      tokens.emplace_back(1, chunk[lead]);
      ++lead;
    }
    std::size_t trail = chunk.size();
    while (trail > lead && is_ascii_punct(chunk[trail - 1])) --trail;
    if (trail > lead) tokens.emplace_back(chunk.substr(lead, trail - lead));
    for (std::size_t k = trail; k < chunk.size(); ++k)
      tokens.emplace_back(1, chunk[k]);
    i = j;
  }
  return tokens;
}

double cost_model(TextView x, const Dictionary* dictionary) {
  double cost = static_cast<double>(x.size());
  if (dictionary != nullptr) {
    for (const Text& token : tokenize(x)) {
      if (dictionary->find(token) == dictionary->end()) cost += 2.0;
    }
  }
  return cost;
}

ModelResponse dict_translate(TextView x, const Dictionary& dictionary) {
  static const Text kUnk = U"<unk>";
  ModelResponse resp;
  bool first = true;
  for (const Text& token : tokenize(x)) {
    if (!first) resp.output.push_back(U' ');
    first = false;
    auto it = dictionary.find(token);
    resp.output += it == dictionary.end() ? kUnk : it->second;
  }
  resp.cost = cost_model(x, &dictionary);
  return resp;
}

KeywordClassifyModel::KeywordClassifyModel(Lexicon lexicon)
    : lexicon_(std::move(lexicon)) {
  if (lexicon_.size() < 2)
    throw ConfigError("keyword classifier needs at least 2 labels");
}

ModelResponse keyword_classify(TextView x, const Lexicon& lexicon) {
  if (lexicon.size() < 2)
    throw ConfigError("keyword classifier needs at least 2 labels");
  const auto tokens = tokenize(x);
  std::map<std::string, std::size_t> matches;
  std::size_t total = 0;
  for (const auto& [label, words] : lexicon) matches[label] = 0;
  for (const Text& token : tokens) {
    for (const auto& [label, words] : lexicon) {
      if (words.count(token)) {
        ++matches[label];
        ++total;
      }
    }
  }
  ModelResponse resp;
  resp.scores.emplace();
  const double denom =
      static_cast<double>(lexicon.size()) + static_cast<double>(total);
  std::string best_label;
  double best_score = -1.0;
  for (const auto& [label, n] : matches) {
    const double score = (1.0 + static_cast<double>(n)) / denom;
    (*resp.scores)[label] = score;
    if (score > best_score) {  // map order gives the lexicographic tie-break
      best_score = score;
      best_label = label;
    }
  }
  resp.label = best_label;
  resp.output = utf8_decode(best_label);
  resp.cost = cost_model(x, nullptr);
  return resp;
}

Dictionary demo_dictionary() {
  // A small English -> French word map. Every word carries at least one
  // character with an intentional.txt confusable.
  static const std::vector<std::pair<const char*, const char*>> kPairs = {
      {"the", "le"},        {"a", "un"},          {"and", "et"},
      {"in", "dans"},       {"on", "sur"},        {"under", "sous"},
      {"near", "pres"},     {"with", "avec"},     {"sees", "voit"},
      {"eats", "mange"},    {"drinks", "boit"},   {"opens", "ouvre"},
      {"closes", "ferme"},  {"sings", "chante"},  {"sleeps", "dort"},
      {"walks", "marche"},  {"reads", "lit"},     {"writes", "ecrit"},
      {"loves", "aime"},    {"is", "est"},        {"are", "sont"},
      {"cat", "chat"},      {"dog", "chien"},     {"house", "maison"},
      {"water", "eau"},     {"sky", "ciel"},      {"tree", "arbre"},
      {"bird", "oiseau"},   {"fish", "poisson"},  {"horse", "cheval"},
      {"apple", "pomme"},   {"bread", "pain"},    {"cheese", "fromage"},
      {"wine", "vin"},      {"milk", "lait"},     {"coffee", "cafe"},
      {"morning", "matin"}, {"evening", "soir"},  {"night", "nuit"},
      {"day", "jour"},      {"sun", "soleil"},    {"moon", "lune"},
      {"star", "etoile"},   {"rain", "pluie"},    {"snow", "neige"},
      {"wind", "vent"},     {"fire", "feu"},      {"earth", "terre"},
      {"stone", "pierre"},  {"river", "riviere"}, {"ocean", "ocean"},
      {"forest", "foret"},  {"flower", "fleur"},  {"grass", "herbe"},
      {"road", "route"},    {"city", "ville"},    {"village", "village"},
      {"child", "enfant"},  {"woman", "femme"},   {"man", "homme"},
      {"friend", "ami"},    {"teacher", "maitre"},{"doctor", "medecin"},
      {"book", "livre"},    {"letter", "lettre"}, {"word", "mot"},
      {"story", "histoire"},{"song", "chanson"},  {"music", "musique"},
      {"voice", "voix"},    {"door", "porte"},    {"window", "fenetre"},
      {"table", "table"},   {"chair", "chaise"},  {"bed", "lit"},
      {"kitchen", "cuisine"},{"garden", "jardin"},{"school", "ecole"},
      {"market", "marche"}, {"bridge", "pont"},   {"tower", "tour"},
      {"castle", "chateau"},{"king", "roi"},      {"queen", "reine"},
      {"soldier", "soldat"},{"spring", "printemps"},{"summer", "ete"},
      {"autumn", "automne"},{"winter", "hiver"},  {"red", "rouge"},
      {"blue", "bleu"},     {"green", "vert"},    {"white", "blanc"},
      {"black", "noir"},    {"small", "petit"},   {"large", "grand"},
      {"old", "vieux"},     {"young", "jeune"},   {"happy", "heureux"},
      {"quiet", "calme"},   {".", "."},           {",", ","},
  };
  Dictionary dict;
  for (const auto& [en, fr] : kPairs) {
    dict.emplace(utf8_decode(en), utf8_decode(fr));
  }
  return dict;
}

Lexicon demo_lexicon() {
  const auto words = [](std::initializer_list<const char*> list) {
    std::set<Text> out;
    for (const char* w : list) out.insert(utf8_decode(w));
    return out;
  };
  Lexicon lex;
  lex["calm"] = words({"quiet", "gentle", "serene", "steady", "mild"});
  lex["fear"] = words({"danger", "threat", "panic", "dread", "alarm"});
  lex["joy"] = words({"delight", "cheer", "smile", "bliss", "glee"});
  return lex;
}

}  // namespace uniperturb
