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

#ifndef UNIPERTURB_TARGETS_HPP_
#define UNIPERTURB_TARGETS_HPP_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "uniperturb/text.hpp"

namespace uniperturb {

// Black-box target output. If scores are present they sum to 1 and the
// label is their argmax with lexicographic tie-break.
struct ModelResponse {
  Text output;
  std::optional<std::string> label;
  std::optional<std::map<std::string, double>> scores;
  double cost = 0.0;
  bool wall_clock_cost = false;  // cost is measured milliseconds

  friend bool operator==(const ModelResponse&, const ModelResponse&) = default;
};

// The black-box boundary: callers see outputs only.
class TargetModel {
 public:
  virtual ~TargetModel() = default;
  virtual ModelResponse evaluate(TextView input) = 0;
  virtual bool concurrent_safe() const = 0;
};

// Deliberately naive tokenizer: splits on Unicode whitespace and peels
// leading/trailing ASCII punctuation into their own tokens. No
// normalization, no control-character handling — this is the
// vulnerability surface.
std::vector<Text> tokenize(TextView x);

using Dictionary = std::map<Text, Text>;
using Lexicon = std::map<std::string, std::set<Text>>;  // label -> tokens

// Abstract inference cost: codepoint count plus 2 per out-of-dictionary
// token (pass nullptr for classifiers).
double cost_model(TextView x, const Dictionary* dictionary);

// Token-aligned dictionary lookup; unknown tokens become the literal
// "<unk>".
ModelResponse dict_translate(TextView x, const Dictionary& dictionary);

// score(label) = (1 + matched tokens) / (K + total matched) — additive
// smoothing over K >= 2 labels.
ModelResponse keyword_classify(TextView x, const Lexicon& lexicon);

class DictTranslateModel : public TargetModel {
 public:
  explicit DictTranslateModel(Dictionary dictionary)
      : dictionary_(std::move(dictionary)) {}
  ModelResponse evaluate(TextView input) override {
    return dict_translate(input, dictionary_);
  }
  bool concurrent_safe() const override { return true; }
  const Dictionary& dictionary() const { return dictionary_; }

 private:
  Dictionary dictionary_;
};

class KeywordClassifyModel : public TargetModel {
 public:
  explicit KeywordClassifyModel(Lexicon lexicon);
  ModelResponse evaluate(TextView input) override {
    return keyword_classify(input, lexicon_);
  }
  bool concurrent_safe() const override { return true; }
  const Lexicon& lexicon() const { return lexicon_; }

 private:
  Lexicon lexicon_;
};

// Builtin desk-scale testbeds backing the CLI's mock targets.
Dictionary demo_dictionary();
Lexicon demo_lexicon();

// Runs `command` through /bin/sh as a persistent worker speaking the
// newline-delimited JSON protocol: {"id": n, "text": s} requests,
// {"id", "output", "label", "scores", "cost"} responses, all text
// \uXXXX-escaped so framing survives attack payloads. Serializes calls.
class SubprocessTarget : public TargetModel {
 public:
  explicit SubprocessTarget(std::string command, int timeout_ms = 30000);
  ~SubprocessTarget() override;
  SubprocessTarget(const SubprocessTarget&) = delete;
  SubprocessTarget& operator=(const SubprocessTarget&) = delete;

  ModelResponse evaluate(TextView input) override;
  bool concurrent_safe() const override { return false; }

 private:
  void spawn();
  std::string command_;
  int timeout_ms_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string read_buffer_;
  std::uint64_t next_id_ = 0;
};

struct HttpTargetOptions {
  int max_retries = 3;     // transient (connection / 5xx) failures
  int backoff_ms = 100;    // doubles per retry
  int timeout_s = 30;
  bool concurrent = false;
};

// POSTs the request schema above to an http:// endpoint.
class HttpTarget : public TargetModel {
 public:
  explicit HttpTarget(const std::string& endpoint,
                      HttpTargetOptions options = {});
  ~HttpTarget() override;

  ModelResponse evaluate(TextView input) override;
  bool concurrent_safe() const override { return options_.concurrent; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  HttpTargetOptions options_;
  std::string path_;
};

// Shared by the adapters and their workers/servers.
std::string encode_request(std::uint64_t id, TextView text);
ModelResponse decode_response(const std::string& line,
                              std::uint64_t expected_id,
                              double measured_ms);

}  // namespace uniperturb

#endif  // UNIPERTURB_TARGETS_HPP_
