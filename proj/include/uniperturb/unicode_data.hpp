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

#ifndef UNIPERTURB_UNICODE_DATA_HPP_
#define UNIPERTURB_UNICODE_DATA_HPP_

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "uniperturb/text.hpp"

namespace uniperturb {

// An immutable, named set of Unicode scalar values. Membership is
// deterministic and order-independent; iteration order is ascending.
class CodepointSet {
 public:
  CodepointSet() = default;
  CodepointSet(std::string name, std::vector<char32_t> members);

  bool contains(char32_t cp) const;
  const std::vector<char32_t>& members() const { return members_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

 private:
  std::string name_;
  std::vector<char32_t> members_;  // sorted, unique
};

enum class ConfusablesSource { kIntentional, kConfusables, kCustom };

// Mapping from a source codepoint to its visually-confusable replacement
// sequences, in file order. Immutable once parsed; lookups of absent
// codepoints return an empty list.
class ConfusablesMap {
 public:
  explicit ConfusablesMap(ConfusablesSource source = ConfusablesSource::kCustom)
      : source_(source) {}

  // Rejects empty sequences and self-mappings; duplicate sequences for one
  // source are ignored (first occurrence wins the ordering).
  void add(char32_t source_cp, Text replacement);

  const std::vector<Text>& candidates(char32_t cp) const;
  bool contains(char32_t cp) const { return entries_.count(cp) != 0; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  ConfusablesSource source() const { return source_; }

  // All source codepoints, ascending. Used for canonical-form construction.
  std::vector<char32_t> sources() const;

 private:
  ConfusablesSource source_;
  std::unordered_map<char32_t, std::vector<Text>> entries_;
};

// Parses the UTS #39 intentional.txt format: `HEX ; HEX ; # comment` data
// lines, `#` comment lines, blank lines, optional UTF-8 BOM. Every data
// line is entered bidirectionally. Throws ParseError with a line number on
// any malformed data line.
ConfusablesMap parse_intentional(std::string_view file_text);

// Parses the UTS #39 confusables.txt format: `HEX ; HEX[ HEX...] ; TYPE`
// data lines. One-directional; multiple lines for one source accumulate.
ConfusablesMap parse_confusables(std::string_view file_text);

// All replacement sequences registered for cp, in file order.
std::vector<Text> homoglyph_candidates(const ConfusablesMap& map, char32_t cp);

// The attack alphabets.
struct Alphabets {
  CodepointSet invisible;          // ZWSP, ZWNJ, ZWJ
  CodepointSet bidi_controls;      // embeddings, overrides, isolates, marks
  CodepointSet deletion_controls;  // BS, DEL, CR
  CodepointSet deletion_fillers;   // printable ASCII
};

Alphabets default_alphabets();

// The bundled confusables snapshots (also installed as data/*.txt); the
// pinned Unicode version is recorded in the file headers.
std::string_view builtin_intentional_text();
std::string_view builtin_confusables_text();

// parse_intentional(builtin_intentional_text()), parsed once.
const ConfusablesMap& builtin_intentional_map();

}  // namespace uniperturb

#endif  // UNIPERTURB_UNICODE_DATA_HPP_
