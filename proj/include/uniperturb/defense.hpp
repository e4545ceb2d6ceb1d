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

#ifndef UNIPERTURB_DEFENSE_HPP_
#define UNIPERTURB_DEFENSE_HPP_

#include <string>
#include <unordered_map>
#include <vector>

#include "uniperturb/perturb.hpp"
#include "uniperturb/text.hpp"
#include "uniperturb/unicode_data.hpp"

namespace uniperturb {

// Which side of a confusable group is the canonical form.
enum class CanonicalPolicy {
  kAsciiThenLowest,   // the ASCII member when one exists, else lowest
  kLowestCodepoint,
};

// Immutable sanitizer/detector configuration. Canonical forms are computed
// once, over undirected single-codepoint confusable groups, so that
// normalization is idempotent by construction.
class DefenseConfig {
 public:
  // Default: builtin intentional map, default invisible set, ASCII-first
  // canonical policy, every stage enabled.
  DefenseConfig();
  DefenseConfig(CodepointSet invisible, ConfusablesMap confusables,
                CanonicalPolicy policy = CanonicalPolicy::kAsciiThenLowest);

  bool bidi_enabled = true;
  bool deletions_enabled = true;
  bool invisible_enabled = true;
  bool homoglyphs_enabled = true;

  const CodepointSet& invisible() const { return invisible_; }
  const ConfusablesMap& confusables() const { return confusables_; }
  CanonicalPolicy policy() const { return policy_; }

  // The canonical form of cp; cp itself when it has no single-codepoint
  // confusable group. Idempotent.
  char32_t canonical(char32_t cp) const;

 private:
  CodepointSet invisible_;
  ConfusablesMap confusables_;
  CanonicalPolicy policy_ = CanonicalPolicy::kAsciiThenLowest;
  std::unordered_map<char32_t, char32_t> canonical_;
};

// Removes every member of `set`, preserving the order of survivors.
Text strip_invisible(TextView x, const CodepointSet& set);

// Replays the string through a line buffer with a cursor: printable writes
// overwrite and advance, BS backs the cursor up one cell without erasing
// (the cell it backs onto becomes unwritten until rewritten), CR returns
// the cursor to column 0, DEL erases the cell before the cursor, LF commits
// the line. Committed lines are trimmed of unwritten trailing cells.
Text resolve_deletions(TextView x);

// Restricted UAX #9 resolver: explicit embeddings/overrides/isolates assign
// embedding levels (max depth 125, base direction LTR, every non-control
// treated as strong LTR), level runs reorder by the reverse-highest-levels
// rule, and all Bidi controls are dropped from the output.
Text resolve_bidi(TextView x);

// Replaces every codepoint that has a confusable group by its canonical
// form. Idempotent; unmapped codepoints pass through.
Text normalize_homoglyphs(TextView x, const DefenseConfig& cfg);

// The deterministic canonicalization approximating what a reader sees:
// resolve_bidi, then resolve_deletions, then strip_invisible, then
// normalize_homoglyphs (each stage subject to its enable flag).
Text visual_normal_form(TextView x, const DefenseConfig& cfg);

struct Finding {
  PerturbationClass cls;
  std::size_t position;  // codepoint index into the input
  Text codepoints;
  std::string note;
};

struct DetectionReport {
  std::vector<Finding> findings;

  bool suspicious() const { return !findings.empty(); }
  std::size_t count(PerturbationClass cls) const;
};

// Reports every invisible-set codepoint, Bidi control, deletion control and
// non-canonical confusable, plus mixed-script words that the per-codepoint
// findings do not already explain.
DetectionReport detect(TextView x, const DefenseConfig& cfg);

}  // namespace uniperturb

#endif  // UNIPERTURB_DEFENSE_HPP_
